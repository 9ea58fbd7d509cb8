#include "nambu/tstar.hpp"

#include <functional>

#include "nambu/algebra.hpp"
#include "nambu/errors.hpp"

namespace nambu {

namespace {

Scalar sgn(bool negative) { return negative ? Scalar(-1) : Scalar(1); }

Report coadjoint_conditions(const HomSuperAlgebra& a) {
  Report rep;
  const WedgeBasis& W = a.wedge();
  const auto tab = fundamental_table(a);
  const Matrix& aw = a.alpha_wedge();
  std::string wit;
  for (size_t x = 0; x < W.size() && wit.empty(); ++x)
    for (size_t y = 0; y < W.size(); ++y) {
      Matrix lhs = a.ad(x) * a.ad_of(aw.col(y)) -
                   (a.ad(y) * a.ad_of(aw.col(x))).scaled(sgn(W.parity(x) & W.parity(y)));
      if (lhs != a.alpha() * a.ad_of(tab[x][y])) {
        wit = "x=" + tuple_str(W.element(x)) + " y=" + tuple_str(W.element(y));
        break;
      }
    }
  rep.add("condition i", wit.empty(), wit);

  wit.clear();
  const size_t n = static_cast<size_t>(a.arity()), d = a.dim();
  std::vector<Vec> e, ae;
  for (size_t i = 0; i < d; ++i) {
    e.push_back(unit_vec(d, i));
    ae.push_back(a.alpha().col(i));
  }
  Tuple y(n);
  std::function<void(size_t, const Tuple&)> rec = [&](size_t k, const Tuple& x) {
    if (!wit.empty()) return;
    if (k < n) {
      for (size_t i = 0; i < d; ++i) {
        y[k] = static_cast<int>(i);
        rec(k + 1, x);
      }
      return;
    }
    int px = 0;
    for (int i : x) px ^= a.p(i);
    for (size_t i = 0; i < n; ++i) {
      std::vector<Vec> inner, outer;
      int others = 0;
      for (int j : x) inner.push_back(e[j]);
      inner.push_back(e[y[i]]);
      for (size_t j = 0; j < n; ++j)
        if (j != i) {
          outer.push_back(ae[y[j]]);
          others ^= a.p(y[j]);
        }
      Matrix A = a.ad_of(W.wedge_of(inner)), B = a.ad_of(W.wedge_of(outer));
      if (A * B != (B * A).scaled(-sgn(px & others))) {
        wit = "x=" + tuple_str(x) + " y=" + tuple_str(y) + " i=" + std::to_string(i + 1);
        return;
      }
    }
  };
  for (const Tuple& x : canonical_tuples(a.parity(), n - 2)) rec(0, x);
  rep.add("condition ii", wit.empty(), wit);
  return rep;
}

}  // namespace

CoadjointRep coadjoint_rep(const HomSuperAlgebra& a) {
  const size_t d = a.dim();
  CoadjointRep out;
  out.rep.target = a.space();
  out.rep.nu = a.alpha().transpose();
  for (size_t w = 0; w < a.wedge().size(); ++w) {
    const Matrix& ad = a.ad(w);
    Matrix m(d, d);
    for (size_t z = 0; z < d; ++z)
      for (size_t k = 0; k < d; ++k)
        if (!ad(k, z).is_zero()) m(z, k) = -sgn(a.wedge().parity(w) & a.p(k)) * ad(k, z);
    out.rep.rho.push_back(std::move(m));
  }
  Report r = verify_representation(out.rep, a);
  out.exists = r.ok();
  for (const auto& c : r.checks)
    if (!c.pass) {
      out.witness = c.name + ": " + c.witness;
      break;
    }
  const Matrix& aw = a.alpha_wedge();
  out.twist_compatible = true;
  for (size_t w = 0; w < a.wedge().size(); ++w)
    if (out.rep.nu * out.rep.rho[w] != out.rep.of(aw.col(w)) * out.rep.nu) {
      out.twist_compatible = false;
      out.twist_witness = "x=" + tuple_str(a.wedge().element(w));
      break;
    }
  out.conditions = coadjoint_conditions(a);
  return out;
}

Vec zero_theta(const HomSuperAlgebra& g) {
  return Vec(g.wedge().size() * g.dim() * g.dim());
}

Subspace embedded_dual(const HomSuperAlgebra& g) {
  const size_t d = g.dim();
  std::vector<Vec> v;
  for (size_t k = 0; k < d; ++k) v.push_back(unit_vec(2 * d, d + k));
  return Subspace::span(2 * d, v);
}

bool is_cyclic_cocycle(const HomSuperAlgebra& g, const Vec& theta) {
  const size_t d = g.dim(), W = g.wedge().size();
  require(theta.size() == W * d * d, ErrorKind::DimensionMismatch, "theta size");
  for (size_t w = 0; w < W; ++w)
    for (size_t y = 0; y < d; ++y)
      for (size_t z = 0; z < d; ++z) {
        const Scalar& a = theta[(w * d + y) * d + z];
        const Scalar& b = theta[(w * d + z) * d + y];
        if (a + sgn(g.p(y) & g.p(z)) * b != 0) return false;
      }
  return true;
}

Subspace cyclic_space(const HomSuperAlgebra& g) {
  const size_t d = g.dim(), W = g.wedge().size(), n = W * d * d;
  std::vector<Vec> rows;
  for (size_t w = 0; w < W; ++w)
    for (size_t y = 0; y < d; ++y)
      for (size_t z = y; z < d; ++z) {
        Vec r(n);
        r[(w * d + y) * d + z] += 1;
        r[(w * d + z) * d + y] += sgn(g.p(y) & g.p(z));
        if (!is_zero(r)) rows.push_back(r);
      }
  return nullspace(Matrix::from_rows(rows, n));
}

TStarExtension tstar_extend(const HomSuperAlgebra& g, const Vec& theta, bool validated) {
  const size_t d = g.dim(), n = static_cast<size_t>(g.arity());
  const WedgeBasis& W = g.wedge();
  require(theta.size() == W.size() * d * d, ErrorKind::DimensionMismatch, "theta size");
  CoadjointRep co = coadjoint_rep(g);
  if (validated) {
    require(co.exists, ErrorKind::CoadjointMissing, co.witness);
    require(co.twist_compatible, ErrorKind::CoadjointMissing,
            "nu* does not intertwine ad*: " + co.twist_witness);
    CochainComplex cx(g, co.rep);
    require(cx.is_cochain(1, theta), ErrorKind::ThetaNotClosed, "theta is not a compatible cochain");
    for (size_t i = 0; i < d * d * W.size(); ++i)
      require(theta[i].is_zero() || cx.raw_parity(1, i) == 0, ErrorKind::ThetaNotClosed,
              "theta is not even");
    require(is_zero(cx.coboundary(1, theta)), ErrorKind::ThetaNotClosed, "delta theta != 0");
    require(is_cyclic_cocycle(g, theta), ErrorKind::ThetaNotCyclic, "cyclic condition fails");
  }

  GradedSpace sp;
  sp.parity = g.parity();
  sp.parity.insert(sp.parity.end(), g.parity().begin(), g.parity().end());
  HomSuperAlgebra::Entries e;
  for (const Tuple& t : canonical_tuples(sp.parity, n)) {
    Vec v(2 * d);
    size_t duals = 0, at = 0;
    for (size_t i = 0; i < n; ++i)
      if (static_cast<size_t>(t[i]) >= d) {
        ++duals;
        at = i;
      }
    if (duals >= 2) continue;
    if (duals == 0) {
      Vec b = g.basis_bracket(t);
      for (size_t i = 0; i < d; ++i) v[i] = b[i];
      auto [s, pos] = W.lookup(Tuple(t.begin(), t.end() - 1));
      if (s != 0)
        for (size_t k = 0; k < d; ++k)
          v[d + k] = Scalar(s) * theta[(pos * d + t[n - 1]) * d + k];
    } else {
      const size_t k = t[at] - d;
      Tuple rest;
      int after = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == at) continue;
        rest.push_back(t[j]);
        if (j > at) after ^= g.p(t[j]);
      }
      auto [s, pos] = W.lookup(rest);
      if (s == 0) continue;
      Scalar c = Scalar(s) * sgn(((n - 1 - at) % 2 == 1) ^ static_cast<bool>(g.p(k) & after));
      const Matrix& rho = co.rep.rho[pos];
      for (size_t z = 0; z < d; ++z)
        if (!rho(z, k).is_zero()) v[d + z] = c * rho(z, k);
    }
    if (!is_zero(v)) e[t] = v;
  }
  Matrix al(2 * d, 2 * d), G(2 * d, 2 * d);
  Matrix at = g.alpha().transpose();
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      al(i, j) = g.alpha()(i, j);
      al(d + i, d + j) = at(i, j);
    }
    G(i, d + i) = sgn(g.p(i));
    G(d + i, i) = 1;
  }
  TStarExtension out;
  out.base = g;
  out.theta = theta;
  out.result.algebra = HomSuperAlgebra("T*(" + g.name() + ")", sp, g.arity(), e, al);
  out.result.form.gram = G;
  return out;
}

const char* equivalence_name(EquivalenceKind k) {
  switch (k) {
    case EquivalenceKind::Inequivalent: return "inequivalent";
    case EquivalenceKind::Equivalent: return "equivalent";
    case EquivalenceKind::IsometricallyEquivalent: return "isometrically_equivalent";
  }
  return "?";
}

Matrix induced_form(const HomSuperAlgebra& g, const Vec& tp) {
  const size_t d = g.dim();
  require(tp.size() == d * d, ErrorKind::DimensionMismatch, "theta' size");
  Matrix f(d, d);
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y)
      f(x, y) = (tp[x * d + y] + sgn(g.p(x) & g.p(y)) * tp[y * d + x]) / Scalar(2);
  return f;
}

Matrix equivalence_map(const HomSuperAlgebra& g, const Vec& tp) {
  const size_t d = g.dim();
  Matrix m = Matrix::identity(2 * d);
  for (size_t x = 0; x < d; ++x)
    for (size_t k = 0; k < d; ++k) m(d + k, x) = tp[x * d + k];
  return m;
}

EquivalenceResult equivalence(const HomSuperAlgebra& g, const Vec& theta1, const Vec& theta2) {
  CoadjointRep co = coadjoint_rep(g);
  require(co.exists, ErrorKind::CoadjointMissing, co.witness);
  require(co.twist_compatible, ErrorKind::CoadjointMissing,
          "nu* does not intertwine ad*: " + co.twist_witness);
  CochainComplex cx(g, co.rep);
  for (const Vec* t : {&theta1, &theta2}) {
    require(cx.is_cochain(1, *t) && is_zero(cx.coboundary(1, *t)), ErrorKind::ThetaNotClosed,
            "theta must be a closed cochain");
    require(is_cyclic_cocycle(g, *t), ErrorKind::ThetaNotCyclic, "theta must be cyclic");
  }
  const size_t d = g.dim();
  const Subspace& c0 = cx.cochains(0, 0);
  const SparseOp& delta = cx.raw_coboundary(0, 0);
  std::vector<Vec> images, basis = c0.vectors();
  for (const Vec& b : basis) images.push_back(delta.apply(b));
  const Vec diff = theta1 - theta2;
  Matrix A = Matrix::from_cols(images, diff.size());
  EquivalenceResult res;
  auto coef = solve(A, diff);
  if (!coef) return res;

  auto combine = [&](const Vec& c) {
    Vec tp(d * d);
    for (size_t k = 0; k < basis.size(); ++k)
      if (!c[k].is_zero()) axpy(tp, c[k], basis[k]);
    return tp;
  };
  res.kind = EquivalenceKind::Equivalent;
  res.theta_prime = combine(*coef);
  res.induced_form = induced_form(g, res.theta_prime);

  // theta' = particular + kernel element; ask for a vanishing induced form.
  std::vector<Vec> ker = nullspace(A).vectors();
  const size_t unknowns = ker.size();
  std::vector<Vec> rows;
  Vec rhs;
  std::vector<Matrix> kf;
  for (const Vec& k : ker) kf.push_back(induced_form(g, combine(k)));
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y) {
      Vec r(unknowns);
      for (size_t j = 0; j < unknowns; ++j) r[j] = kf[j](x, y);
      rows.push_back(r);
      rhs.push_back(-res.induced_form(x, y));
    }
  auto extra = solve(Matrix::from_rows(rows, unknowns), rhs);
  if (extra) {
    Vec c = *coef;
    for (size_t j = 0; j < unknowns; ++j)
      if (!(*extra)[j].is_zero()) axpy(c, (*extra)[j], ker[j]);
    res.kind = EquivalenceKind::IsometricallyEquivalent;
    res.theta_prime = combine(c);
    res.induced_form = induced_form(g, res.theta_prime);
  }
  return res;
}

Report tstar_series_laws(const HomSuperAlgebra& g, const Vec& theta) {
  Report rep;
  TStarExtension t = tstar_extend(g, theta);
  auto ks = solvable_length(g), ts = solvable_length(t.result.algebra);
  auto kn = nilpotent_length(g), tn = nilpotent_length(t.result.algebra);
  auto str = [](std::optional<size_t> v) { return v ? std::to_string(*v) : std::string("none"); };
  if (ks) {
    bool ok = ts && (*ts == *ks || *ts == *ks + 1);
    rep.add("solvable length k or k+1", ok, "g " + str(ks) + ", T* " + str(ts));
  }
  if (kn) {
    bool ok = tn && *tn >= *kn && *tn <= 2 * *kn - 1;
    rep.add("nilpotent length in [k, 2k-1]", ok, "g " + str(kn) + ", T* " + str(tn));
    if (is_zero(theta)) rep.add("nilpotent length of T*_0 is k", tn == kn,
                                "g " + str(kn) + ", T* " + str(tn));
  }
  return rep;
}

Report tstar_direct_sum_law(const HomSuperAlgebra& a, const HomSuperAlgebra& b) {
  HomSuperAlgebra g = direct_sum(a, b);
  const size_t da = a.dim(), db = b.dim(), d = da + db;
  TStarExtension t = tstar_extend(g, zero_theta(g));
  std::vector<Vec> ia, ib;
  for (size_t i = 0; i < da; ++i) {
    ia.push_back(unit_vec(2 * d, i));
    ia.push_back(unit_vec(2 * d, d + i));
  }
  for (size_t i = da; i < d; ++i) {
    ib.push_back(unit_vec(2 * d, i));
    ib.push_back(unit_vec(2 * d, d + i));
  }
  Subspace A = Subspace::span(2 * d, ia), B = Subspace::span(2 * d, ib);
  const HomSuperAlgebra& T = t.result.algebra;
  Report rep;
  rep.add("first block is a Hom-ideal", is_hom_ideal(A, T));
  rep.add("second block is a Hom-ideal", is_hom_ideal(B, T));
  rep.add("blocks are complementary", A.intersect(B).dim() == 0 && A.sum(B).dim() == 2 * d);
  // The blocks are T*_0 a and T*_0 b.
  TStarExtension ta = tstar_extend(a, zero_theta(a)), tb = tstar_extend(b, zero_theta(b));
  Matrix pa(2 * da, 2 * d), pb(2 * db, 2 * d);
  for (size_t i = 0; i < da; ++i) {
    pa(i, i) = 1;
    pa(da + i, d + i) = 1;
  }
  for (size_t i = 0; i < db; ++i) {
    pb(i, da + i) = 1;
    pb(db + i, d + da + i) = 1;
  }
  rep.add("projection onto T*_0 of the first summand", verify_morphism(pa, T, ta.result.algebra).ok());
  rep.add("projection onto T*_0 of the second summand", verify_morphism(pb, T, tb.result.algebra).ok());
  return rep;
}

}  // namespace nambu
