#include "nambu/algebra.hpp"
#include "nambu/errors.hpp"
#include "nambu/tstar.hpp"

namespace nambu {

namespace {

Subspace perp(const Subspace& s, const Matrix& gram) { return orthogonal_complement(s, gram); }

// Span of x . v over wedge basis x and v in s.
Subspace act_span(const HomSuperAlgebra& a, const Subspace& s) {
  std::vector<Vec> out;
  for (size_t w = 0; w < a.wedge().size(); ++w)
    for (const Vec& v : s.vectors()) out.push_back(a.ad(w) * v);
  return Subspace::span(a.dim(), out);
}

// {v | x . v in target for all wedge basis x}
Subspace joint_preimage(const HomSuperAlgebra& a, const Subspace& target) {
  Subspace out = Subspace::full(a.dim());
  for (size_t w = 0; w < a.wedge().size(); ++w) out = out.intersect(preimage(a.ad(w), target));
  return out;
}

// Largest m-invariant subspace inside s.
Subspace invariant_core(const Matrix& m, Subspace s) {
  while (true) {
    Subspace next = s.intersect(preimage(m, s));
    if (next == s) return s;
    s = next;
  }
}

struct Candidate {
  std::optional<Vec> v;
  std::string discriminant;  // set when only a square root is missing
};

// Isotropic vector in the span of the columns of b (symmetric form m = b^T G b),
// or the discriminant that would be needed.
Candidate isotropic_in(const std::vector<Vec>& b, const Matrix& gram) {
  const size_t k = b.size();
  Candidate out;
  if (k == 0) return out;
  // Orthogonal basis by symmetric Gram-Schmidt.
  std::vector<Vec> u;
  std::vector<Scalar> q;
  auto pair = [&](const Vec& x, const Vec& y) { return dot(x, gram * y); };
  std::vector<Vec> pool = b;
  while (!pool.empty()) {
    // prefer an anisotropic vector; any isotropic one ends the search
    size_t pick = pool.size();
    for (size_t i = 0; i < pool.size(); ++i) {
      if (pair(pool[i], pool[i]).is_zero()) {
        out.v = pool[i];
        return out;
      }
      if (pick == pool.size()) pick = i;
    }
    Vec p = pool[pick];
    Scalar pp = pair(p, p);
    u.push_back(p);
    q.push_back(pp);
    std::vector<Vec> rest;
    for (size_t i = 0; i < pool.size(); ++i) {
      if (i == pick) continue;
      Vec r = pool[i];
      axpy(r, -pair(p, r) / pp, p);
      if (!is_zero(r)) rest.push_back(r);
    }
    pool = rest;
  }
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j) {
      Scalar r = -q[j] / q[i];
      if (r.is_square()) {
        Vec v = u[j];
        axpy(v, r.sqrt(), u[i]);
        out.v = v;
        return out;
      }
      if (out.discriminant.empty()) out.discriminant = r.str();
    }
  if (out.discriminant.empty() && !q.empty()) out.discriminant = (-q[0]).str();
  return out;
}

}  // namespace

bool is_isotropic(const Subspace& s, const Matrix& gram) {
  for (const Vec& x : s.vectors())
    for (const Vec& y : s.vectors())
      if (!dot(x, gram * y).is_zero()) return false;
  return true;
}

Subspace centralizer(const HomSuperAlgebra& a, const Subspace& v) { return joint_preimage(a, v); }

Subspace centralizer_dual(const MetricAlgebra& g, const Subspace& v) {
  const Matrix& G = g.form.gram;
  return perp(act_span(g.algebra, perp(v, G)), G);
}

CentralizerSeries centralizer_series(const MetricAlgebra& g) {
  const HomSuperAlgebra& a = g.algebra;
  const Matrix& G = g.form.gram;
  CentralizerSeries out;
  out.c.push_back(Subspace::zero(a.dim()));
  while (true) {
    Subspace next = centralizer(a, out.c.back());
    Subspace dual = centralizer_dual(g, out.c.back());
    if (!(next == dual) && out.dual_paths_agree) {
      out.dual_paths_agree = false;
      out.witness = "C_" + std::to_string(out.c.size()) + ": definition dim " +
                    std::to_string(next.dim()) + ", dual dim " + std::to_string(dual.dim());
    }
    if (next == out.c.back()) break;
    out.c.push_back(next);
  }
  const auto terms = lower_central_series(a).terms;
  const size_t len = std::max(terms.size(), out.c.size());
  for (size_t i = 0; i < len; ++i) {
    const Subspace& t = terms[std::min(i, terms.size() - 1)];
    const Subspace& c = out.c[std::min(i, out.c.size() - 1)];
    if (!(t == perp(c, G))) {
      out.lcs_duality = false;
      if (out.witness.empty()) out.witness = "lower central term " + std::to_string(i);
      break;
    }
  }
  return out;
}

Subspace canonical_isotropic_ideal(const MetricAlgebra& g) {
  const HomSuperAlgebra& a = g.algebra;
  Series lcs = lower_central_series(a);
  require(lcs.length.has_value(), ErrorKind::NotNilpotent, a.name() + " is not nilpotent");
  CentralizerSeries cs = centralizer_series(g);
  Subspace j = Subspace::zero(a.dim());
  const size_t len = std::max(lcs.terms.size(), cs.c.size());
  for (size_t i = 0; i < len; ++i)
    j = j.sum(lcs.terms[std::min(i, lcs.terms.size() - 1)].intersect(
        cs.c[std::min(i, cs.c.size() - 1)]));
  require(is_isotropic(j, g.form.gram), ErrorKind::PostCheckFailed, "J is not isotropic");
  require(is_hom_ideal(j, a), ErrorKind::PostCheckFailed, "J is not a Hom-ideal");
  return j;
}

Subspace extend_to_maximal_isotropic(const MetricAlgebra& g, const Subspace& w0) {
  const HomSuperAlgebra& a = g.algebra;
  const Matrix& G = g.form.gram;
  const size_t m = a.dim();
  require(w0.ambient() == m, ErrorKind::DimensionMismatch, "subspace ambient");
  require(is_graded(w0, a.space()), ErrorKind::NonGradedSubspace, "W must be graded");
  require(is_isotropic(w0, G), ErrorKind::NotIsotropic, "W must be isotropic");
  require(is_hom_ideal(w0, a), ErrorKind::NotAnIdeal, "W must be ad- and alpha-stable");
  Subspace w = w0;
  while (w.dim() < m / 2) {
    Subspace k = perp(w, G).intersect(joint_preimage(a, w));
    Subspace s = invariant_core(a.alpha(), k);
    std::string disc;
    std::optional<Vec> found;
    for (int par : {1, 0}) {
      Subspace sp = s.intersect(a.space().part(par));
      // lift of a basis of sp / w
      std::vector<Vec> lift;
      Subspace acc = w;
      for (const Vec& v : sp.vectors())
        if (!acc.contains(v)) {
          lift.push_back(v);
          acc = acc.sum(Subspace::span(m, {v}));
        }
      const size_t q = lift.size();
      if (q == 0) continue;
      // alpha on sp / w in the lifted basis
      std::vector<Vec> cols = lift;
      for (const Vec& v : w.vectors()) cols.push_back(v);
      Matrix basis = Matrix::from_cols(cols, m);
      Matrix A(q, q);
      for (size_t j = 0; j < q; ++j) {
        auto c = solve(basis, a.alpha() * lift[j]);
        require(c.has_value(), ErrorKind::PostCheckFailed, "alpha leaves the stable core");
        for (size_t i = 0; i < q; ++i) A(i, j) = (*c)[i];
      }
      auto roots = rational_roots(charpoly(A));
      if (roots.empty()) {
        if (disc.empty()) disc = "charpoly " + Matrix::from_rows({charpoly(A)}, q + 1).str();
        continue;
      }
      for (const Scalar& lam : roots) {
        Subspace e = nullspace(A - Matrix::identity(q).scaled(lam));
        std::vector<Vec> vecs;
        for (const Vec& c : e.vectors()) {
          Vec v(m);
          for (size_t i = 0; i < q; ++i)
            if (!c[i].is_zero()) axpy(v, c[i], lift[i]);
          vecs.push_back(v);
        }
        Candidate cand = isotropic_in(vecs, G);
        if (cand.v) {
          found = cand.v;
          break;
        }
        if (disc.empty()) disc = cand.discriminant;
      }
      if (found) break;
    }
    if (!found) {
      if (!disc.empty())
        throw NeedsFieldExtension(disc, "no rational stable isotropic vector in W^perp/W");
      fail(ErrorKind::NoStableIsotropicVector,
           "alpha-stable joint kernel is trivial at dim " + std::to_string(w.dim()));
    }
    w = w.sum(Subspace::span(m, {*found}));
  }
  require(w.dim() == m / 2 && is_isotropic(w, G) && is_hom_ideal(w, a), ErrorKind::PostCheckFailed,
          "maximal isotropic post-check");
  if (m % 2 == 1) {
    Subspace wp = perp(w, G);
    require(w.contains(act_span(a, wp)), ErrorKind::PostCheckFailed,
            "g does not map W_max^perp into W_max");
  }
  return w;
}

bool isotropic_half_ideal_abelian_check(const MetricAlgebra& g, const Subspace& i) {
  const HomSuperAlgebra& a = g.algebra;
  const size_t m = a.dim();
  require(m % 2 == 0, ErrorKind::OddDimension, "dimension must be even");
  require(i.dim() * 2 == m, ErrorKind::NotHalfDimensional, "I must have half the dimension");
  require(is_isotropic(i, g.form.gram), ErrorKind::NotIsotropic, "I must be isotropic");
  require(is_hom_ideal(i, a), ErrorKind::NotAnIdeal, "I must be a Hom-ideal");
  std::vector<Vec> units;
  for (size_t k = 0; k < m; ++k) units.push_back(unit_vec(m, k));
  const auto hs = homogeneous_basis(i, a.space());
  std::vector<std::vector<Vec>> slots(static_cast<size_t>(a.arity()), units);
  slots[slots.size() - 1] = hs;
  slots[slots.size() - 2] = hs;
  return bracket_span(a, slots).dim() == 0;
}

}  // namespace nambu
