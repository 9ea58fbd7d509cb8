#include "nambu/algebra.hpp"
#include "nambu/errors.hpp"
#include "nambu/tstar.hpp"

namespace nambu {

namespace {

Scalar form(const Matrix& G, const Vec& x, const Vec& y) { return dot(x, G * y); }

}  // namespace

Reconstruction reconstruct_as_tstar(const MetricAlgebra& g, const Subspace& ideal) {
  const HomSuperAlgebra& a = g.algebra;
  const Matrix& G = g.form.gram;
  const size_t m = a.dim(), h = m / 2;
  require(m % 2 == 0, ErrorKind::OddDimension, "reconstruction needs even dimension");
  require(ideal.dim() == h, ErrorKind::NotHalfDimensional, "I must have half the dimension");
  require(is_isotropic(ideal, G), ErrorKind::NotIsotropic, "I must be isotropic");
  require(is_hom_ideal(ideal, a), ErrorKind::NotAnIdeal, "I must be a Hom-ideal");
  require(isotropic_half_ideal_abelian_check(g, ideal), ErrorKind::PostCheckFailed,
          "half-dimensional isotropic ideal is not abelian");

  Quotient q = quotient(a, ideal);
  std::vector<Vec> u, b = homogeneous_basis(ideal, a.space());
  for (size_t c : q.complement) u.push_back(unit_vec(m, c));

  // Dual basis z_k of I against u, then shift u into an isotropic complement.
  Matrix P(h, h);
  for (size_t i = 0; i < h; ++i)
    for (size_t j = 0; j < h; ++j) P(i, j) = form(G, u[i], b[j]);
  require(rank(P) == h, ErrorKind::ComplementNotFound, "I does not pair with its complement");
  Matrix Pinv = inverse(P);
  std::vector<Vec> z(h, Vec(m));
  for (size_t k = 0; k < h; ++k)
    for (size_t j = 0; j < h; ++j)
      if (!Pinv(j, k).is_zero()) axpy(z[k], Pinv(j, k), b[j]);
  std::vector<Vec> g0 = u;
  for (size_t j = 0; j < h; ++j)
    for (size_t i = 0; i < h; ++i) {
      Scalar c = form(G, u[i], u[j]);
      if (!c.is_zero()) axpy(g0[j], -c / Scalar(2), z[i]);
    }
  for (size_t i = 0; i < h; ++i)
    for (size_t j = 0; j < h; ++j)
      require(form(G, g0[i], g0[j]).is_zero(), ErrorKind::ComplementNotFound,
              "complement is not isotropic");

  Reconstruction r;
  r.g1 = q.algebra;
  r.complement = Matrix::from_cols(g0, m);
  const WedgeBasis& W = r.g1.wedge();
  r.theta = Vec(W.size() * h * h);
  std::vector<Vec> gv(h);
  for (size_t k = 0; k < h; ++k) gv[k] = G * g0[k];
  for (size_t w = 0; w < W.size(); ++w)
    for (size_t x = 0; x < h; ++x) {
      std::vector<Vec> args;
      for (int t : W.element(w)) args.push_back(g0[t]);
      args.push_back(g0[x]);
      Vec y = a.bracket(args);
      if (is_zero(y)) continue;
      for (size_t k = 0; k < h; ++k) r.theta[(w * h + x) * h + k] = dot(y, gv[k]);
    }

  // phi(x + zeta) = pi(x) + f1*(zeta), f1*(zeta)_k = <zeta, g0_k>.
  std::vector<Vec> cols = g0;
  cols.insert(cols.end(), b.begin(), b.end());
  Matrix Binv = inverse(Matrix::from_cols(cols, m));
  r.phi = Matrix(2 * h, m);
  for (size_t j = 0; j < m; ++j) {
    Vec c = Binv.col(j);
    Vec zeta(m);
    for (size_t i = 0; i < h; ++i) {
      r.phi(i, j) = c[i];
      if (!c[h + i].is_zero()) axpy(zeta, c[h + i], b[i]);
    }
    for (size_t k = 0; k < h; ++k) r.phi(h + k, j) = dot(zeta, gv[k]);
  }

  r.tstar = tstar_extend(r.g1, r.theta);
  CoadjointRep co = coadjoint_rep(r.g1);
  r.checks.add("coadjoint representation of g/I", co.exists && co.twist_compatible,
               co.exists ? co.twist_witness : co.witness);
  CochainComplex cx(r.g1, co.rep);
  const bool cochain = cx.is_cochain(1, r.theta);
  r.checks.add("theta closed", cochain && is_zero(cx.raw_coboundary(1, 0).apply(r.theta)),
               cochain ? "delta theta != 0" : "theta is not a compatible cochain");
  r.checks.add("theta cyclic", is_cyclic_cocycle(r.g1, r.theta));
  r.checks.add("phi invertible", rank(r.phi) == m);
  r.checks.merge(verify_morphism(r.phi, a, r.tstar.result.algebra), "phi ");
  Matrix pulled = r.phi.transpose() * r.tstar.result.form.gram * r.phi;
  r.checks.add("phi isometry", pulled == G, "pulled-back form differs");
  return r;
}

AdjoinedLine adjoin_line(const MetricAlgebra& g, const Subspace& ideal) {
  const HomSuperAlgebra& a = g.algebra;
  const Matrix& G = g.form.gram;
  const size_t m = a.dim();
  require(is_isotropic(ideal, G), ErrorKind::NotIsotropic, "I must be isotropic");
  require(is_hom_ideal(ideal, a), ErrorKind::NotAnIdeal, "I must be a Hom-ideal");

  // Even part of I^perp modulo I, with alpha acting on it.
  Subspace p = orthogonal_complement(ideal, G).intersect(a.space().part(0));
  std::vector<Vec> lift;
  Subspace acc = ideal;
  for (const Vec& v : p.vectors())
    if (!acc.contains(v)) {
      lift.push_back(v);
      acc = acc.sum(Subspace::span(m, {v}));
    }
  const size_t q = lift.size();
  require(q > 0, ErrorKind::NoStableIsotropicVector, "I^perp / I has no even part");
  std::vector<Vec> cols = lift;
  for (const Vec& v : ideal.vectors()) cols.push_back(v);
  Matrix basis = Matrix::from_cols(cols, m);
  Matrix A(q, q);
  for (size_t j = 0; j < q; ++j) {
    auto c = solve(basis, a.alpha() * lift[j]);
    require(c.has_value(), ErrorKind::PostCheckFailed, "alpha does not preserve I^perp");
    for (size_t i = 0; i < q; ++i) A(i, j) = (*c)[i];
  }
  std::string disc;
  std::optional<Vec> z;
  Scalar mu;
  for (const Scalar& lam : rational_roots(charpoly(A))) {
    std::vector<Vec> pool;
    for (const Vec& c : nullspace(A - Matrix::identity(q).scaled(lam)).vectors()) {
      Vec v(m);
      for (size_t i = 0; i < q; ++i)
        if (!c[i].is_zero()) axpy(v, c[i], lift[i]);
      pool.push_back(v);
    }
    // orthogonalize and look for a value -1 on a single line
    while (!pool.empty() && !z) {
      size_t pick = pool.size();
      for (size_t i = 0; i < pool.size(); ++i)
        if (!form(G, pool[i], pool[i]).is_zero()) {
          pick = i;
          break;
        }
      if (pick == pool.size()) break;
      Vec v = pool[pick];
      Scalar vv = form(G, v, v);
      Scalar r = Scalar(-1) / vv;
      if (r.is_square()) {
        z = r.sqrt() * v;
        mu = lam;
        break;
      }
      if (disc.empty()) disc = r.str();
      std::vector<Vec> rest;
      for (size_t i = 0; i < pool.size(); ++i) {
        if (i == pick) continue;
        Vec w = pool[i];
        axpy(w, -form(G, v, w) / vv, v);
        if (!is_zero(w)) rest.push_back(w);
      }
      pool = rest;
    }
    if (z) break;
  }
  if (!z) {
    if (disc.empty()) disc = "charpoly of alpha on I^perp/I has no rational root";
    throw NeedsFieldExtension(disc, "no z in I^perp with <z,z> = -1 over Q");
  }

  AdjoinedLine out;
  out.z = *z;
  out.mu = mu;
  GradedSpace sp = a.space();
  sp.parity.push_back(0);
  Matrix al(m + 1, m + 1), G2(m + 1, m + 1);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      al(i, j) = a.alpha()(i, j);
      G2(i, j) = G(i, j);
    }
  al(m, m) = mu;
  G2(m, m) = 1;
  HomSuperAlgebra::Entries e;
  for (const auto& [t, v] : a.entries()) {
    Vec w = v;
    w.push_back(Scalar(0));
    e[t] = w;
  }
  out.algebra.algebra = HomSuperAlgebra(a.name() + "+Ka", sp, a.arity(), e, al);
  out.algebra.form.gram = G2;
  std::vector<Vec> iv;
  for (const Vec& v : ideal.vectors()) {
    Vec w = v;
    w.push_back(Scalar(0));
    iv.push_back(w);
  }
  Vec az = *z;
  az.push_back(Scalar(1));
  iv.push_back(az);
  out.ideal = Subspace::span(m + 1, iv);
  return out;
}

Certificate decompose(const MetricAlgebra& g) {
  const HomSuperAlgebra& a = g.algebra;
  const size_t m = a.dim();
  Report metric = verify_metric(a, g.form);
  require(metric.ok(), ErrorKind::NotMetric, "metric: " + metric.str());
  auto k = nilpotent_length(a);
  require(k.has_value(), ErrorKind::NotNilpotent, a.name() + " is not nilpotent");
  require(rank(a.alpha()) == m, ErrorKind::NotSurjective, "alpha must be surjective");

  auto stage = [](const char* name, auto&& fn) {
    try {
      return fn();
    } catch (const NeedsFieldExtension& e) {
      throw NeedsFieldExtension(e.discriminant(), std::string(name) + ": " + e.message());
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(name) + ": " + e.detail());
    }
  };

  Certificate c;
  c.input = a.name();
  c.k = *k;
  c.bound = *k / 2 + 1;
  c.j = stage("canonical isotropic ideal", [&] { return canonical_isotropic_ideal(g); });
  Subspace imax = stage("maximal isotropic", [&] { return extend_to_maximal_isotropic(g, c.j); });
  c.odd = m % 2 == 1;
  if (!c.odd) {
    c.i = imax;
    c.embedding = Matrix::identity(m);
    c.rec = stage("reconstruction", [&] { return reconstruct_as_tstar(g, imax); });
  } else {
    AdjoinedLine line = stage("adjoin line", [&] { return adjoin_line(g, imax); });
    c.i = line.ideal;
    c.embedding = Matrix(m + 1, m);
    for (size_t i = 0; i < m; ++i) c.embedding(i, i) = 1;
    c.rec = stage("reconstruction", [&] { return reconstruct_as_tstar(line.algebra, line.ideal); });
  }
  auto k1 = nilpotent_length(c.rec.g1);
  c.k1 = k1 ? *k1 : 0;
  c.checks.add("J contained in I", imax.contains(c.j));
  c.checks.merge(c.rec.checks);
  c.checks.add("length bound", k1 && *k1 <= c.bound,
               "g1 length " + std::to_string(c.k1) + " > " + std::to_string(c.bound));
  return c;
}

}  // namespace nambu
