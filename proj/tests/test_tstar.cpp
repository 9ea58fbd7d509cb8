#include "doctest.h"
#include "nambu/algebra.hpp"
#include "nambu/corpus.hpp"
#include "nambu/errors.hpp"
#include "nambu/random.hpp"
#include "nambu/tstar.hpp"

using namespace nambu;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::PostCheckFailed;
}

HomSuperAlgebra variant(const std::string& name) {
  for (const HomSuperAlgebra& v : corpus::twisted_variants())
    if (v.name() == name) return v;
  FAIL("no variant " << name);
  return {};
}

struct ThetaSpaces {
  Subspace skew;    // even skew compatible cochains
  Subspace closed;  // ... with delta theta = 0
  Subspace cyclic;  // closed and cyclic
};

ThetaSpaces theta_spaces(const HomSuperAlgebra& g) {
  CoadjointRep co = coadjoint_rep(g);
  CochainComplex cx(g, co.rep);
  ThetaSpaces t;
  t.skew = cx.skew_cochains(0).intersect(cx.cochains(1, 0));
  std::vector<Vec> images, basis = t.skew.vectors();
  for (const Vec& v : basis) images.push_back(cx.coboundary(1, v));
  std::vector<Vec> closed;
  for (const Vec& c : nullspace(Matrix::from_cols(images, cx.raw_dim(2))).vectors()) {
    Vec f(cx.raw_dim(1));
    for (size_t j = 0; j < c.size(); ++j)
      if (!c[j].is_zero()) axpy(f, c[j], basis[j]);
    closed.push_back(f);
  }
  t.closed = Subspace::span(cx.raw_dim(1), closed);
  t.cyclic = t.closed.intersect(cyclic_space(g));
  return t;
}

Vec random_in(Rng& rng, const Subspace& s) {
  Vec v(s.ambient());
  for (const Vec& b : s.vectors()) axpy(v, random_small(rng, 3), b);
  return v;
}

MetricAlgebra tstar0(const HomSuperAlgebra& g) { return tstar_extend(g, zero_theta(g)).result; }

}  // namespace

TEST_CASE("coadjoint representation") {
  SUBCASE("untwisted algebras") {
    for (const HomSuperAlgebra& g : {corpus::heisenberg(), corpus::super_heisenberg(), corpus::n4(),
                                     corpus::sl2(), corpus::gl11(), corpus::a4()}) {
      CAPTURE(g.name());
      CoadjointRep co = coadjoint_rep(g);
      CHECK(co.exists);
      CHECK(co.twist_compatible);
      CHECK(verify_representation(co.rep, g).ok());
      CHECK(co.rep.nu == g.alpha().transpose());
    }
  }
  SUBCASE("H3: rho*(e1) sends e3* to -e2*") {
    CoadjointRep co = coadjoint_rep(corpus::heisenberg());
    CHECK(co.rep.rho[0](1, 2) == Scalar(-1));
  }
  SUBCASE("the literal second matrix condition is only diagnostic") {
    CoadjointRep co = coadjoint_rep(corpus::sl2());
    CHECK(co.exists);
    CHECK(co.conditions.passed("condition i"));
    CHECK_FALSE(co.conditions.passed("condition ii"));
  }
  SUBCASE("twists where ad* is not a representation") {
    for (const char* name : {"sl2^exp", "sl2^exp3", "gl11^auto"}) {
      CAPTURE(name);
      CoadjointRep co = coadjoint_rep(variant(name));
      CHECK_FALSE(co.exists);
      CHECK_FALSE(co.witness.empty());
    }
  }
  SUBCASE("twists where ad* exists but nu* does not intertwine") {
    for (const char* name : {"H3^diag(2,1,2)", "H3^shear", "SH^swap", "N4^upper"}) {
      CAPTURE(name);
      HomSuperAlgebra g = variant(name);
      CoadjointRep co = coadjoint_rep(g);
      CHECK(co.exists);
      CHECK_FALSE(co.twist_compatible);
      CHECK_FALSE(verify_algebra(tstar0(g).algebra).ok());
      CHECK(kind_of([&] { tstar_extend(g, zero_theta(g), true); }) == ErrorKind::CoadjointMissing);
    }
  }
}

TEST_CASE("T*_0 of H3") {
  HomSuperAlgebra h = corpus::heisenberg();
  MetricAlgebra t = tstar0(h);
  CHECK(t.algebra.dim() == 6);
  CHECK(verify_algebra(t.algebra).ok());
  CHECK(verify_metric(t.algebra, t.form).ok());
  CHECK(nilpotent_length(t.algebra) == nilpotent_length(h));
  // [e1, e3*] = -e2*
  Vec v = t.algebra.basis_bracket({0, 5});
  CHECK(v == Vec{0, 0, 0, 0, -1, 0});
  CHECK(is_isotropic(embedded_dual(h), t.form.gram));
  CHECK(is_hom_ideal(embedded_dual(h), t.algebra));
}

TEST_CASE("T* validity iff closed, metric iff cyclic") {
  Rng rng(21);
  std::vector<HomSuperAlgebra> algs = {corpus::heisenberg(), corpus::abelian(1, 1),
                                       corpus::abelian(2, 0), corpus::super_heisenberg(),
                                       variant("H3^rank2")};
  for (const HomSuperAlgebra& g : algs) {
    CAPTURE(g.name());
    ThetaSpaces s = theta_spaces(g);
    for (int i = 0; i < 20; ++i) {
      Vec closed = random_in(rng, s.closed);
      MetricAlgebra t = tstar_extend(g, closed).result;
      CHECK(verify_algebra(t.algebra).ok());
      CHECK(verify_metric(t.algebra, t.form).ok() == is_cyclic_cocycle(g, closed));
      if (s.skew.dim() > s.closed.dim()) {
        Vec open = random_in(rng, s.skew);
        bool is_closed = s.closed.contains(open);
        CHECK(verify_algebra(tstar_extend(g, open).result.algebra).ok() == is_closed);
      }
      if (s.cyclic.dim() > 0) {
        Vec cyc = random_in(rng, s.cyclic);
        MetricAlgebra c = tstar_extend(g, cyc).result;
        CHECK(verify_algebra(c.algebra).ok());
        CHECK(verify_metric(c.algebra, c.form).ok());
      }
    }
  }
}

TEST_CASE("closed but not cyclic on abelian(2|0)") {
  HomSuperAlgebra g = corpus::abelian(2, 0);
  ThetaSpaces s = theta_spaces(g);
  REQUIRE(s.closed.dim() > s.cyclic.dim());
  Vec theta;
  for (const Vec& v : s.closed.vectors())
    if (!is_cyclic_cocycle(g, v)) theta = v;
  MetricAlgebra t = tstar_extend(g, theta).result;
  CHECK(verify_algebra(t.algebra).ok());
  Report m = verify_metric(t.algebra, t.form);
  CHECK_FALSE(m.passed("invariant"));
  CHECK(kind_of([&] { tstar_extend(g, theta, true); }) == ErrorKind::ThetaNotCyclic);
}

TEST_CASE("validated T* rejects open theta") {
  HomSuperAlgebra g = corpus::heisenberg();
  ThetaSpaces s = theta_spaces(g);
  Vec open;
  for (const Vec& v : s.skew.vectors())
    if (!s.closed.contains(v)) open = v;
  REQUIRE(!open.empty());
  CHECK(kind_of([&] { tstar_extend(g, open, true); }) == ErrorKind::ThetaNotClosed);
}

TEST_CASE("equivalence of T*-extensions") {
  Rng rng(8);
  int equivalent = 0, isometric = 0, inequivalent = 0;
  for (const HomSuperAlgebra& g : {corpus::heisenberg(), corpus::abelian(1, 1), corpus::n4(),
                                   corpus::sl2()}) {
    CAPTURE(g.name());
    CoadjointRep co = coadjoint_rep(g);
    CochainComplex cx(g, co.rep);
    ThetaSpaces s = theta_spaces(g);
    Vec theta1 = random_in(rng, s.cyclic);
    CHECK(equivalence(g, theta1, theta1).kind == EquivalenceKind::IsometricallyEquivalent);

    // theta' whose coboundary is cyclic
    const Subspace& c0 = cx.cochains(0, 0);
    std::vector<Vec> bs;
    for (const Vec& v : c0.vectors()) bs.push_back(cx.coboundary(0, v));
    Matrix delta = Matrix::from_cols(bs, cx.raw_dim(1));
    Subspace ok = nullspace(cyclic_space(g).annihilator().basis() * delta);
    REQUIRE(ok.dim() > 0);
    for (const Vec& c : ok.vectors()) {
      Vec tp(cx.raw_dim(0));
      for (size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero()) axpy(tp, c[j], c0.vector(j));
      Vec theta2 = theta1 - cx.coboundary(0, tp);
      EquivalenceResult e = equivalence(g, theta1, theta2);
      REQUIRE(e.kind != EquivalenceKind::Inequivalent);
      CHECK(is_zero(theta1 - theta2 - cx.coboundary(0, e.theta_prime)));
      TStarExtension t1 = tstar_extend(g, theta1), t2 = tstar_extend(g, theta2);
      Matrix phi = equivalence_map(g, e.theta_prime);
      CHECK(verify_morphism(phi, t1.result.algebra, t2.result.algebra).ok());
      bool preserves = phi.transpose() * t2.result.form.gram * phi == t1.result.form.gram;
      if (e.kind == EquivalenceKind::IsometricallyEquivalent) {
        ++isometric;
        CHECK(e.induced_form.is_zero());
        CHECK(preserves);
      } else {
        ++equivalent;
        CHECK_FALSE(preserves);
      }
    }
    // a cyclic cocycle outside the coboundaries
    Subspace b1 = Subspace::span(cx.raw_dim(1), bs);
    for (const Vec& v : s.cyclic.vectors())
      if (!b1.contains(v)) {
        CHECK(equivalence(g, theta1, theta1 + v).kind == EquivalenceKind::Inequivalent);
        ++inequivalent;
        break;
      }
  }
  CHECK(equivalent > 0);
  CHECK(isometric > 0);
  CHECK(inequivalent > 0);
}

TEST_CASE("equivalence preconditions") {
  HomSuperAlgebra g = corpus::abelian(2, 0);
  ThetaSpaces s = theta_spaces(g);
  Vec bad;
  for (const Vec& v : s.closed.vectors())
    if (!is_cyclic_cocycle(g, v)) bad = v;
  CHECK(kind_of([&] { equivalence(g, bad, zero_theta(g)); }) == ErrorKind::ThetaNotCyclic);
  HomSuperAlgebra t = variant("sl2^exp");
  CHECK(kind_of([&] { equivalence(t, zero_theta(t), zero_theta(t)); }) ==
        ErrorKind::CoadjointMissing);
}

TEST_CASE("induced form of theta'") {
  HomSuperAlgebra g = corpus::abelian(1, 1);
  Vec tp(4);
  tp[0 * 2 + 0] = 2;  // theta'(e1)(e1) = 2
  Matrix f = induced_form(g, tp);
  CHECK(f(0, 0) == Scalar(2));
  CHECK(f(1, 1).is_zero());
}

TEST_CASE("centralizer series and dual identities on metric algebras") {
  std::vector<MetricAlgebra> algs;
  for (const HomSuperAlgebra& g : {corpus::heisenberg(), corpus::super_heisenberg(), corpus::n4(),
                                   corpus::abelian(1, 1), variant("H3^rank2")})
    algs.push_back(tstar0(g));
  Matrix k(3, 3);
  k(0, 0) = 8;
  k(1, 2) = 4;
  k(2, 1) = 4;
  algs.push_back({corpus::sl2(), {k}});
  for (const MetricAlgebra& m : algs) {
    CAPTURE(m.algebra.name());
    REQUIRE(verify_metric(m.algebra, m.form).ok());
    CentralizerSeries cs = centralizer_series(m);
    CHECK(cs.dual_paths_agree);
    CHECK(cs.lcs_duality);
    CHECK(cs.c.front().dim() == 0);
  }
}

TEST_CASE("centralizer of zero is the center") {
  MetricAlgebra t = tstar0(corpus::heisenberg());
  Subspace z = centralizer(t.algebra, Subspace::zero(6));
  // center of T*_0 H3: e3, e1*, e2*
  CHECK(z == Subspace::span(6, {unit_vec(6, 2), unit_vec(6, 3), unit_vec(6, 4)}));
}

TEST_CASE("canonical isotropic ideal and maximal extension") {
  for (const HomSuperAlgebra& g : {corpus::heisenberg(), corpus::n4(), corpus::super_heisenberg(),
                                   corpus::abelian(1, 1)}) {
    CAPTURE(g.name());
    MetricAlgebra m = tstar0(g);
    Subspace j = canonical_isotropic_ideal(m);
    CHECK(is_isotropic(j, m.form.gram));
    CHECK(is_hom_ideal(j, m.algebra));
    Subspace i = extend_to_maximal_isotropic(m, j);
    CHECK(i.dim() * 2 == m.algebra.dim());
    CHECK(i.contains(j));
    CHECK(isotropic_half_ideal_abelian_check(m, i));
    CHECK(isotropic_half_ideal_abelian_check(m, embedded_dual(g)));
  }
  Matrix k(3, 3);
  k(0, 0) = 8;
  k(1, 2) = 4;
  k(2, 1) = 4;
  CHECK(kind_of([&] { canonical_isotropic_ideal({corpus::sl2(), {k}}); }) == ErrorKind::NotNilpotent);
}

TEST_CASE("maximal isotropic search over Q") {
  SUBCASE("hyperbolic plane finds a line") {
    Matrix g = Matrix::from_rows({{1, 0}, {0, -1}}, 2);
    Subspace i = extend_to_maximal_isotropic({corpus::abelian(2, 0), {g}}, Subspace::zero(2));
    CHECK(i.dim() == 1);
    CHECK(is_isotropic(i, g));
  }
  SUBCASE("x^2 + y^2 needs sqrt(-1)") {
    try {
      extend_to_maximal_isotropic({corpus::abelian(2, 0), {Matrix::identity(2)}}, Subspace::zero(2));
      FAIL("expected NeedsFieldExtension");
    } catch (const NeedsFieldExtension& e) {
      CHECK(e.discriminant() == "-1");
    }
  }
  SUBCASE("non-isotropic start") {
    CHECK(kind_of([&] {
            extend_to_maximal_isotropic({corpus::abelian(2, 0), {Matrix::identity(2)}},
                                        Subspace::span(2, {unit_vec(2, 0)}));
          }) == ErrorKind::NotIsotropic);
  }
}

TEST_CASE("abelian check preconditions") {
  MetricAlgebra t = tstar0(corpus::heisenberg());
  CHECK(kind_of([&] { isotropic_half_ideal_abelian_check(t, Subspace::zero(6)); }) ==
        ErrorKind::NotHalfDimensional);
  Subspace notiso = Subspace::span(6, {unit_vec(6, 0), unit_vec(6, 3), unit_vec(6, 4)});
  CHECK(kind_of([&] { isotropic_half_ideal_abelian_check(t, notiso); }) == ErrorKind::NotIsotropic);
  Subspace g = Subspace::span(6, {unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)});
  CHECK(kind_of([&] { isotropic_half_ideal_abelian_check(t, g); }) == ErrorKind::NotAnIdeal);
  MetricAlgebra odd{corpus::abelian(1, 0), {Matrix::identity(1)}};
  CHECK(kind_of([&] { isotropic_half_ideal_abelian_check(odd, Subspace::zero(1)); }) ==
        ErrorKind::OddDimension);
}

TEST_CASE("reconstruction from the embedded dual") {
  HomSuperAlgebra h = corpus::heisenberg();
  MetricAlgebra t = tstar0(h);
  Reconstruction r = reconstruct_as_tstar(t, embedded_dual(h));
  CHECK(r.checks.ok());
  CHECK(r.phi == Matrix::identity(6));
  CHECK(r.g1.entries() == h.entries());
  CHECK(equivalence(r.g1, r.theta, zero_theta(r.g1)).kind ==
        EquivalenceKind::IsometricallyEquivalent);
}

TEST_CASE("reconstruction round trip with a nonzero cyclic cocycle") {
  Rng rng(4);
  for (const HomSuperAlgebra& g : {corpus::heisenberg(), corpus::abelian(1, 1), corpus::n4()}) {
    CAPTURE(g.name());
    ThetaSpaces s = theta_spaces(g);
    Vec theta = random_in(rng, s.cyclic);
    MetricAlgebra t = tstar_extend(g, theta).result;
    Reconstruction r = reconstruct_as_tstar(t, embedded_dual(g));
    CHECK(r.checks.ok());
    Matrix pulled = r.phi.transpose() * r.tstar.result.form.gram * r.phi;
    CHECK(pulled == t.form.gram);
  }
}

TEST_CASE("adjoin a line in the odd case") {
  SUBCASE("abelian(1) with <e,e> = 1 needs sqrt(-1)") {
    try {
      adjoin_line({corpus::abelian(1, 0), {Matrix::identity(1)}}, Subspace::zero(1));
      FAIL("expected NeedsFieldExtension");
    } catch (const NeedsFieldExtension& e) {
      CHECK(e.discriminant() == "-1");
    }
  }
  SUBCASE("abelian(1) with <e,e> = -1 succeeds") {
    Matrix g = Matrix::from_rows({{-1}}, 1);
    AdjoinedLine l = adjoin_line({corpus::abelian(1, 0), {g}}, Subspace::zero(1));
    CHECK(l.algebra.algebra.dim() == 2);
    CHECK(l.ideal.dim() == 1);
    CHECK(is_isotropic(l.ideal, l.algebra.form.gram));
    CHECK(verify_metric(l.algebra.algebra, l.algebra.form).ok());
  }
}

TEST_CASE("decompose certificates") {
  for (const HomSuperAlgebra& g : {corpus::heisenberg(), corpus::abelian(1, 1), corpus::n4(),
                                   corpus::super_heisenberg()}) {
    CAPTURE(g.name());
    Certificate c = decompose(tstar0(g));
    CHECK(c.checks.ok());
    CHECK_FALSE(c.odd);
    CHECK(c.k1 <= c.bound);
    CHECK(c.i.contains(c.j));
  }
  SUBCASE("odd dimension") {
    Matrix d3 = Matrix::identity(3);
    d3(1, 1) = -1;
    d3(2, 2) = -1;
    Certificate c = decompose({corpus::abelian(3, 0), {d3}});
    CHECK(c.odd);
    CHECK(c.checks.ok());
    CHECK(c.rec.g1.dim() == 2);
  }
  SUBCASE("preconditions") {
    HomSuperAlgebra h = corpus::heisenberg();
    CHECK(kind_of([&] { decompose({h, {Matrix::identity(3)}}); }) == ErrorKind::NotMetric);
    Matrix k(3, 3);
    k(0, 0) = 8;
    k(1, 2) = 4;
    k(2, 1) = 4;
    CHECK(kind_of([&] { decompose({corpus::sl2(), {k}}); }) == ErrorKind::NotNilpotent);
    HomSuperAlgebra z = abelian_algebra({0, 0}, 2, Matrix::from_rows({{1, 0}, {0, 0}}, 2));
    Matrix hyp = Matrix::from_rows({{1, 0}, {0, 1}}, 2);
    CHECK(kind_of([&] { decompose({z, {hyp}}); }) == ErrorKind::NotSurjective);
  }
}

TEST_CASE("length laws for T*-extensions") {
  Rng rng(2);
  for (const HomSuperAlgebra& g : {corpus::heisenberg(), corpus::abelian(1, 1), corpus::n4(),
                                   corpus::super_heisenberg(), corpus::abelian(2, 0)}) {
    CAPTURE(g.name());
    CHECK(tstar_series_laws(g, zero_theta(g)).ok());
    ThetaSpaces s = theta_spaces(g);
    for (int i = 0; i < 3; ++i) CHECK(tstar_series_laws(g, random_in(rng, s.closed)).ok());
  }
}

TEST_CASE("T*_0 of a direct sum splits") {
  Report r = tstar_direct_sum_law(corpus::heisenberg(), corpus::abelian(1, 0));
  CHECK(r.ok());
  CHECK(tstar_direct_sum_law(corpus::super_heisenberg(), corpus::abelian(1, 1)).ok());
}
