#include <functional>
#include <set>

#include "doctest.h"
#include "nambu/algebra.hpp"
#include "nambu/corpus.hpp"
#include "nambu/errors.hpp"
#include "nambu/random.hpp"

using namespace nambu;

namespace {

Vec e(size_t d, size_t i) { return unit_vec(d, i); }

// Fundamental identity checked through the generic vector bracket only,
// independent of the ad/alpha-wedge tables used by verify_algebra.
bool naive_fundamental_identity(const HomSuperAlgebra& a) {
  const size_t d = a.dim(), n = static_cast<size_t>(a.arity());
  const auto& par = a.parity();
  std::vector<Vec> alpha_e;
  for (size_t i = 0; i < d; ++i) alpha_e.push_back(a.alpha().col(i));
  Tuple x(n - 1), y(n);
  bool ok = true;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (!ok) return;
    if (k < n - 1) {
      for (size_t i = 0; i < d; ++i) {
        x[k] = static_cast<int>(i);
        rec(k + 1);
      }
      return;
    }
    if (k < 2 * n - 1) {
      for (size_t i = 0; i < d; ++i) {
        y[k - (n - 1)] = static_cast<int>(i);
        rec(k + 1);
      }
      return;
    }
    int px = 0;
    for (int i : x) px ^= par[i];
    std::vector<Vec> args;
    for (int i : x) args.push_back(alpha_e[i]);
    args.push_back(a.basis_bracket(y));
    Vec lhs = a.bracket(args);
    Vec rhs(d);
    int before = 0;
    for (size_t i = 0; i < n; ++i) {
      std::vector<Vec> inner;
      for (int j : x) inner.push_back(e(d, j));
      inner.push_back(e(d, y[i]));
      std::vector<Vec> outer;
      for (size_t j = 0; j < n; ++j) outer.push_back(j == i ? a.bracket(inner) : alpha_e[y[j]]);
      Vec term = a.bracket(outer);
      axpy(rhs, Scalar((px & before) ? -1 : 1), term);
      before ^= par[y[i]];
    }
    if (lhs != rhs) ok = false;
  };
  rec(0);
  return ok;
}

bool all_tuples_super_skew(const HomSuperAlgebra& a) {
  const size_t d = a.dim(), n = static_cast<size_t>(a.arity());
  Tuple t(n, 0);
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == n) {
      for (size_t i = 0; i + 1 < n; ++i) {
        std::vector<Vec> args, sw;
        for (int j : t) args.push_back(e(d, j));
        sw = args;
        std::swap(sw[i], sw[i + 1]);
        Vec l = a.bracket(args), r = a.bracket(sw);
        Scalar s = (a.p(t[i]) & a.p(t[i + 1])) ? 1 : -1;
        if (l != s * r) return false;
      }
      return true;
    }
    for (size_t i = 0; i < d; ++i) {
      t[k] = static_cast<int>(i);
      if (!rec(k + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("straighten examples") {
  std::vector<int> even{0, 0, 0}, odd{1, 1, 1};
  auto s = straighten({1, 0}, even);
  CHECK(s.sign == -1);
  CHECK(s.canonical == Tuple{0, 1});
  s = straighten({1, 0}, odd);
  CHECK(s.sign == 1);
  CHECK(s.canonical == Tuple{0, 1});
  CHECK(straighten({2, 2}, even).sign == 0);
  s = straighten({2, 0, 1}, even);
  CHECK(s.sign == 1);
  CHECK(s.canonical == Tuple{0, 1, 2});
  CHECK_THROWS_AS(straighten({3}, even), Error);
}

TEST_CASE("wedge basis examples and count oracle") {
  WedgeBasis w1({0, 0, 0}, 2);
  CHECK(w1.size() == 3);
  CHECK(w1.element(0) == Tuple{0, 1});
  CHECK(w1.element(2) == Tuple{1, 2});
  WedgeBasis w2({1, 1}, 2);
  CHECK(w2.size() == 3);
  CHECK(w2.element(0) == Tuple{0, 0});
  CHECK(w2.element(1) == Tuple{0, 1});
  CHECK(w2.element(2) == Tuple{1, 1});
  WedgeBasis w3({0, 1, 1}, 2);
  std::vector<Tuple> want{{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  REQUIRE(w3.size() == 5);
  for (size_t i = 0; i < 5; ++i) CHECK(w3.element(i) == want[i]);

  // Brute force: canonical forms of all tuples with nonzero sign.
  for (auto par : std::vector<std::vector<int>>{{0, 1, 1}, {1, 0, 1, 0}, {0, 0, 0, 1}}) {
    for (size_t deg = 1; deg <= 3; ++deg) {
      std::set<Tuple> seen;
      Tuple t(deg, 0);
      std::function<void(size_t)> rec = [&](size_t k) {
        if (k == deg) {
          auto s = straighten(t, par);
          if (s.sign != 0) seen.insert(s.canonical);
          return;
        }
        for (size_t i = 0; i < par.size(); ++i) {
          t[k] = static_cast<int>(i);
          rec(k + 1);
        }
      };
      rec(0);
      CHECK(WedgeBasis(par, deg).size() == seen.size());
    }
  }
}

TEST_CASE("bracket evaluation examples") {
  auto h3 = corpus::heisenberg();
  CHECK(h3.bracket({e(3, 1), e(3, 0)}) == Scalar(-1) * e(3, 2));
  CHECK(h3.bracket({Vec(3), e(3, 0)}) == Vec(3));
  auto sh = corpus::super_heisenberg();
  CHECK(sh.bracket({e(3, 2), e(3, 1)}) == e(3, 0));
  // General vectors expand by linearity: [e1 + f1, e2] in H3 = e3.
  CHECK(h3.bracket({Vec{1, 0, 5}, Vec{0, 1, 0}}) == e(3, 2));
}

TEST_CASE("verify_algebra on the corpus") {
  for (const auto& a : corpus::valid_corpus()) {
    INFO(a.name());
    CHECK(verify_algebra(a).ok());
    CHECK(naive_fundamental_identity(a));
    CHECK(all_tuples_super_skew(a));
  }
  Matrix al = Matrix::identity(2);
  al(0, 0) = 3;
  CHECK(verify_algebra(abelian_algebra({0, 0}, 2, al)).ok());
}

TEST_CASE("broken variants fail with a witness") {
  auto b1 = verify_algebra(corpus::broken_h3_jacobi());
  CHECK_FALSE(b1.passed("fundamental identity"));
  CHECK_FALSE(b1.find("fundamental identity")->witness.empty());
  CHECK_FALSE(naive_fundamental_identity(corpus::broken_h3_jacobi()));
  auto b2 = verify_algebra(corpus::broken_h3_alpha());
  CHECK_FALSE(b2.passed("multiplicativity"));
  CHECK(b2.passed("fundamental identity"));
  auto b3 = verify_algebra(corpus::broken_sh_parity());
  CHECK_FALSE(b3.passed("homogeneity"));
  auto b4 = verify_algebra(corpus::broken_n4());
  CHECK_FALSE(b4.passed("fundamental identity"));
  CHECK_FALSE(naive_fundamental_identity(corpus::broken_n4()));
}

TEST_CASE("H3 with [e1,e2]=e1 is a valid Lie algebra") {
  // r2 + K: every skew bracket on two generators satisfies Jacobi.
  auto a = HomSuperAlgebra::from_any_tuples("r2+K", GradedSpace{{0, 0, 0}}, 2,
                                            {{{0, 1}, e(3, 0)}}, Matrix::identity(3));
  CHECK(verify_algebra(a).ok());
  CHECK(naive_fundamental_identity(a));
}

TEST_CASE("loader canonicalization") {
  GradedSpace sp{{0, 0, 0}};
  auto a = HomSuperAlgebra::from_any_tuples("x", sp, 2, {{{1, 0}, e(3, 2)}}, Matrix::identity(3));
  CHECK(a.basis_bracket({0, 1}) == Scalar(-1) * e(3, 2));
  CHECK_THROWS_AS(HomSuperAlgebra::from_any_tuples(
                      "x", sp, 2, {{{0, 1}, e(3, 2)}, {{1, 0}, e(3, 2)}}, Matrix::identity(3)),
                  Error);
  CHECK_THROWS_AS(
      HomSuperAlgebra::from_any_tuples("x", sp, 2, {{{1, 1}, e(3, 2)}}, Matrix::identity(3)),
      Error);
}

TEST_CASE("verify_morphism examples") {
  auto h3 = corpus::heisenberg();
  CHECK(verify_morphism(Matrix::identity(3), h3, h3).ok());
  CHECK(verify_morphism(Matrix(3, 3), h3, h3).ok());
  Matrix inc(4, 3);
  for (size_t i = 0; i < 3; ++i) inc(i, i) = 1;
  CHECK(verify_morphism(inc, h3, direct_sum(h3, corpus::abelian(1, 0))).ok());
  Matrix f = Matrix::identity(3);
  f(2, 2) = 2;
  auto r = verify_morphism(f, h3, h3);
  CHECK_FALSE(r.passed("bracket"));
  CHECK_THROWS_AS(verify_morphism(Matrix(2, 3), h3, h3), Error);
}

TEST_CASE("twist_by_endomorphism examples") {
  auto h3 = corpus::heisenberg();
  auto same = twist_by_endomorphism(h3, Matrix::identity(3));
  CHECK(same.entries() == h3.entries());
  auto zero = twist_by_endomorphism(h3, Matrix(3, 3));
  CHECK(zero.is_abelian());
  CHECK(zero.alpha() == Matrix(3, 3));
  for (int lam : {2, -3}) {
    Matrix rho = Matrix::identity(3);
    rho(0, 0) = lam;
    rho(2, 2) = lam;
    auto t = twist_by_endomorphism(h3, rho);
    CHECK(t.basis_bracket({0, 1}) == Scalar(lam) * e(3, 2));
    CHECK(verify_algebra(t).ok());
  }
  Matrix bad = Matrix::identity(3);
  bad(2, 2) = 2;
  CHECK_THROWS_AS(twist_by_endomorphism(h3, bad), Error);
}

TEST_CASE("twisting random valid inputs always passes") {
  Rng rng(11);
  for (int it = 0; it < 40; ++it) {
    int n = 2 + it % 2;
    auto base = random_two_step(rng, n, 4, 1 + it % 2, it % 4);
    CHECK(verify_algebra(base).ok());
    Matrix rho = random_two_step_endo(rng, base, 1 + it % 2);
    auto t = twist_by_endomorphism(base, rho);
    CHECK(verify_algebra(t).ok());
    CHECK(naive_fundamental_identity(t));
  }
}

TEST_CASE("Hom-ideal examples") {
  auto h3 = corpus::heisenberg();
  CHECK(is_hom_ideal(Subspace::zero(3), h3));
  CHECK(is_hom_ideal(Subspace::full(3), h3));
  CHECK(is_hom_ideal(Subspace::span(3, {e(3, 2)}), h3));
  CHECK_FALSE(is_hom_ideal(Subspace::span(3, {e(3, 0)}), h3));
  CHECK(is_hom_subalgebra(Subspace::span(3, {e(3, 0)}), h3));
  CHECK_FALSE(is_hom_subalgebra(Subspace::span(3, {e(3, 0), e(3, 1)}), h3));
  auto sh = corpus::super_heisenberg();
  CHECK_THROWS_AS(is_hom_ideal(Subspace::span(3, {Vec{1, 1, 0}}), sh), Error);
}

TEST_CASE("ideal in first slot equals ideal in any slot") {
  Rng rng(5);
  auto corpus_algs = corpus::valid_corpus();
  for (const auto& a : corpus_algs) {
    std::vector<Subspace> cands;
    for (auto& t : lower_central_series(a).terms) cands.push_back(t);
    for (auto& t : derived_series(a).terms) cands.push_back(t);
    for (size_t i = 0; i < a.dim(); ++i) cands.push_back(Subspace::span(a.dim(), {e(a.dim(), i)}));
    for (const auto& h : cands) {
      if (!is_graded(h, a.space())) continue;
      bool first = is_hom_ideal(h, a);
      for (int s = 0; s < a.arity(); ++s) CHECK(is_hom_ideal_in_slot(h, a, s) == first);
    }
  }
}

TEST_CASE("series examples") {
  // Lengths follow the convention g^1 = g, length = smallest k with g^k = 0.
  CHECK(nilpotent_length(corpus::abelian(2, 0)) == 2u);
  CHECK(nilpotent_length(zero_algebra(2)) == 1u);
  CHECK(solvable_length(corpus::abelian(2, 0)) == 1u);
  auto h3 = corpus::heisenberg();
  auto lcs = lower_central_series(h3);
  REQUIRE(lcs.terms.size() == 3);
  CHECK(lcs.terms[1] == Subspace::span(3, {e(3, 2)}));
  CHECK(lcs.terms[2].dim() == 0);
  CHECK(nilpotent_length(h3) == 3u);
  CHECK(solvable_length(h3) == 2u);
  auto n4 = corpus::n4();
  auto l4 = lower_central_series(n4);
  CHECK(l4.terms[1] == Subspace::span(4, {e(4, 3)}));
  CHECK(nilpotent_length(n4) == 3u);
  CHECK_FALSE(nilpotent_length(corpus::sl2()).has_value());
  CHECK_FALSE(solvable_length(corpus::sl2()).has_value());
  CHECK_FALSE(nilpotent_length(corpus::a4()).has_value());
}

TEST_CASE("series terms are monotone alpha-stable ideals") {
  for (const auto& a : corpus::valid_corpus()) {
    INFO(a.name());
    for (auto* s : {&lower_central_series, &derived_series}) {
      auto ser = (*s)(a);
      for (size_t i = 0; i < ser.terms.size(); ++i) {
        CHECK(is_hom_ideal(ser.terms[i], a));
        CHECK(ser.terms[i].contains(image(a.alpha(), ser.terms[i])));
        if (i > 0) CHECK(ser.terms[i - 1].contains(ser.terms[i]));
      }
    }
  }
}

TEST_CASE("direct sum examples") {
  auto s = direct_sum(corpus::abelian(1, 0), corpus::abelian(2, 0));
  CHECK(s.dim() == 3);
  CHECK(s.is_abelian());
  auto h = direct_sum(corpus::heisenberg(), corpus::abelian(1, 0));
  CHECK(h.dim() == 4);
  CHECK(nilpotent_length(h) == nilpotent_length(corpus::heisenberg()));
  CHECK(verify_algebra(h).ok());
  CHECK(is_hom_ideal(Subspace::span(4, {e(4, 0), e(4, 1), e(4, 2)}), h));
  CHECK(is_hom_ideal(Subspace::span(4, {e(4, 3)}), h));
  CHECK_THROWS_AS(direct_sum(corpus::heisenberg(), corpus::n4()), Error);
}

TEST_CASE("quotient examples") {
  auto h3 = corpus::heisenberg();
  auto q0 = quotient(h3, Subspace::zero(3));
  CHECK(q0.algebra.entries() == h3.entries());
  auto q = quotient(h3, Subspace::span(3, {e(3, 2)}));
  CHECK(q.algebra.dim() == 2);
  CHECK(q.algebra.is_abelian());
  auto qf = quotient(h3, Subspace::full(3));
  CHECK(qf.algebra.dim() == 0);
  CHECK_THROWS_AS(quotient(h3, Subspace::span(3, {e(3, 0)})), Error);
  // Projection: surjective morphism with kernel exactly I.
  for (const auto& a : corpus::valid_corpus()) {
    for (auto& I : lower_central_series(a).terms) {
      auto qq = quotient(a, I);
      CHECK(rank(qq.projection) == qq.algebra.dim());
      CHECK(nullspace(qq.projection) == I);
      CHECK(verify_algebra(qq.algebra).ok());
    }
  }
}

TEST_CASE("verify_metric examples") {
  auto ab = corpus::abelian(2, 0);
  CHECK(verify_metric(ab, {Matrix::identity(2)}).ok());
  auto r = verify_metric(corpus::heisenberg(), {Matrix::identity(3)});
  CHECK_FALSE(r.passed("invariant"));
  CHECK(r.passed("supersymmetric"));
  // The Killing form of sl2 is invariant and nondegenerate.
  Matrix kf(3, 3);
  kf(0, 0) = 8;
  kf(1, 2) = 4;
  kf(2, 1) = 4;
  CHECK(verify_metric(corpus::sl2(), {kf}).ok());
  // Odd pairs need a skew form.
  Matrix g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = 1;
  CHECK_FALSE(verify_metric(corpus::abelian(0, 2), {g}).passed("supersymmetric"));
  g(1, 0) = -1;
  CHECK(verify_metric(corpus::abelian(0, 2), {g}).ok());
}
