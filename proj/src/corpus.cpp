#include "nambu/corpus.hpp"

#include <algorithm>

#include "nambu/algebra.hpp"

namespace nambu::corpus {

namespace {

Vec e(size_t d, size_t i, const Scalar& c = 1) {
  Vec v(d);
  v[i] = c;
  return v;
}

HomSuperAlgebra make(const std::string& name, std::vector<int> parity, int n,
                     std::vector<std::pair<Tuple, Vec>> entries) {
  size_t d = parity.size();
  return HomSuperAlgebra::from_any_tuples(name, GradedSpace{std::move(parity)}, n, entries,
                                          Matrix::identity(d));
}

HomSuperAlgebra with_alpha(const HomSuperAlgebra& a, const Matrix& al, const std::string& name) {
  return HomSuperAlgebra(name, a.space(), a.arity(), a.entries(), al);
}

HomSuperAlgebra named(HomSuperAlgebra a, const std::string& name) {
  a.set_name(name);
  return a;
}

}  // namespace

HomSuperAlgebra abelian(int even, int odd, int n) {
  std::vector<int> par(static_cast<size_t>(even), 0);
  par.insert(par.end(), static_cast<size_t>(odd), 1);
  return make("abelian(" + std::to_string(even) + "|" + std::to_string(odd) + ")", par, n, {});
}

HomSuperAlgebra heisenberg() { return make("H3", {0, 0, 0}, 2, {{{0, 1}, e(3, 2)}}); }

HomSuperAlgebra super_heisenberg() { return make("SH(1|2)", {0, 1, 1}, 2, {{{1, 2}, e(3, 0)}}); }

HomSuperAlgebra n4() { return make("N4", {0, 0, 0, 0}, 3, {{{0, 1, 2}, e(4, 3)}}); }

HomSuperAlgebra sl2() {
  // h = 0, e = 1, f = 2
  return make("sl2", {0, 0, 0}, 2,
              {{{0, 1}, e(3, 1, 2)}, {{0, 2}, e(3, 2, -2)}, {{1, 2}, e(3, 0)}});
}

HomSuperAlgebra gl11() {
  // E11 = 0, E22 = 1, E12 = 2, E21 = 3
  Vec id(4);
  id[0] = 1;
  id[1] = 1;
  return make("gl(1|1)", {0, 0, 1, 1}, 2,
              {{{0, 2}, e(4, 2)},
               {{0, 3}, e(4, 3, -1)},
               {{1, 2}, e(4, 2, -1)},
               {{1, 3}, e(4, 3)},
               {{2, 3}, id}});
}

HomSuperAlgebra a4() {
  std::vector<std::pair<Tuple, Vec>> es;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) {
        int l = 6 - i - j - k;
        std::vector<int> perm{i, j, k, l};
        int inv = 0;
        for (int x = 0; x < 4; ++x)
          for (int y = x + 1; y < 4; ++y)
            if (perm[x] > perm[y]) ++inv;
        es.push_back({{i, j, k}, e(4, static_cast<size_t>(l), inv % 2 ? -1 : 1)});
      }
  return make("A4", {0, 0, 0, 0}, 3, es);
}

HomSuperAlgebra broken_h3_jacobi() {
  return make("H3-broken-jacobi", {0, 0, 0}, 2,
              {{{0, 1}, e(3, 2)}, {{0, 2}, e(3, 0)}, {{1, 2}, e(3, 2)}});
}

HomSuperAlgebra broken_h3_alpha() {
  Matrix al = Matrix::identity(3);
  al(0, 0) = 2;
  return with_alpha(heisenberg(), al, "H3-broken-alpha");
}

HomSuperAlgebra broken_sh_parity() {
  return make("SH-broken-parity", {0, 1, 1}, 2, {{{1, 2}, e(3, 1)}});
}

HomSuperAlgebra broken_n4() {
  return make("N4-broken", {0, 0, 0, 0}, 3, {{{0, 1, 2}, e(4, 3)}, {{0, 1, 3}, e(4, 0)}});
}

Matrix h3_endo(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
               const Scalar& p, const Scalar& q) {
  Matrix m(3, 3);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  m(2, 0) = p;
  m(2, 1) = q;
  m(2, 2) = a * d - b * c;
  return m;
}

Matrix sh_endo(const Scalar& x, const Scalar& y, bool antidiagonal) {
  Matrix m(3, 3);
  if (antidiagonal) {
    m(2, 1) = x;
    m(1, 2) = y;
  } else {
    m(1, 1) = x;
    m(2, 2) = y;
  }
  m(0, 0) = x * y;
  return m;
}

Matrix n4_endo(const std::vector<Scalar>& a9, const std::vector<Scalar>& r3) {
  Matrix m(4, 4);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m(i, j) = a9[3 * i + j];
  for (size_t j = 0; j < 3; ++j) m(3, j) = r3[j];
  auto A = [&](size_t i, size_t j) { return a9[3 * i + j]; };
  m(3, 3) = A(0, 0) * (A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1)) -
            A(0, 1) * (A(1, 0) * A(2, 2) - A(1, 2) * A(2, 0)) +
            A(0, 2) * (A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0));
  return m;
}

Matrix sl2_auto(const Scalar& t, const Scalar& s) {
  // exp(t ad e): h -> h - 2t e, e -> e, f -> f + t h - t^2 e.
  Matrix ex(3, 3);
  ex(0, 0) = 1;
  ex(1, 0) = Scalar(-2) * t;
  ex(1, 1) = 1;
  ex(0, 2) = t;
  ex(1, 2) = -(t * t);
  ex(2, 2) = 1;
  Matrix sc(3, 3);
  sc(0, 0) = 1;
  sc(1, 1) = s;
  sc(2, 2) = Scalar(1) / s;
  return sc * ex;
}

Matrix gl11_auto(const Scalar& c, const Scalar& s) {
  Matrix m(4, 4);
  m(0, 0) = Scalar(1) + c;
  m(1, 0) = c;
  m(0, 1) = -c;
  m(1, 1) = Scalar(1) - c;
  m(2, 2) = s;
  m(3, 3) = Scalar(1) / s;
  return m;
}

Matrix a4_cayley(const std::vector<Scalar>& s6) {
  Matrix S(4, 4);
  size_t k = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) {
      S(i, j) = s6[k];
      S(j, i) = -s6[k];
      ++k;
    }
  Matrix I = Matrix::identity(4);
  return (I - S) * inverse(I + S);
}

std::vector<HomSuperAlgebra> twisted_variants() {
  std::vector<HomSuperAlgebra> out;
  auto add = [&](const HomSuperAlgebra& base, const Matrix& rho, const std::string& name) {
    out.push_back(named(twist_by_endomorphism(base, rho), name));
  };
  add(heisenberg(), h3_endo(2, 0, 0, 1, 0, 0), "H3^diag(2,1,2)");
  add(heisenberg(), h3_endo(1, 1, 0, 1, 0, 0), "H3^shear");
  add(heisenberg(), h3_endo(1, 0, 0, 0, 1, 0), "H3^rank2");
  add(heisenberg(), h3_endo(Scalar(1, 2), 3, -1, 2, 1, -1), "H3^mixed");
  add(super_heisenberg(), sh_endo(2, 3, false), "SH^diag");
  add(super_heisenberg(), sh_endo(1, -1, true), "SH^swap");
  add(super_heisenberg(), sh_endo(1, 0, false), "SH^degenerate");
  add(n4(), n4_endo({1, 1, 0, 0, 1, 0, 0, 0, 2}, {1, 0, -1}), "N4^upper");
  add(n4(), n4_endo({0, 1, 0, 1, 0, 0, 0, 0, 1}, {0, 0, 0}), "N4^swap");
  add(n4(), n4_endo({1, 0, 0, 0, 1, 0, 0, 0, 0}, {0, 2, 0}), "N4^rank3");
  add(sl2(), sl2_auto(1, 2), "sl2^exp");
  add(sl2(), sl2_auto(Scalar(-1, 3), 1), "sl2^exp3");
  add(gl11(), gl11_auto(1, 2), "gl11^auto");
  add(a4(), a4_cayley({1, 0, 0, 0, 0, 1}), "A4^cayley");
  return out;
}

std::vector<HomSuperAlgebra> valid_corpus() {
  std::vector<HomSuperAlgebra> out{abelian(2, 0), abelian(1, 1), abelian(0, 2), heisenberg(),
                                   super_heisenberg(), n4(), sl2(), gl11(), a4()};
  for (auto& t : twisted_variants()) out.push_back(t);
  return out;
}

}  // namespace nambu::corpus
