#include "nambu/random.hpp"

#include <algorithm>

#include "nambu/algebra.hpp"
#include "nambu/corpus.hpp"
#include "nambu/errors.hpp"

namespace nambu {

Scalar random_small(Rng& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  return Scalar(d(rng));
}

Scalar random_nonzero(Rng& rng, int range) {
  while (true) {
    Scalar s = random_small(rng, range);
    if (!s.is_zero()) return s;
  }
}

Scalar random_rational(Rng& rng, int range, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  return random_small(rng, range) / Scalar(den(rng));
}

HomSuperAlgebra random_two_step(Rng& rng, int n, int dim, int central, int odd) {
  require(central >= 1 && central < dim, ErrorKind::DimensionMismatch, "two-step split");
  std::vector<int> par(static_cast<size_t>(dim), 0);
  std::vector<size_t> idx(par.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  for (int k = 0; k < odd && k < dim; ++k) par[idx[static_cast<size_t>(k)]] = 1;
  const size_t u = static_cast<size_t>(dim - central);
  std::vector<int> upar(par.begin(), par.begin() + static_cast<long>(u));
  std::uniform_int_distribution<int> coin(0, 99);
  HomSuperAlgebra::Entries e;
  for (const Tuple& t : canonical_tuples(upar, static_cast<size_t>(n))) {
    int p = 0;
    for (int i : t) p ^= par[i];
    Vec v(par.size());
    bool any = false;
    for (size_t z = u; z < par.size(); ++z)
      if (par[z] == p && coin(rng) < 55) {
        v[z] = random_small(rng, 2);
        any = any || !v[z].is_zero();
      }
    if (any) e[t] = v;
  }
  return HomSuperAlgebra("two-step", GradedSpace{par}, n, e, Matrix::identity(par.size()));
}

Matrix random_two_step_endo(Rng& rng, const HomSuperAlgebra& a, int central) {
  const size_t d = a.dim(), u = d - static_cast<size_t>(central);
  const auto& par = a.parity();
  std::uniform_int_distribution<int> coin(0, 99);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Matrix rho(d, d);
    // U block and U -> Z part, even.
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < u; ++j)
        if (par[i] == par[j]) {
          if (i < u && attempt >= 10) rho(i, j) = (i == j) ? random_nonzero(rng, 2) : Scalar(0);
          else if (coin(rng) < 60) rho(i, j) = random_small(rng, 2);
        }
    // Unknown Z block: solve B mu(t) = mu(A t) over even positions.
    std::vector<std::pair<size_t, size_t>> unknowns;
    for (size_t i = u; i < d; ++i)
      for (size_t j = u; j < d; ++j)
        if (par[i] == par[j]) unknowns.push_back({i, j});
    std::vector<Vec> rows;
    Vec rhs;
    for (const auto& [t, v] : a.entries()) {
      std::vector<Vec> imgs;
      for (int k : t) imgs.push_back(rho.col(k));
      Vec target = a.bracket(imgs);
      for (size_t i = u; i < d; ++i) {
        Vec row(unknowns.size());
        for (size_t k = 0; k < unknowns.size(); ++k)
          if (unknowns[k].first == i) row[k] = v[unknowns[k].second];
        rows.push_back(row);
        rhs.push_back(target[i]);
      }
    }
    Vec sol(unknowns.size());
    if (!rows.empty()) {
      Matrix M = Matrix::from_rows(rows, unknowns.size());
      auto s = solve(M, rhs);
      if (!s) continue;
      sol = *s;
      for (const Vec& k : nullspace(M).vectors()) axpy(sol, random_small(rng, 1), k);
    } else {
      for (auto& x : sol) x = random_small(rng, 2);
    }
    for (size_t k = 0; k < unknowns.size(); ++k) rho(unknowns[k].first, unknowns[k].second) = sol[k];
    if (verify_morphism(rho, a, a).ok()) return rho;
  }
  // Scalar multiples always work: B = lambda^n on the center.
  Scalar lam = random_nonzero(rng, 2);
  Matrix rho(d, d);
  Scalar lam_n = 1;
  for (int k = 0; k < a.arity(); ++k) lam_n *= lam;
  for (size_t i = 0; i < d; ++i) rho(i, i) = i < u ? lam : lam_n;
  return rho;
}

HomSuperAlgebra random_valid_algebra(Rng& rng, int n, int max_dim) {
  std::uniform_int_distribution<int> pick(0, 9);
  int kind = pick(rng);
  auto two_step = [&]() {
    std::uniform_int_distribution<int> dd(std::min(n + 1, max_dim), max_dim);
    int dim = dd(rng);
    std::uniform_int_distribution<int> cz(1, std::max(1, dim - n));
    int central = cz(rng);
    std::uniform_int_distribution<int> oo(0, dim);
    HomSuperAlgebra base = random_two_step(rng, n, dim, central, oo(rng));
    Matrix rho = random_two_step_endo(rng, base, central);
    return twist_by_endomorphism(base, rho);
  };
  if (kind < 4 || max_dim < 3) return two_step();
  if (n == 2) {
    switch (kind) {
      case 4:
        return twist_by_endomorphism(
            corpus::heisenberg(),
            corpus::h3_endo(random_small(rng, 2), random_small(rng, 2), random_small(rng, 2),
                            random_small(rng, 2), random_small(rng, 2), random_small(rng, 2)));
      case 5: {
        std::uniform_int_distribution<int> c(0, 1);
        return twist_by_endomorphism(
            corpus::super_heisenberg(),
            corpus::sh_endo(random_small(rng, 2), random_small(rng, 2), c(rng) == 1));
      }
      case 6:
        return twist_by_endomorphism(corpus::sl2(),
                                     corpus::sl2_auto(random_rational(rng, 2, 2),
                                                      random_nonzero(rng, 2)));
      case 7:
        if (max_dim >= 4)
          return twist_by_endomorphism(corpus::gl11(), corpus::gl11_auto(random_small(rng, 2),
                                                                         random_nonzero(rng, 2)));
        return two_step();
      default:
        return two_step();
    }
  }
  if (n == 3 && max_dim >= 4) {
    switch (kind) {
      case 4:
      case 5: {
        std::vector<Scalar> a9, r3;
        for (int i = 0; i < 9; ++i) a9.push_back(random_small(rng, 1));
        for (int i = 0; i < 3; ++i) r3.push_back(random_small(rng, 1));
        return twist_by_endomorphism(corpus::n4(), corpus::n4_endo(a9, r3));
      }
      case 6:
      case 7: {
        std::vector<Scalar> s6;
        for (int i = 0; i < 6; ++i) s6.push_back(random_rational(rng, 1, 2));
        return twist_by_endomorphism(corpus::a4(), corpus::a4_cayley(s6));
      }
      default:
        return two_step();
    }
  }
  return two_step();
}

}  // namespace nambu
