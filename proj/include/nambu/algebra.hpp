#pragma once

#include <optional>
#include <vector>

#include "nambu/graded.hpp"
#include "nambu/report.hpp"

namespace nambu {

/// Homogeneity, super-skew symmetry, the twisted fundamental identity and
/// multiplicativity. Violations are report content, never exceptions.
Report verify_algebra(const HomSuperAlgebra& a);

/// f must be dim(b) x dim(a).
Report verify_morphism(const Matrix& f, const HomSuperAlgebra& a, const HomSuperAlgebra& b);

bool is_even_map(const Matrix& f, const std::vector<int>& dom, const std::vector<int>& cod);

/// (g, rho o [..], rho) for a Nambu-Lie superalgebra (alpha = id) and a self-morphism rho.
HomSuperAlgebra twist_by_endomorphism(const HomSuperAlgebra& a, const Matrix& rho);

bool is_graded(const Subspace& h, const GradedSpace& space);
/// Basis of h made of parity-homogeneous vectors (even ones first). Throws NonGradedSubspace.
std::vector<Vec> homogeneous_basis(const Subspace& h, const GradedSpace& space);
int vec_parity(const Vec& v, const GradedSpace& space);  // -1 if not homogeneous or zero

bool is_hom_subalgebra(const Subspace& h, const HomSuperAlgebra& a);
bool is_hom_ideal(const Subspace& h, const HomSuperAlgebra& a);
/// Same as is_hom_ideal but places H in slot k (0-based) of the bracket.
bool is_hom_ideal_in_slot(const Subspace& h, const HomSuperAlgebra& a, int slot);

/// [h_1,...,h_n] over homogeneous spanning sets.
Subspace bracket_span(const HomSuperAlgebra& a, const std::vector<std::vector<Vec>>& slots);

struct Series {
  std::vector<Subspace> terms;   // as computed, starting with g
  std::optional<size_t> length;  // nullopt: stabilizes at a nonzero term
};

/// g^(0) = g, g^(k+1) = [g^(k),...,g^(k)]; length = smallest k with g^(k) = 0.
Series derived_series(const HomSuperAlgebra& a);
/// g^1 = g, g^(k+1) = [g^k, g, ..., g]; terms[i] holds g^(i+1);
/// length = smallest k with g^k = 0.
Series lower_central_series(const HomSuperAlgebra& a);
std::optional<size_t> solvable_length(const HomSuperAlgebra& a);
std::optional<size_t> nilpotent_length(const HomSuperAlgebra& a);

HomSuperAlgebra direct_sum(const HomSuperAlgebra& a, const HomSuperAlgebra& b);
HomSuperAlgebra zero_algebra(int n);
HomSuperAlgebra abelian_algebra(const std::vector<int>& parity, int n, const Matrix& alpha);

struct Quotient {
  HomSuperAlgebra algebra;
  Matrix projection;              // dim(g/I) x dim(g)
  std::vector<size_t> complement; // standard basis indices spanning the complement
};
Quotient quotient(const HomSuperAlgebra& a, const Subspace& ideal);

Report verify_metric(const HomSuperAlgebra& a, const BilinearForm& form);

}  // namespace nambu
