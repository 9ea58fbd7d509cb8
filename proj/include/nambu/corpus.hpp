#pragma once

#include <vector>

#include "nambu/graded.hpp"

namespace nambu::corpus {

/// Abelian algebra with `even` even and `odd` odd basis vectors, alpha = id.
HomSuperAlgebra abelian(int even, int odd, int n = 2);
/// Heisenberg H3: [e1,e2] = e3.
HomSuperAlgebra heisenberg();
/// Super-Heisenberg SH(1|2): e1 even, f1,f2 odd, [f1,f2] = e1.
HomSuperAlgebra super_heisenberg();
/// N4: ternary, [e1,e2,e3] = e4.
HomSuperAlgebra n4();
/// sl2 with basis h, e, f.
HomSuperAlgebra sl2();
/// gl(1|1) with basis E11, E22 (even), E12, E21 (odd).
HomSuperAlgebra gl11();
/// The simple 3-Lie algebra A4: [e_i,e_j,e_k] = eps_{ijkl} e_l.
HomSuperAlgebra a4();

/// H3 with an extra bracket that breaks the Jacobi identity.
HomSuperAlgebra broken_h3_jacobi();
/// H3 with alpha = diag(2,1,1), which is not multiplicative.
HomSuperAlgebra broken_h3_alpha();
/// SH(1|2) with [f1,f2] landing on an odd vector (violates homogeneity).
HomSuperAlgebra broken_sh_parity();
/// N4 with an extra bracket that breaks the fundamental identity.
HomSuperAlgebra broken_n4();

/// Self-morphisms of the corpus algebras, used for twisting.
/// H3: [[a,b,0],[c,d,0],[p,q,ad-bc]] (column j = image of e_j).
Matrix h3_endo(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
               const Scalar& p, const Scalar& q);
/// SH(1|2): odd block diagonal (x, y) or antidiagonal, e1 scaled accordingly.
Matrix sh_endo(const Scalar& x, const Scalar& y, bool antidiagonal);
/// N4: block A on e1..e3 (row-major 9 entries), row 4 entries r, e4 -> det(A) e4.
Matrix n4_endo(const std::vector<Scalar>& a9, const std::vector<Scalar>& r3);
/// sl2 automorphism exp(t ad e) composed with the scaling e -> s e, f -> f/s.
Matrix sl2_auto(const Scalar& t, const Scalar& s);
/// gl(1|1): E11 -> E11 + cI, E22 -> E22 - cI, E12 -> s E12, E21 -> E21/s.
Matrix gl11_auto(const Scalar& c, const Scalar& s);
/// A4: Cayley transform (I - S)(I + S)^{-1} of the skew matrix with the given
/// upper-triangle entries (s12, s13, s14, s23, s24, s34).
Matrix a4_cayley(const std::vector<Scalar>& s6);

/// Named twisted variants used across the tests.
std::vector<HomSuperAlgebra> twisted_variants();
/// Every valid corpus algebra (untwisted and twisted).
std::vector<HomSuperAlgebra> valid_corpus();

}  // namespace nambu::corpus
