#pragma once

#include <vector>

#include "nambu/graded.hpp"
#include "nambu/report.hpp"

namespace nambu {

/// [X,Y]_alpha on wedge coordinates.
Vec fundamental_bracket(const HomSuperAlgebra& a, const Vec& x, const Vec& y);
/// [w,u]_alpha for wedge basis elements.
Vec fundamental_bracket_basis(const HomSuperAlgebra& a, size_t w, size_t u);
/// All [w,u]_alpha, indexed [w][u].
std::vector<std::vector<Vec>> fundamental_table(const HomSuperAlgebra& a);

/// The three identities relating the action, [.,.]_alpha and alpha:
///   alpha(x).(y.z) = (-1)^{|x||y|} alpha(y).(x.z) + [x,y]_alpha . alpha(z)
///   [alpha(x),[y,z]_alpha]_alpha = (-1)^{|x||y|}[alpha(y),[x,z]_alpha]_alpha + [[x,y]_alpha, alpha(z)]_alpha
///   [x,y]_alpha . alpha(z) = -(-1)^{|x||y|} [y,x]_alpha . alpha(z)
/// on all basis wedge pairs/triples and basis z.
Report verify_bracket_identities(const HomSuperAlgebra& a);

/// Graded representation of an algebra on (V, nu): one dim(V) x dim(V) matrix per
/// canonical wedge element of degree n-1.
struct Representation {
  GradedSpace target;
  std::vector<Matrix> rho;
  Matrix nu;

  size_t dim() const { return target.dim(); }
  /// rho of an arbitrary wedge vector.
  Matrix of(const Vec& wedge_coords) const;
};

Representation adjoint_rep(const HomSuperAlgebra& a);
/// rho = 0 on V with twist nu.
Representation zero_rep(const HomSuperAlgebra& a, const GradedSpace& v, const Matrix& nu);

/// Checks "grading" (rho(x) shifts parity by |x|, nu even), "commutator"
///   rho(alpha x) rho(y) = (-1)^{|x||y|} rho(alpha y) rho(x) + rho([x,y]_alpha) nu
/// and "bracket"
///   rho(alpha x_1..alpha x_{n-2}, [y_1..y_n]) nu = sum_i (signs) rho(alpha y_1..^i..alpha y_n) rho(x_1..x_{n-2}, y_i).
Report verify_representation(const Representation& r, const HomSuperAlgebra& a);

/// [args] with the slots flagged in_module taken from V and the rest from g.
/// One V-slot: moved to the end with straightening signs, then rho is applied.
/// Two V-slots give 0. More throws DimensionMismatch.
Vec module_bracket(const HomSuperAlgebra& a, const Representation& r,
                   const std::vector<Vec>& args, const std::vector<bool>& in_module);

}  // namespace nambu
