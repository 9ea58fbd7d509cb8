#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nambu/cohomology.hpp"
#include "nambu/representation.hpp"

namespace nambu {

/// ad*(x)(f)(z) = -(-1)^{|x||f|} f(x.z) on the dual basis, nu* f = f o alpha.
struct CoadjointRep {
  Representation rep;
  bool exists = false;  // rep passes verify_representation
  std::string witness;  // first failing check when !exists
  /// nu* rho*(x) = rho*(alpha x) nu* for every wedge basis x. Without it, delta does
  /// not preserve compatible cochains and T* brackets are not multiplicative.
  bool twist_compatible = false;
  std::string twist_witness;
  /// The two matrix conditions on ad, read literally: "condition i" and
  /// "condition ii". Diagnostic only; exists comes from the representation axioms.
  Report conditions;
};
CoadjointRep coadjoint_rep(const HomSuperAlgebra& a);

struct MetricAlgebra {
  HomSuperAlgebra algebra;
  BilinearForm form;
};

/// theta is a raw 1-cochain of (g, g*): entry (w d + z) d + k is theta(w, e_z)(e_k).
/// In the result, basis vectors 0..d-1 are g and d..2d-1 the dual basis of g*.
struct TStarExtension {
  HomSuperAlgebra base;
  Vec theta;
  MetricAlgebra result;
};

Vec zero_theta(const HomSuperAlgebra& g);

/// Builds g + g* with the T* bracket, alpha' = alpha + alpha^T and
/// <x+f, y+h> = f(y) + (-1)^{|x||y|} h(x). Raw construction accepts any theta;
/// validated = true additionally requires the coadjoint representation and a
/// closed, cyclic theta (CoadjointMissing, ThetaNotClosed, ThetaNotCyclic).
TStarExtension tstar_extend(const HomSuperAlgebra& g, const Vec& theta, bool validated = false);

/// theta(x,y)(z) + (-1)^{|y||z|} theta(x,z)(y) = 0 on all basis tuples.
bool is_cyclic_cocycle(const HomSuperAlgebra& g, const Vec& theta);
/// Raw tensors satisfying the cyclic condition.
Subspace cyclic_space(const HomSuperAlgebra& g);
/// Span of the dual block inside a T* extension of g.
Subspace embedded_dual(const HomSuperAlgebra& g);

enum class EquivalenceKind { Inequivalent, Equivalent, IsometricallyEquivalent };
const char* equivalence_name(EquivalenceKind k);

/// theta' is a 0-cochain of (g, g*): entry z d + k is theta'(e_z)(e_k).
struct EquivalenceResult {
  EquivalenceKind kind = EquivalenceKind::Inequivalent;
  Vec theta_prime;     // witness; for isometric results one with vanishing induced form
  Matrix induced_form; // of the witness
};

/// <x,y> = (theta'(x)(y) + (-1)^{|x||y|} theta'(y)(x)) / 2.
Matrix induced_form(const HomSuperAlgebra& g, const Vec& theta_prime);

/// Solves delta^0 theta' = theta1 - theta2 over even compatible 0-cochains.
EquivalenceResult equivalence(const HomSuperAlgebra& g, const Vec& theta1, const Vec& theta2);

/// x + f -> x + theta'(x) + f, as a 2d x 2d matrix.
Matrix equivalence_map(const HomSuperAlgebra& g, const Vec& theta_prime);

// Isotropic ideals.

bool is_isotropic(const Subspace& s, const Matrix& gram);

/// C(V) = {x | [x,g,...,g] in V}, from the definition.
Subspace centralizer(const HomSuperAlgebra& a, const Subspace& v);
/// [g,...,g,V^perp]^perp.
Subspace centralizer_dual(const MetricAlgebra& g, const Subspace& v);

struct CentralizerSeries {
  std::vector<Subspace> c;  // c[0] = 0, c[i+1] = C(c[i]), until stable
  bool dual_paths_agree = true;
  /// lower central term i (terms[0] = g) equals c[i]^perp, for every i
  bool lcs_duality = true;
  std::string witness;
};
CentralizerSeries centralizer_series(const MetricAlgebra& g);

/// J = sum_i g_i cap C_i, where g_0 = g, g_{i+1} = [g_i, g, ..., g]. Throws NotNilpotent.
Subspace canonical_isotropic_ideal(const MetricAlgebra& g);

/// Enlarges an isotropic, ad- and alpha-stable graded W to dimension floor(m/2),
/// one stable isotropic line at a time. Throws NeedsFieldExtension or
/// NoStableIsotropicVector when no rational candidate exists.
Subspace extend_to_maximal_isotropic(const MetricAlgebra& g, const Subspace& w);

/// [g,...,g,I,I] = 0. Throws on precondition violations.
bool isotropic_half_ideal_abelian_check(const MetricAlgebra& g, const Subspace& i);

// Reconstruction and decomposition.

struct Reconstruction {
  HomSuperAlgebra g1;
  Vec theta;
  Matrix phi;  // g -> g1 + g1*
  Matrix complement;  // columns: the isotropic complement g0 used
  TStarExtension tstar;
  Report checks;
};

/// g isometric to T*_theta(g/I) for a half-dimensional isotropic Hom-ideal I.
Reconstruction reconstruct_as_tstar(const MetricAlgebra& g, const Subspace& i);

/// g + Ka with <a,a> = 1, a central, alpha'(a) = mu a.
struct AdjoinedLine {
  MetricAlgebra algebra;
  Vec z;          // z in I^perp with <z,z> = -1 and alpha z = mu z mod I
  Scalar mu;
  Subspace ideal; // I + K(a + z), inside the enlarged algebra
};

/// Odd case: I is isotropic with dim I^perp - dim I = 1 (or any isotropic stable I,
/// for which z is searched in I^perp). Throws NeedsFieldExtension when -1 is not
/// a value of the form on a rational stable line.
AdjoinedLine adjoin_line(const MetricAlgebra& g, const Subspace& i);

struct Certificate {
  std::string input;
  size_t k = 0;   // nilpotent length of g
  size_t k1 = 0;  // nilpotent length of g1
  size_t bound = 0;
  bool odd = false;
  Subspace j;     // canonical isotropic ideal
  Subspace i;     // maximal isotropic ideal (inside g, or g + Ka when odd)
  Matrix embedding;  // g -> g + Ka when odd, identity otherwise
  Reconstruction rec;
  Report checks;
};

/// Requires a nilpotent metric algebra with surjective alpha.
Certificate decompose(const MetricAlgebra& g);

/// Length bounds for T*_theta g against g, and for theta = 0 exact equality of
/// nilpotent lengths.
Report tstar_series_laws(const HomSuperAlgebra& g, const Vec& theta);
/// T*_0(a + b) splits into the Hom-ideals T*_0 a and T*_0 b.
Report tstar_direct_sum_law(const HomSuperAlgebra& a, const HomSuperAlgebra& b);

}  // namespace nambu
