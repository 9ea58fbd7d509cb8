#pragma once

#include <vector>

#include "nambu/cohomology.hpp"
#include "nambu/representation.hpp"

namespace nambu {

/// Data for an extension of b by an abelian a. The cocycle is a raw 1-cochain of
/// (b, a): entry (w db + z) da + o is f(w, e_z)(e_o). The module's nu is the twist of a.
struct ExtensionDatum {
  HomSuperAlgebra base;
  Representation module;
  Vec cocycle;

  const GradedSpace& fiber() const { return module.target; }
};

/// Checks a datum: module passes verify_representation (NotARepresentation),
/// cocycle compatible (NotACochain), even (CocycleNotEven), super-skew (CocycleNotSkew),
/// delta f = 0 (CocycleNotClosed).
void validate_datum(const ExtensionDatum& d);

/// a + b with a first: [(a_i, b_i)] = (sum_i [tau b_1,..,a_i,..,tau b_n] + f(B, b_n), B.b_n),
/// alpha' = alpha + beta. validated = false skips validate_datum so that
/// non-cocycles can be studied.
HomSuperAlgebra build_extension(const ExtensionDatum& d, bool validated = true);

/// Inclusion of a and projection onto b for an algebra built by build_extension.
Matrix extension_inclusion(const ExtensionDatum& d);
Matrix extension_projection(const ExtensionDatum& d);

struct Section {
  Matrix tau;  // dim g x dim b
};

/// Solves pi tau = id, alpha tau = tau beta with tau even. Among the solutions the
/// one with free variables zero. Throws NoCompatibleSection.
Section find_section(const HomSuperAlgebra& g, const Matrix& projection, const HomSuperAlgebra& b);

struct ExtractedDatum {
  Representation module;  // [tau B, a], nu = alpha restricted to a
  Vec cocycle;            // f(B, z) = tau(B).tau(z) - tau(B.z), in ideal coordinates
};

/// ideal must be abelian; homogeneous_basis(ideal) gives the fiber coordinates.
/// Throws SectionInvalid; post-checks delta f = 0 (PostCheckFailed).
ExtractedDatum extract_cocycle(const HomSuperAlgebra& g, const Subspace& ideal,
                               const Matrix& projection, const HomSuperAlgebra& b,
                               const Section& s);

/// Maps f_i : objs[i] -> objs[i+1]. Each map must be a morphism and ker f_{i+1} = im f_i.
Report verify_exact_sequence(const std::vector<HomSuperAlgebra>& objs,
                             const std::vector<Matrix>& maps);

/// f1 - f2 in delta^0 C^0(b, a).
bool cohomologous(const HomSuperAlgebra& b, const Representation& module, const Vec& f1,
                  const Vec& f2);

}  // namespace nambu
