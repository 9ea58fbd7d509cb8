#pragma once

#include <cstdint>
#include <random>

#include "nambu/graded.hpp"

namespace nambu {

using Rng = std::mt19937_64;

Scalar random_small(Rng& rng, int range);          // uniform integer in [-range, range]
Scalar random_nonzero(Rng& rng, int range);        // same, excluding 0
Scalar random_rational(Rng& rng, int range, int max_den);

/// 2-step nilpotent Nambu-Lie superalgebra (alpha = id): brackets of the
/// first `dim - central` basis vectors land in the last `central` ones, which are central.
HomSuperAlgebra random_two_step(Rng& rng, int n, int dim, int central, int odd);

/// Random self-morphism of a 2-step algebra built by random_two_step.
Matrix random_two_step_endo(Rng& rng, const HomSuperAlgebra& a, int central);

/// A seeded random valid multiplicative algebra of arity n and dimension <= max_dim.
/// Drawn from twisted 2-step algebras and twisted corpus algebras.
HomSuperAlgebra random_valid_algebra(Rng& rng, int n, int max_dim);

}  // namespace nambu
