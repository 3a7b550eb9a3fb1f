#pragma once

#include "dimwit/rng.hpp"
#include "dimwit/types.hpp"

namespace dimwit {

// Haar-ish random pure state: normalized Gaussian components.
StateVector random_state(int dim, Field field, Rng& rng);

// Random rank-t projector effect (orthonormalized Gaussian vectors).
Effect random_effect(int dim, Field field, int rank, Rng& rng);

// Random pure-state scenario with k effects; effect ranks drawn uniformly
// from 1..max_rank (default max(1, dim/2)).
Scenario random_scenario(int dim, Field field, int k, Rng& rng, int max_rank = 0);

// Haar-distributed unitary (orthogonal when field is Real) via Gram-Schmidt
// of a Gaussian matrix.
CMat random_unitary(int dim, Field field, Rng& rng);

// Conjugate every preparation by U (X -> U X U^dagger).
Scenario rotate_preparations(const Scenario& s, const CMat& u);

}  // namespace dimwit
