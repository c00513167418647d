// random_states.hpp — seeded generators for test and validation grids

#pragma once

#include <random>

#include "dqd/core.hpp"
#include "dqd/types.hpp"

namespace dqd {

// Normalized complex-Gaussian 4-vector.
Vector4c random_state_vector(std::mt19937_64& rng);

DensityMatrix random_pure_state(std::mt19937_64& rng);

// Wishart-like G G' / tr(G G') with complex-Gaussian G; full rank almost surely.
DensityMatrix random_mixed_state(std::mt19937_64& rng);

// 2x2 unitary from uniformly drawn phases and mixing angle.
Matrix2 random_unitary_2(std::mt19937_64& rng);

// Parameters drawn uniformly from omega in [-20, 20], coulomb in [0, 40],
// temperature in [0.05, 20]; degenerate-normalizer combinations have
// probability zero under these draws.
ModelParams random_model_params(std::mt19937_64& rng);

} // namespace dqd
