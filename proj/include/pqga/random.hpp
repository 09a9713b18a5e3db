#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pqga/matrix.hpp"

namespace pqga {

using Rng = std::mt19937_64;

// Haar-distributed random unitary (QR of a complex Ginibre sample with the
// R-diagonal phases folded back in).
ComplexMatrix random_unitary(int dim, Rng& rng);

// Uniformly random unit vector.
std::vector<cxd> random_unit_vector(int dim, Rng& rng);

} // namespace pqga
