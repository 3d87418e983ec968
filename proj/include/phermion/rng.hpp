#pragma once

#include <random>

#include "phermion/matops.hpp"

namespace phermion {

// All randomized suites run off a fixed default seed so every report and
// property sweep is reproducible.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed = defaults::seed) { return Rng{seed}; }

Complex random_complex(Rng& rng, double lo = -1.0, double hi = 1.0);
ComplexMatrix random_matrix(Index dim, Rng& rng);
ComplexMatrix random_hermitian(Index dim, Rng& rng);
// Resamples until the smallest singular value clears min_sv.
ComplexMatrix random_invertible(Index dim, Rng& rng, double min_sv = 0.1);
ComplexMatrix random_unitary(Index dim, Rng& rng);
// Well-conditioned Hermitian invertible metric; definite or of mixed signature.
ComplexMatrix random_metric(Index dim, Rng& rng, bool definite);

}  // namespace phermion
