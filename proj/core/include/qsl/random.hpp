#pragma once

#include <cstdint>
#include <random>

#include "qsl/types.hpp"

namespace qsl {

/// Seeded generator for reproducible ensembles. Gaussian draws use an
/// explicit Box-Muller so the stream is identical across standard
/// library implementations.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    double gaussian();
    Complex complex_gaussian();

    std::mt19937_64& engine() noexcept { return engine_; }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

PureState random_state(Eigen::Index d, std::uint64_t seed);
HermitianOperator random_hermitian(Eigen::Index d, std::uint64_t seed);

/// Haar-like random unitary from the QR factorization of a complex
/// Gaussian matrix, with the phase convention diag(R) > 0.
Matrix random_unitary(Eigen::Index d, std::uint64_t seed);

/// V D V^dagger with D a +/-1 diagonal holding at least one of each sign,
/// so H^2 = I by construction.
HermitianOperator random_self_inverse(Eigen::Index d, std::uint64_t seed);

// In-stream variants for callers that manage one RandomSource.
PureState random_state(Eigen::Index d, RandomSource& rng);
HermitianOperator random_hermitian(Eigen::Index d, RandomSource& rng);
Matrix random_unitary(Eigen::Index d, RandomSource& rng);
HermitianOperator random_self_inverse(Eigen::Index d, RandomSource& rng);

}  // namespace qsl
