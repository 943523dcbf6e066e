#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "holomat/complex_matrix.hpp"

namespace holomat {

// Deterministic random source. All variates are derived from raw 64-bit
// draws with fixed arithmetic, so a (seed, draw index) pair pins down every
// sample independently of platform or standard library version.
class RandomModel {
public:
    explicit RandomModel(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    // Number of raw 64-bit words consumed so far.
    std::uint64_t position() const { return position_; }

    std::uint64_t next_u64();
    // Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);
    // Uniform in [-1, 1] with exact zeros redrawn.
    double nonzero_uniform();
    // Standard normal via Box-Muller.
    double gaussian();
    // Standard complex normal: E|z|^2 = 1.
    Complex complex_gaussian();
    // Uniform index in [0, n).
    std::size_t index(std::size_t n);

    // Independent child stream; does not advance this stream.
    RandomModel fork(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::uint64_t position_ = 0;
    std::mt19937_64 engine_;
};

ComplexMatrix random_complex_matrix(RandomModel& model, std::size_t rows, std::size_t cols);
ComplexMatrix random_hermitian(RandomModel& model, std::size_t m);
// Haar-like unitary: modified Gram-Schmidt applied to a Gaussian matrix with
// the R diagonal forced real positive.
ComplexMatrix random_unitary(RandomModel& model, std::size_t m);

// Self-adjoint a, b with a * b = b * a = 0: a shared random unitary
// conjugates two diagonals with disjoint supports and entries in
// [-1, 1] \ {0}. Both supports are nonempty, so m >= 2 is required.
std::pair<ComplexMatrix, ComplexMatrix> random_orthogonal_selfadjoint_pair(RandomModel& model,
                                                                           std::size_t m);

// General (not self-adjoint) a, b with a * b = 0 and b of rank r < m:
// b = X * Y and a annihilates the column space of b.
std::pair<ComplexMatrix, ComplexMatrix> random_zero_product_pair(RandomModel& model,
                                                                 std::size_t m);

// Rank-one orthogonal projections p, q with p * q = q * p = 0, built from an
// orthonormal pair of random vectors.
std::pair<ComplexMatrix, ComplexMatrix> random_rank_one_projection_pair(RandomModel& model,
                                                                        std::size_t m);

// Invertible S = U * diag(sigma) * V with singular values log-uniform in
// [1, cond_cap], so cond(S) <= cond_cap.
ComplexMatrix random_similarity(RandomModel& model, std::size_t m, double cond_cap);

}  // namespace holomat
