#pragma once

#include <cstddef>
#include <optional>

#include "holomat/extraction.hpp"
#include "holomat/holo_function.hpp"
#include "holomat/random_model.hpp"

namespace holomat {

// Worst sample pair of a failed property check, exactly as passed to the
// function under test.
struct Witness {
    ComplexMatrix a;
    ComplexMatrix b;
    double residual = 0.0;
};

// Outcome of a sampled property check. passed holds exactly when
// max_residual <= tolerance, and a witness is present exactly when it fails.
struct Verdict {
    bool passed = true;
    std::size_t trials = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::optional<Witness> witness;
};

// Checks H(a + b) = H(a) + H(b) on random self-adjoint pairs with
// a b = b a = 0, scaled into the ball of radius r / 4. Residuals are
// relative: ||H(a+b) - H(a) - H(b)||_F / (1 + ||H(a+b)||_F).
Verdict test_orthogonal_additivity(const HoloFunction& h, RandomModel model,
                                   std::size_t trials = 200, double tol = 1e-9);

// Checks H(a) H(b) = 0 (both orders) on the same pair distribution, with
// residual ||H(a) H(b)||_F / ((1 + ||H(a)||_F) * (1 + ||H(b)||_F)).
Verdict test_orthogonal_multiplicativity(const HoloFunction& h, RandomModel model,
                                         std::size_t trials = 200, double tol = 1e-9);

// Checks H(a) H(b) = 0 on general (not self-adjoint) pairs with a b = 0
// only; the reversed product b a is typically nonzero, so this is a strictly
// stronger property than orthogonal multiplicativity.
Verdict test_zero_product_preservation(const HoloFunction& h, RandomModel model,
                                       std::size_t trials = 200, double tol = 1e-9);

// Extracts components P_0 .. P_{n_max} and checks P_i(a) P_j(b) = 0 for all
// degree pairs i, j >= 1 on orthogonal self-adjoint samples, along with
// P_0 = 0. The witness stores the sample pair of the worst residual.
Verdict test_component_cross_orthogonality(const HoloFunction& h, int n_max, RandomModel model,
                                           std::size_t trials = 200, double tol = 1e-9,
                                           int nodes = 0);

// Self-adjoint m-by-m pair (a, b) with a b = 0 but a * transpose(b) != 0:
// rank-one projections onto (1, i) and (1, -i) in the top 2-by-2 corner.
// Separates x -> inverse(S) x S from its transposed variant, since the
// latter cannot kill this pair's product in both orders.
std::pair<ComplexMatrix, ComplexMatrix> transpose_witness(std::size_t m);

}  // namespace holomat
