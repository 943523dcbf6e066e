#pragma once

#include "holomat/holo_function.hpp"
#include "holomat/random_model.hpp"

namespace holomat {

// Verification failure of a candidate linearization; carries the worst
// sample point.
class LinearizationMismatch : public Error {
public:
    LinearizationMismatch(ComplexMatrix witness_in, double residual)
        : Error("linearization does not reproduce the component: residual " +
                std::to_string(residual)),
          witness(std::move(witness_in)),
          residual(residual) {}
    ComplexMatrix witness;
    double residual;
};

// Builds the linear map T with T(x^n) = P(x) for a degree-n component of a
// function that is additive on commuting orthogonal arguments. Images come
// from evaluations on the idempotents E(i,i) and E(i,i) + E(i,j):
//   T(E(i,i)) = P(E(i,i)),   T(E(i,j)) = P(E(i,i) + E(i,j)) - P(E(i,i)).
// The identity T(x^n) = P(x) is then verified on every matrix unit and on 32
// random unit-norm points (half Hermitian); the worst relative residual must
// stay within tol or LinearizationMismatch is thrown.
LinearMapMatrix linearize(const HomogeneousComponent& p, RandomModel& model, double tol = 1e-9);

}  // namespace holomat
