#pragma once

#include <functional>
#include <vector>

#include "holomat/holo_function.hpp"

namespace holomat {

// Symmetric n-linear map recovered from a degree-n homogeneous component.
struct SymmetricForm {
    int degree = 0;
    std::size_t m = 0;
    std::size_t s = 0;
    std::function<ComplexMatrix(const std::vector<ComplexMatrix>&)> evaluator;

    ComplexMatrix operator()(const std::vector<ComplexMatrix>& args) const;
};

// Polarization:
//   T(x_1, .., x_n) = 1 / (2^n n!) * sum over signs e in {-1,1}^n of
//                     e_1 .. e_n * P(e_1 x_1 + .. + e_n x_n),
// which satisfies T(x, .., x) = P(x). Throws DegreeZero for n = 0.
SymmetricForm polarize(const HomogeneousComponent& p);

}  // namespace holomat
