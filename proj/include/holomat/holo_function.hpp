#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "holomat/complex_matrix.hpp"

namespace holomat {

// A map between matrix algebras given by an evaluation callback on the open
// ball of the given spectral-norm radius around zero. Domain matrices are
// m-by-m, values are s-by-s.
struct HoloFunction {
    std::function<ComplexMatrix(const ComplexMatrix&)> evaluator;
    std::size_t m = 0;
    std::size_t s = 0;
    double radius = 1.0;

    ComplexMatrix operator()(const ComplexMatrix& x) const;
};

// Coefficients and conjugating matrix of a function
//   x -> inverse(S) * (sum_n lambda[n-1] * y^n) * S,  y = x or transpose(x).
// lambdas start at degree 1: there is no constant term.
struct StandardFormSpec {
    std::vector<Complex> lambdas;
    ComplexMatrix S;
    bool transpose = false;
    double radius = 1.0;
};

// Evaluator for a StandardFormSpec with the factorization of S precomputed.
// Copyable; copies share the factorization.
class StandardFormEvaluator {
public:
    explicit StandardFormEvaluator(StandardFormSpec spec);

    const StandardFormSpec& spec() const;
    // Throws OutOfDomain when the spectral norm of x reaches the radius.
    ComplexMatrix operator()(const ComplexMatrix& x) const;
    HoloFunction as_holo() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// A linear map M_m -> M_s stored by its images on the matrix units E(i,j),
// listed row-major: images[i * m + j] = value on E(i,j).
struct LinearMapMatrix {
    std::size_t m = 0;
    std::size_t s = 0;
    std::vector<ComplexMatrix> images;

    static LinearMapMatrix from_function(const std::function<ComplexMatrix(const ComplexMatrix&)>& f,
                                         std::size_t m, std::size_t s);
    // x -> lambda * inverse(S) * x * S (or transpose(x) in place of x).
    static LinearMapMatrix similarity(std::size_t m, Complex lambda, const ComplexMatrix& S,
                                      bool transpose);

    const ComplexMatrix& image(std::size_t i, std::size_t j) const { return images[i * m + j]; }
    ComplexMatrix apply(const ComplexMatrix& x) const;
    // Largest Frobenius norm among the unit images.
    double image_norm_max() const;
    HoloFunction as_holo(double radius) const;
};

// Degree-n term of a power series, evaluated through a callback.
struct HomogeneousComponent {
    int degree = 0;
    std::function<ComplexMatrix(const ComplexMatrix&)> evaluator;
    std::size_t m = 0;
    std::size_t s = 0;
    // Set when the component was produced with fewer quadrature nodes than
    // twice its degree.
    bool aliasing_risk = false;

    ComplexMatrix operator()(const ComplexMatrix& x) const { return evaluator(x); }
};

}  // namespace holomat
