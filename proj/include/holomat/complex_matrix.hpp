#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "holomat/errors.hpp"

namespace holomat {

using Complex = std::complex<double>;

// Dense complex matrix, row-major storage. Sizes stay small (dimension caps
// out in the tens), so no effort is spent on blocking or views.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    // Matrix unit E(i,j) in the n-by-n algebra.
    static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static ComplexMatrix diagonal(const std::vector<double>& entries);
    static ComplexMatrix diagonal(const std::vector<Complex>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix conj() const;

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    // x^k with x^0 = identity; square matrices only.
    ComplexMatrix power(std::size_t k) const;

    bool is_square() const { return rows_ == cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);
ComplexMatrix operator-(ComplexMatrix a);

// Matrix-vector product.
std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& v);

// ||a - b||_F; dimensions must agree.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

// Places x in the top-left corner of a rows-by-cols zero matrix.
ComplexMatrix embed_top_left(const ComplexMatrix& x, std::size_t rows, std::size_t cols);
// Block diagonal a (+) b.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

// LU factorization with partial pivoting of a square matrix.
// Throws SingularMatrix when a pivot falls below eps * max|entry|.
class LuFactorization {
public:
    explicit LuFactorization(const ComplexMatrix& a);

    std::size_t size() const { return lu_.rows(); }
    // Solves a * x = rhs for each column of rhs.
    ComplexMatrix solve(const ComplexMatrix& rhs) const;
    ComplexMatrix inverse() const;

private:
    ComplexMatrix lu_;
    std::vector<std::size_t> perm_;
};

}  // namespace holomat
