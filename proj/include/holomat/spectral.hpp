#pragma once

#include <vector>

#include "holomat/complex_matrix.hpp"

namespace holomat {

// Eigenvalues ascending; columns of `unitary` are the matching eigenvectors,
// so unitary * diag(eigenvalues) * adjoint(unitary) reconstructs the input.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix unitary;
};

// Cyclic Jacobi for complex Hermitian matrices. Rejects inputs whose
// deviation from Hermitian symmetry exceeds 1e-10 * (1 + ||a||_F).
SpectralDecomposition hermitian_eigendecomposition(const ComplexMatrix& a, int max_sweeps = 100);

// Singular values in ascending order (eigenvalues of adjoint(a) * a, clamped
// at zero before the square root).
std::vector<double> singular_values(const ComplexMatrix& a);

double spectral_norm(const ComplexMatrix& a);

// sigma_max / sigma_min; infinity when the smallest singular value vanishes.
double condition_number(const ComplexMatrix& a);

// True iff x^s collapses numerically: ||x^s||_F <= tol * (1 + ||x||_F)^s
// where s is the dimension.
bool is_nilpotent(const ComplexMatrix& x, double tol = 1e-9);

}  // namespace holomat
