#include "holomat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace holomat {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One rotation in the (p, q) plane annihilating a(p, q). The rotation is
// J = [[c, s], [-s * conj(phase), c * conj(phase)]] acting on columns p, q,
// with phase = a(p,q) / |a(p,q)|; the update keeps the matrix Hermitian by
// construction (2x2 block set exactly, mirrored off-block entries).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double beta = std::abs(apq);
    if (beta == 0.0) return;
    const Complex phase = apq / beta;
    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();

    const double tau = (gamma - alpha) / (2.0 * beta);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex phase_conj = std::conj(phase);

    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = c * aip - s * phase_conj * aiq;
        a(i, q) = s * aip + c * phase_conj * aiq;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        a(p, i) = std::conj(a(i, p));
        a(q, i) = std::conj(a(i, q));
    }
    a(p, p) = alpha - t * beta;
    a(q, q) = gamma + t * beta;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t i = 0; i < n; ++i) {
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = c * vip - s * phase_conj * viq;
        v(i, q) = s * vip + c * phase_conj * viq;
    }
}

}  // namespace

SpectralDecomposition hermitian_eigendecomposition(const ComplexMatrix& a, int max_sweeps) {
    if (!a.is_square()) throw Error("eigendecomposition requires a square matrix");
    const double scale = a.frobenius_norm();
    const double deviation = distance(a, a.adjoint());
    if (deviation > 1e-10 * (1.0 + scale)) throw NotHermitian(deviation, scale);

    const std::size_t n = a.rows();
    // Work on the exactly Hermitian average so the gate tolerance does not
    // leak into the rotations.
    ComplexMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = 1e-14 * (1.0 + scale);
    int sweeps = 0;
    while (off_diagonal_norm(w) > threshold) {
        if (++sweeps > max_sweeps) throw NoConvergence(max_sweeps);
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(w, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });

    SpectralDecomposition dec;
    dec.eigenvalues.resize(n);
    dec.unitary = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        dec.eigenvalues[k] = w(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) dec.unitary(i, k) = v(i, order[k]);
    }
    return dec;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    const ComplexMatrix gram = a.adjoint() * a;
    SpectralDecomposition dec = hermitian_eigendecomposition(gram);
    std::vector<double> sv(dec.eigenvalues.size());
    for (std::size_t i = 0; i < sv.size(); ++i) sv[i] = std::sqrt(std::max(dec.eigenvalues[i], 0.0));
    return sv;
}

double spectral_norm(const ComplexMatrix& a) {
    if (a.empty()) return 0.0;
    const std::vector<double> sv = singular_values(a);
    return sv.back();
}

double condition_number(const ComplexMatrix& a) {
    const std::vector<double> sv = singular_values(a);
    if (sv.empty()) return 1.0;
    if (sv.front() == 0.0) return std::numeric_limits<double>::infinity();
    return sv.back() / sv.front();
}

bool is_nilpotent(const ComplexMatrix& x, double tol) {
    if (!x.is_square()) throw Error("nilpotency is defined for square matrices");
    const std::size_t s = x.rows();
    const double bound = tol * std::pow(1.0 + x.frobenius_norm(), static_cast<double>(s));
    return x.power(s).frobenius_norm() <= bound;
}

}  // namespace holomat
