#include "holomat/random_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace holomat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

RandomModel::RandomModel(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RandomModel::next_u64() {
    ++position_;
    return engine_();
}

double RandomModel::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomModel::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double RandomModel::nonzero_uniform() {
    for (;;) {
        const double v = uniform(-1.0, 1.0);
        if (v != 0.0) return v;
    }
}

double RandomModel::gaussian() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex RandomModel::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::size_t RandomModel::index(std::size_t n) {
    if (n == 0) throw Error("index range must be nonempty");
    return static_cast<std::size_t>(next_u64() % n);
}

RandomModel RandomModel::fork(std::uint64_t stream) const {
    return RandomModel(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

ComplexMatrix random_complex_matrix(RandomModel& model, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = model.complex_gaussian();
    return m;
}

ComplexMatrix random_hermitian(RandomModel& model, std::size_t m) {
    const ComplexMatrix g = random_complex_matrix(model, m, m);
    ComplexMatrix h(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

namespace {

// Orthonormal basis of the column space via modified Gram-Schmidt; columns
// assumed generic (Gaussian), re-orthogonalized once for stability.
ComplexMatrix mgs_basis(const ComplexMatrix& a) {
    ComplexMatrix q = a;
    const std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t j = 0; j < cols; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj = 0.0;
                for (std::size_t i = 0; i < rows; ++i) proj += std::conj(q(i, k)) * q(i, j);
                for (std::size_t i = 0; i < rows; ++i) q(i, j) -= proj * q(i, k);
            }
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < rows; ++i) nrm += std::norm(q(i, j));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) throw Error("rank-deficient draw in orthonormalization");
        for (std::size_t i = 0; i < rows; ++i) q(i, j) /= nrm;
    }
    return q;
}

ComplexMatrix hermitize(const ComplexMatrix& a) {
    ComplexMatrix h(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

}  // namespace

ComplexMatrix random_unitary(RandomModel& model, std::size_t m) {
    for (;;) {
        try {
            return mgs_basis(random_complex_matrix(model, m, m));
        } catch (const Error&) {
            // A singular Gaussian draw has probability zero; redraw.
        }
    }
}

std::pair<ComplexMatrix, ComplexMatrix> random_orthogonal_selfadjoint_pair(RandomModel& model,
                                                                           std::size_t m) {
    if (m < 2) throw Error("orthogonal pairs need dimension at least 2");
    const ComplexMatrix u = random_unitary(model, m);

    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = m; i-- > 1;) std::swap(perm[i], perm[model.index(i + 1)]);
    const std::size_t cut = 1 + model.index(m - 1);

    std::vector<double> da(m, 0.0), db(m, 0.0);
    for (std::size_t i = 0; i < cut; ++i) da[perm[i]] = model.nonzero_uniform();
    for (std::size_t i = cut; i < m; ++i) db[perm[i]] = model.nonzero_uniform();

    const ComplexMatrix uh = u.adjoint();
    ComplexMatrix a = hermitize(u * ComplexMatrix::diagonal(da) * uh);
    ComplexMatrix b = hermitize(u * ComplexMatrix::diagonal(db) * uh);
    return {std::move(a), std::move(b)};
}

std::pair<ComplexMatrix, ComplexMatrix> random_zero_product_pair(RandomModel& model,
                                                                 std::size_t m) {
    if (m < 2) throw Error("zero-product pairs need dimension at least 2");
    const std::size_t r = 1 + model.index(m - 1);
    const ComplexMatrix x = random_complex_matrix(model, m, r);
    const ComplexMatrix y = random_complex_matrix(model, r, m);
    ComplexMatrix b = x * y;

    const ComplexMatrix q = mgs_basis(x);
    ComplexMatrix projector = ComplexMatrix::identity(m) - q * q.adjoint();
    ComplexMatrix a = random_complex_matrix(model, m, m) * projector;
    return {std::move(a), std::move(b)};
}

std::pair<ComplexMatrix, ComplexMatrix> random_rank_one_projection_pair(RandomModel& model,
                                                                        std::size_t m) {
    if (m < 2) throw Error("projection pairs need dimension at least 2");
    const ComplexMatrix pair = mgs_basis(random_complex_matrix(model, m, 2));
    ComplexMatrix p(m, m), q(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            p(i, j) = pair(i, 0) * std::conj(pair(j, 0));
            q(i, j) = pair(i, 1) * std::conj(pair(j, 1));
        }
    }
    return {hermitize(p), hermitize(q)};
}

ComplexMatrix random_similarity(RandomModel& model, std::size_t m, double cond_cap) {
    if (cond_cap < 1.0) throw Error("condition cap must be at least 1");
    const ComplexMatrix u = random_unitary(model, m);
    const ComplexMatrix v = random_unitary(model, m);
    std::vector<double> sigma(m);
    const double span = std::log(cond_cap);
    for (std::size_t i = 0; i < m; ++i) sigma[i] = std::exp(model.uniform(0.0, span));
    return u * ComplexMatrix::diagonal(sigma) * v;
}

}  // namespace holomat
