#include "holomat/linearization.hpp"

#include "holomat/spectral.hpp"

namespace holomat {

LinearMapMatrix linearize(const HomogeneousComponent& p, RandomModel& model, double tol) {
    if (p.degree < 1) throw Error("linearization needs degree at least 1");
    const std::size_t m = p.m;
    const std::size_t n = static_cast<std::size_t>(p.degree);

    LinearMapMatrix map;
    map.m = m;
    map.s = p.s;
    map.images.resize(m * m);
    std::vector<ComplexMatrix> diag_images(m);
    for (std::size_t i = 0; i < m; ++i) {
        diag_images[i] = p(ComplexMatrix::unit(m, i, i));
        map.images[i * m + i] = diag_images[i];
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            map.images[i * m + j] =
                p(ComplexMatrix::unit(m, i, i) + ComplexMatrix::unit(m, i, j)) - diag_images[i];
        }
    }

    std::vector<ComplexMatrix> samples;
    samples.reserve(m * m + 32);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) samples.push_back(ComplexMatrix::unit(m, i, j));
    for (int k = 0; k < 32; ++k) {
        ComplexMatrix x = (k < 16) ? random_hermitian(model, m) : random_complex_matrix(model, m, m);
        const double nrm = spectral_norm(x);
        if (nrm > 0.0) x *= Complex(1.0 / nrm);
        samples.push_back(std::move(x));
    }

    double worst = 0.0;
    const ComplexMatrix* worst_sample = nullptr;
    for (const auto& x : samples) {
        const ComplexMatrix direct = p(x);
        const ComplexMatrix via_map = map.apply(x.power(n));
        const double residual = distance(direct, via_map) / (1.0 + direct.frobenius_norm());
        if (residual > worst) {
            worst = residual;
            worst_sample = &x;
        }
    }
    if (worst > tol) throw LinearizationMismatch(*worst_sample, worst);
    return map;
}

}  // namespace holomat
