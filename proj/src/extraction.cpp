#include "holomat/extraction.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "holomat/random_model.hpp"
#include "holomat/spectral.hpp"

namespace holomat {

struct ComponentSet::Impl {
    HoloFunction h;
    int n_max;
    int nodes;
    double rho_fixed;
    std::vector<Complex> omega;  // omega^k, k = 0 .. nodes-1

    Impl(HoloFunction h_in, int n_max_in, int nodes_in, double rho_in)
        : h(std::move(h_in)), n_max(n_max_in), nodes(nodes_in), rho_fixed(rho_in) {
        omega.resize(nodes);
        for (int k = 0; k < nodes; ++k) {
            const double angle = 2.0 * std::numbers::pi * k / nodes;
            omega[k] = Complex(std::cos(angle), std::sin(angle));
        }
    }

    double contour_scale(const ComplexMatrix& x) const {
        const double nrm = spectral_norm(x);
        if (rho_fixed > 0.0) {
            if (rho_fixed * nrm >= h.radius) throw OutOfDomain(rho_fixed * nrm, h.radius);
            return rho_fixed;
        }
        return h.radius / (2.0 * (1.0 + nrm));
    }

    std::vector<ComplexMatrix> sample(const ComplexMatrix& x, double rho) const {
        std::vector<ComplexMatrix> values;
        values.reserve(nodes);
        for (int k = 0; k < nodes; ++k) values.push_back(h(rho * omega[k] * x));
        return values;
    }

    ComplexMatrix combine(int degree, const std::vector<ComplexMatrix>& values, double rho) const {
        ComplexMatrix acc(h.s, h.s);
        for (int k = 0; k < nodes; ++k) {
            // omega^{-k n} = conj(omega^{k n}).
            const Complex w = std::conj(omega[(static_cast<std::size_t>(k) * degree) % nodes]);
            acc += w * values[k];
        }
        acc *= Complex(std::pow(rho, -degree) / nodes);
        return acc;
    }
};

ComponentSet::ComponentSet(HoloFunction h, int n_max, int nodes, double rho) {
    if (n_max < 0) throw Error("maximum degree must be nonnegative");
    if (nodes <= 0) nodes = 2 * n_max + 2;
    impl_ = std::make_shared<const Impl>(std::move(h), n_max, nodes, rho);
}

int ComponentSet::n_max() const { return impl_->n_max; }
int ComponentSet::nodes() const { return impl_->nodes; }
const HoloFunction& ComponentSet::function() const { return impl_->h; }

ComplexMatrix ComponentSet::eval_component(int degree, const ComplexMatrix& x) const {
    if (degree < 0) throw Error("component degree must be nonnegative");
    const double rho = impl_->contour_scale(x);
    return impl_->combine(degree, impl_->sample(x, rho), rho);
}

std::vector<ComplexMatrix> ComponentSet::eval_all(const ComplexMatrix& x) const {
    const double rho = impl_->contour_scale(x);
    const std::vector<ComplexMatrix> values = impl_->sample(x, rho);
    std::vector<ComplexMatrix> out;
    out.reserve(impl_->n_max + 1);
    for (int n = 0; n <= impl_->n_max; ++n) out.push_back(impl_->combine(n, values, rho));
    return out;
}

HomogeneousComponent ComponentSet::component(int degree) const {
    if (degree < 0) throw Error("component degree must be nonnegative");
    HomogeneousComponent comp;
    comp.degree = degree;
    comp.m = impl_->h.m;
    comp.s = impl_->h.s;
    comp.aliasing_risk = impl_->nodes < 2 * degree;
    auto impl = impl_;
    comp.evaluator = [impl, degree](const ComplexMatrix& x) {
        const double rho = impl->contour_scale(x);
        return impl->combine(degree, impl->sample(x, rho), rho);
    };
    return comp;
}

HomogeneousComponent extract_component(const HoloFunction& h, int degree, int nodes, double rho) {
    if (degree < 0) throw Error("component degree must be nonnegative");
    if (nodes <= 0) nodes = 2 * 8 + 2;
    return ComponentSet(h, degree, nodes, rho).component(degree);
}

DegreeEstimate estimate_degree_cutoff(const HoloFunction& h, int n_max, double tol, int nodes) {
    ComponentSet set(h, n_max, nodes);

    std::vector<ComplexMatrix> probes;
    const std::size_t m = h.m;
    probes.push_back(ComplexMatrix::identity(m));
    probes.push_back(ComplexMatrix::unit(m, 0, 0));
    if (m >= 2) {
        probes.push_back(ComplexMatrix::unit(m, 0, 1));
        probes.push_back(ComplexMatrix::unit(m, 0, 1) + ComplexMatrix::unit(m, 1, 0));
    }
    RandomModel model(0x686f6c6fULL);
    for (int i = 0; i < 4; ++i) probes.push_back(random_hermitian(model, m));
    for (int i = 0; i < 4; ++i) probes.push_back(random_complex_matrix(model, m, m));
    for (auto& p : probes) {
        const double nrm = spectral_norm(p);
        if (nrm > 0.0) p *= Complex(1.0 / nrm);
    }

    DegreeEstimate est;
    est.norms.assign(n_max + 1, 0.0);
    for (const auto& p : probes) {
        const std::vector<ComplexMatrix> comps = set.eval_all(p);
        for (int n = 0; n <= n_max; ++n)
            est.norms[n] = std::max(est.norms[n], comps[n].frobenius_norm());
    }
    for (int n = 1; n <= n_max; ++n) {
        if (est.norms[n] > tol) {
            est.active.push_back(n);
            est.cutoff = n;
        }
    }
    return est;
}

}  // namespace holomat
