#pragma once

#include <memory>
#include <vector>

#include "holomat/holo_function.hpp"

namespace holomat {

// Taylor components of H through averaging over scaled roots of unity:
//   P_n(x) ~= rho^{-n} / N * sum_k omega^{-k n} H(rho * omega^k * x),
// omega = exp(2 pi i / N). The average is exact for polynomial H of degree
// below N. One evaluation batch per point is shared across all degrees.
class ComponentSet {
public:
    // nodes <= 0 selects 2 * n_max + 2; rho <= 0 selects the adaptive radius
    // H.radius / (2 * (1 + ||x||_2)) per evaluation point.
    ComponentSet(HoloFunction h, int n_max, int nodes = 0, double rho = 0.0);

    int n_max() const;
    int nodes() const;
    const HoloFunction& function() const;

    ComplexMatrix eval_component(int degree, const ComplexMatrix& x) const;
    // Components of degrees 0 .. n_max at x from a single evaluation batch.
    std::vector<ComplexMatrix> eval_all(const ComplexMatrix& x) const;

    HomogeneousComponent component(int degree) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

HomogeneousComponent extract_component(const HoloFunction& h, int degree, int nodes = 0,
                                       double rho = 0.0);

struct DegreeEstimate {
    // Largest degree in 1 .. n_max whose norm estimate exceeds tol; -1 when
    // every component above degree zero is negligible.
    int cutoff = -1;
    // Degree-indexed norm estimates, entries 0 .. n_max.
    std::vector<double> norms;
    // Degrees in 1 .. n_max with norm estimate above tol.
    std::vector<int> active;
};

// Probes the components on a fixed panel of unit-norm points (identity,
// selected units, and seeded random matrices). Deterministic.
DegreeEstimate estimate_degree_cutoff(const HoloFunction& h, int n_max, double tol = 1e-9,
                                      int nodes = 0);

}  // namespace holomat
