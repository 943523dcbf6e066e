#include "holomat/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "holomat/linearization.hpp"
#include "holomat/spectral.hpp"

namespace holomat {

namespace {

ComplexMatrix normalized(ComplexMatrix x) {
    const double nrm = spectral_norm(x);
    if (nrm > 0.0) x *= Complex(1.0 / nrm);
    return x;
}

double relative_gap(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    return distance(lhs, rhs) / (1.0 + lhs.frobenius_norm() + rhs.frobenius_norm());
}

}  // namespace

Verdict test_jordan_relation(const LinearMapMatrix& theta, RandomModel model, std::size_t trials,
                             double tol) {
    Verdict verdict;
    verdict.trials = trials;
    verdict.tolerance = tol;
    const std::size_t m = theta.m;
    const ComplexMatrix u = theta.apply(ComplexMatrix::identity(m));
    for (std::size_t t = 0; t < trials; ++t) {
        const ComplexMatrix a = normalized(random_complex_matrix(model, m, m));
        const ComplexMatrix b = normalized(random_complex_matrix(model, m, m));
        const ComplexMatrix ta = theta.apply(a);
        const ComplexMatrix tb = theta.apply(b);
        const ComplexMatrix ta2 = theta.apply(a * a);
        const ComplexMatrix tab = theta.apply(a * b + b * a);

        double residual = relative_gap(u * ta, ta * u);
        residual = std::max(residual, relative_gap(u * ta2, ta * ta));
        residual = std::max(residual, relative_gap(ta2 * u, ta * ta));
        residual = std::max(residual, relative_gap(u * tab, ta * tb + tb * ta));

        if (residual >= verdict.max_residual) {
            verdict.max_residual = residual;
            if (residual > tol) {
                verdict.passed = false;
                verdict.witness = Witness{a, b, residual};
            }
        }
    }
    return verdict;
}

bool detect_antihomomorphism(const LinearMapMatrix& phi, double tol) {
    if (phi.m < 2) throw Error("antihomomorphism probe needs dimension at least 2");
    const std::size_t m = phi.m;
    const ComplexMatrix a = ComplexMatrix::unit(m, 0, 0);
    const ComplexMatrix b = ComplexMatrix::unit(m, 1, 0) + ComplexMatrix::unit(m, 1, 1);
    const ComplexMatrix fa = phi.apply(a);
    const ComplexMatrix fb = phi.apply(b);
    const double denom = (1.0 + fa.frobenius_norm()) * (1.0 + fb.frobenius_norm());
    const double forward = (fa * fb).frobenius_norm() / denom;
    const double reverse = (fb * fa).frobenius_norm() / denom;
    // a b = 0 and b a != 0: a homomorphism kills the forward product, an
    // antihomomorphism the reverse one.
    const bool forward_zero = forward <= tol;
    const bool reverse_zero = reverse <= tol;
    if (!forward_zero && reverse_zero) return true;
    if (forward_zero && !reverse_zero) return false;
    throw Inconclusive("probe products are " + std::to_string(forward) + " and " +
                       std::to_string(reverse) + "; map is not a similarity in either direction");
}

ComplexMatrix recover_similarity(const LinearMapMatrix& phi, double tol) {
    if (phi.m != phi.s)
        throw DimensionMismatch("similarity recovery needs equal source and target dimensions");
    const std::size_t m = phi.m;

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const ComplexMatrix& fij = phi.image(i, j);
            for (std::size_t k = 0; k < m; ++k) {
                for (std::size_t l = 0; l < m; ++l) {
                    const ComplexMatrix& fkl = phi.image(k, l);
                    ComplexMatrix product = fij * fkl;
                    if (j == k) product -= phi.image(i, l);
                    const double scale = 1.0 + fij.frobenius_norm() * fkl.frobenius_norm();
                    const double residual = product.frobenius_norm() / scale;
                    if (residual > tol) throw NotAutomorphism(i, j, k, l, residual);
                }
            }
        }
    }

    // Frame column 1: dominant column of the image of E(1,1), which spans
    // its range for a similarity.
    const ComplexMatrix& f11 = phi.image(0, 0);
    std::size_t best_col = 0;
    double best_norm = -1.0;
    for (std::size_t j = 0; j < m; ++j) {
        double nrm = 0.0;
        for (std::size_t i = 0; i < m; ++i) nrm += std::norm(f11(i, j));
        if (nrm > best_norm) {
            best_norm = nrm;
            best_col = j;
        }
    }
    std::vector<Complex> s1(m);
    for (std::size_t i = 0; i < m; ++i) s1[i] = f11(i, best_col);
    double nrm = 0.0;
    for (const auto& v : s1) nrm += std::norm(v);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) throw SingularFrame(std::numeric_limits<double>::infinity());
    for (auto& v : s1) v /= nrm;
    // Gauge: first substantial entry real positive.
    double peak = 0.0;
    for (const auto& v : s1) peak = std::max(peak, std::abs(v));
    for (std::size_t i = 0; i < m; ++i) {
        const double mag = std::abs(s1[i]);
        if (mag > 1e-8 * peak) {
            const Complex phase = std::conj(s1[i]) / mag;
            for (auto& v : s1) v *= phase;
            break;
        }
    }

    ComplexMatrix frame(m, m);
    for (std::size_t i = 0; i < m; ++i) frame(i, 0) = s1[i];
    for (std::size_t i = 1; i < m; ++i) {
        const std::vector<Complex> si = phi.image(i, 0) * s1;
        for (std::size_t r = 0; r < m; ++r) frame(r, i) = si[r];
    }

    const std::vector<double> sv = singular_values(frame);
    if (sv.front() <= 0.0 || sv.back() / sv.front() > 1e12)
        throw SingularFrame(sv.front() <= 0.0 ? std::numeric_limits<double>::infinity()
                                              : sv.back() / sv.front());

    // phi(x) = inverse(S) x S with S = inverse(frame), so the check below
    // multiplies by the frame directly.
    const ComplexMatrix s_matrix = LuFactorization(frame).inverse();
    const LuFactorization frame_lu(frame);
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const ComplexMatrix recon = frame * ComplexMatrix::unit(m, i, j) * s_matrix;
            const double residual = distance(phi.image(i, j), recon) /
                                    (1.0 + phi.image(i, j).frobenius_norm());
            worst = std::max(worst, residual);
        }
    }
    if (worst > tol)
        throw ReconstructionFailed("recovered similarity misses the unit images by " +
                                   std::to_string(worst));
    return s_matrix;
}

LinearClassification classify_linear_map(const LinearMapMatrix& theta, RandomModel model,
                                         double tol) {
    const std::size_t m = theta.m;
    const std::size_t s = theta.s;
    if (m < 2) throw Error("classification needs dimension at least 2");

    // Orthogonality hypothesis on sampled and structured projection pairs.
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            pairs.emplace_back(ComplexMatrix::unit(m, i, i), ComplexMatrix::unit(m, j, j));
    pairs.push_back(transpose_witness(m));
    for (int t = 0; t < 48; ++t) pairs.push_back(random_rank_one_projection_pair(model, m));

    for (const auto& [p, q] : pairs) {
        const ComplexMatrix tp = theta.apply(p);
        const ComplexMatrix tq = theta.apply(q);
        const double denom = (1.0 + tp.frobenius_norm()) * (1.0 + tq.frobenius_norm());
        const double residual =
            std::max((tp * tq).frobenius_norm(), (tq * tp).frobenius_norm()) / denom;
        if (residual > tol) throw HypothesisViolated(p, q, residual);
    }

    // Nilpotent-range branch: every image of the basis and of random samples
    // collapses under the dimension-th power.
    bool all_nilpotent = true;
    double nilpotency_residual = 0.0;
    std::vector<ComplexMatrix> scan = theta.images;
    for (int t = 0; t < 16; ++t)
        scan.push_back(theta.apply(normalized(random_complex_matrix(model, m, m))));
    for (const auto& img : scan) {
        if (!is_nilpotent(img)) {
            all_nilpotent = false;
            break;
        }
        const double denom = std::pow(1.0 + img.frobenius_norm(), static_cast<double>(s));
        nilpotency_residual =
            std::max(nilpotency_residual, img.power(s).frobenius_norm() / denom);
    }
    if (all_nilpotent) {
        LinearClassification out;
        out.form = LinearMapForm::NilpotentRange;
        out.residual = nilpotency_residual;
        return out;
    }

    if (s != m)
        throw DimensionMismatch("non-nilpotent range in dimension " + std::to_string(s) +
                                " cannot be a similarity of dimension " + std::to_string(m));

    const ComplexMatrix theta_one = theta.apply(ComplexMatrix::identity(m));
    const Complex lambda = theta_one.trace() / Complex(static_cast<double>(m));
    const ComplexMatrix scalar_part = lambda * ComplexMatrix::identity(m);
    if (distance(theta_one, scalar_part) > tol * (1.0 + theta_one.frobenius_norm()))
        throw ReconstructionFailed("image of the identity is not scalar");
    if (std::abs(lambda) <= tol)
        throw ReconstructionFailed("scalar factor of the identity image is negligible");

    LinearMapMatrix phi = theta;
    for (auto& img : phi.images) img *= Complex(1.0) / lambda;

    const bool anti = detect_antihomomorphism(phi, tol);
    LinearMapMatrix psi = phi;
    if (anti) {
        // psi(x) = phi(transpose(x)) is a plain similarity.
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) psi.images[i * m + j] = phi.image(j, i);
    }
    const ComplexMatrix s_matrix = recover_similarity(psi, tol);

    const LuFactorization s_lu(s_matrix);
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const ComplexMatrix y =
                anti ? ComplexMatrix::unit(m, j, i) : ComplexMatrix::unit(m, i, j);
            const ComplexMatrix recon = lambda * s_lu.solve(y * s_matrix);
            const double residual =
                distance(theta.image(i, j), recon) / (1.0 + theta.image(i, j).frobenius_norm());
            worst = std::max(worst, residual);
        }
    }
    if (worst > tol)
        throw ReconstructionFailed("classified form misses the unit images by " +
                                   std::to_string(worst));

    LinearClassification out;
    out.form = anti ? LinearMapForm::TransposeSimilarity : LinearMapForm::Similarity;
    out.lambda = lambda;
    out.S = s_matrix;
    out.residual = worst;
    return out;
}

namespace {

RangeDiagnostics probe_range(const HoloFunction& h, RandomModel model, double tol) {
    RangeDiagnostics diag;
    std::vector<ComplexMatrix> values;
    for (int t = 0; t < 32; ++t) {
        const double scale = 0.5 * h.radius * (1.0 - model.uniform());
        const ComplexMatrix x = normalized(random_complex_matrix(model, h.m, h.m)) * Complex(scale);
        values.push_back(h(x));
    }
    for (const auto& v : values) {
        diag.max_trace_residual = std::max(
            diag.max_trace_residual, std::abs(v.trace()) / (1.0 + v.frobenius_norm()));
        const double denom = std::pow(1.0 + v.frobenius_norm(), static_cast<double>(h.s));
        diag.max_nilpotency_residual =
            std::max(diag.max_nilpotency_residual, v.power(h.s).frobenius_norm() / denom);
    }
    for (std::size_t i = 0; i + 1 < values.size(); i += 2) {
        const ComplexMatrix& u = values[i];
        const ComplexMatrix& v = values[i + 1];
        const double denom = (1.0 + u.frobenius_norm()) * (1.0 + v.frobenius_norm());
        diag.max_product_residual =
            std::max(diag.max_product_residual, (u * v).frobenius_norm() / denom);
    }
    diag.trace_zero = diag.max_trace_residual <= tol;
    diag.nilpotent = diag.max_nilpotency_residual <= tol;
    diag.trivial_products = diag.max_product_residual <= tol;
    return diag;
}

}  // namespace

Classification classify_holomorphic(const HoloFunction& h, const ClassifyParams& params) {
    if (h.m < 2) throw Error("classification needs dimension at least 2");
    const RandomModel root(params.seed);
    const int nodes = params.nodes > 0 ? params.nodes : 2 * params.n_max + 2;

    Classification out;
    out.spec.radius = h.radius;

    // Stage 1: the two orthogonality hypotheses, sampled.
    if (!params.skip_hypothesis_gate) {
        out.additivity =
            test_orthogonal_additivity(h, root.fork(1), params.trials, params.tol_decide);
        out.multiplicativity =
            test_orthogonal_multiplicativity(h, root.fork(2), params.trials, params.tol_decide);
        if (!out.additivity.passed)
            throw HypothesisFailed("orthogonal additivity fails with residual " +
                                   std::to_string(out.additivity.max_residual));
        if (!out.multiplicativity.passed)
            throw HypothesisFailed("orthogonal multiplicativity fails with residual " +
                                   std::to_string(out.multiplicativity.max_residual));
    }

    // Stage 2: components; the constant term must vanish.
    const ComponentSet comps(h, params.n_max, nodes);
    {
        RandomModel probe_model = root.fork(3);
        double p0 = comps.eval_component(0, ComplexMatrix::identity(h.m)).frobenius_norm();
        p0 = std::max(
            p0, comps.eval_component(0, normalized(random_complex_matrix(probe_model, h.m, h.m)))
                    .frobenius_norm());
        if (p0 > params.tol_decide)
            throw HypothesisFailed("constant term has norm " + std::to_string(p0));
    }
    const DegreeEstimate est = estimate_degree_cutoff(h, params.n_max, params.tol_verify, nodes);
    out.active_degrees = est.active;

    if (est.active.empty()) {
        out.form = HoloForm::ZeroTraceRange;
        out.range = probe_range(h, root.fork(4), params.tol_decide);
        return out;
    }

    // Stage 3: linearize every active component.
    std::vector<LinearMapMatrix> maps(params.n_max + 1);
    for (int n : est.active) {
        RandomModel lin_model = root.fork(10 + static_cast<std::uint64_t>(n));
        try {
            maps[n] = linearize(comps.component(n), lin_model, params.tol_verify);
        } catch (const LinearizationMismatch& e) {
            throw HypothesisFailed("component of degree " + std::to_string(n) +
                                   " is not additive on orthogonal pairs: residual " +
                                   std::to_string(e.residual));
        }
    }

    // Stage 4: anchor scan. The anchor is the smallest active degree whose
    // linearization is visible to the trace on powers of Hermitian probes.
    std::vector<ComplexMatrix> trace_probes;
    trace_probes.push_back(ComplexMatrix::identity(h.m));
    {
        RandomModel probe_model = root.fork(5);
        for (int t = 0; t < 16; ++t)
            trace_probes.push_back(normalized(random_hermitian(probe_model, h.m)));
    }
    const auto trace_visible = [&](int n) {
        const LinearMapMatrix& map = maps[n];
        const double threshold = params.tol_decide * (1.0 + map.image_norm_max());
        for (const auto& d : trace_probes) {
            if (std::abs(map.apply(d.power(static_cast<std::size_t>(n))).trace()) > threshold)
                return true;
        }
        return false;
    };

    int anchor = 0;
    if (params.anchor_override > 0) {
        const bool active = std::find(est.active.begin(), est.active.end(),
                                      params.anchor_override) != est.active.end();
        if (!active || !trace_visible(params.anchor_override))
            throw Error("requested anchor degree " + std::to_string(params.anchor_override) +
                        " has no trace-visible component");
        anchor = params.anchor_override;
    } else {
        for (int n : est.active) {
            if (trace_visible(n)) {
                anchor = n;
                break;
            }
        }
    }

    if (anchor == 0) {
        out.form = HoloForm::ZeroTraceRange;
        out.range = probe_range(h, root.fork(4), params.tol_decide);
        return out;
    }
    out.anchor_degree = anchor;

    // Stage 5: dichotomy for the anchor map. A trace-visible component
    // cannot have nilpotent range, so only the similarity forms remain.
    const LinearClassification lin =
        classify_linear_map(maps[anchor], root.fork(6), params.tol_decide);
    if (lin.form == LinearMapForm::NilpotentRange)
        throw ReconstructionFailed("anchor component is trace-visible yet nilpotent");
    const bool anti = lin.form == LinearMapForm::TransposeSimilarity;
    const Complex lambda_anchor = lin.lambda;
    const ComplexMatrix s_matrix = lin.S;

    // Stage 6: strip the similarity, then read each coefficient off the
    // trace of the normalized component and verify the scalar form.
    const ComplexMatrix s_inv = LuFactorization(s_matrix).inverse();
    const HoloFunction h_hat{
        [&h, anti, lambda_anchor, &s_matrix, &s_inv](const ComplexMatrix& x) {
            const ComplexMatrix y = anti ? x.transpose() : x;
            return (Complex(1.0) / lambda_anchor) * (s_matrix * h(y) * s_inv);
        },
        h.m, h.m, h.radius};
    const ComponentSet hat_comps(h_hat, params.n_max, nodes);

    std::vector<Complex> lambdas(static_cast<std::size_t>(params.n_max), Complex(0.0));
    std::vector<int> mismatched;
    for (int n : est.active) {
        RandomModel lin_model = root.fork(20 + static_cast<std::uint64_t>(n));
        LinearMapMatrix hat_map;
        try {
            hat_map = linearize(hat_comps.component(n), lin_model, params.tol_verify);
        } catch (const LinearizationMismatch& e) {
            throw HypothesisFailed("normalized component of degree " + std::to_string(n) +
                                   " is not additive on orthogonal pairs: residual " +
                                   std::to_string(e.residual));
        }
        Complex coeff =
            hat_map.apply(ComplexMatrix::identity(h.m)).trace() / Complex(static_cast<double>(h.m));
        if (std::abs(coeff) < 1e-9) coeff = 0.0;

        // The normalized component must be exactly coeff * x^n.
        RandomModel check_model = root.fork(30 + static_cast<std::uint64_t>(n));
        bool matches = true;
        for (int t = 0; t < 8 && matches; ++t) {
            const ComplexMatrix x = normalized(random_complex_matrix(check_model, h.m, h.m));
            const ComplexMatrix direct = hat_comps.eval_component(n, x);
            const ComplexMatrix target = coeff * x.power(static_cast<std::size_t>(n));
            if (distance(direct, target) > params.tol_decide * (1.0 + target.frobenius_norm()))
                matches = false;
        }
        if (!matches) {
            mismatched.push_back(n);
            continue;
        }
        Complex full = lambda_anchor * coeff;
        if (std::abs(full) < 1e-9) full = 0.0;
        lambdas[static_cast<std::size_t>(n - 1)] = full;
    }
    if (!mismatched.empty()) throw MixedForm(std::move(mismatched));

    while (!lambdas.empty() && lambdas.back() == Complex(0.0)) lambdas.pop_back();

    out.spec.lambdas = std::move(lambdas);
    out.spec.S = s_matrix;
    out.spec.transpose = anti;
    out.spec.radius = h.radius;

    // Stage 7: reconstruction against a fresh sample.
    const StandardFormEvaluator reconstructed(out.spec);
    {
        RandomModel sample_model = root.fork(7);
        double worst = 0.0;
        for (int t = 0; t < 32; ++t) {
            const double scale = 0.5 * h.radius * (1.0 - sample_model.uniform());
            ComplexMatrix x = (t % 2 == 0) ? random_hermitian(sample_model, h.m)
                                           : random_complex_matrix(sample_model, h.m, h.m);
            x = normalized(std::move(x)) * Complex(scale);
            const ComplexMatrix expected = h(x);
            const double residual =
                distance(expected, reconstructed(x)) / (1.0 + expected.frobenius_norm());
            worst = std::max(worst, residual);
        }
        out.reconstruction_residual = worst;
        if (worst > params.tol_decide)
            throw ReconstructionFailed("standard form misses the function by " +
                                       std::to_string(worst));
    }

    // Stage 8: the transposed form must fail zero-product preservation;
    // record the evidence.
    if (anti)
        out.zero_product =
            test_zero_product_preservation(h, root.fork(8), params.trials, params.tol_verify);

    out.form = anti ? HoloForm::TransposeStandard : HoloForm::Standard;
    return out;
}

}  // namespace holomat
