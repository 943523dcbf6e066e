#include <doctest.h>

#include <cmath>
#include <vector>

#include "holomat/complex_matrix.hpp"
#include "holomat/extraction.hpp"
#include "holomat/holo_function.hpp"
#include "holomat/linearization.hpp"
#include "holomat/polarization.hpp"
#include "holomat/random_model.hpp"
#include "holomat/spectral.hpp"

using namespace holomat;

namespace {

StandardFormSpec simple_spec() {
    StandardFormSpec spec;
    spec.lambdas = {Complex(2.0), Complex(0.0), Complex(-0.5, 1.0)};
    spec.S = ComplexMatrix::identity(2);
    spec.transpose = false;
    spec.radius = 4.0;
    return spec;
}

ComplexMatrix unit_scaled(std::size_t m, double c) {
    return c * ComplexMatrix::identity(m);
}

}  // namespace

TEST_SUITE("holo") {

TEST_CASE("standard form evaluation matches hand computation") {
    // H(x) = 2x - (0.5 - i) x^3 with S = I.
    const StandardFormEvaluator h(simple_spec());
    const ComplexMatrix x = unit_scaled(2, 0.5);
    const ComplexMatrix got = h(x);
    const Complex expected = Complex(2.0) * 0.5 + Complex(-0.5, 1.0) * 0.125;
    CHECK(std::abs(got(0, 0) - expected) <= 1e-14);
    CHECK(std::abs(got(0, 1)) == 0.0);
}

TEST_CASE("similarity conjugation wraps each power") {
    StandardFormSpec spec;
    spec.lambdas = {Complex(0.0), Complex(1.0)};
    RandomModel model(5);
    spec.S = random_similarity(model, 3, 10.0);
    spec.radius = 2.0;
    const StandardFormEvaluator h(spec);
    const ComplexMatrix x = random_hermitian(model, 3);
    const LuFactorization lu(spec.S);
    const ComplexMatrix expected = lu.inverse() * (x * x) * spec.S;
    CHECK(distance(h(0.5 * x), 0.25 * expected) <= 1e-10 * (1.0 + expected.frobenius_norm()));
}

TEST_CASE("transpose flag transposes the argument first") {
    StandardFormSpec spec;
    spec.lambdas = {Complex(1.0)};
    spec.S = ComplexMatrix::identity(2);
    spec.transpose = true;
    spec.radius = 10.0;
    const StandardFormEvaluator h(spec);
    const ComplexMatrix x = ComplexMatrix::unit(2, 0, 1);
    CHECK(distance(h(x), ComplexMatrix::unit(2, 1, 0)) == 0.0);
}

TEST_CASE("evaluation outside the radius is rejected") {
    const StandardFormEvaluator h(simple_spec());
    CHECK_THROWS_AS(h(unit_scaled(2, 5.0)), OutOfDomain);
    CHECK_NOTHROW(h(unit_scaled(2, 3.9)));
    CHECK_THROWS_AS(h(ComplexMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("component extraction reproduces the terms of a standard form") {
    StandardFormSpec spec;
    spec.lambdas = {Complex(1.0, 0.5), Complex(-2.0), Complex(0.0), Complex(0.25, -0.75)};
    RandomModel gen(11);
    spec.S = random_similarity(gen, 3, 20.0);
    spec.radius = 2.0;
    const StandardFormEvaluator h(spec);
    const HoloFunction holo = h.as_holo();

    ComponentSet components(holo, 6);
    RandomModel model(2);
    for (int t = 0; t < 100; ++t) {
        ComplexMatrix x = random_complex_matrix(model, 3, 3);
        const double norm = spectral_norm(x);
        x *= (0.9 / (1.0 + norm));  // stays well inside radius/2
        const auto parts = components.eval_all(x);
        ComplexMatrix sum = ComplexMatrix::zero(3, 3);
        for (const auto& p : parts) sum += p;
        const ComplexMatrix direct = holo(x);
        CHECK(distance(sum, direct) <= 1e-8 * (1.0 + direct.frobenius_norm()));
    }
}

TEST_CASE("components are independent of the node count") {
    const StandardFormEvaluator h(simple_spec());
    const HoloFunction holo = h.as_holo();
    ComponentSet coarse(holo, 4, 12);
    ComponentSet fine(holo, 4, 40);
    RandomModel model(3);
    for (int t = 0; t < 10; ++t) {
        ComplexMatrix x = random_hermitian(model, 2);
        x *= 1.0 / (1.0 + spectral_norm(x));
        for (std::size_t n = 0; n <= 4; ++n) {
            const ComplexMatrix a = coarse.eval_component(n, x);
            const ComplexMatrix b = fine.eval_component(n, x);
            CHECK(distance(a, b) <= 1e-9 * (1.0 + b.frobenius_norm()));
        }
    }
}

TEST_CASE("extracted components are homogeneous") {
    StandardFormSpec spec;
    spec.lambdas = {Complex(1.0), Complex(2.0), Complex(3.0)};
    spec.S = ComplexMatrix::identity(2);
    spec.radius = 3.0;
    const HoloFunction holo = StandardFormEvaluator(spec).as_holo();
    RandomModel model(8);
    for (std::size_t n = 1; n <= 3; ++n) {
        const HomogeneousComponent comp = extract_component(holo, n);
        for (int t = 0; t < 10; ++t) {
            ComplexMatrix x = random_complex_matrix(model, 2, 2);
            x *= 0.4 / (1.0 + spectral_norm(x));
            const Complex c(0.3, 0.4);
            const ComplexMatrix lhs = comp.evaluator(c * x);
            const ComplexMatrix rhs = std::pow(c, static_cast<double>(n)) * comp.evaluator(x);
            CHECK(distance(lhs, rhs) <= 1e-8 * (1.0 + rhs.frobenius_norm()));
        }
    }
}

TEST_CASE("too few nodes is flagged but still evaluates") {
    const HoloFunction holo = StandardFormEvaluator(simple_spec()).as_holo();
    ComponentSet tight(holo, 4, 6);
    const HomogeneousComponent c4 = tight.component(4);
    CHECK(c4.aliasing_risk);  // 6 < 2*4
    const HomogeneousComponent c2 = tight.component(2);
    CHECK_FALSE(c2.aliasing_risk);
    CHECK_NOTHROW(c4.evaluator(0.1 * ComplexMatrix::identity(2)));
}

TEST_CASE("degree estimation finds the active terms") {
    StandardFormSpec spec;
    spec.lambdas = {Complex(0.0), Complex(1.0), Complex(0.0), Complex(0.5)};
    spec.S = ComplexMatrix::identity(2);
    spec.radius = 2.0;
    const HoloFunction holo = StandardFormEvaluator(spec).as_holo();
    const DegreeEstimate est = estimate_degree_cutoff(holo, 6);
    CHECK(est.cutoff == 4);
    CHECK(est.active == std::vector<int>{2, 4});
    CHECK(est.norms[0] <= 1e-9);
    CHECK(est.norms[1] <= 1e-9);
    CHECK(est.norms[2] > 1e-3);
}

TEST_CASE("polarization of the square picks out the symmetric product") {
    // P(x) = x^2; the symmetric form is T(a, b) = (ab + ba) / 2.
    HomogeneousComponent square;
    square.degree = 2;
    square.m = 2;
    square.s = 2;
    square.evaluator = [](const ComplexMatrix& x) { return x * x; };
    const SymmetricForm form = polarize(square);

    const ComplexMatrix e11 = ComplexMatrix::unit(2, 0, 0);
    const ComplexMatrix e12 = ComplexMatrix::unit(2, 0, 1);
    const ComplexMatrix got = form.evaluator({e11, e12});
    // e11 e12 + e12 e11 = e12, halved.
    CHECK(distance(got, 0.5 * e12) <= 1e-14);
}

TEST_CASE("polarization on the diagonal recovers the component") {
    HomogeneousComponent cube;
    cube.degree = 3;
    cube.m = 2;
    cube.s = 2;
    cube.evaluator = [](const ComplexMatrix& x) { return x * x * x; };
    const SymmetricForm form = polarize(cube);
    RandomModel model(4);
    for (int t = 0; t < 5; ++t) {
        const ComplexMatrix x = random_complex_matrix(model, 2, 2);
        const ComplexMatrix diag = form.evaluator({x, x, x});
        CHECK(distance(diag, x * x * x) <= 1e-10 * (1.0 + std::pow(x.frobenius_norm(), 3.0)));
    }
}

TEST_CASE("degree zero cannot be polarized") {
    HomogeneousComponent flat;
    flat.degree = 0;
    flat.m = 2;
    flat.s = 2;
    flat.evaluator = [](const ComplexMatrix&) { return ComplexMatrix::identity(2); };
    CHECK_THROWS_AS(polarize(flat), DegreeZero);
}

TEST_CASE("linearization of a power map is the map on powers") {
    HomogeneousComponent square;
    square.degree = 2;
    square.m = 3;
    square.s = 3;
    square.evaluator = [](const ComplexMatrix& x) { return x * x; };
    RandomModel model(6);
    const LinearMapMatrix t = linearize(square, model);
    CHECK(t.m == 3);
    CHECK(t.s == 3);
    // T is the identity on the span of squares: T(y) = y for all y.
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix y = random_complex_matrix(model, 3, 3);
        CHECK(distance(t.apply(y), y) <= 1e-9 * (1.0 + y.frobenius_norm()));
    }
}

TEST_CASE("entrywise square is exposed by the linearization check") {
    // Q(x)_{ij} = (x_{ij})^2 is homogeneous of degree 2 but not of the form
    // T(x^2): at x = [[1,1],[0,1]], x^2 = [[1,2],[0,1]] while Q(x) = [[1,1],[0,1]].
    HomogeneousComponent entrywise;
    entrywise.degree = 2;
    entrywise.m = 2;
    entrywise.s = 2;
    entrywise.evaluator = [](const ComplexMatrix& x) {
        ComplexMatrix out(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) out(i, j) = x(i, j) * x(i, j);
        return out;
    };
    RandomModel model(1);
    CHECK_THROWS_AS(linearize(entrywise, model), LinearizationMismatch);
    try {
        RandomModel retry(1);
        linearize(entrywise, retry);
    } catch (const LinearizationMismatch& e) {
        CHECK(e.residual > 0.1);
        CHECK(e.witness.rows() == 2);
    }
}

TEST_CASE("linearized similarity form reproduces its images") {
    StandardFormSpec spec;
    spec.lambdas = {Complex(0.0), Complex(0.0), Complex(1.5, -0.5)};
    RandomModel gen(13);
    spec.S = random_similarity(gen, 2, 8.0);
    spec.radius = 2.0;
    const HoloFunction holo = StandardFormEvaluator(spec).as_holo();
    const HomogeneousComponent cubic = extract_component(holo, 3);
    RandomModel model(14);
    const LinearMapMatrix t = linearize(cubic, model);

    const LuFactorization lu(spec.S);
    const ComplexMatrix sinv = lu.inverse();
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const ComplexMatrix expected =
                Complex(1.5, -0.5) * (sinv * ComplexMatrix::unit(2, i, j) * spec.S);
            CHECK(distance(t.image(i, j), expected) <= 1e-8 * (1.0 + expected.frobenius_norm()));
        }
    }
}

}  // TEST_SUITE
