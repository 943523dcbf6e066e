#include <doctest.h>

#include <cmath>

#include "holomat/complex_matrix.hpp"
#include "holomat/holo_function.hpp"
#include "holomat/ortho_tests.hpp"
#include "holomat/random_model.hpp"

using namespace holomat;

namespace {

HoloFunction standard_fixture(std::size_t m, bool transpose) {
    StandardFormSpec spec;
    spec.lambdas = {Complex(1.0, -0.25), Complex(0.5), Complex(0.0), Complex(-0.125, 0.5)};
    RandomModel gen(transpose ? 101 : 100);
    spec.S = random_similarity(gen, m, 15.0);
    spec.transpose = transpose;
    spec.radius = 2.0;
    return StandardFormEvaluator(spec).as_holo();
}

}  // namespace

TEST_SUITE("ortho_props") {

TEST_CASE("standard forms are additive on commuting orthogonal pairs") {
    const HoloFunction h = standard_fixture(3, false);
    RandomModel model(1);
    const Verdict v = test_orthogonal_additivity(h, model, 100);
    CHECK(v.passed);
    CHECK(v.trials == 100);
    CHECK(v.max_residual <= v.tolerance);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("standard forms are multiplicative on orthogonal pairs") {
    const HoloFunction h = standard_fixture(3, false);
    RandomModel model(2);
    const Verdict v = test_orthogonal_multiplicativity(h, model, 100);
    CHECK(v.passed);
}

TEST_CASE("transpose forms keep both self-adjoint properties") {
    const HoloFunction h = standard_fixture(3, true);
    RandomModel model(3);
    CHECK(test_orthogonal_additivity(h, model, 100).passed);
    CHECK(test_orthogonal_multiplicativity(h, model, 100).passed);
}

TEST_CASE("standard forms preserve one-sided zero products") {
    const HoloFunction h = standard_fixture(3, false);
    RandomModel model(4);
    const Verdict v = test_zero_product_preservation(h, model, 200);
    CHECK(v.passed);
}

TEST_CASE("transpose forms fail one-sided zero products with a witness") {
    const HoloFunction h = standard_fixture(2, true);
    RandomModel model(5);
    const Verdict v = test_zero_product_preservation(h, model, 200);
    CHECK_FALSE(v.passed);
    REQUIRE(v.witness.has_value());

    // The witness is re-checkable: its pair multiplies to zero but the images do not.
    const Witness& w = *v.witness;
    const double scale = w.a.frobenius_norm() * w.b.frobenius_norm();
    CHECK((w.a * w.b).frobenius_norm() <= 1e-10 * (1.0 + scale));
    const ComplexMatrix ha = h(w.a);
    const ComplexMatrix hb = h(w.b);
    const double re_residual =
        (ha * hb).frobenius_norm() / ((1.0 + ha.frobenius_norm()) * (1.0 + hb.frobenius_norm()));
    CHECK(re_residual >= 0.5 * w.residual);
    CHECK(re_residual <= 2.0 * w.residual);
}

TEST_CASE("the half projection witness defeats the transpose form exactly") {
    const auto [a, b] = transpose_witness(3);
    // a = 0.5[[1,i],[-i,1]] padded with zeros, b its conjugate: the product
    // vanishes while a * transpose(b) = a * a = a does not.
    CHECK((a * b).frobenius_norm() <= 1e-15);
    CHECK((b * a).frobenius_norm() <= 1e-15);
    CHECK(distance(a * b.transpose(), a) <= 1e-15);
    CHECK(distance(a, a.adjoint()) == 0.0);
    CHECK(distance(b, b.adjoint()) == 0.0);
    CHECK(distance(b, a.conj()) == 0.0);
}

TEST_CASE("a non-polynomial quadratic fails additivity") {
    // H(x) = x (e12 + e21) x mixes the two summands of an orthogonal pair.
    HoloFunction h;
    h.m = 2;
    h.s = 2;
    h.radius = 4.0;
    const ComplexMatrix mid = ComplexMatrix::unit(2, 0, 1) + ComplexMatrix::unit(2, 1, 0);
    h.evaluator = [mid](const ComplexMatrix& x) { return x * mid * x; };
    RandomModel model(6);
    const Verdict v = test_orthogonal_additivity(h, model, 200);
    CHECK_FALSE(v.passed);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->residual > v.tolerance);
}

TEST_CASE("distinct components annihilate each other") {
    const HoloFunction h = standard_fixture(2, false);
    RandomModel model(7);
    const Verdict v = test_component_cross_orthogonality(h, 4, model, 50);
    CHECK(v.passed);
    CHECK(v.max_residual <= v.tolerance);
}

TEST_CASE("verdicts are deterministic for a fixed seed") {
    const HoloFunction h = standard_fixture(2, true);
    const Verdict a = test_zero_product_preservation(h, RandomModel(9), 50);
    const Verdict b = test_zero_product_preservation(h, RandomModel(9), 50);
    CHECK(a.passed == b.passed);
    CHECK(a.max_residual == b.max_residual);
    REQUIRE(a.witness.has_value() == b.witness.has_value());
    if (a.witness) {
        CHECK(distance(a.witness->a, b.witness->a) == 0.0);
        CHECK(distance(a.witness->b, b.witness->b) == 0.0);
    }
}

TEST_CASE("testers leave the caller's model untouched") {
    const HoloFunction h = standard_fixture(2, false);
    RandomModel model(12);
    const std::uint64_t before = model.position();
    (void)test_orthogonal_additivity(h, model, 10);
    CHECK(model.position() == before);
}

}  // TEST_SUITE
