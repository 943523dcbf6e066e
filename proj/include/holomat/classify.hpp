#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holomat/extraction.hpp"
#include "holomat/holo_function.hpp"
#include "holomat/ortho_tests.hpp"
#include "holomat/random_model.hpp"

namespace holomat {

// An orthogonal input pair whose images fail to multiply to zero.
class HypothesisViolated : public Error {
public:
    HypothesisViolated(ComplexMatrix p_in, ComplexMatrix q_in, double residual)
        : Error("images of an orthogonal pair have relative product norm " +
                std::to_string(residual)),
          p(std::move(p_in)),
          q(std::move(q_in)),
          residual(residual) {}
    ComplexMatrix p, q;
    double residual;
};

// Checks the three compatibility relations a linear map theta inherits from
// an orthogonally multiplicative function (writing u = theta(identity)):
//   u * theta(a) = theta(a) * u
//   u * theta(a^2) = theta(a^2) * u = theta(a)^2
//   u * theta(ab + ba) = theta(a) theta(b) + theta(b) theta(a)
// on random sample pairs. Residuals are relative to the operand norms.
Verdict test_jordan_relation(const LinearMapMatrix& theta, RandomModel model,
                             std::size_t trials = 200, double tol = 1e-9);

// Distinguishes x -> inverse(S) x S from x -> inverse(S) transpose(x) S by
// probing the idempotent pair a = E(1,1), b = E(2,1) + E(2,2), which has
// a b = 0 but b a != 0. Returns true for the transposed (product-reversing)
// variant. Throws Inconclusive when both or neither product vanishes.
bool detect_antihomomorphism(const LinearMapMatrix& phi, double tol = 1e-6);

// Recovers S with phi(x) = inverse(S) x S for a unital algebra automorphism
// given by its unit images F(i,j):
//   - multiplication table F(i,j) F(k,l) = delta(j,k) F(i,l) within tol,
//     otherwise NotAutomorphism;
//   - first frame column from the dominant column of F(1,1), remaining
//     columns s_i = F(i,1) s_1; SingularFrame when the frame condition
//     number exceeds 1e12;
//   - the returned S reproduces every unit image within tol, otherwise
//     ReconstructionFailed.
// The scalar gauge is fixed by unit norm of s_1 with its first substantial
// entry real positive, so equal maps recover the same S.
ComplexMatrix recover_similarity(const LinearMapMatrix& phi, double tol = 1e-6);

enum class LinearMapForm { NilpotentRange, Similarity, TransposeSimilarity };

struct LinearClassification {
    LinearMapForm form = LinearMapForm::NilpotentRange;
    Complex lambda;   // 0 for a nilpotent range
    ComplexMatrix S;  // empty for a nilpotent range
    // Worst relative residual of the verification stage: unit reconstruction
    // for the similarity forms, the power-collapse ratio for nilpotency.
    double residual = 0.0;
};

// Decides which side of the dichotomy a linear map theta falls on, after
// checking that images of orthogonal projection pairs multiply to zero
// (HypothesisViolated otherwise): either every image is nilpotent, or theta
// is lambda times a (possibly transposed) similarity. Non-nilpotent maps
// into a different dimension raise DimensionMismatch.
LinearClassification classify_linear_map(const LinearMapMatrix& theta, RandomModel model,
                                         double tol = 1e-6);

enum class HoloForm { ZeroTraceRange, Standard, TransposeStandard };

struct ClassifyParams {
    std::uint64_t seed = 0;
    int n_max = 8;
    int nodes = 0;  // 0 -> 2 * n_max + 2
    std::size_t trials = 200;
    double tol_construct = 1e-12;
    double tol_verify = 1e-9;
    double tol_decide = 1e-6;
    // Skips the additivity / multiplicativity gate; the later stages then
    // surface failures as MixedForm or reconstruction errors.
    bool skip_hypothesis_gate = false;
    // Forces the anchor degree instead of scanning for the smallest one with
    // a trace-visible component (0 = automatic).
    int anchor_override = 0;
};

// Sampled range structure, reported without asserting any implication
// between the three properties.
struct RangeDiagnostics {
    bool trace_zero = false;
    bool nilpotent = false;
    bool trivial_products = false;
    double max_trace_residual = 0.0;
    double max_nilpotency_residual = 0.0;
    double max_product_residual = 0.0;
};

struct Classification {
    HoloForm form = HoloForm::ZeroTraceRange;
    // Populated for the Standard / TransposeStandard outcomes; lambdas are
    // degree-indexed from 1 with negligible entries (< 1e-9) forced to 0.
    StandardFormSpec spec;
    int anchor_degree = 0;  // 0 when no component has trace-visible part
    std::vector<int> active_degrees;
    double reconstruction_residual = 0.0;
    Verdict additivity;
    Verdict multiplicativity;
    // Present for TransposeStandard: the zero-product check the transposed
    // form must fail, with its witness.
    std::optional<Verdict> zero_product;
    // Present for ZeroTraceRange.
    std::optional<RangeDiagnostics> range;
};

// Full pipeline: hypothesis gate, component extraction (constant term must
// vanish), linearization of the active components, anchor scan, dichotomy
// classification of the anchor, coefficient recovery from the normalized
// function, per-component form verification, and a fresh reconstruction
// check. Throws HypothesisFailed, MixedForm, DimensionMismatch or
// ReconstructionFailed when the input leaves the supported class.
Classification classify_holomorphic(const HoloFunction& h, const ClassifyParams& params = {});

}  // namespace holomat
