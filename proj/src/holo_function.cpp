#include "holomat/holo_function.hpp"

#include <utility>

#include "holomat/spectral.hpp"

namespace holomat {

ComplexMatrix HoloFunction::operator()(const ComplexMatrix& x) const {
    return evaluator(x);
}

struct StandardFormEvaluator::Impl {
    StandardFormSpec spec;
    LuFactorization lu;

    explicit Impl(StandardFormSpec s) : spec(std::move(s)), lu(spec.S) {}

    ComplexMatrix eval(const ComplexMatrix& x) const {
        const std::size_t m = spec.S.rows();
        if (x.rows() != m || x.cols() != m)
            throw DimensionMismatch("evaluation point has the wrong shape");
        const double nrm = spectral_norm(x);
        if (nrm >= spec.radius) throw OutOfDomain(nrm, spec.radius);

        const ComplexMatrix y = spec.transpose ? x.transpose() : x;
        ComplexMatrix sum(m, m);
        ComplexMatrix ypow = ComplexMatrix::identity(m);
        for (std::size_t n = 0; n < spec.lambdas.size(); ++n) {
            ypow = ypow * y;
            if (spec.lambdas[n] == 0.0) continue;
            sum += spec.lambdas[n] * ypow;
        }
        return lu.solve(sum * spec.S);
    }
};

StandardFormEvaluator::StandardFormEvaluator(StandardFormSpec spec)
    : impl_(std::make_shared<const Impl>(std::move(spec))) {
    if (!impl_->spec.S.is_square() || impl_->spec.S.rows() == 0)
        throw Error("conjugating matrix must be square and nonempty");
    if (impl_->spec.radius <= 0.0) throw Error("radius must be positive");
}

const StandardFormSpec& StandardFormEvaluator::spec() const {
    return impl_->spec;
}

ComplexMatrix StandardFormEvaluator::operator()(const ComplexMatrix& x) const {
    return impl_->eval(x);
}

HoloFunction StandardFormEvaluator::as_holo() const {
    const std::size_t m = impl_->spec.S.rows();
    auto impl = impl_;
    return {[impl](const ComplexMatrix& x) { return impl->eval(x); }, m, m, impl_->spec.radius};
}

LinearMapMatrix LinearMapMatrix::from_function(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& f, std::size_t m, std::size_t s) {
    LinearMapMatrix map;
    map.m = m;
    map.s = s;
    map.images.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            ComplexMatrix img = f(ComplexMatrix::unit(m, i, j));
            if (img.rows() != s || img.cols() != s) throw Error("image has the wrong shape");
            map.images.push_back(std::move(img));
        }
    }
    return map;
}

LinearMapMatrix LinearMapMatrix::similarity(std::size_t m, Complex lambda, const ComplexMatrix& S,
                                            bool transpose) {
    if (S.rows() != m || S.cols() != m) throw Error("conjugating matrix has the wrong shape");
    const LuFactorization lu(S);
    return from_function(
        [&](const ComplexMatrix& x) {
            const ComplexMatrix y = transpose ? x.transpose() : x;
            return lambda * lu.solve(y * S);
        },
        m, m);
}

ComplexMatrix LinearMapMatrix::apply(const ComplexMatrix& x) const {
    if (x.rows() != m || x.cols() != m) throw Error("argument has the wrong shape");
    ComplexMatrix out(s, s);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const Complex c = x(i, j);
            if (c == 0.0) continue;
            out += c * image(i, j);
        }
    }
    return out;
}

double LinearMapMatrix::image_norm_max() const {
    double best = 0.0;
    for (const auto& img : images) best = std::max(best, img.frobenius_norm());
    return best;
}

HoloFunction LinearMapMatrix::as_holo(double radius) const {
    LinearMapMatrix copy = *this;
    return {[copy](const ComplexMatrix& x) { return copy.apply(x); }, m, s, radius};
}

}  // namespace holomat
