#include "holomat/polarization.hpp"

#include <cmath>

namespace holomat {

ComplexMatrix SymmetricForm::operator()(const std::vector<ComplexMatrix>& args) const {
    return evaluator(args);
}

SymmetricForm polarize(const HomogeneousComponent& p) {
    if (p.degree == 0) throw DegreeZero();
    const int n = p.degree;

    double factorial = 1.0;
    for (int i = 2; i <= n; ++i) factorial *= i;
    const double scale = 1.0 / (std::ldexp(factorial, n));

    SymmetricForm form;
    form.degree = n;
    form.m = p.m;
    form.s = p.s;
    auto eval = p.evaluator;
    const std::size_t s_dim = p.s;
    form.evaluator = [eval, n, scale, s_dim](const std::vector<ComplexMatrix>& args) {
        if (args.size() != static_cast<std::size_t>(n))
            throw Error("polarized form expects as many arguments as its degree");
        ComplexMatrix total(s_dim, s_dim);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            ComplexMatrix combo(args[0].rows(), args[0].cols());
            int parity = 1;
            for (int i = 0; i < n; ++i) {
                if (mask & (std::uint64_t{1} << i)) {
                    combo += args[i];
                } else {
                    combo -= args[i];
                    parity = -parity;
                }
            }
            const ComplexMatrix value = eval(combo);
            if (parity > 0)
                total += value;
            else
                total -= value;
        }
        total *= Complex(scale);
        return total;
    };
    return form;
}

}  // namespace holomat
