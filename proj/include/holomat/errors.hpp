#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace holomat {

// Base class for every error raised by the library. Callers that only need
// coarse handling can catch this; the CLI maps subtypes to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input matrix failed the Hermitian gate of the eigensolver.
class NotHermitian : public Error {
public:
    NotHermitian(double deviation, double scale)
        : Error("matrix is not Hermitian: deviation " + std::to_string(deviation) +
                " exceeds tolerance at scale " + std::to_string(scale)),
          deviation(deviation), scale(scale) {}
    double deviation;
    double scale;
};

// Jacobi sweeps exhausted without meeting the off-diagonal threshold.
class NoConvergence : public Error {
public:
    explicit NoConvergence(int sweeps)
        : Error("eigensolver did not converge within " + std::to_string(sweeps) + " sweeps"),
          sweeps(sweeps) {}
    int sweeps;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular to working precision") {}
};

// Evaluation point lies outside the disc where the function is defined.
class OutOfDomain : public Error {
public:
    OutOfDomain(double norm, double radius)
        : Error("point with spectral norm " + std::to_string(norm) +
                " is outside the domain of radius " + std::to_string(radius)),
          norm(norm), radius(radius) {}
    double norm;
    double radius;
};

class DegreeZero : public Error {
public:
    DegreeZero() : Error("degree-zero components cannot be polarized") {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class ReconstructionFailed : public Error {
public:
    explicit ReconstructionFailed(const std::string& what) : Error(what) {}
};

// Unit images do not satisfy the multiplication table of matrix units.
class NotAutomorphism : public Error {
public:
    NotAutomorphism(std::size_t i, std::size_t j, std::size_t k, std::size_t l, double residual)
        : Error("unit images violate E(" + std::to_string(i) + "," + std::to_string(j) +
                ")*E(" + std::to_string(k) + "," + std::to_string(l) +
                ") relation with residual " + std::to_string(residual)),
          i(i), j(j), k(k), l(l), residual(residual) {}
    std::size_t i, j, k, l;
    double residual;
};

class SingularFrame : public Error {
public:
    explicit SingularFrame(double cond)
        : Error("recovered column frame is ill conditioned: " + std::to_string(cond)),
          cond(cond) {}
    double cond;
};

// Neither product order of the probe pair distinguishes the map.
class Inconclusive : public Error {
public:
    explicit Inconclusive(const std::string& what) : Error(what) {}
};

class HypothesisFailed : public Error {
public:
    explicit HypothesisFailed(const std::string& what) : Error(what) {}
};

// Components exist that are neither zero nor of the common similarity form.
class MixedForm : public Error {
public:
    explicit MixedForm(std::vector<int> degrees)
        : Error(describe(degrees)), degrees(std::move(degrees)) {}
    std::vector<int> degrees;

private:
    static std::string describe(const std::vector<int>& ds) {
        std::string s = "components of degrees [";
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(ds[i]);
        }
        return s + "] do not match the classified form";
    }
};

class ParseError : public Error {
public:
    ParseError(std::string field_in, std::size_t byte_offset, const std::string& what)
        : Error(what), field(std::move(field_in)), byte_offset(byte_offset) {}
    std::string field;
    std::size_t byte_offset;
};

}  // namespace holomat
