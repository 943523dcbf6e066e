#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holomat/classify.hpp"
#include "holomat/gallery.hpp"
#include "holomat/linearization.hpp"
#include "holomat/polarization.hpp"
#include "holomat/serialization.hpp"
#include "holomat/spectral.hpp"

namespace py = pybind11;
using namespace holomat;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix matrix_from_array(const ComplexArray& arr) {
    if (arr.ndim() != 2) throw Error("expected a two-dimensional array");
    ComplexMatrix m(static_cast<std::size_t>(arr.shape(0)), static_cast<std::size_t>(arr.shape(1)));
    const auto view = arr.unchecked<2>();
    for (py::ssize_t i = 0; i < arr.shape(0); ++i)
        for (py::ssize_t j = 0; j < arr.shape(1); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = view(i, j);
    return m;
}

py::array_t<Complex> matrix_to_array(const ComplexMatrix& m) {
    py::array_t<Complex> arr({m.rows(), m.cols()});
    auto view = arr.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
    return arr;
}

HoloFunction holo_from_callable(const py::function& f, std::size_t m, std::size_t s,
                                double radius) {
    return {[f](const ComplexMatrix& x) {
                py::gil_scoped_acquire gil;
                const py::object result = f(matrix_to_array(x));
                return matrix_from_array(result.cast<ComplexArray>());
            },
            m, s, radius};
}

py::object witness_to_python(const std::optional<Witness>& w) {
    if (!w) return py::none();
    return py::make_tuple(matrix_to_array(w->a), matrix_to_array(w->b), w->residual);
}

}  // namespace

PYBIND11_MODULE(_holomat, mod) {
    mod.doc() = "Extraction, orthogonality testing and classification of holomorphic "
                "functions between matrix algebras";

    const py::object error =
        py::register_exception<Error>(mod, "Error", PyExc_RuntimeError);
    py::register_exception<NotHermitian>(mod, "NotHermitian", error.ptr());
    py::register_exception<NoConvergence>(mod, "NoConvergence", error.ptr());
    py::register_exception<SingularMatrix>(mod, "SingularMatrix", error.ptr());
    py::register_exception<OutOfDomain>(mod, "OutOfDomain", error.ptr());
    py::register_exception<DegreeZero>(mod, "DegreeZero", error.ptr());
    py::register_exception<DimensionMismatch>(mod, "DimensionMismatch", error.ptr());
    py::register_exception<ReconstructionFailed>(mod, "ReconstructionFailed", error.ptr());
    py::register_exception<NotAutomorphism>(mod, "NotAutomorphism", error.ptr());
    py::register_exception<SingularFrame>(mod, "SingularFrame", error.ptr());
    py::register_exception<Inconclusive>(mod, "Inconclusive", error.ptr());
    py::register_exception<HypothesisFailed>(mod, "HypothesisFailed", error.ptr());
    py::register_exception<MixedForm>(mod, "MixedForm", error.ptr());
    py::register_exception<ParseError>(mod, "ParseError", error.ptr());
    py::register_exception<LinearizationMismatch>(mod, "LinearizationMismatch", error.ptr());
    py::register_exception<HypothesisViolated>(mod, "HypothesisViolated", error.ptr());

    py::class_<RandomModel>(mod, "RandomModel")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def_property_readonly("seed", &RandomModel::seed)
        .def_property_readonly("position", &RandomModel::position)
        .def("next_u64", &RandomModel::next_u64)
        .def("uniform", py::overload_cast<>(&RandomModel::uniform))
        .def("uniform", py::overload_cast<double, double>(&RandomModel::uniform), py::arg("lo"),
             py::arg("hi"))
        .def("gaussian", &RandomModel::gaussian)
        .def("complex_gaussian", &RandomModel::complex_gaussian)
        .def("index", &RandomModel::index, py::arg("n"))
        .def("fork", &RandomModel::fork, py::arg("stream"));

    py::class_<StandardFormSpec>(mod, "StandardFormSpec")
        .def(py::init([](const std::vector<Complex>& lambdas, const ComplexArray& s,
                         bool transpose, double radius) {
                 StandardFormSpec spec;
                 spec.lambdas = lambdas;
                 spec.S = matrix_from_array(s);
                 spec.transpose = transpose;
                 spec.radius = radius;
                 return spec;
             }),
             py::arg("lambdas"), py::arg("S"), py::arg("transpose") = false,
             py::arg("radius") = 1.0)
        .def_property_readonly("lambdas",
                               [](const StandardFormSpec& s) { return s.lambdas; })
        .def_property_readonly("S", [](const StandardFormSpec& s) { return matrix_to_array(s.S); })
        .def_readonly("transpose", &StandardFormSpec::transpose)
        .def_readonly("radius", &StandardFormSpec::radius)
        .def("to_json", [](const StandardFormSpec& s) { return standard_form_to_json(s); })
        .def_static("from_json",
                    [](const std::string& text) { return standard_form_from_json(text); },
                    py::arg("text"))
        .def("save", [](const StandardFormSpec& s, const std::string& path) {
            save_standard_form(path, s);
        }, py::arg("path"))
        .def_static("load", [](const std::string& path) { return load_standard_form(path); },
                    py::arg("path"))
        .def("as_holo",
             [](const StandardFormSpec& s) { return StandardFormEvaluator(s).as_holo(); });

    py::class_<HoloFunction>(mod, "HoloFunction")
        .def_static("from_callable", &holo_from_callable, py::arg("f"), py::arg("m"),
                    py::arg("s"), py::arg("radius") = 1.0)
        .def_readonly("m", &HoloFunction::m)
        .def_readonly("s", &HoloFunction::s)
        .def_readonly("radius", &HoloFunction::radius)
        .def("__call__", [](const HoloFunction& h, const ComplexArray& x) {
            return matrix_to_array(h(matrix_from_array(x)));
        }, py::arg("x"));

    py::class_<HomogeneousComponent>(mod, "HomogeneousComponent")
        .def_readonly("degree", &HomogeneousComponent::degree)
        .def_readonly("m", &HomogeneousComponent::m)
        .def_readonly("s", &HomogeneousComponent::s)
        .def_readonly("aliasing_risk", &HomogeneousComponent::aliasing_risk)
        .def("__call__", [](const HomogeneousComponent& p, const ComplexArray& x) {
            return matrix_to_array(p(matrix_from_array(x)));
        }, py::arg("x"));

    py::class_<LinearMapMatrix>(mod, "LinearMapMatrix")
        .def_static("from_images",
                    [](std::size_t m, std::size_t s, const std::vector<ComplexArray>& images) {
                        if (images.size() != m * m)
                            throw Error("expected m*m images in row-major unit order");
                        LinearMapMatrix map;
                        map.m = m;
                        map.s = s;
                        for (const auto& img : images) map.images.push_back(matrix_from_array(img));
                        return map;
                    },
                    py::arg("m"), py::arg("s"), py::arg("images"))
        .def_static("similarity",
                    [](std::size_t m, Complex lambda, const ComplexArray& s, bool transpose) {
                        return LinearMapMatrix::similarity(m, lambda, matrix_from_array(s),
                                                           transpose);
                    },
                    py::arg("m"), py::arg("lam"), py::arg("S"), py::arg("transpose") = false)
        .def_readonly("m", &LinearMapMatrix::m)
        .def_readonly("s", &LinearMapMatrix::s)
        .def_property_readonly("images",
                               [](const LinearMapMatrix& map) {
                                   std::vector<py::array_t<Complex>> out;
                                   for (const auto& img : map.images)
                                       out.push_back(matrix_to_array(img));
                                   return out;
                               })
        .def("image", [](const LinearMapMatrix& map, std::size_t i, std::size_t j) {
            return matrix_to_array(map.image(i, j));
        }, py::arg("i"), py::arg("j"))
        .def("apply", [](const LinearMapMatrix& map, const ComplexArray& x) {
            return matrix_to_array(map.apply(matrix_from_array(x)));
        }, py::arg("x"))
        .def("as_holo", &LinearMapMatrix::as_holo, py::arg("radius") = 4.0);

    py::class_<ComponentSet>(mod, "ComponentSet")
        .def(py::init<HoloFunction, int, int, double>(), py::arg("h"), py::arg("n_max"),
             py::arg("nodes") = 0, py::arg("rho") = 0.0)
        .def_property_readonly("n_max", &ComponentSet::n_max)
        .def_property_readonly("nodes", &ComponentSet::nodes)
        .def("component", &ComponentSet::component, py::arg("degree"))
        .def("eval_component", [](const ComponentSet& set, int degree, const ComplexArray& x) {
            return matrix_to_array(set.eval_component(degree, matrix_from_array(x)));
        }, py::arg("degree"), py::arg("x"))
        .def("eval_all", [](const ComponentSet& set, const ComplexArray& x) {
            std::vector<py::array_t<Complex>> out;
            for (const auto& comp : set.eval_all(matrix_from_array(x)))
                out.push_back(matrix_to_array(comp));
            return out;
        }, py::arg("x"));

    py::class_<Witness>(mod, "Witness")
        .def_property_readonly("a", [](const Witness& w) { return matrix_to_array(w.a); })
        .def_property_readonly("b", [](const Witness& w) { return matrix_to_array(w.b); })
        .def_readonly("residual", &Witness::residual);

    py::class_<Verdict>(mod, "Verdict")
        .def_readonly("passed", &Verdict::passed)
        .def_readonly("trials", &Verdict::trials)
        .def_readonly("max_residual", &Verdict::max_residual)
        .def_readonly("tolerance", &Verdict::tolerance)
        .def_property_readonly("witness",
                               [](const Verdict& v) { return witness_to_python(v.witness); });

    py::enum_<LinearMapForm>(mod, "LinearMapForm")
        .value("NilpotentRange", LinearMapForm::NilpotentRange)
        .value("Similarity", LinearMapForm::Similarity)
        .value("TransposeSimilarity", LinearMapForm::TransposeSimilarity);

    py::class_<LinearClassification>(mod, "LinearClassification")
        .def_readonly("form", &LinearClassification::form)
        .def_property_readonly("scale",
                               [](const LinearClassification& c) { return c.lambda; })
        .def_property_readonly("S",
                               [](const LinearClassification& c) {
                                   return c.S.empty() ? py::object(py::none())
                                                      : py::object(matrix_to_array(c.S));
                               })
        .def_readonly("residual", &LinearClassification::residual);

    py::enum_<HoloForm>(mod, "HoloForm")
        .value("ZeroTraceRange", HoloForm::ZeroTraceRange)
        .value("Standard", HoloForm::Standard)
        .value("TransposeStandard", HoloForm::TransposeStandard);

    py::class_<RangeDiagnostics>(mod, "RangeDiagnostics")
        .def_readonly("trace_zero", &RangeDiagnostics::trace_zero)
        .def_readonly("nilpotent", &RangeDiagnostics::nilpotent)
        .def_readonly("trivial_products", &RangeDiagnostics::trivial_products)
        .def_readonly("max_trace_residual", &RangeDiagnostics::max_trace_residual)
        .def_readonly("max_nilpotency_residual", &RangeDiagnostics::max_nilpotency_residual)
        .def_readonly("max_product_residual", &RangeDiagnostics::max_product_residual);

    py::class_<Classification>(mod, "Classification")
        .def_readonly("form", &Classification::form)
        .def_property_readonly("lambdas",
                               [](const Classification& c) { return c.spec.lambdas; })
        .def_property_readonly("S",
                               [](const Classification& c) {
                                   return c.spec.S.empty() ? py::object(py::none())
                                                           : py::object(matrix_to_array(c.spec.S));
                               })
        .def_property_readonly("transpose",
                               [](const Classification& c) { return c.spec.transpose; })
        .def_property_readonly("spec", [](const Classification& c) { return c.spec; })
        .def_readonly("anchor_degree", &Classification::anchor_degree)
        .def_readonly("active_degrees", &Classification::active_degrees)
        .def_readonly("reconstruction_residual", &Classification::reconstruction_residual)
        .def_readonly("additivity", &Classification::additivity)
        .def_readonly("multiplicativity", &Classification::multiplicativity)
        .def_property_readonly("zero_product",
                               [](const Classification& c) {
                                   return c.zero_product
                                              ? py::object(py::cast(*c.zero_product))
                                              : py::object(py::none());
                               })
        .def_property_readonly("range", [](const Classification& c) {
            return c.range ? py::object(py::cast(*c.range)) : py::object(py::none());
        });

    py::class_<GalleryEntry>(mod, "GalleryEntry")
        .def_readonly("name", &GalleryEntry::name)
        .def_readonly("description", &GalleryEntry::description)
        .def_readonly("map", &GalleryEntry::map)
        .def_readonly("holo", &GalleryEntry::holo)
        .def_readonly("k", &GalleryEntry::k);

    py::class_<GalleryAssertion>(mod, "GalleryAssertion")
        .def_readonly("name", &GalleryAssertion::name)
        .def_readonly("passed", &GalleryAssertion::passed)
        .def_readonly("residual", &GalleryAssertion::residual)
        .def_readonly("detail", &GalleryAssertion::detail);

    mod.def("hermitian_eigendecomposition",
            [](const ComplexArray& a, int max_sweeps) {
                const SpectralDecomposition dec =
                    hermitian_eigendecomposition(matrix_from_array(a), max_sweeps);
                return py::make_tuple(py::cast(dec.eigenvalues), matrix_to_array(dec.unitary));
            },
            py::arg("a"), py::arg("max_sweeps") = 100,
            "Eigenvalues (ascending) and unitary eigenvector matrix of a Hermitian matrix");
    mod.def("singular_values",
            [](const ComplexArray& a) { return singular_values(matrix_from_array(a)); },
            py::arg("a"));
    mod.def("spectral_norm",
            [](const ComplexArray& a) { return spectral_norm(matrix_from_array(a)); },
            py::arg("a"));
    mod.def("condition_number",
            [](const ComplexArray& a) { return condition_number(matrix_from_array(a)); },
            py::arg("a"));
    mod.def("is_nilpotent",
            [](const ComplexArray& x, double tol) {
                return is_nilpotent(matrix_from_array(x), tol);
            },
            py::arg("x"), py::arg("tol") = 1e-9);

    mod.def("random_unitary",
            [](RandomModel& model, std::size_t m) { return matrix_to_array(random_unitary(model, m)); },
            py::arg("model"), py::arg("m"));
    mod.def("random_hermitian",
            [](RandomModel& model, std::size_t m) {
                return matrix_to_array(random_hermitian(model, m));
            },
            py::arg("model"), py::arg("m"));
    mod.def("random_orthogonal_selfadjoint_pair",
            [](RandomModel& model, std::size_t m) {
                const auto [a, b] = random_orthogonal_selfadjoint_pair(model, m);
                return py::make_tuple(matrix_to_array(a), matrix_to_array(b));
            },
            py::arg("model"), py::arg("m"));
    mod.def("random_zero_product_pair",
            [](RandomModel& model, std::size_t m) {
                const auto [a, b] = random_zero_product_pair(model, m);
                return py::make_tuple(matrix_to_array(a), matrix_to_array(b));
            },
            py::arg("model"), py::arg("m"));
    mod.def("random_similarity",
            [](RandomModel& model, std::size_t m, double cond_cap) {
                return matrix_to_array(random_similarity(model, m, cond_cap));
            },
            py::arg("model"), py::arg("m"), py::arg("cond_cap") = 100.0);

    mod.def("extract_component", &extract_component, py::arg("h"), py::arg("degree"),
            py::arg("nodes") = 0, py::arg("rho") = 0.0);
    mod.def("estimate_degree_cutoff",
            [](const HoloFunction& h, int n_max, double tol, int nodes) {
                const DegreeEstimate est = estimate_degree_cutoff(h, n_max, tol, nodes);
                py::dict out;
                out["cutoff"] = est.cutoff;
                out["norms"] = est.norms;
                out["active"] = est.active;
                return out;
            },
            py::arg("h"), py::arg("n_max"), py::arg("tol") = 1e-9, py::arg("nodes") = 0);

    mod.def("polarize",
            [](const HomogeneousComponent& p) {
                const SymmetricForm form = polarize(p);
                return py::cpp_function([form](const std::vector<ComplexArray>& args) {
                    std::vector<ComplexMatrix> mats;
                    mats.reserve(args.size());
                    for (const auto& a : args) mats.push_back(matrix_from_array(a));
                    return matrix_to_array(form(mats));
                });
            },
            py::arg("p"),
            "Symmetric multilinear form of a homogeneous component; call with a list of "
            "matrices, one per degree");

    mod.def("linearize",
            [](const HomogeneousComponent& p, RandomModel& model, double tol) {
                return linearize(p, model, tol);
            },
            py::arg("p"), py::arg("model"), py::arg("tol") = 1e-9);

    mod.def("test_orthogonal_additivity", &test_orthogonal_additivity, py::arg("h"),
            py::arg("model"), py::arg("trials") = 200, py::arg("tol") = 1e-9);
    mod.def("test_orthogonal_multiplicativity", &test_orthogonal_multiplicativity, py::arg("h"),
            py::arg("model"), py::arg("trials") = 200, py::arg("tol") = 1e-9);
    mod.def("test_zero_product_preservation", &test_zero_product_preservation, py::arg("h"),
            py::arg("model"), py::arg("trials") = 200, py::arg("tol") = 1e-9);
    mod.def("test_component_cross_orthogonality", &test_component_cross_orthogonality,
            py::arg("h"), py::arg("n_max"), py::arg("model"), py::arg("trials") = 200,
            py::arg("tol") = 1e-9, py::arg("nodes") = 0);
    mod.def("transpose_witness",
            [](std::size_t m) {
                const auto [a, b] = transpose_witness(m);
                return py::make_tuple(matrix_to_array(a), matrix_to_array(b));
            },
            py::arg("m"));

    mod.def("test_jordan_relation", &test_jordan_relation, py::arg("theta"), py::arg("model"),
            py::arg("trials") = 200, py::arg("tol") = 1e-9);
    mod.def("detect_antihomomorphism", &detect_antihomomorphism, py::arg("phi"),
            py::arg("tol") = 1e-6);
    mod.def("recover_similarity",
            [](const LinearMapMatrix& phi, double tol) {
                return matrix_to_array(recover_similarity(phi, tol));
            },
            py::arg("phi"), py::arg("tol") = 1e-6);
    mod.def("classify_linear_map", &classify_linear_map, py::arg("theta"), py::arg("model"),
            py::arg("tol") = 1e-6);
    mod.def("classify_holomorphic",
            [](const HoloFunction& h, std::uint64_t seed, int n_max, int nodes,
               std::size_t trials, double tol_construct, double tol_verify, double tol_decide,
               bool skip_hypothesis_gate, int anchor_override) {
                ClassifyParams params;
                params.seed = seed;
                params.n_max = n_max;
                params.nodes = nodes;
                params.trials = trials;
                params.tol_construct = tol_construct;
                params.tol_verify = tol_verify;
                params.tol_decide = tol_decide;
                params.skip_hypothesis_gate = skip_hypothesis_gate;
                params.anchor_override = anchor_override;
                return classify_holomorphic(h, params);
            },
            py::arg("h"), py::arg("seed") = 0, py::arg("n_max") = 8, py::arg("nodes") = 0,
            py::arg("trials") = 200, py::arg("tol_construct") = 1e-12,
            py::arg("tol_verify") = 1e-9, py::arg("tol_decide") = 1e-6,
            py::arg("skip_hypothesis_gate") = false, py::arg("anchor_override") = 0);

    mod.def("gallery_names", [] { return gallery_names(); });
    mod.def("gallery_by_name", &gallery_by_name, py::arg("name"), py::arg("k") = 2);
    mod.def("run_gallery_assertions", &run_gallery_assertions, py::arg("entry"),
            py::arg("seed") = 0);

    mod.def("matrix_to_json",
            [](const ComplexArray& m) { return matrix_to_json(matrix_from_array(m)); },
            py::arg("m"));
    mod.def("matrix_from_json",
            [](const std::string& text) { return matrix_to_array(matrix_from_json(text)); },
            py::arg("text"));
    mod.def("save_matrix",
            [](const std::string& path, const ComplexArray& m) {
                save_matrix(path, matrix_from_array(m));
            },
            py::arg("path"), py::arg("m"));
    mod.def("load_matrix",
            [](const std::string& path) { return matrix_to_array(load_matrix(path)); },
            py::arg("path"));
}
