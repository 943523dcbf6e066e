#include "holomat/cli.hpp"

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>

#include "holomat/classify.hpp"
#include "holomat/gallery.hpp"
#include "holomat/linearization.hpp"
#include "holomat/serialization.hpp"

namespace holomat {

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
    std::string command;
    std::string input;
    std::string out_path;
    std::uint64_t seed = 0;
    int n_max = 8;
    int nodes = 0;  // 0 -> 2 * n_max + 2
    std::size_t trials = 200;
    double tol_construct = 1e-12;
    double tol_verify = 1e-9;
    double tol_decide = 1e-6;
    std::size_t k = 2;
    bool list_gallery = false;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--seed", cfg.seed, "Random seed for all sampled checks");
    cmd->add_option("--nmax", cfg.n_max, "Highest component degree to consider")
        ->check(CLI::Range(1, 16));
    cmd->add_option("--nodes", cfg.nodes, "Quadrature nodes per extraction (default 2*nmax+2)")
        ->check(CLI::Range(1, 65536));
    cmd->add_option("--trials", cfg.trials, "Sample count per property check")
        ->check(CLI::Range(static_cast<std::size_t>(1), static_cast<std::size_t>(1000000)));
    cmd->add_option("--tol-construct", cfg.tol_construct, "Tolerance for exact constructions");
    cmd->add_option("--tol-verify", cfg.tol_verify, "Tolerance for verification residuals");
    cmd->add_option("--tol-decide", cfg.tol_decide, "Tolerance for classification decisions");
    cmd->add_option("--out", cfg.out_path, "Write the report to this path instead of stdout");
    cmd->add_option("--k", cfg.k, "Size parameter for the sized gallery entries")
        ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(16)));
}

void write_config(JsonWriter& w, const RunConfig& cfg) {
    w.key("config");
    w.begin_object();
    w.key("input");
    w.value(cfg.input);
    w.key("seed");
    w.value(static_cast<std::uint64_t>(cfg.seed));
    w.key("nmax");
    w.value(cfg.n_max);
    w.key("nodes");
    w.value(cfg.nodes);
    w.key("trials");
    w.value(static_cast<std::uint64_t>(cfg.trials));
    w.key("tol_construct");
    w.value(cfg.tol_construct);
    w.key("tol_verify");
    w.value(cfg.tol_verify);
    w.key("tol_decide");
    w.value(cfg.tol_decide);
    w.key("k");
    w.value(static_cast<std::uint64_t>(cfg.k));
    w.end_object();
}

void write_verdict(JsonWriter& w, const Verdict& v) {
    w.begin_object();
    w.key("passed");
    w.value(v.passed);
    w.key("trials");
    w.value(static_cast<std::uint64_t>(v.trials));
    w.key("max_residual");
    w.value(v.max_residual);
    w.key("tolerance");
    w.value(v.tolerance);
    w.key("witness");
    if (v.witness) {
        w.begin_object();
        w.key("a");
        write_matrix_fields(w, v.witness->a);
        w.key("b");
        write_matrix_fields(w, v.witness->b);
        w.key("residual");
        w.value(v.witness->residual);
        w.end_object();
    } else {
        w.null();
    }
    w.end_object();
}

void write_lambdas(JsonWriter& w, const std::vector<Complex>& lambdas) {
    w.begin_array();
    for (const Complex& lambda : lambdas) w.value(lambda);
    w.end_array();
}

void write_degrees(JsonWriter& w, const std::vector<int>& degrees) {
    w.begin_array();
    for (const int d : degrees) w.value(d);
    w.end_array();
}

// Resolves a gallery name or a function file into an evaluable function.
struct ResolvedInput {
    HoloFunction holo;
    bool from_gallery = false;
};

ResolvedInput resolve_input(const RunConfig& cfg) {
    const auto& names = gallery_names();
    if (std::find(names.begin(), names.end(), cfg.input) != names.end())
        return {gallery_by_name(cfg.input, cfg.k).holo, true};
    const StandardFormSpec spec = load_standard_form(cfg.input);
    return {StandardFormEvaluator(spec).as_holo(), false};
}

std::string render_report(const RunConfig& cfg, const std::vector<std::string>& warnings,
                          const std::function<void(JsonWriter&)>& write_result) {
    JsonWriter w;
    w.begin_object();
    w.key("tool");
    w.value("holomat");
    w.key("version");
    w.value(kToolVersion);
    w.key("command");
    w.value(cfg.command);
    write_config(w, cfg);
    w.key("warnings");
    w.begin_array();
    for (const auto& warning : warnings) w.value(warning);
    w.end_array();
    w.key("result");
    write_result(w);
    w.end_object();
    return w.str() + "\n";
}

const char* holo_form_name(HoloForm form) {
    switch (form) {
        case HoloForm::ZeroTraceRange: return "zero-trace-range";
        case HoloForm::Standard: return "standard";
        case HoloForm::TransposeStandard: return "transpose-standard";
    }
    return "unknown";
}

struct AnalysisError {
    std::string type;
    std::string detail;
    std::vector<int> degrees;
};

int cmd_classify(const RunConfig& cfg, CliResult& result) {
    const ResolvedInput input = resolve_input(cfg);
    ClassifyParams params;
    params.seed = cfg.seed;
    params.n_max = cfg.n_max;
    params.nodes = cfg.nodes;
    params.trials = cfg.trials;
    params.tol_construct = cfg.tol_construct;
    params.tol_verify = cfg.tol_verify;
    params.tol_decide = cfg.tol_decide;

    std::vector<std::string> warnings;
    const int effective_nodes = cfg.nodes > 0 ? cfg.nodes : 2 * cfg.n_max + 2;
    if (effective_nodes < 2 * cfg.n_max)
        warnings.push_back("AliasingRisk: " + std::to_string(effective_nodes) +
                           " nodes resolve degrees only below " +
                           std::to_string(effective_nodes) + "; components up to degree " +
                           std::to_string(cfg.n_max) + " were requested");

    Classification classification;
    AnalysisError failure;
    bool failed = false;
    try {
        classification = classify_holomorphic(input.holo, params);
    } catch (const MixedForm& e) {
        failed = true;
        failure = {"MixedForm", e.what(), e.degrees};
    } catch (const HypothesisViolated& e) {
        failed = true;
        failure = {"HypothesisViolated", e.what(), {}};
    } catch (const HypothesisFailed& e) {
        failed = true;
        failure = {"HypothesisFailed", e.what(), {}};
    } catch (const DimensionMismatch& e) {
        failed = true;
        failure = {"DimensionMismatch", e.what(), {}};
    } catch (const ReconstructionFailed& e) {
        failed = true;
        failure = {"ReconstructionFailed", e.what(), {}};
    } catch (const NotAutomorphism& e) {
        failed = true;
        failure = {"NotAutomorphism", e.what(), {}};
    } catch (const SingularFrame& e) {
        failed = true;
        failure = {"SingularFrame", e.what(), {}};
    } catch (const Inconclusive& e) {
        failed = true;
        failure = {"Inconclusive", e.what(), {}};
    }

    result.report = render_report(cfg, warnings, [&](JsonWriter& w) {
        w.begin_object();
        if (failed) {
            w.key("outcome");
            w.value("error");
            w.key("error_type");
            w.value(failure.type);
            w.key("detail");
            w.value(failure.detail);
            if (!failure.degrees.empty()) {
                w.key("degrees");
                write_degrees(w, failure.degrees);
            }
        } else {
            w.key("outcome");
            w.value(holo_form_name(classification.form));
            w.key("anchor_degree");
            w.value(classification.anchor_degree);
            w.key("active_degrees");
            write_degrees(w, classification.active_degrees);
            w.key("lambdas");
            write_lambdas(w, classification.spec.lambdas);
            w.key("transpose");
            w.value(classification.spec.transpose);
            w.key("S");
            if (classification.form == HoloForm::ZeroTraceRange)
                w.null();
            else
                write_matrix_fields(w, classification.spec.S);
            w.key("reconstruction_residual");
            w.value(classification.reconstruction_residual);
            w.key("additivity");
            write_verdict(w, classification.additivity);
            w.key("multiplicativity");
            write_verdict(w, classification.multiplicativity);
            w.key("zero_product");
            if (classification.zero_product)
                write_verdict(w, *classification.zero_product);
            else
                w.null();
            w.key("range");
            if (classification.range) {
                const RangeDiagnostics& d = *classification.range;
                w.begin_object();
                w.key("trace_zero");
                w.value(d.trace_zero);
                w.key("nilpotent");
                w.value(d.nilpotent);
                w.key("trivial_products");
                w.value(d.trivial_products);
                w.key("max_trace_residual");
                w.value(d.max_trace_residual);
                w.key("max_nilpotency_residual");
                w.value(d.max_nilpotency_residual);
                w.key("max_product_residual");
                w.value(d.max_product_residual);
                w.end_object();
            } else {
                w.null();
            }
        }
        w.end_object();
    });
    return failed ? 2 : 0;
}

int cmd_test(const RunConfig& cfg, CliResult& result) {
    const ResolvedInput input = resolve_input(cfg);
    const RandomModel root(cfg.seed);

    const Verdict additivity = test_orthogonal_additivity(input.holo, root.fork(1), cfg.trials,
                                                          cfg.tol_verify);
    const Verdict multiplicativity =
        test_orthogonal_multiplicativity(input.holo, root.fork(2), cfg.trials, cfg.tol_verify);
    const Verdict zero_product =
        test_zero_product_preservation(input.holo, root.fork(3), cfg.trials, cfg.tol_verify);
    const Verdict cross = test_component_cross_orthogonality(
        input.holo, cfg.n_max, root.fork(4), cfg.trials, cfg.tol_verify, cfg.nodes);

    const bool all_passed =
        additivity.passed && multiplicativity.passed && zero_product.passed && cross.passed;

    result.report = render_report(cfg, {}, [&](JsonWriter& w) {
        w.begin_object();
        w.key("verdicts");
        w.begin_object();
        w.key("orthogonal_additivity");
        write_verdict(w, additivity);
        w.key("orthogonal_multiplicativity");
        write_verdict(w, multiplicativity);
        w.key("zero_product_preservation");
        write_verdict(w, zero_product);
        w.key("component_cross_orthogonality");
        write_verdict(w, cross);
        w.end_object();
        w.key("all_passed");
        w.value(all_passed);
        w.end_object();
    });
    return all_passed ? 0 : 2;
}

int cmd_extract(const RunConfig& cfg, CliResult& result) {
    const ResolvedInput input = resolve_input(cfg);
    const int effective_nodes = cfg.nodes > 0 ? cfg.nodes : 2 * cfg.n_max + 2;
    const ComponentSet comps(input.holo, cfg.n_max, cfg.nodes);
    const DegreeEstimate est =
        estimate_degree_cutoff(input.holo, cfg.n_max, cfg.tol_verify, cfg.nodes);

    std::vector<std::string> warnings;
    for (const int n : est.active) {
        if (effective_nodes < 2 * n)
            warnings.push_back("AliasingRisk: degree " + std::to_string(n) + " extracted with " +
                               std::to_string(effective_nodes) +
                               " nodes; estimates above the node count fold back");
    }

    const RandomModel root(cfg.seed);
    struct ComponentReport {
        int degree;
        bool aliasing;
        LinearMapMatrix map;
        bool has_map = false;
        std::string error;
    };
    std::vector<ComponentReport> reports;
    for (const int n : est.active) {
        ComponentReport rep;
        rep.degree = n;
        rep.aliasing = effective_nodes < 2 * n;
        RandomModel model = root.fork(10 + static_cast<std::uint64_t>(n));
        try {
            rep.map = linearize(comps.component(n), model, cfg.tol_verify);
            rep.has_map = true;
        } catch (const LinearizationMismatch& e) {
            rep.error = e.what();
        }
        reports.push_back(std::move(rep));
    }

    result.report = render_report(cfg, warnings, [&](JsonWriter& w) {
        w.begin_object();
        w.key("nodes");
        w.value(effective_nodes);
        w.key("degree_norms");
        w.begin_array();
        for (const double nrm : est.norms) w.value(nrm);
        w.end_array();
        w.key("active_degrees");
        write_degrees(w, est.active);
        w.key("cutoff");
        w.value(est.cutoff);
        w.key("components");
        w.begin_array();
        for (const auto& rep : reports) {
            w.begin_object();
            w.key("degree");
            w.value(rep.degree);
            w.key("norm_estimate");
            w.value(est.norms[static_cast<std::size_t>(rep.degree)]);
            w.key("aliasing_risk");
            w.value(rep.aliasing);
            w.key("linearization");
            if (rep.has_map) {
                w.begin_object();
                w.key("m");
                w.value(static_cast<std::uint64_t>(rep.map.m));
                w.key("s");
                w.value(static_cast<std::uint64_t>(rep.map.s));
                w.key("images");
                w.begin_array();
                for (const auto& img : rep.map.images) write_matrix_fields(w, img);
                w.end_array();
                w.end_object();
            } else {
                w.null();
            }
            if (!rep.error.empty()) {
                w.key("linearization_error");
                w.value(rep.error);
            }
            w.end_object();
        }
        w.end_array();
        w.end_object();
    });
    return 0;
}

int cmd_gallery(const RunConfig& cfg, CliResult& result) {
    if (cfg.list_gallery) {
        std::string listing;
        for (const auto& name : gallery_names()) listing += name + "\n";
        result.report = listing;
        return 0;
    }

    std::vector<GalleryEntry> entries;
    if (cfg.input.empty()) {
        for (const auto& name : gallery_names()) entries.push_back(gallery_by_name(name, cfg.k));
    } else {
        entries.push_back(gallery_by_name(cfg.input, cfg.k));
    }

    bool all_passed = true;
    std::vector<std::vector<GalleryAssertion>> assertions;
    for (const auto& entry : entries) {
        assertions.push_back(run_gallery_assertions(entry, cfg.seed));
        for (const auto& a : assertions.back()) all_passed = all_passed && a.passed;
    }

    result.report = render_report(cfg, {}, [&](JsonWriter& w) {
        w.begin_object();
        w.key("entries");
        w.begin_array();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            w.begin_object();
            w.key("name");
            w.value(entries[i].name);
            w.key("description");
            w.value(entries[i].description);
            w.key("k");
            w.value(static_cast<std::uint64_t>(entries[i].k));
            w.key("assertions");
            w.begin_array();
            bool entry_passed = true;
            for (const auto& a : assertions[i]) {
                w.begin_object();
                w.key("name");
                w.value(a.name);
                w.key("passed");
                w.value(a.passed);
                w.key("residual");
                w.value(a.residual);
                w.key("detail");
                w.value(a.detail);
                w.end_object();
                entry_passed = entry_passed && a.passed;
            }
            w.end_array();
            w.key("all_passed");
            w.value(entry_passed);
            w.end_object();
        }
        w.end_array();
        w.key("all_passed");
        w.value(all_passed);
        w.end_object();
    });
    return all_passed ? 0 : 2;
}

}  // namespace

CliResult run_cli_capture(const std::vector<std::string>& args) {
    CliResult result;
    RunConfig cfg;

    CLI::App app{"Extraction, testing and classification of holomorphic matrix functions"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    CLI::App* classify = app.add_subcommand(
        "classify", "Decide the structural form of a function and recover its data");
    classify->add_option("input", cfg.input, "Gallery name or function file")->required();
    add_common_options(classify, cfg);

    CLI::App* test =
        app.add_subcommand("test", "Run the sampled orthogonality checks on a function");
    test->add_option("input", cfg.input, "Gallery name or function file")->required();
    add_common_options(test, cfg);

    CLI::App* extract = app.add_subcommand(
        "extract", "Extract homogeneous components and their linearizations");
    extract->add_option("input", cfg.input, "Gallery name or function file")->required();
    add_common_options(extract, cfg);

    CLI::App* gallery =
        app.add_subcommand("gallery", "Run the executable claims of the example gallery");
    gallery->add_option("input", cfg.input, "Entry name (default: all entries)");
    gallery->add_flag("--list", cfg.list_gallery, "List entry names and exit");
    add_common_options(gallery, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.report = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::CallForVersion&) {
        result.report = std::string(kToolVersion) + "\n";
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.error = std::string(e.what()) + "\n";
        result.exit_code = 1;
        return result;
    }

    if (classify->parsed()) cfg.command = "classify";
    if (test->parsed()) cfg.command = "test";
    if (extract->parsed()) cfg.command = "extract";
    if (gallery->parsed()) cfg.command = "gallery";

    try {
        int code = 0;
        if (classify->parsed()) code = cmd_classify(cfg, result);
        if (test->parsed()) code = cmd_test(cfg, result);
        if (extract->parsed()) code = cmd_extract(cfg, result);
        if (gallery->parsed()) code = cmd_gallery(cfg, result);
        result.exit_code = code;
    } catch (const ParseError& e) {
        result.error = "parse error in field '" + e.field + "' at byte " +
                       std::to_string(e.byte_offset) + ": " + e.what() + "\n";
        result.exit_code = 1;
        return result;
    } catch (const Error& e) {
        result.error = std::string(e.what()) + "\n";
        result.exit_code = 1;
        return result;
    }

    if (!cfg.out_path.empty() && !result.report.empty()) {
        write_text_file(cfg.out_path, result.report);
        result.report.clear();
    }
    return result;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const CliResult result = run_cli_capture(args);
    if (!result.report.empty()) std::cout << result.report;
    if (!result.error.empty()) std::cerr << result.error;
    return result.exit_code;
}

}  // namespace holomat
