// softframe command-line front end: validate frame specs, compute bounds and
// duals, reconstruct vectors, compose local frames, and run the property
// harness. Exit codes: 0 success, 1 mathematical failure, 2 input error.

#include "softframe/json_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace sf = softframe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
    double tol = 1e-10;
    int trials = 200;
    std::uint64_t seed = 42;
    std::string format = "text";
    std::string out;
};

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw sf::ParseError("cannot open '" + out_path + "' for writing");
    }
    out << text;
}

std::string render_soft_real(const sf::SoftReal& value) {
    std::string text;
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) text += ", ";
        text += value.params().label(i) + "=" + fmt(value.at(i));
    }
    return text;
}

sf::SoftReal condition_of(const sf::FrameBoundsCertificate& cert) {
    std::vector<double> values(cert.lower.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = cert.lower.at(i) > 0.0
                        ? cert.upper.at(i) / cert.lower.at(i)
                        : std::numeric_limits<double>::infinity();
    }
    return sf::SoftReal(cert.lower.params(), std::move(values));
}

std::string render_certificate(const sf::FrameBoundsCertificate& cert) {
    std::string text;
    text += "lower bound:  " + render_soft_real(cert.lower) + "\n";
    text += "upper bound:  " + render_soft_real(cert.upper) + "\n";
    text += "condition:    " + render_soft_real(condition_of(cert)) + "\n";
    text += std::string("frame:        ") + (cert.is_frame ? "yes" : "no") + "\n";
    text += std::string("tight:        ") + (cert.is_tight ? "yes" : "no") + "\n";
    return text;
}

std::string render_reports(const std::vector<sf::verify::PropertyReport>& reports) {
    std::string text;
    for (const auto& report : reports) {
        std::string status = report.skip_reason ? "SKIP" : (report.passed ? "PASS" : "FAIL");
        text += status + "  " + report.property_id;
        if (report.skip_reason) {
            text += "  (" + *report.skip_reason + ")";
        } else {
            text += "  worst " + fmt(report.worst_violation) + " vs tol " + fmt(report.tolerance);
            if (!report.passed && report.witness) text += "  at " + *report.witness;
        }
        text += "\n";
    }
    return text;
}

sf::Json reports_to_json(const std::vector<sf::verify::PropertyReport>& reports) {
    sf::Json out = sf::Json::array();
    for (const auto& report : reports) out.push_back(sf::to_json(report));
    return out;
}

bool all_passed(const std::vector<sf::verify::PropertyReport>& reports) {
    for (const auto& report : reports) {
        if (!report.passed) return false;
    }
    return true;
}

int cmd_check(const std::string& spec_path, const CommonOptions& options) {
    const auto doc = sf::load_frame_spec(spec_path);
    const auto cert = sf::frame_bounds(doc.frame, options.tol);

    sf::verify::SuiteOptions suite;
    suite.trials = options.trials;
    suite.seed = options.seed;
    suite.tol = options.tol;
    const auto reports = sf::verify::run_properties(doc.frame, suite);

    std::optional<std::vector<bool>> exact;
    if (cert.is_frame) exact = sf::is_exact(doc.frame, options.tol);

    const bool passed = cert.is_frame && all_passed(reports);

    if (options.format == "json") {
        sf::Json out{{"command", "check"},
                     {"certificate", sf::to_json(cert)},
                     {"condition", sf::to_json(condition_of(cert))},
                     {"properties", reports_to_json(reports)},
                     {"passed", passed}};
        if (exact) out["exact"] = *exact;
        emit(out.dump(2) + "\n", options.out);
    } else {
        std::string text = render_certificate(cert);
        if (exact) {
            text += "exact blocks: ";
            for (std::size_t j = 0; j < exact->size(); ++j) {
                if (j) text += ", ";
                text += (*exact)[j] ? "true" : "false";
            }
            text += "\n";
        }
        text += render_reports(reports);
        text += std::string("result:       ") + (passed ? "PASS" : "FAIL") + "\n";
        emit(text, options.out);
    }
    return passed ? kExitOk : kExitMathFailure;
}

int cmd_bounds(const std::string& spec_path, const CommonOptions& options) {
    const auto doc = sf::load_frame_spec(spec_path);
    const auto cert = sf::frame_bounds(doc.frame, options.tol);
    if (options.format == "json") {
        sf::Json out{{"command", "bounds"},
                     {"certificate", sf::to_json(cert)},
                     {"condition", sf::to_json(condition_of(cert))}};
        emit(out.dump(2) + "\n", options.out);
    } else {
        emit(render_certificate(cert), options.out);
    }
    return cert.is_frame ? kExitOk : kExitMathFailure;
}

int cmd_dual(const std::string& spec_path, const CommonOptions& options) {
    const auto doc = sf::load_frame_spec(spec_path);
    const auto pair = sf::canonical_dual(doc.frame, options.tol);
    const auto dual_cert = sf::frame_bounds(pair.dual, options.tol);

    sf::FrameSpecDocument dual_doc{pair.dual, std::nullopt, std::nullopt};
    if (doc.name) dual_doc.name = *doc.name + " (canonical dual)";
    sf::Json out = sf::frame_spec_to_json(dual_doc);
    out["certificate"] = sf::to_json(dual_cert);
    emit(out.dump(2) + "\n", options.out);
    return kExitOk;
}

int cmd_reconstruct(const std::string& spec_path, const std::string& vector_path,
                    const CommonOptions& options) {
    const auto doc = sf::load_frame_spec(spec_path);
    const auto vector_json = sf::load_json(vector_path);
    const auto f = sf::soft_vector_from_json(vector_json, doc.frame.params(), "");
    if (f.dim() != doc.frame.ambient_dim()) {
        throw sf::ShapeError("reconstruct: vector dimension does not match the frame");
    }

    const auto cert = sf::frame_bounds(doc.frame, options.tol);
    const auto pair = sf::canonical_dual(doc.frame, options.tol);
    const auto condition = condition_of(cert);
    const auto inside = sf::reconstruct(pair, f, sf::ReconstructionOrder::dual_inside);
    const auto outside = sf::reconstruct(pair, f, sf::ReconstructionOrder::dual_outside);

    const auto& params = doc.frame.params();
    std::vector<double> errors(params.size());
    bool passed = true;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double norm = f.at(i).norm();
        const double worst = std::max((inside.at(i) - f.at(i)).norm(),
                                      (outside.at(i) - f.at(i)).norm());
        errors[i] = norm == 0.0 ? worst : worst / norm;
        if (errors[i] > 1e-8 * condition.at(i)) passed = false;
    }
    const sf::SoftReal error_report(params, errors);

    if (options.format == "json") {
        sf::Json out{{"command", "reconstruct"},
                     {"max_relative_error", sf::to_json(error_report)},
                     {"condition", sf::to_json(condition)},
                     {"passed", passed}};
        emit(out.dump(2) + "\n", options.out);
    } else {
        std::string text = "max relative error: " + render_soft_real(error_report) + "\n";
        text += std::string("result:             ") + (passed ? "PASS" : "FAIL") + "\n";
        emit(text, options.out);
    }
    return passed ? kExitOk : kExitMathFailure;
}

int cmd_compose(const std::string& spec_path, const std::string& locals_path,
                const CommonOptions& options) {
    const auto doc = sf::load_frame_spec(spec_path);
    const auto locals_doc = sf::load_locals(locals_path, doc.frame.params());
    const auto locals = sf::LocalFrameFamily::from_vectors(locals_doc.families, options.tol);
    for (std::size_t j = 0; j < locals_doc.tight.size(); ++j) {
        if (locals_doc.tight[j] && !locals.family_tight(j)) {
            throw sf::PreconditionError("compose: family " + std::to_string(j) +
                                        " is declared tight but is not");
        }
    }

    const auto composed = sf::compose_frame(doc.frame, locals);
    const auto cert = sf::frame_bounds(sf::induced_from_vectors(composed), options.tol);

    sf::Json vectors = sf::Json::array();
    sf::Json order = sf::Json::array();
    std::size_t flat = 0;
    for (std::size_t j = 0; j < locals.family_count(); ++j) {
        for (std::size_t k = 0; k < locals.family(j).size(); ++k) {
            vectors.push_back(sf::to_json(composed[flat++]));
            order.push_back(sf::Json::array({j, k}));
        }
    }
    sf::Json out{{"parameters", doc.frame.params().labels()},
                 {"ambient_dim", doc.frame.ambient_dim()},
                 {"vectors", std::move(vectors)},
                 {"order", std::move(order)},
                 {"certificate", sf::to_json(cert)}};
    emit(out.dump(2) + "\n", options.out);
    return kExitOk;
}

int cmd_report(const std::string& spec_path, const CommonOptions& options) {
    const auto doc = sf::load_frame_spec(spec_path);
    sf::verify::SuiteOptions suite;
    suite.trials = options.trials;
    suite.seed = options.seed;
    suite.tol = options.tol;
    const auto reports = sf::verify::run_properties(doc.frame, suite);
    if (options.format == "json") {
        sf::Json out{{"command", "report"},
                     {"properties", reports_to_json(reports)},
                     {"passed", all_passed(reports)}};
        emit(out.dump(2) + "\n", options.out);
    } else {
        emit(render_reports(reports), options.out);
    }
    return all_passed(reports) ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"soft g-frame toolkit: bounds, duals, reconstruction, composition, verification"};
    app.require_subcommand(1);

    CommonOptions options;
    std::string spec_path;
    std::string vector_path;
    std::string locals_path;

    const auto add_common = [&](CLI::App* cmd, bool with_trials) {
        cmd->add_option("spec", spec_path, "frame spec JSON file")->required();
        cmd->add_option("--tol", options.tol, "frame predicate tolerance");
        cmd->add_option("--format", options.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("-o,--out", options.out, "write output to this file");
        if (with_trials) {
            cmd->add_option("--trials", options.trials, "random probes per property");
            cmd->add_option("--seed", options.seed, "random seed");
        }
    };

    auto* check = app.add_subcommand("check", "certificate, exactness and property suite");
    add_common(check, true);
    auto* bounds = app.add_subcommand("bounds", "optimal frame bounds certificate");
    add_common(bounds, false);
    auto* dual = app.add_subcommand("dual", "canonical dual frame with certificate");
    add_common(dual, false);
    auto* reconstruct = app.add_subcommand("reconstruct", "reconstruct a vector through the dual");
    add_common(reconstruct, false);
    reconstruct->add_option("vector", vector_path, "soft vector JSON file")->required();
    auto* compose = app.add_subcommand("compose", "compose with local frames");
    add_common(compose, false);
    compose->add_option("locals", locals_path, "local frame families JSON file")->required();
    auto* report = app.add_subcommand("report", "run the property suite");
    add_common(report, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(spec_path, options);
        if (bounds->parsed()) return cmd_bounds(spec_path, options);
        if (dual->parsed()) return cmd_dual(spec_path, options);
        if (reconstruct->parsed()) return cmd_reconstruct(spec_path, vector_path, options);
        if (compose->parsed()) return cmd_compose(spec_path, locals_path, options);
        if (report->parsed()) return cmd_report(spec_path, options);
    } catch (const sf::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const sf::MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitOk;
}
