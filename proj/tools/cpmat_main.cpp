// cpmat — command-line front end for the colored-pattern-matrix analyzer.
//
// Every subcommand reads one input file (or "-" for stdin), runs one exact
// analysis from the core library, and reports the outcome either as human-
// readable text (default) or as a deterministic JSON envelope (--json).
//
// Exit codes, uniform across subcommands:
//   0  the queried property is established (or, for utility commands such as
//      validate / bar / det / sample, the command succeeded)
//   1  unusable input, command-line error, or exhausted computation budget
//   2  the property could not be established (the test is one-sided and gave
//      a negative, or sampling found no counterexample)
//   3  the property is refuted by an exhibited counterexample / certificate

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cpmat/cpmat.hpp>

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Shared option state and input plumbing
// ---------------------------------------------------------------------------

struct CommonOpts {
    std::string path;
    bool json_output = false;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    std::uint64_t budget = 1'000'000;
    std::size_t max_size = 10;
    std::size_t max_set_size = 0;
    bool greedy = false;
};

struct InputFile {
    std::string path;    // as given on the command line
    std::string bytes;   // raw contents, digested verbatim
};

InputFile read_input(const std::string& path) {
    InputFile in;
    in.path = path;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        in.bytes = buffer.str();
        return in;
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw cpmat::ParseError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    in.bytes = buffer.str();
    return in;
}

cpmat::MatchingOptions matching_options(const CommonOpts& o) {
    cpmat::MatchingOptions m;
    m.max_matchings = o.budget;
    return m;
}

cpmat::ColorableOptions colorable_options(const CommonOpts& o) {
    cpmat::ColorableOptions c;
    c.work_budget = o.budget;
    c.max_set_size = o.max_set_size;
    c.greedy = o.greedy;
    c.matching = matching_options(o);
    return c;
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

/// Prints the deterministic JSON envelope: fixed key order (alphabetical),
/// no timestamps, rationals as strings, indices 1-based.
void print_envelope(const std::string& command, const InputFile& in, json options,
                    json result) {
    json envelope;
    envelope["tool"] = cpmat::kToolName;
    envelope["version"] = cpmat::kVersion;
    envelope["command"] = command;
    envelope["input"] = {{"path", in.path}, {"digest", cpmat::fnv1a64_hex(in.bytes)}};
    envelope["options"] = std::move(options);
    envelope["result"] = std::move(result);
    std::cout << envelope.dump(2) << '\n';
}

std::string join_1based(const cpmat::VertexSet& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i] + 1);
    }
    out += "}";
    return out;
}

std::string spectrum_text(const cpmat::Spectrum& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += s[i].token();
    }
    out += "}";
    return out;
}

void print_certificate_human(const cpmat::NonsingularityCertificate& cert) {
    std::cout << "verdict: " << (cert.verdict ? "nonsingular" : "singular") << '\n';
    for (const auto& cls : cert.classes)
        std::cout << "  class " << spectrum_text(cls.spectrum) << "  signature "
                  << cls.signature << "  matchings " << cls.member_count << '\n';
    if (cert.verdict) {
        std::cout << "witness class: " << spectrum_text(cert.classes[*cert.witness_class].spectrum)
                  << '\n';
        return;
    }
    switch (cert.violated_condition) {
        case 1:
            std::cout << "violated: no perfect matching exists\n";
            break;
        case 2:
            std::cout << "violated: " << cert.exhibit_classes.size()
                      << " classes carry nonzero signature (need exactly one)\n";
            break;
        case 3:
            std::cout << "violated: the surviving class "
                      << spectrum_text(cert.classes[*cert.witness_class].spectrum)
                      << " contains dashed colors\n";
            break;
        default:
            break;
    }
}

void print_trace_human(const cpmat::DerivationTrace& trace) {
    std::size_t step = 1;
    for (const auto& s : trace.steps)
        std::cout << "  step " << step++ << ": columns " << join_1based(s.x) << " -> rows "
                  << join_1based(s.y) << '\n';
}

void print_rational_matrix_human(const cpmat::RationalMatrix& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << indent;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) std::cout << ' ';
            std::cout << cpmat::rational_to_string(m.at(i, j));
        }
        std::cout << '\n';
    }
}

// ---------------------------------------------------------------------------
// Subcommand implementations.  Each returns the process exit code.
// ---------------------------------------------------------------------------

int run_validate(const CommonOpts& o) {
    InputFile in = read_input(o.path);
    cpmat::MatrixDocument doc = cpmat::read_document(in.bytes);
    std::vector<cpmat::Diagnostic> diagnostics = cpmat::validate_document(doc);
    if (o.json_output) {
        json result;
        result["valid"] = diagnostics.empty();
        result["diagnostics"] = json::array();
        for (const auto& d : diagnostics) result["diagnostics"].push_back(cpmat::to_json(d));
        print_envelope("validate", in, json::object(), result);
    } else if (diagnostics.empty()) {
        std::cout << "valid: " << doc.rows << "x" << doc.cols << " pattern";
        if (doc.state_dim) std::cout << " (state dimension " << *doc.state_dim << ")";
        std::cout << '\n';
    } else {
        for (const auto& d : diagnostics) {
            std::cout << d.code;
            if (d.row > 0) std::cout << " at row " << d.row << ", column " << d.col;
            std::cout << ": " << d.message;
            if (!d.suggestion.empty()) std::cout << " (" << d.suggestion << ")";
            std::cout << '\n';
        }
    }
    return diagnostics.empty() ? 0 : 1;
}

int run_bar(const CommonOpts& o) {
    InputFile in = read_input(o.path);
    cpmat::ColoredSystem sys = cpmat::ColoredSystem::parse(in.bytes);
    cpmat::BarredSystem barred = cpmat::build_barred(sys);
    if (o.json_output) {
        print_envelope("bar", in, json::object(), cpmat::to_json(barred));
        return 0;
    }
    std::cout << barred.system.matrix.to_text(barred.system.state_dim);
    for (const auto& [from, to] : barred.renumbering)
        std::cout << "# kept   " << from.token() << " -> " << to.token() << '\n';
    for (const auto& color : barred.dropped) std::cout << "# dropped " << color.token() << '\n';
    for (const auto& [diag, color] : barred.fresh)
        std::cout << "# fresh  " << color.token() << " at diagonal position " << (diag + 1)
                  << '\n';
    return 0;
}

int run_det(const CommonOpts& o) {
    InputFile in = read_input(o.path);
    cpmat::ColoredPatternMatrix m = cpmat::ColoredPatternMatrix::parse(in.bytes);
    cpmat::DeterminantOptions det;
    det.max_size = o.max_size;
    det.matching = matching_options(o);
    cpmat::ColorPolynomial p = cpmat::symbolic_determinant(m, det);
    if (o.json_output) {
        json options;
        options["budget"] = o.budget;
        options["max_size"] = o.max_size;
        json result;
        result["determinant"] = cpmat::to_json(p);
        result["text"] = p.to_string();
        result["single_solid_monomial"] = cpmat::single_solid_monomial(p);
        print_envelope("det", in, options, result);
    } else {
        std::cout << p.to_string() << '\n';
    }
    return 0;
}

int run_nonsingular(const CommonOpts& o) {
    InputFile in = read_input(o.path);
    cpmat::ColoredPatternMatrix m = cpmat::ColoredPatternMatrix::parse(in.bytes);
    cpmat::NonsingularityCertificate cert = cpmat::is_nonsingular(m, matching_options(o));

    // On a negative verdict, also try to exhibit a concrete rational witness.
    // The verdict never depends on this search succeeding: some singular
    // patterns admit only irrational or complex singular realizations.
    std::optional<cpmat::SingularSearchResult> search;
    if (!cert.verdict && m.rows() <= o.max_size) {
        cpmat::SingularSearchOptions so;
        so.trials = o.trials;
        so.seed = o.seed;
        so.det.max_size = o.max_size;
        so.det.matching = matching_options(o);
        search = cpmat::find_singular_assignment(m, so);
    }

    if (o.json_output) {
        json options;
        options["budget"] = o.budget;
        options["seed"] = o.seed;
        options["trials"] = o.trials;
        json result;
        result["conclusion"] = cert.verdict ? "nonsingular" : "singular";
        result["certificate"] = cpmat::to_json(cert);
        if (search) result["singular_search"] = cpmat::to_json(*search);
        print_envelope("nonsingular", in, options, result);
    } else {
        print_certificate_human(cert);
        if (search && search->witness) {
            std::cout << "singular realization:\n";
            for (const auto& [color, value] : search->witness->values)
                std::cout << "  " << color.token() << " = " << cpmat::rational_to_string(value)
                          << '\n';
        }
    }
    return cert.verdict ? 0 : 3;
}

int run_colorable(const CommonOpts& o) {
    InputFile in = read_input(o.path);
    cpmat::ColoredPatternMatrix m = cpmat::ColoredPatternMatrix::parse(in.bytes);
    cpmat::ColorableResult result = cpmat::is_colorable(m, colorable_options(o));
    if (o.json_output) {
        json options;
        options["budget"] = o.budget;
        options["greedy"] = o.greedy;
        options["max_set_size"] = o.max_set_size;
        json r = cpmat::to_json(result);
        r["conclusion"] = result.colorable        ? "colorable"
                          : result.exhaustive     ? "not-colorable"
                                                  : "undetermined";
        print_envelope("colorable", in, options, r);
    } else if (result.colorable) {
        std::cout << "colorable (" << result.trace->steps.size() << " steps, " << result.work_used
                  << " candidates examined)\n";
        print_trace_human(*result.trace);
    } else if (result.exhaustive) {
        std::cout << "not colorable (exhaustive search, " << result.work_used
                  << " candidates examined)\n";
    } else {
        std::cout << "undetermined (greedy search failed; rerun without --greedy)\n";
    }
    return result.colorable ? 0 : 2;
}

int run_fullrank(const CommonOpts& o) {
    InputFile in = read_input(o.path);
    cpmat::ColoredPatternMatrix m = cpmat::ColoredPatternMatrix::parse(in.bytes);
    cpmat::ColorableResult colorable = cpmat::is_colorable(m, colorable_options(o));

    std::optional<cpmat::MatrixSamplingReport> sampling;
    if (!colorable.colorable) {
        cpmat::SamplePlan plan;
        plan.seed = o.seed;
        plan.trials = o.trials;
        sampling = cpmat::refute_fullrank_by_sampling(m, plan);
    }
    const bool refuted = sampling && sampling->counterexample.has_value();
    const std::string conclusion =
        colorable.colorable ? "established" : refuted ? "refuted" : "undetermined";

    if (o.json_output) {
        json options;
        options["budget"] = o.budget;
        options["greedy"] = o.greedy;
        options["seed"] = o.seed;
        options["trials"] = o.trials;
        json result;
        result["conclusion"] = conclusion;
        result["colorable"] = cpmat::to_json(colorable);
        if (sampling) result["sampling"] = cpmat::to_json(*sampling);
        print_envelope("fullrank", in, options, result);
    } else if (colorable.colorable) {
        std::cout << "full row rank for every admissible realization (colorable, "
                  << colorable.trace->steps.size() << " steps)\n";
        print_trace_human(*colorable.trace);
    } else if (refuted) {
        const auto& cx = *sampling->counterexample;
        std::cout << "refuted: trial " << (cx.trial + 1) << " has rank " << cx.rank << " < "
                  << m.rows() << '\n';
        print_rational_matrix_human(cx.matrix, "  ");
    } else {
        std::cout << "undetermined: not colorable, and " << sampling->trials_run
                  << " sampled realizations all have full row rank\n";
    }
    return colorable.colorable ? 0 : refuted ? 3 : 2;
}

int run_controllable(const CommonOpts& o) {
    InputFile in = read_input(o.path);
    cpmat::ColoredSystem sys = cpmat::ColoredSystem::parse(in.bytes);
    cpmat::VerificationOptions vo;
    vo.colorable = colorable_options(o);
    cpmat::ControllabilityVerdict verdict = cpmat::check_controllability(sys, vo);

    std::optional<cpmat::SystemSamplingReport> sampling;
    if (verdict.status != cpmat::ControllabilityStatus::SufficientControllable) {
        cpmat::SamplePlan plan;
        plan.seed = o.seed;
        plan.trials = o.trials;
        sampling = cpmat::refute_by_sampling(sys, plan);
        if (sampling->counterexample)
            verdict.status = cpmat::ControllabilityStatus::RefutedBySample;
    }
    const bool established =
        verdict.status == cpmat::ControllabilityStatus::SufficientControllable;
    const bool refuted = verdict.status == cpmat::ControllabilityStatus::RefutedBySample;

    if (o.json_output) {
        json options;
        options["budget"] = o.budget;
        options["greedy"] = o.greedy;
        options["seed"] = o.seed;
        options["trials"] = o.trials;
        json result;
        result["conclusion"] = established ? "established" : refuted ? "refuted" : "undetermined";
        result["verdict"] = cpmat::to_json(verdict);
        if (sampling) result["sampling"] = cpmat::to_json(*sampling);
        print_envelope("controllable", in, options, result);
    } else if (established) {
        std::cout << "controllable for every admissible realization\n";
        std::cout << "composite pattern derivation:\n";
        print_trace_human(*verdict.composite_side.trace);
        std::cout << "companion pattern derivation:\n";
        print_trace_human(*verdict.barred_side.trace);
    } else if (refuted) {
        const auto& cx = *sampling->counterexample;
        std::cout << "refuted: trial " << (cx.trial + 1)
                  << " is an admissible uncontrollable realization\n";
        std::cout << "  state matrix:\n";
        print_rational_matrix_human(cx.a, "    ");
        std::cout << "  input matrix:\n";
        print_rational_matrix_human(cx.b, "    ");
    } else {
        std::cout << "undetermined: the sufficient test failed (composite side "
                  << (verdict.composite_side.colorable ? "colorable" : "not colorable")
                  << ", companion side "
                  << (verdict.barred_side.colorable ? "colorable" : "not colorable") << ") and "
                  << sampling->trials_run << " sampled realizations are all controllable\n";
    }
    return established ? 0 : refuted ? 3 : 2;
}

int run_sample(const CommonOpts& o) {
    InputFile in = read_input(o.path);
    cpmat::ColoredPatternMatrix m = cpmat::ColoredPatternMatrix::parse(in.bytes);
    cpmat::SamplePlan plan;
    plan.seed = o.seed;
    plan.trials = o.trials;
    std::mt19937_64 rng(plan.seed);

    json samples = json::array();
    for (std::uint64_t trial = 0; trial < plan.trials; ++trial) {
        cpmat::ColorAssignment a = cpmat::sample_assignment(m.colors(), rng, plan);
        cpmat::RationalMatrix numeric = cpmat::instantiate(m, a);
        if (o.json_output) {
            json s;
            s["trial"] = trial + 1;
            s["assignment"] = cpmat::to_json(a);
            s["matrix"] = cpmat::to_json(numeric);
            samples.push_back(std::move(s));
        } else {
            std::cout << "trial " << (trial + 1) << ":";
            for (const auto& [color, value] : a.values)
                std::cout << ' ' << color.token() << '=' << cpmat::rational_to_string(value);
            std::cout << '\n';
            print_rational_matrix_human(numeric, "  ");
        }
    }
    if (o.json_output) {
        json options;
        options["seed"] = o.seed;
        options["trials"] = o.trials;
        json result;
        result["samples"] = std::move(samples);
        print_envelope("sample", in, options, result);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Command-line wiring
// ---------------------------------------------------------------------------

void add_input_option(CLI::App* sub, CommonOpts& o) {
    sub->add_option("input", o.path, "input file (text or JSON; \"-\" reads stdin)")
        ->required();
    auto* json_flag =
        sub->add_flag("--json", o.json_output, "emit a deterministic JSON report");
    sub->add_flag("--human,!--no-human", "human-readable output (the default)")
        ->excludes(json_flag);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact analyzer for colored pattern matrices: class-nonsingularity,\n"
        "colorability, full-row-rank and controllability tests with\n"
        "machine-checkable certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cpmat::kVersion));

    CommonOpts opts;
    int exit_code = 0;

    auto* validate = app.add_subcommand(
        "validate", "check a pattern file for format problems (exit 0 clean, 1 findings)");
    add_input_option(validate, opts);
    validate->callback([&] { exit_code = run_validate(opts); });

    auto* bar = app.add_subcommand(
        "bar", "build the diagonally-perturbed companion of a system's state pattern");
    add_input_option(bar, opts);
    bar->callback([&] { exit_code = run_bar(opts); });

    auto* det = app.add_subcommand(
        "det", "fully expanded symbolic determinant of a square pattern");
    add_input_option(det, opts);
    det->add_option("--budget", opts.budget, "matching enumeration budget")
        ->capture_default_str();
    det->add_option("--max-size", opts.max_size, "largest matrix size accepted")
        ->capture_default_str();
    det->callback([&] { exit_code = run_det(opts); });

    auto* nonsingular = app.add_subcommand(
        "nonsingular",
        "is a square pattern nonsingular for every admissible realization? (0 yes, 3 no)");
    add_input_option(nonsingular, opts);
    nonsingular->add_option("--budget", opts.budget, "matching enumeration budget")
        ->capture_default_str();
    nonsingular->add_option("--seed", opts.seed, "seed for the singular-witness search")
        ->capture_default_str();
    nonsingular
        ->add_option("--trials", opts.trials, "random substitutions in the witness search")
        ->capture_default_str();
    nonsingular->add_option("--max-size", opts.max_size, "size cap for the witness search")
        ->capture_default_str();
    nonsingular->callback([&] { exit_code = run_nonsingular(opts); });

    auto* colorable = app.add_subcommand(
        "colorable", "can repeated color-change steps blacken every row? (0 yes, 2 no)");
    add_input_option(colorable, opts);
    colorable->add_option("--budget", opts.budget, "candidate-examination budget")
        ->capture_default_str();
    colorable->add_option("--max-set-size", opts.max_set_size,
                          "cap on candidate set size (0 = unlimited)");
    colorable->add_flag("--greedy", opts.greedy,
                        "commit to the first applicable step (fast, incomplete negatives)");
    colorable->callback([&] { exit_code = run_colorable(opts); });

    auto* fullrank = app.add_subcommand(
        "fullrank",
        "does a wide pattern have full row rank for every admissible realization? "
        "(0 established, 2 undetermined, 3 refuted)");
    add_input_option(fullrank, opts);
    fullrank->add_option("--budget", opts.budget, "candidate-examination budget")
        ->capture_default_str();
    fullrank->add_flag("--greedy", opts.greedy, "greedy colorability search");
    fullrank->add_option("--seed", opts.seed, "sampling seed")->capture_default_str();
    fullrank->add_option("--trials", opts.trials, "sampled realizations when undetermined")
        ->capture_default_str();
    fullrank->callback([&] { exit_code = run_fullrank(opts); });

    auto* controllable = app.add_subcommand(
        "controllable",
        "is a system controllable for every admissible realization? "
        "(0 established, 2 undetermined, 3 refuted)");
    add_input_option(controllable, opts);
    controllable->add_option("--budget", opts.budget, "candidate-examination budget")
        ->capture_default_str();
    controllable->add_flag("--greedy", opts.greedy, "greedy colorability search");
    controllable->add_option("--seed", opts.seed, "sampling seed")->capture_default_str();
    controllable
        ->add_option("--trials", opts.trials, "sampled realizations when undetermined")
        ->capture_default_str();
    controllable->callback([&] { exit_code = run_controllable(opts); });

    auto* sample = app.add_subcommand(
        "sample", "draw deterministic admissible realizations of a pattern");
    add_input_option(sample, opts);
    sample->add_option("--seed", opts.seed, "sampling seed")->capture_default_str();
    sample->add_option("--trials", opts.trials, "number of realizations")->default_val(1);
    sample->callback([&] { exit_code = run_sample(opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // help/version exit 0; usage errors exit 1
    } catch (const cpmat::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const cpmat::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
