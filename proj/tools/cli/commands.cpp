#include "cli/commands.hpp"

#include "circhad/correlation.hpp"
#include "circhad/errors.hpp"
#include "circhad/hadsearch.hpp"
#include "circhad/schur.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace circhad::cli {

namespace {

using nlohmann::ordered_json;

struct OutputMode {
    std::string format = "text";
    std::string destination;  // empty = standard output

    bool json() const { return format == "json"; }
};

// Writes to the requested destination; falls back to `out`.
class Sink {
public:
    Sink(const OutputMode& mode, std::ostream& out) : out_(&out) {
        if (!mode.destination.empty()) {
            file_.open(mode.destination, std::ios::trunc);
            if (!file_) {
                throw InvalidArgument("cannot open output file " + mode.destination);
            }
            out_ = &file_;
        }
    }

    // Whole-record writes keep concurrent output line-atomic.
    void line(const std::string& text) { *out_ << text + "\n" << std::flush; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

void add_output_options(CLI::App& cmd, OutputMode& mode) {
    cmd.add_option("--format", mode.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd.add_option("-o,--output", mode.destination, "Write output to a file instead of standard output");
}

std::string join_weights(const std::vector<std::size_t>& weights) {
    std::string s = "[";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        s += (i ? "," : "") + std::to_string(weights[i]);
    }
    return s + "]";
}

unsigned default_jobs() {
    if (const char* env = std::getenv("CIRCHAD_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

Chunk parse_chunk(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        throw InvalidArgument("chunk must be written i/N, got '" + text + "'");
    }
    try {
        std::size_t used = 0;
        Chunk c;
        const std::string index = text.substr(0, slash);
        const std::string total = text.substr(slash + 1);
        c.index = std::stoull(index, &used);
        if (used != index.size()) {
            throw InvalidArgument("bad chunk index");
        }
        c.total = std::stoull(total, &used);
        if (used != total.size()) {
            throw InvalidArgument("bad chunk total");
        }
        return c;
    } catch (const std::logic_error&) {
        throw InvalidArgument("chunk must be written i/N, got '" + text + "'");
    }
}

// A +/- string with a leading '-' would be read as a short option; hand it to
// the parser in hex form instead. "--" stays the positional marker.
std::string shield_sequence(const std::string& arg) {
    if (arg.size() < 2 || arg[0] != '-' || arg == "--" ||
        arg.find_first_not_of("+-") != std::string::npos) {
        return arg;
    }
    return format_hex(parse(arg));
}

// ---------------------------------------------------------------------------

struct LambdaArgs {
    std::size_t n = 0;
    std::optional<std::size_t> i, j, k;
    std::vector<std::size_t> weights;
    OutputMode mode;
};

int cmd_lambda(const LambdaArgs& a, std::ostream& out) {
    const bool by_index = a.i || a.j || a.k;
    const bool by_weight = !a.weights.empty();
    if (by_index == by_weight) {
        throw InvalidArgument("give either -i/-j/-k or --weights a b c");
    }
    if (by_index && !(a.i && a.j && a.k)) {
        throw InvalidArgument("-i, -j and -k are all required");
    }
    const BigInt value = by_index ? structure_constant(a.n, *a.i, *a.j, *a.k)
                                  : structure_constant_by_weights(a.n, a.weights[0], a.weights[1], a.weights[2]);
    Sink sink(a.mode, out);
    if (a.mode.json()) {
        ordered_json j;
        j["n"] = a.n;
        if (by_index) {
            j["i"] = *a.i;
            j["j"] = *a.j;
            j["k"] = *a.k;
        } else {
            j["weights"] = a.weights;
        }
        j["lambda"] = value.str();
        sink.line(j.dump());
    } else {
        sink.line(value.str());
    }
    return kSuccess;
}

struct ProductArgs {
    std::size_t n = 0, a = 0, b = 0;
    OutputMode mode;
};

int cmd_product(const ProductArgs& a, std::ostream& out) {
    const ProductSupport s = product_support(a.n, a.a, a.b);
    Sink sink(a.mode, out);
    if (a.mode.json()) {
        sink.line(ordered_json(s.weights).dump());
    } else {
        sink.line(join_weights(s.weights));
    }
    return kSuccess;
}

struct AutocorrArgs {
    std::string sequence;
    bool hex = false;
    OutputMode mode;
};

int cmd_autocorr(const AutocorrArgs& a, std::ostream& out) {
    const BitSequence x = a.hex ? parse_hex(a.sequence) : parse_any(a.sequence);
    const AutocorrelationVector v = autocorrelation_vector(x);
    const PlaneCheck plane = theta_plane_check(x);
    if (!plane.holds()) {
        throw InvariantViolation("plane identity failed for " + format(x));
    }
    Sink sink(a.mode, out);
    if (a.mode.json()) {
        ordered_json j;
        j["sequence"] = format(x);
        j["n"] = x.size();
        j["weight"] = weight(x);
        j["autocorrelation"] = v.values;
        j["sum"] = plane.lhs;
        j["plane"] = plane.rhs;
        sink.line(j.dump());
    } else {
        std::ostringstream os;
        for (std::size_t k = 0; k < v.values.size(); ++k) {
            os << (k ? " " : "") << v.values[k];
        }
        os << " | sum=" << plane.lhs << " (2a−n)²=" << plane.rhs;
        sink.line(os.str());
    }
    return kSuccess;
}

struct SearchArgs {
    std::size_t m = 1;
    std::string sign = "both";
    std::string chunk = "0/1";
    std::string resume;
    std::optional<std::uint64_t> stop_after;
    unsigned jobs = 1;
    bool no_turyn = false;
    bool no_split_filter = false;
    bool plain_shift_order = false;
    bool negation_symmetry = false;
    OutputMode mode{"json", ""};
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err, const std::atomic<bool>* cancel) {
    SearchConfig config;
    config.m = a.m;
    config.sign = parse_sign(a.sign);
    config.chunk = parse_chunk(a.chunk);
    config.allow_even_m = a.no_turyn;
    config.filters.restrict_splits = !a.no_split_filter;
    config.filters.half_shift_first = !a.plain_shift_order;
    config.use_negation_symmetry = a.negation_symmetry;
    config.stop_after = a.stop_after;
    config.cancel = cancel;
    config.jobs = a.jobs;
    if (!a.resume.empty()) {
        config.resume_from = read_checkpoint(a.resume).value_or(0);
    }
    validate(config);
    if (a.no_turyn && a.m % 2 == 0) {
        err << "warning: even m is outside the odd-m setting the weight filters were derived for\n";
    }

    const SearchReport report = search(config);
    Sink sink(a.mode, out);
    for (const auto& f : report.found) {
        sink.line(a.mode.json() ? to_json_record(f, report) : to_text_record(f));
    }
    if (a.mode.json()) {
        sink.line(to_json_summary(report));
    } else {
        sink.line("tested=" + std::to_string(report.candidates_tested) + " orbits=" +
                  std::to_string(report.found.size()) + " units=" + std::to_string(report.units_done) + "/" +
                  std::to_string(report.units_total) + (report.completed ? " completed" : " interrupted"));
    }
    err << "elapsed " << report.elapsed_seconds << " s\n";

    if (!a.resume.empty()) {
        write_checkpoint(a.resume, report.units_done);
    }
    if (!report.completed) {
        if (a.resume.empty()) {
            err << "interrupted at unit " << report.units_done << "; no --resume path given, progress not saved\n";
        }
        return kInterrupted;
    }
    return kSuccess;
}

struct CountArgs {
    std::size_t m = 1;
    bool no_turyn = false;
    OutputMode mode;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
    const SearchSpaceSize s = search_space_size(a.m, a.no_turyn);
    Sink sink(a.mode, out);
    if (a.mode.json()) {
        ordered_json j;
        j["m"] = a.m;
        j["reduced"] = s.reduced.str();
        j["unreduced"] = s.unreduced.str();
        sink.line(j.dump());
    } else {
        sink.line("reduced=" + s.reduced.str() + " unreduced=" + s.unreduced.str());
    }
    return kSuccess;
}

int cmd_verify(const VerifyOptions& v, const OutputMode& mode, std::ostream& out) {
    const VerifyResult r = run_verify(v);
    Sink sink(mode, out);
    if (mode.json()) {
        ordered_json j;
        j["suite"] = v.suite;
        j["pass"] = r.pass;
        j["detail"] = r.lines;
        sink.line(j.dump());
    } else {
        for (const auto& l : r.lines) {
            sink.line(l);
        }
        sink.line(r.pass ? "PASS" : "FAIL");
    }
    return r.pass ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::atomic<bool>* cancel) {
    CLI::App app{"Schur-ring algebra of Z_2^n and circulant Hadamard search", "circhad"};
    app.require_subcommand(1);
    app.fallthrough();

    LambdaArgs lambda;
    auto* c_lambda = app.add_subcommand("lambda", "Structure constant of the weight-class Schur ring");
    c_lambda->add_option("-n", lambda.n, "Ambient length")->required();
    c_lambda->add_option("-i", lambda.i, "Basic-set index i (T_i = G_n(n-i))");
    c_lambda->add_option("-j", lambda.j, "Basic-set index j");
    c_lambda->add_option("-k", lambda.k, "Basic-set index k");
    c_lambda->add_option("--weights", lambda.weights, "Weights a b c instead of indices")->expected(3);
    add_output_options(*c_lambda, lambda.mode);

    ProductArgs product;
    auto* c_product = app.add_subcommand("product", "Weights reached by the product G_n(a) G_n(b)");
    c_product->add_option("-n", product.n, "Ambient length")->required();
    c_product->add_option("-a", product.a, "First weight")->required();
    c_product->add_option("-b", product.b, "Second weight")->required();
    add_output_options(*c_product, product.mode);

    AutocorrArgs autocorr;
    auto* c_autocorr = app.add_subcommand("autocorr", "Periodic autocorrelation vector and plane check");
    c_autocorr->add_option("sequence", autocorr.sequence, "Sequence over {+,-}, or n=<len>:<hex words>")->required();
    c_autocorr->add_flag("--hex", autocorr.hex, "Sequence is in hex form");
    add_output_options(*c_autocorr, autocorr.mode);

    SearchArgs search_args;
    search_args.jobs = default_jobs();
    auto* c_search = app.add_subcommand("search", "Reduced circulant Hadamard search at order 4m^2");
    c_search->add_option("-m", search_args.m, "Odd m; the order is 4m^2")->required();
    c_search->add_option("--sign", search_args.sign, "Admissible weight: minus (2m^2-m), plus (2m^2+m) or both");
    c_search->add_option("--chunk", search_args.chunk, "Chunk i/N of the first-half rank space");
    c_search->add_option("--resume", search_args.resume, "Checkpoint file to resume from and update");
    c_search->add_option("--stop-after", search_args.stop_after, "Stop after this many work units");
    c_search->add_option("--jobs", search_args.jobs, "Worker threads (default: $CIRCHAD_JOBS or 1)");
    c_search->add_flag("--no-turyn", search_args.no_turyn, "Allow even m (outside the odd-m setting)");
    c_search->add_flag("--no-split-filter", search_args.no_split_filter, "Search every half-weight split");
    c_search->add_flag("--plain-shift-order", search_args.plain_shift_order, "Do not test the half shift first");
    c_search->add_flag("--negation-symmetry", search_args.negation_symmetry,
                       "Search the minus weight only and add symbol-flipped orbits");
    add_output_options(*c_search, search_args.mode);

    CountArgs count;
    auto* c_count = app.add_subcommand("count", "Reduced and unreduced search-space sizes");
    c_count->add_option("-m", count.m, "Odd m")->required();
    c_count->add_flag("--no-turyn", count.no_turyn, "Allow even m");
    add_output_options(*c_count, count.mode);

    VerifyOptions verify;
    OutputMode verify_mode;
    auto* c_verify = app.add_subcommand("verify", "Cross-check formulas against brute-force oracles");
    c_verify->add_option("suite", verify.suite, "Suite name")->required()->check(CLI::IsMember(verify_suites()));
    c_verify->add_option("--max-n", verify.max_n, "Largest length to sweep");
    c_verify->add_option("-n", verify.n, "Length for single-length suites");
    c_verify->add_option("-m", verify.m, "m for search-based suites");
    c_verify->add_option("--max-t", verify.max_t, "Largest t = n/4 for the maximal S-set suite");
    c_verify->add_option("--samples", verify.samples, "Random samples for sampled checks");
    c_verify->add_option("--seed", verify.seed, "Seed for sampled checks");
    add_output_options(*c_verify, verify_mode);

    try {
        std::vector<std::string> reversed;
        for (auto it = args.rbegin(); it != args.rend(); ++it) {
            reversed.push_back(shield_sequence(*it));
        }
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (c_lambda->parsed()) {
            return cmd_lambda(lambda, out);
        }
        if (c_product->parsed()) {
            return cmd_product(product, out);
        }
        if (c_autocorr->parsed()) {
            return cmd_autocorr(autocorr, out);
        }
        if (c_search->parsed()) {
            return cmd_search(search_args, out, err, cancel);
        }
        if (c_count->parsed()) {
            return cmd_count(count, out);
        }
        if (c_verify->parsed()) {
            return cmd_verify(verify, verify_mode, out);
        }
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::logic_error& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return kInternalError;
    }
    return kUsageError;
}

}  // namespace circhad::cli
