#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qlie/bialgebra_io.hpp"
#include "qlie/drinfeld_double.hpp"
#include "qlie/errors.hpp"
#include "qlie/quantize.hpp"
#include "qlie/report.hpp"
#include "qlie/version.hpp"

namespace {

struct Options {
    std::string command;
    std::string input_file;
    std::string builtin;
    int order = 4;
    int degree = -1; // -1: default to order + 2
    std::string format = "text";
    unsigned long seed = 0;
    std::string out_file;
    bool timing = false;
};

qlie::LieBialgebra resolve_source(const Options& opt) {
    if (!opt.builtin.empty()) return qlie::lookup_builtin(opt.builtin);
    std::ifstream in(opt.input_file);
    if (!in) throw qlie::ParseError("cannot open input file: " + opt.input_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return qlie::parse_bialgebra_text(buf.str());
}

// For the builtin doubles the defining half and the canonical pairing are
// known, so validate can also report pairing invariance and read the
// self-duality identity off the half.
std::optional<qlie::DoubleContext> double_context_for(const std::string& builtin) {
    if (builtin == "su2+t1")
        return qlie::DoubleContext{qlie::su2_t1_double_mixed(), qlie::su2_t1_half()};
    if (builtin.rfind("gl:", 0) == 0 && builtin.find(":half") == std::string::npos) {
        const int n = std::stoi(builtin.substr(3));
        return qlie::DoubleContext{qlie::gl_tn_double_mixed(n), qlie::gl_tn_half(n)};
    }
    return std::nullopt;
}

// Deterministic scramble for the primitivize demonstration: each generator
// picks up one degree-2 and one degree-3 tail term with a small nonzero
// integer coefficient.  Raw engine outputs (not distributions) keep the
// stream identical across platforms.
std::vector<qlie::UEAElement> scrambled_basis(const qlie::LieBialgebra& b, int zcap,
                                              unsigned long seed) {
    const int n = b.dim();
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    const std::vector<qlie::Monomial> deg2 = qlie::monomials_of_degree(n, 2);
    const std::vector<qlie::Monomial> deg3 = qlie::monomials_of_degree(n, 3);
    std::vector<qlie::UEAElement> basis;
    basis.reserve(static_cast<size_t>(n));
    for (int g = 0; g < n; ++g) {
        qlie::UEAElement e = qlie::UEAElement::generator(n, g, zcap);
        for (const auto* pool : {&deg2, &deg3}) {
            const qlie::Monomial& m = (*pool)[rng() % pool->size()];
            int c = static_cast<int>(rng() % 7) - 3;
            if (c == 0) c = 1;
            e.add_term(0, m, qlie::Scalar(c));
        }
        basis.push_back(std::move(e));
    }
    return basis;
}

int run(const Options& opt) {
    using clock = std::chrono::steady_clock;
    const qlie::ReportFormat format =
        opt.format == "json" ? qlie::ReportFormat::json : qlie::ReportFormat::text;
    const int degree = opt.degree >= 0 ? opt.degree : opt.order + 2;
    const qlie::JobEcho job{opt.command,
                            opt.builtin.empty() ? "file" : "builtin",
                            opt.builtin.empty() ? opt.input_file : opt.builtin,
                            opt.order,
                            degree,
                            opt.format,
                            opt.seed};

    const auto t0 = clock::now();
    qlie::Report report;
    if (opt.command == "validate") {
        const qlie::LieBialgebra b = resolve_source(opt);
        const auto ctx = opt.builtin.empty() ? std::nullopt : double_context_for(opt.builtin);
        const auto ms = [&] {
            return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
                .count();
        };
        report = qlie::report_validate(job, b, ctx, format,
                                       opt.timing ? std::optional<long long>(ms())
                                                  : std::nullopt);
    } else if (opt.command == "double") {
        const qlie::LieBialgebra half = resolve_source(opt);
        const qlie::DoubleAlgebra d = qlie::build_double(half);
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
        report = qlie::report_double(job, half, d, format,
                                     opt.timing ? std::optional<long long>(ms) : std::nullopt);
    } else if (opt.command == "quantize" || opt.command == "recognize") {
        const qlie::LieBialgebra b = resolve_source(opt);
        const qlie::BialgebraChecks checks = qlie::run_bialgebra_checks(b);
        if (!checks.all_ok()) {
            std::cerr << "validation failed:\n";
            for (const auto& issue : checks.issues) std::cerr << "  " << issue << "\n";
            return 1;
        }
        const qlie::QuantizationResult r = qlie::quantize(b, opt.order, degree);
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
        const auto timing = opt.timing ? std::optional<long long>(ms) : std::nullopt;
        report = opt.command == "quantize" ? qlie::report_quantize(job, r, format, timing)
                                           : qlie::report_recognize(job, r, format, timing);
    } else if (opt.command == "primitivize") {
        const qlie::LieBialgebra b = resolve_source(opt);
        const qlie::UEA algebra = qlie::UEA::classical(b, opt.order);
        const std::vector<qlie::UEAElement> basis = scrambled_basis(b, opt.order, opt.seed);
        const qlie::PrimitivizeResult pr = qlie::friedrichs_primitivize(algebra, basis, degree);
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
        report = qlie::report_primitivize(job, algebra, basis, pr, format,
                                          opt.timing ? std::optional<long long>(ms)
                                                     : std::nullopt);
    } else {
        throw qlie::BadRequestError("unknown command: " + opt.command);
    }

    if (opt.out_file.empty()) {
        std::cout << report.body;
    } else {
        std::ofstream out(opt.out_file, std::ios::binary);
        if (!out) throw qlie::ParseError("cannot open output file: " + opt.out_file);
        out << report.body;
    }
    return report.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"qlie: exact Lie bialgebra validation, classical doubles, and\n"
                 "order-by-order quantization with closed-form recognition"};
    app.set_version_flag("--version", std::string("qlie ") + qlie::engine_version);
    app.add_option("command", opt.command, "one of: validate double quantize primitivize recognize")
        ->required()
        ->check(CLI::IsMember({"validate", "double", "quantize", "primitivize", "recognize"}));
    auto* in_opt = app.add_option("--input", opt.input_file, "bialgebra JSON file");
    auto* bi_opt =
        app.add_option("--builtin", opt.builtin, "builtin source, one of: " + [] {
            std::string s;
            for (const auto& n : qlie::builtin_names()) {
                if (!s.empty()) s += ' ';
                s += n;
            }
            return s;
        }());
    in_opt->excludes(bi_opt);
    bi_opt->excludes(in_opt);
    app.add_option("--order", opt.order, "deformation order K (z-orders 0..K)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--degree", opt.degree, "monomial degree cap D (default K+2, needs D >= K+1)");
    app.add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "scramble seed (primitivize)");
    app.add_option("--out", opt.out_file, "write the report to a file instead of stdout");
    app.add_flag("--timing", opt.timing, "include elapsed milliseconds in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0; bad arguments are input errors
    }

    try {
        if (opt.input_file.empty() && opt.builtin.empty())
            throw qlie::BadRequestError("one of --input or --builtin is required");
        if (opt.degree >= 0 && opt.degree < opt.order + 1)
            throw qlie::BadRequestError("--degree must be at least --order + 1");
        return run(opt);
    } catch (const qlie::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const qlie::ComputeError& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
