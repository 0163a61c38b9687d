#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlie/bialgebra.hpp"
#include "qlie/drinfeld_double.hpp"
#include "qlie/quantize.hpp"

namespace qlie {

// Version tag carried by every JSON report; bump when the layout changes.
inline constexpr const char* report_schema = "qlie-report/1";

// Full echo of the job parameters, embedded in every report so that output
// is reproducible from its own header.
struct JobEcho {
    std::string command;
    std::string source_kind; // "builtin" or "file"
    std::string source;      // builtin name or file path
    int order = 4;
    int degree_cap = 6;
    std::string format = "text";
    unsigned long seed = 0;
};

enum class ReportFormat { text, json };

// Rendered report plus the overall verdict.  Rendering is deterministic:
// identical inputs produce identical bytes (timing is therefore opt-in and
// excluded by default).
struct Report {
    std::string body;
    bool ok = true;
};

// Double structure accompanying a validate job when the input is a known
// classical double: the defining half carries the self-duality identity
// (cocommutator == negated brackets) and the pairing supports the
// ad-invariance check.
struct DoubleContext {
    DoubleAlgebra dbl;
    LieBialgebra half;
};

Report report_validate(const JobEcho& job, const LieBialgebra& b,
                       const std::optional<DoubleContext>& ctx, ReportFormat format,
                       std::optional<long long> timing_ms);

Report report_double(const JobEcho& job, const LieBialgebra& half, const DoubleAlgebra& d,
                     ReportFormat format, std::optional<long long> timing_ms);

Report report_quantize(const JobEcho& job, const QuantizationResult& r, ReportFormat format,
                       std::optional<long long> timing_ms);

// Closed-forms-only view of a quantization result, with an explicit list of
// the images and table entries that stayed unrecognized.
Report report_recognize(const JobEcho& job, const QuantizationResult& r, ReportFormat format,
                        std::optional<long long> timing_ms);

Report report_primitivize(const JobEcho& job, const UEA& algebra,
                          const std::vector<UEAElement>& scrambled, const PrimitivizeResult& pr,
                          ReportFormat format, std::optional<long long> timing_ms);

} // namespace qlie
