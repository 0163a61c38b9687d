#include "qlie/report.hpp"

#include <utility>

#include "qlie/version.hpp"
#include "json_support.hpp"

namespace qlie {

namespace {

const char* verdict_word(bool ok) { return ok ? "pass" : "fail"; }
const char* truth_word(bool v) { return v ? "true" : "false"; }

struct TextDoc {
    std::string out;
    void line(const std::string& s) {
        out += s;
        out += '\n';
    }
};

std::string joined(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += ' ';
        s += p;
    }
    return s;
}

void echo_text(TextDoc& doc, const JobEcho& job) {
    doc.line("# qlie " + job.command + " report");
    doc.line(std::string("engine: ") + engine_version);
    doc.line("command: " + job.command);
    doc.line("source: " + job.source_kind + ":" + job.source);
    doc.line("order: " + std::to_string(job.order));
    doc.line("degree_cap: " + std::to_string(job.degree_cap));
    doc.line("format: " + job.format);
    doc.line("seed: " + std::to_string(job.seed));
}

ordered_json echo_json(const JobEcho& job) {
    ordered_json j;
    j["command"] = job.command;
    j["source"] = ordered_json{{"kind", job.source_kind}, {"name", job.source}};
    j["order"] = job.order;
    j["degree_cap"] = job.degree_cap;
    j["format"] = job.format;
    j["seed"] = job.seed;
    return j;
}

Report assemble(const JobEcho& job, ReportFormat format, TextDoc&& doc, ordered_json&& result,
                bool ok, std::optional<long long> timing_ms) {
    if (format == ReportFormat::text) {
        if (timing_ms) doc.line("timing_ms: " + std::to_string(*timing_ms));
        doc.line(std::string("verdict: ") + verdict_word(ok));
        return {std::move(doc.out), ok};
    }
    ordered_json j;
    j["schema"] = report_schema;
    j["engine"] = engine_version;
    j["job"] = echo_json(job);
    j["result"] = std::move(result);
    if (timing_ms) j["timing_ms"] = *timing_ms;
    j["ok"] = ok;
    return {j.dump(2) + "\n", ok};
}

// Nonzero bracket row [X_p, X_q] with explicit zero pruning.
Element bracket_row(const LieBialgebra& b, int p, int q) {
    Element e;
    for (int r = 0; r < b.dim(); ++r) {
        Scalar v = b.bracket_coeff(p, q, r);
        if (!v.is_zero()) e.emplace(r, std::move(v));
    }
    return e;
}

void tables_text(TextDoc& doc, const LieBialgebra& b) {
    doc.line("brackets:");
    bool any = false;
    for (int p = 0; p < b.dim(); ++p)
        for (int q = p + 1; q < b.dim(); ++q) {
            Element e = bracket_row(b, p, q);
            if (e.empty()) continue;
            any = true;
            doc.line("  [" + b.generator_name(p) + "," + b.generator_name(q) +
                     "] = " + render_element(b, e));
        }
    if (!any) doc.line("  none");
    doc.line("cocommutators:");
    any = false;
    for (int r = 0; r < b.dim(); ++r) {
        Tensor2 t = b.cocommutator_of(r);
        if (t.empty()) continue;
        any = true;
        doc.line("  delta(" + b.generator_name(r) + ") = " + render_tensor2(b, t));
    }
    if (!any) doc.line("  none");
}

ordered_json tables_json(const LieBialgebra& b) {
    ordered_json brackets = ordered_json::array();
    for (int p = 0; p < b.dim(); ++p)
        for (int q = p + 1; q < b.dim(); ++q) {
            Element e = bracket_row(b, p, q);
            if (e.empty()) continue;
            brackets.push_back(ordered_json{
                {"pair", "[" + b.generator_name(p) + "," + b.generator_name(q) + "]"},
                {"value", render_element(b, e)}});
        }
    ordered_json cocoms = ordered_json::array();
    for (int r = 0; r < b.dim(); ++r) {
        Tensor2 t = b.cocommutator_of(r);
        if (t.empty()) continue;
        cocoms.push_back(ordered_json{{"generator", b.generator_name(r)},
                                      {"value", render_tensor2(b, t)}});
    }
    ordered_json j;
    j["brackets"] = std::move(brackets);
    j["cocommutators"] = std::move(cocoms);
    return j;
}

void checks_text(TextDoc& doc, const BialgebraChecks& c) {
    doc.line(std::string("jacobi: ") + verdict_word(c.jacobi));
    doc.line(std::string("cojacobi: ") + verdict_word(c.cojacobi));
    doc.line(std::string("cocycle: ") + verdict_word(c.cocycle));
    doc.line(std::string("compatibility: ") + verdict_word(c.compatibility));
    if (c.issues.empty()) {
        doc.line("issues: none");
    } else {
        for (const auto& issue : c.issues) doc.line("issue: " + issue);
    }
}

ordered_json checks_json(const BialgebraChecks& c) {
    ordered_json j;
    j["jacobi"] = c.jacobi;
    j["cojacobi"] = c.cojacobi;
    j["cocycle"] = c.cocycle;
    j["compatibility"] = c.compatibility;
    return j;
}

// One z-order layer of a coproduct image, rendered through the canonical
// tensor ordering (as a z-independent tensor).
std::string render_image_layer(const UEA& u, const std::map<PairMono, Scalar>& layer) {
    UEATensor2 t(u.num_gens(), u.zcap());
    for (const auto& [key, v] : layer) t.add_term(0, key.left, key.right, v);
    return render_uea_tensor2(u, t);
}

std::string commutator_key(const LieBialgebra& b, int p, int q) {
    return "[" + b.generator_name(p) + "," + b.generator_name(q) + "]";
}

ordered_json closed_form_json(const ClosedForm& f) {
    ordered_json j;
    j["pattern"] = pattern_name(f.pattern);
    j["rate"] = f.rate.render();
    j["verified_order"] = f.verified_order;
    return j;
}

// Shared closed-forms section (quantize and recognize reports).  Returns the
// names that stayed unrecognized when collect_unrecognized is set.
struct ClosedFormsSection {
    std::vector<std::string> text_lines;
    ordered_json coproducts = ordered_json::array();
    ordered_json commutators = ordered_json::array();
    std::vector<std::string> unrecognized;
};

ClosedFormsSection closed_forms_section(const QuantizationResult& r) {
    ClosedFormsSection sec;
    const LieBialgebra& b = r.classical;
    const UEA& u = r.algebra;
    for (int g = 0; g < b.dim(); ++g) {
        const std::string& name = b.generator_name(g);
        auto it = r.recognized_coproducts.find(name);
        if (it == r.recognized_coproducts.end()) {
            sec.unrecognized.push_back("Delta(" + name + ")");
            continue;
        }
        const FactoredCoproduct& f = it->second;
        sec.text_lines.push_back("Delta(" + name + ") = " + render_factored_coproduct(u, f));
        ordered_json j;
        j["generator"] = name;
        j["argument"] = u.name(f.argument);
        j["left"] = closed_form_json(f.left);
        j["right"] = closed_form_json(f.right);
        j["verified_order"] = f.verified_order;
        j["rendering"] = render_factored_coproduct(u, f);
        sec.coproducts.push_back(std::move(j));
    }
    for (int p = 0; p < b.dim(); ++p)
        for (int q = p + 1; q < b.dim(); ++q) {
            const UEAElement entry = u.table_entry(p, q);
            if (entry.is_zero()) continue;
            const std::string key = commutator_key(b, p, q);
            auto it = r.recognized_commutators.find(key);
            if (it == r.recognized_commutators.end()) {
                sec.unrecognized.push_back(key);
                continue;
            }
            const SeriesClosedForm& s = it->second;
            sec.text_lines.push_back(key + " = " + render_series_closed_form(u, s));
            ordered_json j;
            j["pair"] = key;
            j["argument"] = u.name(s.argument);
            j["pattern"] = pattern_name(s.form.pattern);
            j["rate"] = s.form.rate.render();
            j["verified_order"] = s.verified_order;
            j["rendering"] = render_series_closed_form(u, s);
            sec.commutators.push_back(std::move(j));
        }
    return sec;
}

} // namespace

Report report_validate(const JobEcho& job, const LieBialgebra& b,
                       const std::optional<DoubleContext>& ctx, ReportFormat format,
                       std::optional<long long> timing_ms) {
    const BialgebraChecks checks = run_bialgebra_checks(b);
    bool pairing_ok = true;
    const bool self_dual = is_self_dual_half(ctx ? ctx->half : b);
    if (ctx) pairing_ok = check_pairing_invariance(ctx->dbl);
    const bool ok = checks.all_ok() && pairing_ok;

    TextDoc doc;
    echo_text(doc, job);
    doc.line("dim: " + std::to_string(b.dim()));
    doc.line("generators: " + joined(b.generators()));
    checks_text(doc, checks);
    if (ctx) doc.line(std::string("pairing_invariance: ") + verdict_word(pairing_ok));
    doc.line(std::string("self_dual: ") + truth_word(self_dual));

    ordered_json result;
    result["dim"] = b.dim();
    result["generators"] = b.generators();
    result["checks"] = checks_json(checks);
    result["issues"] = checks.issues;
    if (ctx) result["pairing_invariance"] = pairing_ok;
    result["self_dual"] = self_dual;
    return assemble(job, format, std::move(doc), std::move(result), ok, timing_ms);
}

Report report_double(const JobEcho& job, const LieBialgebra& half, const DoubleAlgebra& d,
                     ReportFormat format, std::optional<long long> timing_ms) {
    const LieBialgebra& b = d.algebra;
    const BialgebraChecks checks = run_bialgebra_checks(b);
    const bool pairing_ok = check_pairing_invariance(d);
    const bool half_self_dual = is_self_dual_half(half);
    const bool ok = checks.all_ok() && pairing_ok;

    TextDoc doc;
    echo_text(doc, job);
    doc.line("half_dim: " + std::to_string(d.half_dim));
    doc.line("dim: " + std::to_string(b.dim()));
    doc.line("generators: " + joined(b.generators()));
    tables_text(doc, b);
    doc.line("pairing:");
    bool any_pairing = false;
    for (int i = 0; i < b.dim(); ++i)
        for (int j = i; j < b.dim(); ++j) {
            if (d.pairing[i][j].is_zero()) continue;
            any_pairing = true;
            doc.line("  <" + b.generator_name(i) + "," + b.generator_name(j) +
                     "> = " + d.pairing[i][j].render());
        }
    if (!any_pairing) doc.line("  none");
    checks_text(doc, checks);
    doc.line(std::string("pairing_invariance: ") + verdict_word(pairing_ok));
    doc.line(std::string("self_dual_half: ") + truth_word(half_self_dual));

    ordered_json result;
    result["half_dim"] = d.half_dim;
    result["dim"] = b.dim();
    result["generators"] = b.generators();
    ordered_json tables = tables_json(b);
    result["brackets"] = std::move(tables["brackets"]);
    result["cocommutators"] = std::move(tables["cocommutators"]);
    ordered_json pairing = ordered_json::array();
    for (int i = 0; i < b.dim(); ++i)
        for (int j = i; j < b.dim(); ++j) {
            if (d.pairing[i][j].is_zero()) continue;
            pairing.push_back(ordered_json{
                {"pair", "<" + b.generator_name(i) + "," + b.generator_name(j) + ">"},
                {"value", d.pairing[i][j].render()}});
        }
    result["pairing"] = std::move(pairing);
    result["checks"] = checks_json(checks);
    result["issues"] = checks.issues;
    result["pairing_invariance"] = pairing_ok;
    result["self_dual_half"] = half_self_dual;
    return assemble(job, format, std::move(doc), std::move(result), ok, timing_ms);
}

Report report_quantize(const JobEcho& job, const QuantizationResult& r, ReportFormat format,
                       std::optional<long long> timing_ms) {
    const LieBialgebra& b = r.classical;
    const UEA& u = r.algebra;

    TextDoc doc;
    echo_text(doc, job);
    doc.line("dim: " + std::to_string(b.dim()));
    doc.line("generators: " + joined(b.generators()));
    std::string dims;
    for (int v : r.residual_gauge_dims) {
        if (!dims.empty()) dims += ' ';
        dims += std::to_string(v);
    }
    doc.line("residual_gauge_dims: " + (dims.empty() ? std::string("none") : dims));
    if (r.warnings.empty()) {
        doc.line("warnings: none");
    } else {
        for (const auto& w : r.warnings) doc.line("warning: " + w);
    }

    doc.line("coproducts:");
    ordered_json coproducts = ordered_json::array();
    for (int g = 0; g < b.dim(); ++g) {
        ordered_json orders = ordered_json::array();
        for (int k = 0; k <= r.order; ++k) {
            const auto& layer = r.coproduct.image(g).layer(k);
            if (layer.empty()) continue;
            const std::string rendered = render_image_layer(u, layer);
            doc.line("  Delta_" + std::to_string(k) + "(" + b.generator_name(g) +
                     ") = " + rendered);
            orders.push_back(ordered_json{{"order", k}, {"value", rendered}});
        }
        coproducts.push_back(
            ordered_json{{"generator", b.generator_name(g)}, {"orders", std::move(orders)}});
    }

    doc.line("commutators:");
    ordered_json commutators = ordered_json::array();
    for (int p = 0; p < b.dim(); ++p)
        for (int q = p + 1; q < b.dim(); ++q) {
            const UEAElement entry = u.table_entry(p, q);
            const std::string rendered = render_uea_element(u, entry);
            doc.line("  " + commutator_key(b, p, q) + " = " + rendered);
            commutators.push_back(
                ordered_json{{"pair", commutator_key(b, p, q)}, {"value", rendered}});
        }

    ClosedFormsSection sec = closed_forms_section(r);
    doc.line("closed_forms:");
    if (sec.text_lines.empty()) {
        doc.line("  none");
    } else {
        for (const auto& l : sec.text_lines) doc.line("  " + l);
    }

    ordered_json result;
    result["dim"] = b.dim();
    result["generators"] = b.generators();
    result["order"] = r.order;
    result["degree_cap"] = r.degree_cap;
    result["residual_gauge_dims"] = r.residual_gauge_dims;
    result["warnings"] = r.warnings;
    result["coproducts"] = std::move(coproducts);
    result["commutators"] = std::move(commutators);
    ordered_json forms;
    forms["coproducts"] = std::move(sec.coproducts);
    forms["commutators"] = std::move(sec.commutators);
    result["closed_forms"] = std::move(forms);
    return assemble(job, format, std::move(doc), std::move(result), true, timing_ms);
}

Report report_recognize(const JobEcho& job, const QuantizationResult& r, ReportFormat format,
                        std::optional<long long> timing_ms) {
    const LieBialgebra& b = r.classical;

    TextDoc doc;
    echo_text(doc, job);
    doc.line("dim: " + std::to_string(b.dim()));
    doc.line("generators: " + joined(b.generators()));
    std::string dims;
    for (int v : r.residual_gauge_dims) {
        if (!dims.empty()) dims += ' ';
        dims += std::to_string(v);
    }
    doc.line("residual_gauge_dims: " + (dims.empty() ? std::string("none") : dims));

    ClosedFormsSection sec = closed_forms_section(r);
    doc.line("closed_forms:");
    if (sec.text_lines.empty()) {
        doc.line("  none");
    } else {
        for (const auto& l : sec.text_lines) doc.line("  " + l);
    }
    if (sec.unrecognized.empty()) {
        doc.line("unrecognized: none");
    } else {
        for (const auto& name : sec.unrecognized) doc.line("unrecognized: " + name);
    }

    ordered_json result;
    result["dim"] = b.dim();
    result["generators"] = b.generators();
    result["order"] = r.order;
    result["degree_cap"] = r.degree_cap;
    result["residual_gauge_dims"] = r.residual_gauge_dims;
    ordered_json forms;
    forms["coproducts"] = std::move(sec.coproducts);
    forms["commutators"] = std::move(sec.commutators);
    result["closed_forms"] = std::move(forms);
    result["unrecognized"] = sec.unrecognized;
    return assemble(job, format, std::move(doc), std::move(result), true, timing_ms);
}

Report report_primitivize(const JobEcho& job, const UEA& algebra,
                          const std::vector<UEAElement>& scrambled, const PrimitivizeResult& pr,
                          ReportFormat format, std::optional<long long> timing_ms) {
    const int n = algebra.num_gens();
    bool exact = static_cast<int>(pr.recovered.size()) == n;
    for (int g = 0; exact && g < n; ++g)
        exact = pr.recovered[static_cast<size_t>(g)] ==
                UEAElement::generator(n, g, algebra.zcap());

    TextDoc doc;
    echo_text(doc, job);
    doc.line("dim: " + std::to_string(n));
    doc.line("generators: " + joined(algebra.names()));

    doc.line("scrambled:");
    ordered_json scrambled_json = ordered_json::array();
    for (int g = 0; g < n && g < static_cast<int>(scrambled.size()); ++g) {
        const std::string rendered = render_uea_element(algebra, scrambled[static_cast<size_t>(g)]);
        doc.line("  Y[" + algebra.name(g) + "] = " + rendered);
        scrambled_json.push_back(
            ordered_json{{"generator", algebra.name(g)}, {"value", rendered}});
    }
    doc.line("recovered:");
    ordered_json recovered_json = ordered_json::array();
    for (int g = 0; g < n && g < static_cast<int>(pr.recovered.size()); ++g) {
        const std::string rendered =
            render_uea_element(algebra, pr.recovered[static_cast<size_t>(g)]);
        doc.line("  X[" + algebra.name(g) + "] = " + rendered);
        recovered_json.push_back(
            ordered_json{{"generator", algebra.name(g)}, {"value", rendered}});
    }
    doc.line("basis_changes:");
    ordered_json steps = ordered_json::array();
    if (pr.log.empty()) doc.line("  none");
    for (const auto& e : pr.log) {
        const std::string rendered = render_uea_element(algebra, e.subtracted);
        doc.line("  z^" + std::to_string(e.zord) + " degree " + std::to_string(e.degree) +
                 " from Y[" + algebra.name(e.generator) + "]: subtracted " + rendered);
        steps.push_back(ordered_json{{"zord", e.zord},
                                     {"degree", e.degree},
                                     {"generator", algebra.name(e.generator)},
                                     {"subtracted", rendered}});
    }
    doc.line(std::string("recovered_exact: ") + truth_word(exact));

    ordered_json result;
    result["dim"] = n;
    result["generators"] = algebra.names();
    result["scrambled"] = std::move(scrambled_json);
    result["recovered"] = std::move(recovered_json);
    result["basis_changes"] = std::move(steps);
    result["recovered_exact"] = exact;
    return assemble(job, format, std::move(doc), std::move(result), exact, timing_ms);
}

} // namespace qlie
