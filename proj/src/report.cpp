#include "indfam/report.hpp"

#include <algorithm>
#include <sstream>

#include "indfam/errors.hpp"
#include "json.hpp"

namespace indfam {

const char* record_status_name(RecordStatus s) {
    switch (s) {
        case RecordStatus::match: return "match";
        case RecordStatus::mismatch: return "mismatch";
        case RecordStatus::skipped_budget: return "skipped-budget";
    }
    return "?";
}

namespace {

std::vector<const ReportRecord*> sorted_records(const SuiteResult& res) {
    std::vector<const ReportRecord*> out;
    out.reserve(res.records.size());
    for (const auto& r : res.records) out.push_back(&r);
    std::stable_sort(out.begin(), out.end(), [](const ReportRecord* a, const ReportRecord* b) {
        if (a->claim_id != b->claim_id) return a->claim_id < b->claim_id;
        return a->instance < b->instance;
    });
    return out;
}

} // namespace

std::string render_json(const SuiteResult& res, const RunConfig& cfg) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["suite"] = res.suite;
    doc["seed"] = res.seed;
    doc["config"] = {
        {"node_cap", cfg.node_cap},
        {"time_cap_ms", cfg.time_cap_ms},
        {"workers", cfg.workers},
    };
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const ReportRecord* r : sorted_records(res)) {
        nlohmann::ordered_json jr;
        jr["claim"] = r->claim_id;
        jr["instance"] = r->instance;
        jr["expected"] = r->expected;
        jr["provenance"] = r->provenance;
        jr["computed"] = r->computed;
        jr["status"] = record_status_name(r->status);
        if (cfg.timing) jr["elapsed_ms"] = r->elapsed_ms;
        if (!r->witness_forms.empty()) jr["witnesses"] = r->witness_forms;
        records.push_back(std::move(jr));
    }
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

} // namespace

std::string render_csv(const SuiteResult& res, const RunConfig& cfg) {
    std::ostringstream out;
    out << "suite,seed,claim,instance,expected,provenance,computed,status";
    if (cfg.timing) out << ",elapsed_ms";
    out << '\n';
    for (const ReportRecord* r : sorted_records(res)) {
        out << res.suite << ',' << res.seed << ',' << csv_escape(r->claim_id) << ','
            << csv_escape(r->instance) << ',' << csv_escape(r->expected) << ','
            << csv_escape(r->provenance) << ',' << csv_escape(r->computed) << ','
            << record_status_name(r->status);
        if (cfg.timing) out << ',' << r->elapsed_ms;
        out << '\n';
    }
    return out.str();
}

std::string render_text(const SuiteResult& res, const RunConfig& cfg) {
    std::ostringstream out;
    std::size_t bad = 0;
    for (const ReportRecord* r : sorted_records(res)) {
        out << '[' << record_status_name(r->status) << "] " << r->claim_id << ' '
            << r->instance << ": expected " << r->expected << " (" << r->provenance
            << "), computed " << r->computed;
        if (cfg.timing) out << " [" << r->elapsed_ms << " ms]";
        out << '\n';
        if (r->status == RecordStatus::mismatch) ++bad;
    }
    out << "suite " << res.suite << " seed " << res.seed << ": " << res.records.size()
        << " records, " << bad << " mismatches, " << res.skipped() << " skipped\n";
    return out.str();
}

std::string render(const SuiteResult& res, const RunConfig& cfg) {
    if (cfg.format == "json") return render_json(res, cfg);
    if (cfg.format == "csv") return render_csv(res, cfg);
    if (cfg.format == "text") return render_text(res, cfg);
    throw param_error("unknown report format '" + cfg.format + "'");
}

IntRange parse_range(const std::string& spec) {
    IntRange out;
    if (spec.empty()) throw param_error("empty range");
    auto dots = spec.find("..");
    auto parse_part = [&](const std::string& part, bool is_hi) {
        if (part == "n") {
            if (!is_hi) throw param_error("range lower bound cannot be 'n'");
            out.upto_n = true;
            out.hi = INT32_MAX;
            return;
        }
        std::size_t pos = 0;
        int v = std::stoi(part, &pos);
        if (pos != part.size()) throw param_error("bad range token '" + part + "'");
        (is_hi ? out.hi : out.lo) = v;
    };
    if (dots == std::string::npos) {
        if (spec == "n") {
            out.upto_n = true;
            out.lo = INT32_MAX; // lone "n": exactly r = n
            out.hi = INT32_MAX;
            return out;
        }
        parse_part(spec, false);
        out.hi = out.lo;
        return out;
    }
    parse_part(spec.substr(0, dots), false);
    parse_part(spec.substr(dots + 2), true);
    return out;
}

} // namespace indfam
