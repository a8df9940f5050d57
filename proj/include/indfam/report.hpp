#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace indfam {

enum class RecordStatus { match, mismatch, skipped_budget };

const char* record_status_name(RecordStatus s);

struct ReportRecord {
    std::string claim_id;    // e.g. "thm-main-1", "lemma-l-n-l", "claw-ekr"
    std::string instance;    // "n=4 k=2 r=3" style key
    std::string expected;
    std::string provenance;  // formula / oracle the expected value came from
    std::string computed;
    RecordStatus status = RecordStatus::match;
    double elapsed_ms = 0.0;
    std::vector<std::string> witness_forms;
};

struct IntRange {
    int lo = 0;
    int hi = -1; // empty when hi < lo
    bool upto_n = false; // r-range "A..n"

    bool engaged() const { return upto_n || hi >= lo; }
};

struct RunConfig {
    IntRange n_range, k_range, r_range;
    std::uint64_t seed = 1;
    int trials = -1; // suite default when negative
    std::uint64_t node_cap = 100'000'000;
    long long time_cap_ms = 600'000;
    int workers = 1;
    bool timing = false; // reports are byte-identical when off
    std::string format = "text";
    std::string out_path; // empty = stdout
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 1;
    std::vector<ReportRecord> records;

    bool ok() const {
        for (const auto& r : records)
            if (r.status == RecordStatus::mismatch) return false;
        return true;
    }
    std::size_t skipped() const {
        std::size_t c = 0;
        for (const auto& r : records)
            if (r.status == RecordStatus::skipped_budget) ++c;
        return c;
    }
};

// Records sorted by (claim_id, instance); elapsed_ms emitted only with
// cfg.timing so identical configs give byte-identical output.
std::string render_json(const SuiteResult& res, const RunConfig& cfg);
std::string render_csv(const SuiteResult& res, const RunConfig& cfg);
std::string render_text(const SuiteResult& res, const RunConfig& cfg);
std::string render(const SuiteResult& res, const RunConfig& cfg); // per cfg.format

IntRange parse_range(const std::string& spec); // "4", "4..6", "3..n", "n"

} // namespace indfam
