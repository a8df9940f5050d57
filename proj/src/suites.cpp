#include "indfam/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "indfam/bounded.hpp"
#include "indfam/claw.hpp"
#include "indfam/constructions.hpp"
#include "indfam/iso.hpp"
#include "indfam/randomfam.hpp"
#include "indfam/search.hpp"
#include "indfam/serialize.hpp"
#include "indfam/shift.hpp"

namespace indfam {

namespace {

using clock_type = std::chrono::steady_clock;

std::string inst_nkr(int n, int k, int r) {
    std::ostringstream s;
    s << "n=" << n << " k=" << k << " r=" << r;
    return s.str();
}

std::string inst_nr(int n, int r) {
    std::ostringstream s;
    s << "n=" << n << " r=" << r;
    return s.str();
}

struct Recorder {
    SuiteResult& res;
    clock_type::time_point mark = clock_type::now();

    void tick() { mark = clock_type::now(); }
    double take_ms() {
        double ms = std::chrono::duration<double, std::milli>(clock_type::now() - mark).count();
        mark = clock_type::now();
        return ms;
    }

    ReportRecord& add(std::string claim, std::string instance, std::string expected,
                      std::string provenance, std::string computed, RecordStatus status) {
        res.records.push_back(ReportRecord{std::move(claim), std::move(instance),
                                           std::move(expected), std::move(provenance),
                                           std::move(computed), status, take_ms(), {}});
        return res.records.back();
    }

    ReportRecord& value(std::string claim, std::string instance, i128 expected,
                        std::string provenance, i128 computed) {
        return add(std::move(claim), std::move(instance), i128_str(expected),
                   std::move(provenance), i128_str(computed),
                   expected == computed ? RecordStatus::match : RecordStatus::mismatch);
    }

    // property batches: expected "0 failures", computed "<fails> failures of <total>"
    ReportRecord& batch(std::string claim, std::string instance, std::string provenance,
                        long long fails, long long total) {
        return add(std::move(claim), std::move(instance), "0 failures",
                   std::move(provenance),
                   std::to_string(fails) + " failures of " + std::to_string(total) + " checks",
                   fails == 0 ? RecordStatus::match : RecordStatus::mismatch);
    }

    ReportRecord& skipped(std::string claim, std::string instance, std::string expected,
                          std::string provenance, const std::string& why) {
        return add(std::move(claim), std::move(instance), std::move(expected),
                   std::move(provenance), "skipped: " + why, RecordStatus::skipped_budget);
    }
};

std::vector<int> range_values(const IntRange& cfg_range, int def_lo, int def_hi) {
    int lo = def_lo, hi = def_hi;
    if (cfg_range.engaged() && !cfg_range.upto_n) {
        lo = std::max(lo, cfg_range.lo);
        hi = std::min(hi, cfg_range.hi);
    }
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

std::vector<int> r_values(const IntRange& cfg_range, int n, int def_lo, int def_hi_at_n) {
    int lo = def_lo, hi = std::min(def_hi_at_n, n);
    if (cfg_range.engaged()) {
        int cl = cfg_range.lo == INT32_MAX ? n : cfg_range.lo;
        int ch = cfg_range.upto_n ? n : cfg_range.hi;
        lo = std::max(lo, cl);
        hi = std::min(hi, ch);
    }
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

SearchBudget budget_of(const RunConfig& cfg) {
    return SearchBudget{cfg.node_cap, cfg.time_cap_ms};
}

std::uint64_t cell_tag(int a, int b, int c, int d = 0) {
    return (static_cast<std::uint64_t>(a) << 48) ^ (static_cast<std::uint64_t>(b) << 32) ^
           (static_cast<std::uint64_t>(c) << 16) ^ static_cast<std::uint64_t>(d);
}

// ---------------------------------------------------------------------- C1
SuiteResult suite_ekr_baseline(const RunConfig& cfg) {
    SuiteResult res{"ekr-baseline", cfg.seed, {}};
    Recorder rec{res};
    for (int n : range_values(cfg.n_range, 2, 6))
        for (int k : range_values(cfg.k_range, 2, 3))
            for (int r : r_values(cfg.r_range, n, 2, n)) {
                Params p = make_params(n, k, r);
                if (count_r_independent(p) > 1500) continue;
                rec.tick();
                i128 expected = ekr_size(p);
                try {
                    SearchResult sr = max_intersecting(p, budget_of(cfg), cfg.workers);
                    bool witness_ok = true;
                    for (const Family& w : sr.witnesses)
                        witness_ok = witness_ok && is_intersecting(w) &&
                                     static_cast<long long>(w.size()) == sr.optimum;
                    auto& r2 = rec.value("ekr-baseline", inst_nkr(n, k, r), expected,
                                         "formula:ekr-size", sr.optimum);
                    if (!witness_ok) r2.status = RecordStatus::mismatch;
                } catch (const budget_error& e) {
                    rec.skipped("ekr-baseline", inst_nkr(n, k, r), i128_str(expected),
                                "formula:ekr-size", e.what());
                }
            }
    return res;
}

// ---------------------------------------------------------------------- C2
SuiteResult suite_thm_main(const RunConfig& cfg) {
    SuiteResult res{"thm-main", cfg.seed, {}};
    Recorder rec{res};
    const std::vector<std::array<int, 3>> defaults = {
        {4, 2, 3}, {5, 2, 3}, {5, 2, 4}, {6, 2, 4}, {4, 3, 3}, {5, 3, 4}};
    for (auto [n, k, r] : defaults) {
        if (cfg.n_range.engaged() && !cfg.n_range.upto_n &&
            (n < cfg.n_range.lo || n > cfg.n_range.hi))
            continue;
        if (cfg.k_range.engaged() && (k < cfg.k_range.lo || k > cfg.k_range.hi)) continue;
        Params p = make_params(n, k, r);
        rec.tick();
        i128 expected = hm_size(p);
        try {
            SearchResult sr = max_intersecting_empty_cap(p, budget_of(cfg), cfg.workers);
            bool witness_ok = true;
            for (const Family& w : sr.witnesses)
                witness_ok = witness_ok && is_intersecting(w) &&
                             common_intersection(w).empty() &&
                             static_cast<long long>(w.size()) == sr.optimum;
            auto& r2 = rec.value("thm-main-1", inst_nkr(n, k, r), expected,
                                 "formula:eq-card-hm", sr.optimum);
            if (!witness_ok) r2.status = RecordStatus::mismatch;
        } catch (const budget_error& e) {
            rec.skipped("thm-main-1", inst_nkr(n, k, r), i128_str(expected),
                        "formula:eq-card-hm", e.what());
        }
    }
    return res;
}

// ---------------------------------------------------------------------- C3
SuiteResult suite_thm_main_uniq(const RunConfig& cfg) {
    SuiteResult res{"thm-main-uniq", cfg.seed, {}};
    Recorder rec{res};

    auto classify_all_hm = [&](int n, int k, int r) {
        Params p = make_params(n, k, r);
        rec.tick();
        try {
            SearchResult sr = enumerate_optimal_empty_cap(p, budget_of(cfg), cfg.workers);
            auto hm_orbit = orbit_forms(hm_family(p));
            long long outside = 0;
            for (const Family& w : sr.witnesses)
                if (!hm_orbit.count(family_hex(w))) ++outside;
            auto& r2 = rec.add("thm-main-uniq", inst_nkr(n, k, r),
                               "all optima isomorphic to hm", "paper:thm-main-1-uniqueness",
                               std::to_string(sr.witnesses.size()) + " optima, " +
                                   std::to_string(outside) + " outside the hm orbit",
                               outside == 0 ? RecordStatus::match : RecordStatus::mismatch);
            r2.witness_forms.push_back("optimum=" + std::to_string(sr.optimum));
        } catch (const budget_error& e) {
            rec.skipped("thm-main-uniq", inst_nkr(n, k, r), "all optima isomorphic to hm",
                        "paper:thm-main-1-uniqueness", e.what());
        }
    };
    classify_all_hm(5, 2, 4);
    classify_all_hm(5, 3, 4);

    { // r = 3 non-uniqueness at (4,2,3)
        Params p = make_params(4, 2, 3);
        rec.tick();
        SearchResult sr = enumerate_optimal_empty_cap(p, budget_of(cfg), cfg.workers);
        std::size_t classes = count_isomorphism_classes(sr.witnesses);
        auto tri_orbit = orbit_forms(triangle_family(p));
        bool tri_found = false;
        for (const Family& w : sr.witnesses)
            if (tri_orbit.count(family_hex(w))) {
                tri_found = true;
                break;
            }
        rec.add("thm-main-uniq", inst_nkr(4, 2, 3),
                ">=2 isomorphism classes incl. the triangle family", "paper:lemma-r3",
                std::to_string(classes) + " classes, triangle " +
                    (tri_found ? "present" : "absent"),
                classes >= 2 && tri_found ? RecordStatus::match : RecordStatus::mismatch);
    }
    return res;
}

// ---------------------------------------------------------------------- C4
SuiteResult suite_thm_main_rn(const RunConfig& cfg) {
    SuiteResult res{"thm-main-rn", cfg.seed, {}};
    Recorder rec{res};
    const std::vector<std::array<int, 2>> insts = {{4, 2}, {3, 3}, {5, 2}};
    for (auto [n, k] : insts) {
        Params p = make_params(n, k, n);
        rec.tick();
        i128 expected = main_rn_size(n, k);
        try {
            SearchResult sr = max_intersecting_empty_cap(p, budget_of(cfg), cfg.workers);
            rec.value("thm-main-2", inst_nkr(n, k, n), expected, "formula:main-rn-size",
                      sr.optimum);
        } catch (const budget_error& e) {
            rec.skipped("thm-main-2", inst_nkr(n, k, n), i128_str(expected),
                        "formula:main-rn-size", e.what());
        }
    }

    { // k = 2 coincidence with the star size at (4,2,4)
        Params p = make_params(4, 2, 4);
        rec.tick();
        rec.value("thm-main-2-coincidence", inst_nkr(4, 2, 4), ekr_size(p),
                  "formula:ekr-size", main_rn_size(4, 2));
    }

    { // uniqueness clause at (5,2,5)
        Params p = make_params(5, 2, 5);
        rec.tick();
        try {
            SearchResult sr = enumerate_optimal_empty_cap(p, budget_of(cfg), cfg.workers);
            auto orbit = orbit_forms(main_rn_family(5, 2));
            long long outside = 0;
            for (const Family& w : sr.witnesses)
                if (!orbit.count(family_hex(w))) ++outside;
            rec.add("thm-main-2-uniqueness", inst_nkr(5, 2, 5),
                    "all optima isomorphic to the main r=n family",
                    "paper:thm-main-2-uniqueness",
                    std::to_string(sr.witnesses.size()) + " optima, " +
                        std::to_string(outside) + " outside the orbit",
                    outside == 0 ? RecordStatus::match : RecordStatus::mismatch);
        } catch (const budget_error& e) {
            rec.skipped("thm-main-2-uniqueness", inst_nkr(5, 2, 5),
                        "all optima isomorphic to the main r=n family",
                        "paper:thm-main-2-uniqueness", e.what());
        }
    }
    return res;
}

// ---------------------------------------------------------------------- C5
SuiteResult suite_thm_aux(const RunConfig& cfg) {
    SuiteResult res{"thm-aux", cfg.seed, {}};
    Recorder rec{res};
    const std::vector<std::array<int, 3>> insts = {{3, 2, 2}, {4, 2, 3}, {2, 2, 2}};
    for (auto [n, k, r] : insts) {
        Params p = make_params(n, k, r);
        rec.tick();
        auto [h, m] = hm_cross_pair(p);
        i128 expected = static_cast<i128>(h.size()) + static_cast<i128>(m.size());
        try {
            SearchResult sr = max_cross_sum(p, budget_of(cfg));
            bool witness_ok = true;
            for (const auto& [a, b] : sr.pair_witnesses)
                witness_ok = witness_ok && is_cross_intersecting(a, b) &&
                             static_cast<long long>(a.size() + b.size()) == sr.optimum;
            auto& r2 =
                rec.value("thm-aux", inst_nkr(n, k, r), expected, "construction:hm-cross-pair",
                          sr.optimum);
            if (!witness_ok) r2.status = RecordStatus::mismatch;
        } catch (const budget_error& e) {
            rec.skipped("thm-aux", inst_nkr(n, k, r), i128_str(expected),
                        "construction:hm-cross-pair", e.what());
        }
    }

    { // r >= 3: every optimal maximal pair is isomorphic to (H, M)
        Params p = make_params(4, 2, 3);
        rec.tick();
        SearchResult sr = enumerate_optimal_cross_pairs(p, budget_of(cfg));
        auto [h, m] = hm_cross_pair(p);
        auto orbit = pair_orbit_forms(h, m);
        long long outside = 0;
        for (const auto& [a, b] : sr.pair_witnesses)
            if (!orbit.count(pair_form(a, b))) ++outside;
        rec.add("thm-aux-uniqueness", inst_nkr(4, 2, 3), "all optimal pairs isomorphic to (H,M)",
                "paper:thm-aux-r3", std::to_string(sr.pair_witnesses.size()) + " pairs, " +
                                        std::to_string(outside) + " outside the orbit",
                outside == 0 ? RecordStatus::match : RecordStatus::mismatch);
    }

    { // r = 2: both equality shapes appear at (3,2,2)
        Params p = make_params(3, 2, 2);
        rec.tick();
        SearchResult sr = enumerate_optimal_cross_pairs(p, budget_of(cfg));
        auto [h, m] = hm_cross_pair(p);
        auto shape_a = pair_orbit_forms(h, m);
        Family star = ekr_family(p, Vertex{1, 1});
        auto shape_b = pair_orbit_forms(star, star);
        bool found_a = false, found_b = false;
        long long other = 0;
        for (const auto& [a, b] : sr.pair_witnesses) {
            std::string f = pair_form(a, b);
            if (shape_a.count(f)) found_a = true;
            else if (shape_b.count(f)) found_b = true;
            else ++other;
        }
        rec.add("thm-aux-shapes", inst_nkr(3, 2, 2), "shapes (a) and (b), nothing else",
                "paper:thm-aux-r2",
                std::string("shape-a ") + (found_a ? "present" : "absent") + ", shape-b " +
                    (found_b ? "present" : "absent") + ", " + std::to_string(other) + " other",
                found_a && found_b && other == 0 ? RecordStatus::match : RecordStatus::mismatch);
    }
    return res;
}

// ---------------------------------------------------------------------- C6
SuiteResult suite_compression(const RunConfig& cfg) {
    SuiteResult res{"compression", cfg.seed, {}};
    Recorder rec{res};
    const int trials = cfg.trials > 0 ? cfg.trials : 200;

    for (int n : range_values(cfg.n_range, 2, 5))
        for (int k : range_values(cfg.k_range, 1, 3))
            for (int r : r_values(cfg.r_range, n, 1, n)) {
                Params p = make_params(n, k, r);
                long long fails_card = 0, fails_cross = 0, fails_idem = 0, fails_comm = 0,
                          fails_stab = 0, fails_stableint = 0, fails_proj = 0;
                long long checks = 0;
                SplitMix64 rng = derive_stream(cfg.seed, cell_tag(n, k, r, 6));
                for (int t = 0; t < trials; ++t) {
                    int permille = (t % 2) ? 300 : 100;
                    Family f = random_gamma_family(p, permille, rng);
                    ++checks;

                    if (k >= 2) {
                        ShiftIndex i1{static_cast<int>(rng.below(n)) + 1,
                                      static_cast<int>(rng.below(k - 1)) + 2};
                        Family pf = compress_family(f, i1);
                        if (pf.size() != f.size()) ++fails_card;
                        if (compress_family(pf, i1) != pf) ++fails_idem;
                        if (n >= 2) {
                            int c2 = static_cast<int>(rng.below(n - 1)) + 1;
                            if (c2 >= i1.clique) ++c2; // distinct clique
                            ShiftIndex i2{c2, static_cast<int>(rng.below(k - 1)) + 2};
                            if (compress_family(compress_family(f, i1), i2) !=
                                compress_family(compress_family(f, i2), i1))
                                ++fails_comm;
                        }
                    }

                    Family st = stabilize(f);
                    if (st.size() != f.size() || !is_stable(st) || stabilize(st) != st)
                        ++fails_stab;

                    if (r >= 1) {
                        auto [a, b] = random_gamma_cross_pair(p, permille, rng);
                        if (k >= 2) {
                            ShiftIndex i1{static_cast<int>(rng.below(n)) + 1,
                                          static_cast<int>(rng.below(k - 1)) + 2};
                            if (!is_cross_intersecting(compress_family(a, i1),
                                                       compress_family(b, i1)))
                                ++fails_cross;
                        }
                        auto [sa, sb] = stabilize_pair(a, b);
                        if (!is_stable(sa) || !is_stable(sb)) ++fails_stab;
                        word pos1 = 0;
                        for (int i = 1; i <= n; ++i)
                            pos1 |= word{1} << bit_index(p, Vertex{i, 1});
                        for (const IndSet& xa : sa.members)
                            for (const IndSet& xb : sb.members)
                                if ((xa.bits & xb.bits & pos1) == 0) ++fails_stableint;
                        if (!ground_is_cross_intersecting(project_family(sa),
                                                          project_family(sb)))
                            ++fails_proj;
                    }
                }
                std::string inst = inst_nkr(n, k, r);
                rec.batch("pi-cardinality", inst, "lemma:pipreservescint-a", fails_card, checks);
                rec.batch("pi-cross", inst, "lemma:pipreservescint-b", fails_cross, checks);
                rec.batch("pi-idempotent", inst, "definition:pi", fails_idem, checks);
                rec.batch("pi-commute-distinct-cliques", inst, "definition:pi", fails_comm,
                          checks);
                rec.batch("stabilize", inst, "definition:stable", fails_stab, checks);
                rec.batch("lemma-stableint", inst, "lemma:stableint", fails_stableint, checks);
                rec.batch("cor-projection", inst, "corollary:stableint", fails_proj, checks);
            }
    return res;
}

// ---------------------------------------------------------------------- C7
SuiteResult suite_lift(const RunConfig& cfg) {
    SuiteResult res{"lift", cfg.seed, {}};
    Recorder rec{res};
    const int trials = cfg.trials > 0 ? cfg.trials : 100;

    for (int n : range_values(cfg.n_range, 2, 6))
        for (int k : range_values(cfg.k_range, 1, 3)) {
            for (int r : r_values(cfg.r_range, n, 1, n)) {
                Params p = make_params(n, k, r);
                long long fails = 0;
                SplitMix64 rng = derive_stream(cfg.seed, cell_tag(n, k, r, 7));
                for (int t = 0; t < trials; ++t) {
                    GroundFamily g = random_ground_family(n, r, (t % 2) ? 300 : 100, rng);
                    if (lifted_size(g, p) != static_cast<i128>(lift(g, p).size())) ++fails;
                }
                rec.batch("lift-size", inst_nkr(n, k, r), "eq:card-inverse-proj", fails, trials);

                // exact construction identities
                long long id_fails = 0, id_checks = 0;
                if (r >= 2 && r <= n - 1) {
                    ++id_checks;
                    if (project_family(hm_family(p)) != v_family(n, r)) ++id_fails;
                    ++id_checks;
                    if (lift(v_family(n, r), p) != hm_family(p)) ++id_fails;
                }
                if (r >= 1) {
                    auto [h, m] = hm_cross_pair(p);
                    ++id_checks;
                    if (lift(x_family(n, r), p) != h) ++id_fails;
                    ++id_checks;
                    if (lift(y_family(n, r), p) != m) ++id_fails;
                }
                if (id_checks)
                    rec.batch("lift-identities", inst_nkr(n, k, r),
                              "cor:stability-of-extremal-families", id_fails, id_checks);
            }
        }
    return res;
}

// ---------------------------------------------------------------------- C8
SuiteResult suite_bounded(const RunConfig& cfg, const std::string& only = "") {
    SuiteResult res{only.empty() ? "bounded" : only, cfg.seed, {}};
    Recorder rec{res};
    auto want = [&](const std::string& part) { return only.empty() || only == part; };
    const int trials = cfg.trials > 0 ? cfg.trials : 100;

    if (want("lemma-l-n-l") || want("cintsetrefinement")) {
        for (int n : range_values(cfg.n_range, 4, 8))
            for (int r = (n + 1) / 2; r <= n; ++r) {
                long long lnl_fails = 0, lnl_checks = 0;
                long long cref_fails = 0, cref_checks = 0;
                long long maximal_fails = 0;
                SplitMix64 rng = derive_stream(cfg.seed, cell_tag(n, 0, r, 8));
                for (int t = 0; t < trials; ++t) {
                    auto [s0, t0] = random_ground_cross_pair(n, r, (t % 2) ? 300 : 100, rng);
                    auto [s, tt] = maximalize_cross_pair(s0, t0);
                    if (!is_r_maximal_cross_pair(s, tt)) {
                        ++maximal_fails;
                        continue;
                    }
                    for (int l = std::max(0, n - r); l <= r && n - l >= 0; ++l) {
                        if (n - l > r) continue;
                        ++lnl_checks;
                        i128 four = static_cast<i128>(uniform_part(s, n - l).size()) +
                                    static_cast<i128>(uniform_part(tt, n - l).size()) +
                                    static_cast<i128>(uniform_part(s, l).size()) +
                                    static_cast<i128>(uniform_part(tt, l).size());
                        if (four != checked_mul(2, binom(n, l))) ++lnl_fails;
                    }
                    for (int l = 1; l <= std::min(r, n / 2); ++l) {
                        ++cref_checks;
                        i128 sum = static_cast<i128>(uniform_part(s, l).size()) +
                                   static_cast<i128>(uniform_part(tt, l).size());
                        if (sum > cint_uniform_bound(n, r, l)) ++cref_fails;
                    }
                }
                if (want("lemma-l-n-l")) {
                    rec.batch("lemma-l-n-l", inst_nr(n, r), "lemma:l-n-l",
                              lnl_fails + maximal_fails, lnl_checks);
                }
                if (want("cintsetrefinement"))
                    rec.batch("lemma-cintsetrefinement", inst_nr(n, r),
                              "lemma:cintsetrefinement", cref_fails, cref_checks);
            }
    }

    if (want("vufmpart")) {
        long long fails = 0, checks = 0;
        for (int n = 3; n <= 12; ++n)
            for (int r = 2; r <= n - 1; ++r)
                for (int l = 2; l <= std::min(r, n / 2); ++l) {
                    ++checks;
                    i128 lhs = v_uniform_size(n, r, l);
                    i128 rhs = binom(n - 1, l - 1) - binom(n - l - 1, l - 1) + 1;
                    if (lhs < rhs) ++fails;
                    if (r >= 4) {
                        bool eq_chars = (l == r) || (n == 2 * r - 2 && n == 2 * l);
                        if ((lhs == rhs) != eq_chars) ++fails;
                    }
                }
        rec.batch("lemma-vufmpart", "n<=12", "lemma:vufmpart", fails, checks);
    }

    if (want("binomdiff")) {
        long long fails = 0, checks = 0;
        for (int n = 2; n <= 30; ++n)
            for (int m = 1; 2 * m <= n; ++m)
                for (int r = m + 1; r <= n; ++r) {
                    ++checks;
                    if (!binom_diff_check(n, m, r).ok) ++fails;
                }
        rec.batch("lemma-binomdiff", "n<=30", "lemma:binomdiff", fails, checks);
    }

    if (want("ineq")) {
        long long fails = 0, checks = 0;
        for (int n = 2; n <= 30; ++n)
            for (int k = 2; k <= 4; ++k)
                for (int r = 1; r <= n; ++r)
                    for (int l = 1; 2 * l < n && l <= r; ++l) {
                        ++checks;
                        if (!(coef(n, k, r, l) > coef(n, k, r, n - l))) ++fails;
                    }
        rec.batch("lemma-ineq", "n<=30 k<=4", "lemma:ineq", fails, checks);
    }

    if (want("pairwise-opt")) {
        long long fails = 0;
        const int total = cfg.trials > 0 ? cfg.trials : 1000;
        SplitMix64 rng = derive_stream(cfg.seed, cell_tag(0, 0, 0, 81));
        for (int t = 0; t < total; ++t) {
            int n = 3 + static_cast<int>(rng.below(28));             // 3..30
            int l = 1 + static_cast<int>(rng.below((n - 1) / 2));    // 1 <= l < n/2
            int r = l + static_cast<int>(rng.below(n - l + 1));      // l..n
            int k = 2 + static_cast<int>(rng.below(3));
            i128 x0 = 1 + static_cast<i128>(rng.below(1000));
            i128 y0 = 1 + static_cast<i128>(rng.below(1000));
            i128 x = x0 - static_cast<i128>(rng.below(2000));
            i128 y = x0 + y0 - x;
            if (!pairwise_opt_check(n, k, r, l, x0, y0, x, y).ok) ++fails;
        }
        rec.batch("lemma-pairwise-opt", "random", "lemma:pairwise-opt", fails, total);
    }

    if (want("summing")) {
        long long fails = 0;
        const int total = cfg.trials > 0 ? cfg.trials : 1000;
        SplitMix64 rng = derive_stream(cfg.seed, cell_tag(0, 0, 0, 82));
        for (int t = 0; t < total; ++t) {
            int r = 1 + static_cast<int>(rng.below(8));
            std::vector<int> idx(r);
            for (int i = 0; i < r; ++i) idx[i] = i + 1;
            for (int i = r - 1; i > 0; --i)
                std::swap(idx[i], idx[rng.below(i + 1)]);
            int pairs = static_cast<int>(rng.below(r / 2 + 1));
            std::vector<int> m1, m2, psi;
            for (int i = 0; i < pairs; ++i) {
                m2.push_back(idx[2 * i]);
                psi.push_back(idx[2 * i + 1]);
            }
            for (int i = 2 * pairs; i < r; ++i) m1.push_back(idx[i]);

            std::vector<i128> x(r), y(r), c(r);
            for (int i = 0; i < r; ++i) {
                y[i] = static_cast<i128>(rng.below(500));
                c[i] = static_cast<i128>(rng.below(100));
                x[i] = y[i]; // overwritten below
            }
            for (int l : m1) x[l - 1] = y[l - 1] - static_cast<i128>(
                                             rng.below(static_cast<std::uint64_t>(
                                                 static_cast<long long>(y[l - 1]) + 1)));
            for (std::size_t i = 0; i < m2.size(); ++i) {
                int l = m2[i], pl = psi[i];
                c[l - 1] = c[pl - 1] + 1 + static_cast<i128>(rng.below(100)); // c_l > c_psi
                i128 d = static_cast<i128>(
                    rng.below(static_cast<std::uint64_t>(static_cast<long long>(y[l - 1]) + 1)));
                x[l - 1] = y[l - 1] - d;
                x[pl - 1] = y[pl - 1] + d;
            }
            if (!summing_check(x, y, c, m1, m2, psi).ok) ++fails;
        }
        rec.batch("lemma-summing", "random", "lemma:summing", fails, total);
    }

    if (want("apply-hm")) {
        const int hm_trials = cfg.trials > 0 ? cfg.trials : 50;
        for (int n = 4; n <= 7; ++n)
            for (int r = 2; r <= n - 1; ++r) {
                long long fails = 0, checks = 0;
                SplitMix64 rng = derive_stream(cfg.seed, cell_tag(n, 0, r, 83));
                for (int t = 0; t < hm_trials; ++t) {
                    GroundFamily b = maximalize_intersecting(
                        random_ground_intersecting(n, r, (t % 2) ? 300 : 100, rng));
                    if (!ground_common_intersection(b).empty()) continue; // stars: lemma n/a
                    if (!nonzerodiff_check(b)) {
                        ++fails;
                        ++checks;
                        continue;
                    }
                    for (int l = 2; l <= std::min(r, n / 2); ++l) {
                        ++checks;
                        if (!apply_hm_bound(b, l)) ++fails;
                    }
                }
                rec.batch("lemma-apply-hm", inst_nr(n, r), "lemma:apply-hm+nonzerodiff", fails,
                          std::max(checks, 1ll));
            }
    }

    return res;
}

// ---------------------------------------------------------------------- C9
SuiteResult suite_claw(const RunConfig& cfg) {
    SuiteResult res{"claw", cfg.seed, {}};
    Recorder rec{res};

    // psi-transport: root-free sets <-> I^r_{n,2}, bijective and
    // intersection-preserving
    for (int n : range_values(cfg.n_range, 3, 6)) {
        long long fails = 0, checks = 0;
        for (int r = 1; r <= n; ++r) {
            Params p = make_params(n, 2, r);
            Family gamma = enumerate_r_independent(p);
            ClawFamily claw = enumerate_claw_independent(n, r);
            std::vector<word> root_free;
            const word root = word{1} << (2 * n);
            for (word m : claw.members)
                if (!(m & root)) root_free.push_back(m);

            ++checks;
            if (static_cast<i128>(root_free.size()) !=
                checked_mul(binom(n, r), ipow(2, r))) ++fails;

            std::set<word> images;
            for (word m : root_free) {
                IndSet img = claw_psi(n, m);
                images.insert(img.bits);
                ++checks;
                if (!gamma.contains(img)) ++fails;
            }
            ++checks;
            if (images.size() != root_free.size()) ++fails; // injective
            for (std::size_t i = 0; i < root_free.size(); ++i)
                for (std::size_t j = i + 1; j < root_free.size(); ++j) {
                    bool meet_claw = (root_free[i] & root_free[j]) != 0;
                    bool meet_gamma = claw_psi(n, root_free[i])
                                          .intersects(claw_psi(n, root_free[j]));
                    if (meet_claw != meet_gamma) {
                        ++fails;
                    }
                }
            checks += static_cast<long long>(root_free.size() * (root_free.size() - 1) / 2);
        }
        rec.batch("claw-psi", "n=" + std::to_string(n), "iso:psi", fails, checks);
    }

    // claw EKR: search optimum equals the canonical (leaf star) size
    for (int n : range_values(cfg.n_range, 3, 6))
        for (int r : r_values(cfg.r_range, n, 1, n - 1)) {
            rec.tick();
            i128 expected = canonical_claw_size(n, r);
            try {
                ClawSearchResult sr = max_intersecting_claw(n, r, budget_of(cfg));
                bool witness_ok = true;
                for (const ClawFamily& w : sr.witnesses)
                    witness_ok = witness_ok && claw_is_intersecting(w) &&
                                 static_cast<long long>(w.size()) == sr.optimum;
                auto& r2 = rec.value("claw-ekr", inst_nr(n, r), expected,
                                     "formula:canonical-claw-size", sr.optimum);
                if (!witness_ok) r2.status = RecordStatus::mismatch;
            } catch (const budget_error& e) {
                rec.skipped("claw-ekr", inst_nr(n, r), i128_str(expected),
                            "formula:canonical-claw-size", e.what());
            }
        }

    // the r = n proposition family
    for (int n = 3; n <= 5; ++n) {
        rec.tick();
        ClawFamily f = prop_counterexample_family(n);
        i128 expected = checked_add(ipow(2, n - 1), n);
        bool ok = claw_is_intersecting(f) &&
                  static_cast<i128>(f.size()) == expected &&
                  static_cast<i128>(f.size()) > canonical_claw_size(n, n);
        rec.add("claw-prop", "n=" + std::to_string(n),
                i128_str(expected) + " > " + i128_str(canonical_claw_size(n, n)),
                "paper:prop-r-eq-n", std::to_string(f.size()) + (ok ? " ok" : " violated"),
                ok ? RecordStatus::match : RecordStatus::mismatch);
    }

    { // tech lemma numeric scan
        long long fails = 0, checks = 0;
        for (int n = 5; n <= 30; ++n)
            for (int r = 4; r <= n - 1; ++r)
                for (int m : {r, r - 1, r - 2}) {
                    ++checks;
                    if (!tech_check(n, r, m).ok) ++fails;
                }
        rec.batch("lemma-tech", "n<=30", "lemma:tech", fails, checks);
    }
    return res;
}

// --------------------------------------------------------------------- C10
SuiteResult suite_formulas(const RunConfig& cfg) {
    SuiteResult res{"formulas", cfg.seed, {}};
    Recorder rec{res};

    { // |H^r_{n,k}| closed form vs. literal membership count
        long long fails = 0, checks = 0;
        for (int n : range_values(cfg.n_range, 3, 7))
            for (int k : range_values(cfg.k_range, 1, 4))
                for (int r = 2; r <= n - 1; ++r) {
                    ++checks;
                    Params p = make_params(n, k, r);
                    if (hm_size(p) != static_cast<i128>(hm_family(p).size())) ++fails;
                }
        rec.batch("eq-card-hm", "n<=7 k<=4", "eq:card-hm-family", fails, checks);
    }

    { // strict comparison of the cross pair at (n-1, r-1) with |H^r_{n,k}|
        long long fails = 0, checks = 0;
        for (int n = 4; n <= 10; ++n)
            for (int k = 1; k <= 4; ++k)
                for (int r = 3; r <= n - 1; ++r) {
                    ++checks;
                    Params sub = make_params(n - 1, k, r - 1);
                    i128 lhs = checked_add(1, hm_cross_m_size(sub));
                    if (!(lhs < hm_size(make_params(n, k, r)))) ++fails;
                }
        rec.batch("eq-compare-hvsm", "n<=10 k<=4", "eq:compare-HvsM", fails, checks);
    }
    return res;
}

// --------------------------------------------------------------------- C11
SuiteResult suite_determinism(const RunConfig& cfg) {
    SuiteResult res{"determinism", cfg.seed, {}};
    Recorder rec{res};

    { // identical reruns render byte-identically
        RunConfig small = cfg;
        small.trials = 25;
        small.n_range = IntRange{2, 3};
        small.k_range = IntRange{1, 2};
        small.timing = false;
        rec.tick();
        std::string a = render_json(suite_compression(small), small);
        std::string b = render_json(suite_compression(small), small);
        rec.add("determinism-rerun", "compression n<=3 k<=2 trials=25", "byte-identical",
                "config:same-seed", a == b ? "identical" : "different",
                a == b ? RecordStatus::match : RecordStatus::mismatch);

        rec.tick();
        std::string c = render_json(suite_formulas(small), small);
        std::string d = render_json(suite_formulas(small), small);
        rec.add("determinism-rerun", "formulas", "byte-identical", "config:same-seed",
                c == d ? "identical" : "different",
                c == d ? RecordStatus::match : RecordStatus::mismatch);
    }

    { // worker counts do not change optima or witness lists
        Params p = make_params(4, 2, 3);
        rec.tick();
        SearchResult w1 = enumerate_optimal_empty_cap(p, budget_of(cfg), 1);
        SearchResult w3 = enumerate_optimal_empty_cap(p, budget_of(cfg), 3);
        bool same = w1.optimum == w3.optimum && w1.witnesses.size() == w3.witnesses.size();
        if (same)
            for (std::size_t i = 0; i < w1.witnesses.size(); ++i)
                same = same && w1.witnesses[i] == w3.witnesses[i];
        rec.add("determinism-workers", inst_nkr(4, 2, 3), "identical witness lists",
                "search:empty-cap", same ? "identical" : "different",
                same ? RecordStatus::match : RecordStatus::mismatch);

        rec.tick();
        ClawSearchResult c1 = max_intersecting_claw(4, 3, budget_of(cfg), true, 1);
        ClawSearchResult c2 = max_intersecting_claw(4, 3, budget_of(cfg), true, 2);
        bool csame = c1.optimum == c2.optimum && c1.witnesses == c2.witnesses;
        rec.add("determinism-workers", "claw n=4 r=3", "identical witness lists",
                "search:claw", csame ? "identical" : "different",
                csame ? RecordStatus::match : RecordStatus::mismatch);
    }
    return res;
}

} // namespace

std::vector<std::string> suite_ids() {
    return {"ekr-baseline", "thm-main", "thm-main-uniq", "thm-main-rn", "thm-aux",
            "compression", "lift", "bounded", "claw", "formulas", "determinism",
            "lemma-l-n-l", "cintsetrefinement", "vufmpart", "binomdiff", "ineq",
            "pairwise-opt", "summing", "apply-hm", "claw-ekr", "all"};
}

bool is_suite_id(const std::string& id) {
    auto ids = suite_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

SuiteResult run_suite(const std::string& id, const RunConfig& cfg) {
    if (id == "ekr-baseline") return suite_ekr_baseline(cfg);
    if (id == "thm-main") return suite_thm_main(cfg);
    if (id == "thm-main-uniq") return suite_thm_main_uniq(cfg);
    if (id == "thm-main-rn") return suite_thm_main_rn(cfg);
    if (id == "thm-aux") return suite_thm_aux(cfg);
    if (id == "compression") return suite_compression(cfg);
    if (id == "lift") return suite_lift(cfg);
    if (id == "bounded") return suite_bounded(cfg);
    if (id == "claw" || id == "claw-ekr") return suite_claw(cfg);
    if (id == "formulas") return suite_formulas(cfg);
    if (id == "determinism") return suite_determinism(cfg);
    if (id == "lemma-l-n-l" || id == "cintsetrefinement" || id == "vufmpart" ||
        id == "binomdiff" || id == "ineq" || id == "pairwise-opt" || id == "summing" ||
        id == "apply-hm")
        return suite_bounded(cfg, id);
    throw param_error("unknown suite '" + id + "'");
}

std::vector<SuiteResult> run_all_suites(const RunConfig& cfg) {
    std::vector<SuiteResult> out;
    for (const char* id : {"ekr-baseline", "thm-main", "thm-main-uniq", "thm-main-rn",
                           "thm-aux", "compression", "lift", "bounded", "claw", "formulas",
                           "determinism"})
        out.push_back(run_suite(id, cfg));
    return out;
}

} // namespace indfam
