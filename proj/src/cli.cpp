#include "indfam/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "indfam/claw.hpp"
#include "indfam/constructions.hpp"
#include "indfam/iso.hpp"
#include "indfam/report.hpp"
#include "indfam/search.hpp"
#include "indfam/serialize.hpp"
#include "indfam/suites.hpp"
#include "json.hpp"

namespace indfam {

namespace {

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file '" + path + "'");
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonOpts {
    std::string n_spec, k_spec, r_spec;
    RunConfig cfg;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n_spec, "range A..B for n")->envname("INDFAM_N");
    cmd->add_option("--k", o.k_spec, "range A..B for k")->envname("INDFAM_K");
    cmd->add_option("--r", o.r_spec, "range A..B or A..n or n for r")->envname("INDFAM_R");
    cmd->add_option("--seed", o.cfg.seed, "property-suite seed")->envname("INDFAM_SEED");
    cmd->add_option("--trials", o.cfg.trials, "trials per grid cell")->envname("INDFAM_TRIALS");
    cmd->add_option("--node-cap", o.cfg.node_cap, "search node cap")->envname("INDFAM_NODE_CAP");
    cmd->add_option("--time-cap", o.cfg.time_cap_ms, "search time cap (ms)")
        ->envname("INDFAM_TIME_CAP");
    cmd->add_option("--workers", o.cfg.workers, "parallel workers")->envname("INDFAM_WORKERS");
    cmd->add_option("--format", o.cfg.format, "json|csv|text")->envname("INDFAM_FORMAT");
    cmd->add_option("--out", o.cfg.out_path, "output file (default stdout)")
        ->envname("INDFAM_OUT");
    cmd->add_flag("--timing", o.cfg.timing, "include wall times in reports");
}

void finish_ranges(CommonOpts& o) {
    if (!o.n_spec.empty()) o.cfg.n_range = parse_range(o.n_spec);
    if (!o.k_spec.empty()) o.cfg.k_range = parse_range(o.k_spec);
    if (!o.r_spec.empty()) o.cfg.r_range = parse_range(o.r_spec);
}

int do_verify(const std::string& suite, CommonOpts& o) {
    finish_ranges(o);
    bool mismatch = false, skipped = false;
    std::string output;
    if (suite == "all") {
        for (const SuiteResult& res : run_all_suites(o.cfg)) {
            output += render(res, o.cfg);
            mismatch = mismatch || !res.ok();
            skipped = skipped || res.skipped() > 0;
        }
    } else {
        SuiteResult res = run_suite(suite, o.cfg);
        output = render(res, o.cfg);
        mismatch = !res.ok();
        skipped = res.skipped() > 0;
    }
    write_out(o.cfg.out_path, output);
    if (mismatch) return 1;
    if (skipped) return 3;
    return 0;
}

nlohmann::ordered_json search_header(const std::string& kind, const CommonOpts& o) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "search";
    doc["kind"] = kind;
    doc["seed"] = o.cfg.seed;
    return doc;
}

int do_search(const std::string& kind, int n, int k, int r, CommonOpts& o) {
    SearchBudget budget{o.cfg.node_cap, o.cfg.time_cap_ms};
    nlohmann::ordered_json doc = search_header(kind, o);
    doc["n"] = n;
    doc["k"] = k;
    doc["r"] = r;

    auto fill_family_result = [&](const SearchResult& sr, bool keep_witnesses) {
        doc["optimum"] = sr.optimum;
        doc["explored_nodes"] = sr.explored_nodes;
        if (o.cfg.timing) doc["wall_ms"] = sr.wall_ms;
        nlohmann::ordered_json ws = nlohmann::ordered_json::array();
        if (keep_witnesses) {
            for (const Family& w : sr.witnesses) ws.push_back(family_hex(w));
            for (const auto& [a, b] : sr.pair_witnesses) ws.push_back(pair_form(a, b));
        }
        doc["witnesses"] = std::move(ws);
    };

    if (kind == "max") {
        fill_family_result(max_intersecting(make_params(n, k, r), budget, o.cfg.workers), true);
    } else if (kind == "empty-cap") {
        fill_family_result(max_intersecting_empty_cap(make_params(n, k, r), budget,
                                                      o.cfg.workers), true);
    } else if (kind == "enumerate-empty-cap") {
        fill_family_result(enumerate_optimal_empty_cap(make_params(n, k, r), budget,
                                                       o.cfg.workers), true);
    } else if (kind == "cross") {
        fill_family_result(max_cross_sum(make_params(n, k, r), budget), true);
    } else if (kind == "enumerate-cross") {
        fill_family_result(enumerate_optimal_cross_pairs(make_params(n, k, r), budget), true);
    } else if (kind == "claw") {
        ClawSearchResult sr = max_intersecting_claw(n, r, budget, false, o.cfg.workers);
        doc.erase("k");
        doc["optimum"] = sr.optimum;
        doc["explored_nodes"] = sr.explored_nodes;
        nlohmann::ordered_json ws = nlohmann::ordered_json::array();
        for (const ClawFamily& w : sr.witnesses) ws.push_back(claw_canonical_form(w));
        doc["witnesses"] = std::move(ws);
    } else {
        throw param_error("unknown search kind '" + kind + "'");
    }
    write_out(o.cfg.out_path, doc.dump(2) + "\n");
    return 0;
}

int do_construct(const std::string& tag, int n, int k, int r, CommonOpts& o) {
    NamedFamily nf = build_named(family_tag_from_name(tag), make_params(n, k, r));
    std::string text = family_to_text(nf.family);
    if (nf.tag == FamilyTag::HM_CROSS_H || nf.tag == FamilyTag::HM_CROSS_M)
        text += family_to_text(nf.second);
    write_out(o.cfg.out_path, text);
    return 0;
}

int do_canon(const std::string& path, CommonOpts& o) {
    std::string text = read_file(path);
    std::istringstream in(text);
    std::string tag;
    in >> tag;
    std::string form;
    if (tag == "gamma") {
        form = canonical_form(family_from_text(text));
    } else if (tag == "claw") {
        form = claw_canonical_form(claw_from_text(text));
    } else if (tag == "ground") {
        form = ground_canonical_form(ground_from_text(text));
    } else {
        throw param_error("unrecognized family header '" + tag + "'");
    }
    write_out(o.cfg.out_path, form + "\n");
    return 0;
}

} // namespace

int cli_run(int argc, const char* const* argv) {
    CLI::App app{"intersecting r-independent set families in clique unions and depth-two claws"};
    app.require_subcommand(1);

    CommonOpts vo, so, co, ko;
    std::string suite, kind, tag, canon_path;
    int n = 0, k = 0, r = 0;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite id (see docs; 'all' runs everything)")
        ->required();
    add_common(verify, vo);

    CLI::App* search = app.add_subcommand("search", "exact extremal search");
    search->add_option("kind", kind,
                       "max | empty-cap | enumerate-empty-cap | cross | enumerate-cross | claw")
        ->required();
    search->add_option("N", n)->required();
    search->add_option("K", k)->required();
    search->add_option("R", r);
    add_common(search, so);

    CLI::App* construct = app.add_subcommand("construct", "emit a named family");
    construct->add_option("tag", tag, "ekr | hm | hm-cross-h | hm-cross-m | triangle | main-rn")
        ->required();
    construct->add_option("N", n)->required();
    construct->add_option("K", k)->required();
    construct->add_option("R", r)->required();
    add_common(construct, co);

    CLI::App* canon = app.add_subcommand("canon", "canonical form of a family file");
    canon->add_option("file", canon_path, "family file (gamma/claw/ground header)")->required();
    add_common(canon, ko);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (!is_suite_id(suite)) {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
            return do_verify(suite, vo);
        }
        if (search->parsed()) {
            // claw searches take n and r only
            if (kind == "claw" && r == 0) {
                r = k;
                k = 2;
            }
            return do_search(kind, n, k, r, so);
        }
        if (construct->parsed()) return do_construct(tag, n, k, r, co);
        if (canon->parsed()) return do_canon(canon_path, ko);
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const param_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace indfam
