#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "indfam/bounded.hpp"
#include "indfam/claw.hpp"
#include "indfam/constructions.hpp"
#include "indfam/iso.hpp"
#include "indfam/randomfam.hpp"
#include "indfam/search.hpp"
#include "indfam/serialize.hpp"
#include "indfam/shift.hpp"
#include "indfam/suites.hpp"

namespace py = pybind11;
using namespace indfam;

namespace {

py::object big(i128 v) {
    // exact integers can exceed 64 bits; go through the decimal string
    py::object pyint = py::module_::import("builtins").attr("int");
    return pyint(i128_str(v));
}

std::vector<std::pair<int, int>> family_sets_one(const Params& p, const IndSet& x) {
    std::vector<std::pair<int, int>> out;
    for (Vertex v : vertices_of(p, x)) out.emplace_back(v.clique, v.pos);
    return out;
}

std::vector<std::vector<std::pair<int, int>>> family_sets(const Family& f) {
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const IndSet& x : f.members) out.push_back(family_sets_one(f.params, x));
    return out;
}

Vertex to_vertex(std::pair<int, int> v) { return Vertex{v.first, v.second}; }

IndSet to_indset(const Params& p, const std::vector<std::pair<int, int>>& vs) {
    std::vector<Vertex> verts;
    for (auto [i, j] : vs) verts.push_back(Vertex{i, j});
    return make_indset(p, verts);
}

GroundFamily to_ground(int n, int r, const std::vector<std::vector<int>>& members) {
    std::vector<GroundSet> sets;
    for (const auto& m : members) sets.push_back(make_ground_set(n, m));
    return make_ground_family(n, r, std::move(sets));
}

std::vector<std::vector<int>> ground_sets(const GroundFamily& g) {
    std::vector<std::vector<int>> out;
    for (GroundSet s : g.members) out.push_back(elements_of(s));
    return out;
}

} // namespace

PYBIND11_MODULE(indfam, m) {
    m.doc() = "intersecting r-independent set families in clique unions and depth-two claws";

    py::register_exception<param_error>(m, "ParamError", PyExc_ValueError);
    py::register_exception<capacity_error>(m, "CapacityError", PyExc_OverflowError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<Params>(m, "Params")
        .def_readonly("n", &Params::n)
        .def_readonly("k", &Params::k)
        .def_readonly("r", &Params::r)
        .def("__repr__", [](const Params& p) {
            return "Params(n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) +
                   ", r=" + std::to_string(p.r) + ")";
        });

    py::class_<Family>(m, "Family")
        .def_property_readonly("params", [](const Family& f) { return f.params; })
        .def("__len__", &Family::size)
        .def("sets", &family_sets, "members as lists of (clique, pos) pairs")
        .def("hex", &family_hex)
        .def("text", &family_to_text)
        .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
        .def("__repr__", [](const Family& f) {
            return "<Family n=" + std::to_string(f.params.n) + " k=" +
                   std::to_string(f.params.k) + " r=" + std::to_string(f.params.r) +
                   " size=" + std::to_string(f.size()) + ">";
        });

    py::class_<GroundFamily>(m, "GroundFamily")
        .def_readonly("n", &GroundFamily::n)
        .def_readonly("r", &GroundFamily::r)
        .def("__len__", &GroundFamily::size)
        .def("sets", &ground_sets)
        .def("text", &ground_to_text)
        .def("__eq__", [](const GroundFamily& a, const GroundFamily& b) { return a == b; });

    py::class_<ClawFamily>(m, "ClawFamily")
        .def_readonly("n", &ClawFamily::n)
        .def_readonly("r", &ClawFamily::r)
        .def("__len__", &ClawFamily::size)
        .def("text", &claw_to_text)
        .def("__eq__", [](const ClawFamily& a, const ClawFamily& b) { return a == b; });

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("optimum", &SearchResult::optimum)
        .def_readonly("explored_nodes", &SearchResult::explored_nodes)
        .def_property_readonly("witnesses",
                               [](const SearchResult& r) { return r.witnesses; })
        .def_property_readonly("pair_witnesses",
                               [](const SearchResult& r) { return r.pair_witnesses; });

    py::class_<ClawSearchResult>(m, "ClawSearchResult")
        .def_readonly("optimum", &ClawSearchResult::optimum)
        .def_readonly("explored_nodes", &ClawSearchResult::explored_nodes)
        .def_property_readonly("witnesses",
                               [](const ClawSearchResult& r) { return r.witnesses; });

    // core
    m.def("make_params", &make_params, py::arg("n"), py::arg("k"), py::arg("r"));
    m.def("enumerate_r_independent", &enumerate_r_independent);
    m.def("count_r_independent",
          [](const Params& p) { return big(count_r_independent(p)); });
    m.def("is_intersecting", &is_intersecting);
    m.def("is_cross_intersecting", &is_cross_intersecting);
    m.def("common_intersection", [](const Family& f) {
        std::vector<std::pair<int, int>> out;
        for (Vertex v : common_intersection(f)) out.emplace_back(v.clique, v.pos);
        return out;
    });
    m.def("make_family",
          [](const Params& p, const std::vector<std::vector<std::pair<int, int>>>& sets) {
              std::vector<IndSet> members;
              for (const auto& s : sets) members.push_back(to_indset(p, s));
              return make_family(p, std::move(members));
          });
    m.def("family_from_text", &family_from_text);

    // constructions
    m.def("ekr_family", [](const Params& p, std::pair<int, int> anchor) {
        return ekr_family(p, to_vertex(anchor));
    });
    m.def("ekr_size", [](const Params& p) { return big(ekr_size(p)); });
    m.def("hm_family", &hm_family);
    m.def("hm_size", [](const Params& p) { return big(hm_size(p)); });
    m.def("hm_cross_pair", &hm_cross_pair);
    m.def("hm_cross_m_size", [](const Params& p) { return big(hm_cross_m_size(p)); });
    m.def("triangle_family", &triangle_family);
    m.def("triangle_size", [](const Params& p) { return big(triangle_size(p)); });
    m.def("main_rn_family", &main_rn_family, py::arg("n"), py::arg("k"));
    m.def("main_rn_size", [](int n, int k) { return big(main_rn_size(n, k)); });

    // shift / projection
    m.def("push_up", [](const Params& p, const std::vector<std::pair<int, int>>& x, int i,
                        int s) {
        IndSet out = push_up(p, to_indset(p, x), make_shift_index(p, i, s));
        return family_sets_one(p, out);
    });
    m.def("compress_family", [](const Family& f, int i, int s) {
        return compress_family(f, make_shift_index(f.params, i, s));
    });
    m.def("stabilize", &stabilize);
    m.def("is_stable", &is_stable);
    m.def("project_family", &project_family);
    m.def("lift", &lift);
    m.def("lifted_size",
          [](const GroundFamily& g, const Params& p) { return big(lifted_size(g, p)); });
    m.def("coef", [](int n, int k, int r, int l) { return big(coef(n, k, r, l)); });

    // bounded universe
    m.def("ground_family", &to_ground, py::arg("n"), py::arg("r"), py::arg("members"));
    m.def("up_closure", &up_closure);
    m.def("maximalize_intersecting", &maximalize_intersecting);
    m.def("maximalize_cross_pair", &maximalize_cross_pair);
    m.def("uniform_part", &uniform_part);
    m.def("v_family", &v_family);
    m.def("x_family", &x_family);
    m.def("y_family", &y_family);
    m.def("v_uniform_size", [](int n, int r, int l) { return big(v_uniform_size(n, r, l)); });
    m.def("check_complement_identity", &check_complement_identity);
    m.def("cint_uniform_bound",
          [](int n, int r, int l) { return big(cint_uniform_bound(n, r, l)); });
    m.def("binom_diff_check", [](int n, int m_, int r) {
        auto out = binom_diff_check(n, m_, r);
        return py::make_tuple(out.ok, out.clause);
    });

    // search
    py::class_<SearchBudget>(m, "SearchBudget")
        .def(py::init<>())
        .def_readwrite("node_cap", &SearchBudget::node_cap)
        .def_readwrite("time_cap_ms", &SearchBudget::time_cap_ms);
    m.def("max_intersecting", &max_intersecting, py::arg("params"),
          py::arg("budget") = SearchBudget{}, py::arg("workers") = 1);
    m.def("max_intersecting_empty_cap", &max_intersecting_empty_cap, py::arg("params"),
          py::arg("budget") = SearchBudget{}, py::arg("workers") = 1);
    m.def("enumerate_optimal_empty_cap", &enumerate_optimal_empty_cap, py::arg("params"),
          py::arg("budget") = SearchBudget{}, py::arg("workers") = 1);
    m.def("max_cross_sum", &max_cross_sum, py::arg("params"),
          py::arg("budget") = SearchBudget{});
    m.def("enumerate_optimal_cross_pairs", &enumerate_optimal_cross_pairs, py::arg("params"),
          py::arg("budget") = SearchBudget{});

    // iso
    m.def("canonical_form",
          [](const Family& f) { return canonical_form(f); });
    m.def("are_isomorphic",
          [](const Family& a, const Family& b) { return are_isomorphic(a, b); });
    m.def("ground_canonical_form",
          [](const GroundFamily& g) { return ground_canonical_form(g); });

    // claw
    m.def("enumerate_claw_independent", &enumerate_claw_independent);
    m.def("count_claw_independent",
          [](int n, int r) { return big(count_claw_independent(n, r)); });
    m.def("canonical_claw_size", [](int n, int r) { return big(canonical_claw_size(n, r)); });
    m.def("tech_sum", [](int n, int r, int mm) { return big(tech_sum(n, r, mm)); });
    m.def("tech_check", [](int n, int r, int mm) {
        auto out = tech_check(n, r, mm);
        return py::make_tuple(out.ok, out.clause);
    });
    m.def("prop_counterexample_family", &prop_counterexample_family);
    m.def("claw_is_intersecting", &claw_is_intersecting);
    m.def("max_intersecting_claw", &max_intersecting_claw, py::arg("n"), py::arg("r"),
          py::arg("budget") = SearchBudget{}, py::arg("enumerate_optima") = false,
          py::arg("workers") = 1);
    m.def("claw_canonical_form", &claw_canonical_form);

    // suites
    m.def("run_suite", [](const std::string& id, std::uint64_t seed, int trials) {
        RunConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        SuiteResult res = run_suite(id, cfg);
        py::list records;
        for (const auto& r : res.records)
            records.append(py::make_tuple(r.claim_id, r.instance, r.expected, r.computed,
                                          record_status_name(r.status)));
        return py::make_tuple(res.ok(), records);
    }, py::arg("suite"), py::arg("seed") = 1, py::arg("trials") = -1);
    m.def("suite_ids", &suite_ids);
}
