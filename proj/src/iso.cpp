#include "indfam/iso.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

#include "indfam/constructions.hpp"
#include "indfam/serialize.hpp"

namespace indfam {

bool WreathElement::is_identity() const {
    for (std::size_t i = 0; i < clique_perm.size(); ++i)
        if (clique_perm[i] != static_cast<int>(i)) return false;
    for (const auto& t : within)
        for (std::size_t j = 0; j < t.size(); ++j)
            if (t[j] != static_cast<int>(j)) return false;
    return true;
}

WreathElement wreath_identity(const Params& p) {
    WreathElement g;
    g.clique_perm.resize(p.n);
    for (int i = 0; i < p.n; ++i) g.clique_perm[i] = i;
    std::vector<int> id(p.k);
    for (int j = 0; j < p.k; ++j) id[j] = j;
    g.within.assign(p.n, id);
    return g;
}

WreathElement random_wreath(const Params& p, SplitMix64& rng) {
    WreathElement g = wreath_identity(p);
    for (int i = p.n - 1; i > 0; --i)
        std::swap(g.clique_perm[i], g.clique_perm[rng.below(i + 1)]);
    for (int c = 0; c < p.n; ++c)
        for (int j = p.k - 1; j > 0; --j)
            std::swap(g.within[c][j], g.within[c][rng.below(j + 1)]);
    return g;
}

i128 wreath_order(const Params& p) {
    i128 fact_k = 1;
    for (int i = 2; i <= p.k; ++i) fact_k = checked_mul(fact_k, i);
    i128 order = ipow(fact_k, p.n);
    for (int i = 2; i <= p.n; ++i) order = checked_mul(order, i);
    return order;
}

namespace {

// bit (i,j) -> bit (perm(i), within_i(j)), 0-based
std::vector<int> vertex_map(const Params& p, const WreathElement& g) {
    std::vector<int> vmap(p.slots());
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.k; ++j)
            vmap[i * p.k + j] = g.clique_perm[i] * p.k + g.within[i][j];
    return vmap;
}

std::vector<word> map_members(const Params& p, const std::vector<IndSet>& members,
                              const std::vector<int>& vmap) {
    std::vector<word> out;
    out.reserve(members.size());
    for (const IndSet& x : members) {
        word img = 0;
        word b = x.bits;
        while (b != 0) {
            int bit;
#ifdef INDFAM_WIDE_BITSET
            std::uint64_t lo = static_cast<std::uint64_t>(b);
            bit = lo ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(b >> 64));
#else
            bit = std::countr_zero(b);
#endif
            img |= word{1} << vmap[bit];
            b &= b - 1;
        }
        out.push_back(img);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string words_hex(const Params& p, const std::vector<word>& ws) {
    Family f;
    f.params = p;
    f.members.reserve(ws.size());
    for (word w : ws) f.members.push_back(IndSet{w});
    return family_hex(f);
}

// Enumerates the full wreath group, invoking fn with each element's vertex
// map.  Throws budget_error when the group order exceeds the budget.
void for_each_group_element(const Params& p, i128 budget,
                            const std::function<void(const std::vector<int>&)>& fn) {
    if (wreath_order(p) > budget)
        throw budget_error("wreath group order " + i128_str(wreath_order(p)) +
                           " exceeds budget " + i128_str(budget));
    std::vector<std::vector<int>> perms_k;
    std::vector<int> base(p.k);
    for (int j = 0; j < p.k; ++j) base[j] = j;
    std::vector<int> pk = base;
    do {
        perms_k.push_back(pk);
    } while (std::next_permutation(pk.begin(), pk.end()));

    std::vector<int> sigma(p.n);
    for (int i = 0; i < p.n; ++i) sigma[i] = i;
    WreathElement g;
    g.within.assign(p.n, base);
    std::vector<int> odo(p.n, 0);
    do {
        g.clique_perm = sigma;
        std::fill(odo.begin(), odo.end(), 0);
        while (true) {
            for (int i = 0; i < p.n; ++i) g.within[i] = perms_k[odo[i]];
            fn(vertex_map(p, g));
            int j = p.n - 1;
            while (j >= 0 && odo[j] == static_cast<int>(perms_k.size()) - 1) odo[j--] = 0;
            if (j < 0) break;
            ++odo[j];
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

} // namespace

Family apply(const WreathElement& g, const Family& f) {
    if (static_cast<int>(g.clique_perm.size()) != f.params.n ||
        static_cast<int>(g.within.size()) != f.params.n)
        throw param_error("wreath element dimensions do not match Params");
    for (const auto& t : g.within)
        if (static_cast<int>(t.size()) != f.params.k)
            throw param_error("wreath element dimensions do not match Params");
    std::vector<word> ws = map_members(f.params, f.members, vertex_map(f.params, g));
    std::vector<IndSet> members;
    members.reserve(ws.size());
    for (word w : ws) members.push_back(IndSet{w});
    return Family{f.params, std::move(members)};
}

std::string canonical_form(const Family& f, i128 budget) {
    bool first = true;
    std::vector<word> best;
    for_each_group_element(f.params, budget, [&](const std::vector<int>& vmap) {
        std::vector<word> img = map_members(f.params, f.members, vmap);
        if (first || img < best) {
            best = std::move(img);
            first = false;
        }
    });
    return words_hex(f.params, best);
}

std::unordered_set<std::string> orbit_forms(const Family& f, i128 budget) {
    std::unordered_set<std::string> out;
    for_each_group_element(f.params, budget, [&](const std::vector<int>& vmap) {
        out.insert(words_hex(f.params, map_members(f.params, f.members, vmap)));
    });
    return out;
}

bool are_isomorphic(const Family& a, const Family& b, i128 budget) {
    if (a.params != b.params) return false;
    if (a.size() != b.size()) return false;
    if (sorted_degree_profile(a) != sorted_degree_profile(b)) return false;
    return canonical_form(a, budget) == canonical_form(b, budget);
}

std::string pair_form(const Family& a, const Family& b) {
    std::string sa = family_hex(a), sb = family_hex(b);
    return (sa <= sb) ? sa + "|" + sb : sb + "|" + sa;
}

namespace {

std::string pair_image_form(const Params& p, const Family& a, const Family& b,
                            const std::vector<int>& vmap) {
    std::string sa = words_hex(p, map_members(p, a.members, vmap));
    std::string sb = words_hex(p, map_members(p, b.members, vmap));
    return (sa <= sb) ? sa + "|" + sb : sb + "|" + sa;
}

} // namespace

std::string pair_canonical_form(const Family& a, const Family& b, i128 budget) {
    if (a.params != b.params) throw param_error("pair canonical form needs matching Params");
    bool first = true;
    std::string best;
    for_each_group_element(a.params, budget, [&](const std::vector<int>& vmap) {
        std::string s = pair_image_form(a.params, a, b, vmap);
        if (first || s < best) {
            best = std::move(s);
            first = false;
        }
    });
    return best;
}

std::unordered_set<std::string> pair_orbit_forms(const Family& a, const Family& b, i128 budget) {
    if (a.params != b.params) throw param_error("pair orbit needs matching Params");
    std::unordered_set<std::string> out;
    for_each_group_element(a.params, budget, [&](const std::vector<int>& vmap) {
        out.insert(pair_image_form(a.params, a, b, vmap));
    });
    return out;
}

std::string ground_canonical_form(const GroundFamily& g, i128 budget) {
    i128 fact = 1;
    for (int i = 2; i <= g.n; ++i) fact = checked_mul(fact, i);
    if (fact > budget)
        throw budget_error("S_n order " + i128_str(fact) + " exceeds budget");

    std::vector<int> sigma(g.n);
    for (int i = 0; i < g.n; ++i) sigma[i] = i;
    bool first = true;
    std::vector<std::uint64_t> best;
    do {
        std::vector<std::uint64_t> img;
        img.reserve(g.members.size());
        for (GroundSet s : g.members) {
            std::uint64_t w = 0, b = s.bits;
            while (b) {
                w |= 1ull << sigma[std::countr_zero(b)];
                b &= b - 1;
            }
            img.push_back(w);
        }
        std::sort(img.begin(), img.end(), [](std::uint64_t x, std::uint64_t y) {
            return ground_less(GroundSet{x}, GroundSet{y});
        });
        if (first || img < best) {
            best = std::move(img);
            first = false;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::string out;
    for (std::size_t i = 0; i < best.size(); ++i) {
        if (i) out.push_back(',');
        char buf[32];
        std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(best[i]));
        out += buf;
    }
    return out;
}

bool ground_are_isomorphic(const GroundFamily& a, const GroundFamily& b, i128 budget) {
    if (a.n != b.n || a.r != b.r || a.size() != b.size()) return false;
    return ground_canonical_form(a, budget) == ground_canonical_form(b, budget);
}

std::vector<long long> sorted_degree_profile(const Family& f) {
    std::vector<long long> deg = degree_profile(f);
    std::sort(deg.begin(), deg.end());
    return deg;
}

std::size_t count_isomorphism_classes(const std::vector<Family>& families, i128 budget) {
    std::unordered_set<std::string> seen;
    std::size_t classes = 0;
    for (const Family& f : families) {
        std::string form = family_hex(f);
        if (seen.count(form)) continue;
        ++classes;
        for (const std::string& s : orbit_forms(f, budget)) seen.insert(s);
    }
    return classes;
}

} // namespace indfam
