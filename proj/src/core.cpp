#include "indfam/core.hpp"

#include <string>

namespace indfam {

Params make_params(int n, int k, int r) {
    if (n < 1 || k < 1)
        throw param_error("need n >= 1 and k >= 1, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    if (r < 0 || r > n)
        throw param_error("need 0 <= r <= n, got r=" + std::to_string(r) +
                          " n=" + std::to_string(n));
    if (static_cast<long long>(n) * k > kWordBits)
        throw capacity_error("n*k = " + std::to_string(static_cast<long long>(n) * k) +
                             " exceeds the configured bit width " + std::to_string(kWordBits));
    return Params{n, k, r};
}

IndSet make_indset(const Params& p, const std::vector<Vertex>& vs) {
    IndSet x;
    for (Vertex v : vs) {
        if (!vertex_valid(p, v))
            throw param_error("vertex (" + std::to_string(v.clique) + "," +
                              std::to_string(v.pos) + ") out of range");
        x.bits |= word{1} << bit_index(p, v);
    }
    if (!indset_valid(p, x)) throw param_error("two vertices in one clique");
    return x;
}

std::vector<Vertex> vertices_of(const Params& p, IndSet x) {
    std::vector<Vertex> out;
    for (int b = 0; b < p.slots(); ++b)
        if ((x.bits >> b) & word{1}) out.push_back(vertex_at(p, b));
    return out;
}

bool indset_valid(const Params& p, IndSet x) {
    if (p.slots() < kWordBits && (x.bits >> p.slots()) != 0) return false;
    const word clique_mask = (p.k == kWordBits) ? ~word{0} : ((word{1} << p.k) - 1);
    for (int i = 0; i < p.n; ++i) {
        word block = (x.bits >> (i * p.k)) & clique_mask;
        if (popcount_word(block) > 1) return false;
    }
    return true;
}

Family make_family_unchecked(const Params& p, std::vector<IndSet> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Family{p, std::move(members)};
}

Family make_family(const Params& p, std::vector<IndSet> members) {
    for (const IndSet& x : members) {
        if (!indset_valid(p, x)) throw param_error("member is not an independent set");
        if (x.size() != p.r)
            throw param_error("member has size " + std::to_string(x.size()) +
                              ", expected r=" + std::to_string(p.r));
    }
    return make_family_unchecked(p, std::move(members));
}

Family enumerate_r_independent(const Params& p) {
    std::vector<IndSet> out;
    std::vector<int> cliques(p.r); // 0-based clique choice, ascending
    for (int i = 0; i < p.r; ++i) cliques[i] = i;

    auto emit_positions = [&](const std::vector<int>& cs) {
        std::vector<int> pos(p.r, 0); // 0-based position odometer
        while (true) {
            word bits = 0;
            for (int i = 0; i < p.r; ++i) bits |= word{1} << (cs[i] * p.k + pos[i]);
            out.push_back(IndSet{bits});
            int j = p.r - 1;
            while (j >= 0 && pos[j] == p.k - 1) pos[j--] = 0;
            if (j < 0) break;
            ++pos[j];
        }
    };

    if (p.r == 0) {
        out.push_back(IndSet{});
    } else {
        while (true) {
            emit_positions(cliques);
            int j = p.r - 1;
            while (j >= 0 && cliques[j] == p.n - p.r + j) --j;
            if (j < 0) break;
            ++cliques[j];
            for (int t = j + 1; t < p.r; ++t) cliques[t] = cliques[t - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return Family{p, std::move(out)};
}

i128 count_r_independent(const Params& p) {
    return checked_mul(binom(p.n, p.r), ipow(p.k, p.r));
}

bool is_intersecting(const Family& f) {
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (!f.members[i].intersects(f.members[j])) return false;
    return true;
}

bool is_cross_intersecting(const Family& a, const Family& b) {
    if (a.params != b.params) throw param_error("cross-intersection needs matching Params");
    if (a.members.empty() || b.members.empty())
        throw param_error("cross-intersecting pair must have both sides non-empty");
    for (const IndSet& x : a.members)
        for (const IndSet& y : b.members)
            if (!x.intersects(y)) return false;
    return true;
}

word common_intersection_bits(const Family& f) {
    if (f.members.empty()) throw param_error("common intersection of an empty family");
    word acc = ~word{0};
    for (const IndSet& x : f.members) acc &= x.bits;
    if (f.params.slots() < kWordBits) acc &= (word{1} << f.params.slots()) - 1;
    return acc;
}

std::vector<Vertex> common_intersection(const Family& f) {
    return vertices_of(f.params, IndSet{common_intersection_bits(f)});
}

} // namespace indfam
