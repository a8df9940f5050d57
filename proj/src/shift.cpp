#include "indfam/shift.hpp"

#include <string>
#include <unordered_set>

namespace indfam {

ShiftIndex make_shift_index(const Params& p, int clique, int pos) {
    if (clique < 1 || clique > p.n)
        throw param_error("shift clique " + std::to_string(clique) + " outside [1,n]");
    if (pos < 2 || pos > p.k)
        throw param_error("shift position " + std::to_string(pos) + " outside [2,k]");
    return ShiftIndex{clique, pos};
}

IndSet push_up(const Params& p, IndSet x, ShiftIndex idx) {
    const word from = word{1} << bit_index(p, Vertex{idx.clique, idx.pos});
    if (!(x.bits & from)) return x;
    const word to = word{1} << bit_index(p, Vertex{idx.clique, 1});
    return IndSet{(x.bits & ~from) | to};
}

Family compress_family(const Family& f, ShiftIndex idx) {
    std::vector<IndSet> out;
    out.reserve(f.members.size());
    for (const IndSet& x : f.members) {
        IndSet px = push_up(f.params, x, idx);
        if (px != x && f.contains(px))
            out.push_back(x); // keep both; P(x) is already present
        else
            out.push_back(px);
    }
    return make_family_unchecked(f.params, std::move(out));
}

bool is_stable(const Family& f) {
    for (int i = 1; i <= f.params.n; ++i)
        for (int s = 2; s <= f.params.k; ++s)
            if (compress_family(f, ShiftIndex{i, s}) != f) return false;
    return true;
}

namespace {

// Total of position coordinates; every effective compression decreases it.
long long position_sum(const Family& f) {
    long long sum = 0;
    for (const IndSet& x : f.members)
        for (Vertex v : vertices_of(f.params, x)) sum += v.pos;
    return sum;
}

} // namespace

Family stabilize(const Family& f) {
    Family cur = f;
    const long long pass_limit =
        static_cast<long long>(f.params.n) * f.params.k * (f.members.size() + 1) + 1;
    for (long long pass = 0; pass < pass_limit; ++pass) {
        Family before = cur;
        for (int i = 1; i <= cur.params.n; ++i)
            for (int s = 2; s <= cur.params.k; ++s)
                cur = compress_family(cur, ShiftIndex{i, s});
        if (cur == before) return cur;
        if (position_sum(cur) >= position_sum(before))
            throw param_error("stabilize: potential failed to decrease");
    }
    throw param_error("stabilize: pass limit exceeded");
}

std::pair<Family, Family> stabilize_pair(const Family& a, const Family& b) {
    if (a.params != b.params) throw param_error("stabilize_pair needs matching Params");
    Family ca = a, cb = b;
    const long long pass_limit =
        static_cast<long long>(a.params.n) * a.params.k *
            (a.members.size() + b.members.size() + 1) + 1;
    for (long long pass = 0; pass < pass_limit; ++pass) {
        Family ba = ca, bb = cb;
        for (int i = 1; i <= ca.params.n; ++i)
            for (int s = 2; s <= ca.params.k; ++s) {
                ShiftIndex idx{i, s};
                ca = compress_family(ca, idx);
                cb = compress_family(cb, idx);
            }
        if (ca == ba && cb == bb) return {ca, cb};
    }
    throw param_error("stabilize_pair: pass limit exceeded");
}

GroundSet project(const Params& p, IndSet x) {
    GroundSet s;
    for (int i = 1; i <= p.n; ++i)
        if (x.contains(p, Vertex{i, 1})) s.bits |= 1ull << (i - 1);
    return s;
}

GroundFamily project_family(const Family& f) {
    std::vector<GroundSet> out;
    out.reserve(f.members.size());
    for (const IndSet& x : f.members) out.push_back(project(f.params, x));
    return make_ground_family(f.params.n, f.params.r, std::move(out));
}

Family lift(const GroundFamily& g, const Params& p) {
    if (g.n != p.n)
        throw param_error("lift: ground universe [n] must match Params n");
    for (GroundSet s : g.members)
        if (s.size() > p.r) throw param_error("lift: ground set larger than r");
    std::vector<IndSet> out;
    for (const IndSet& x : enumerate_r_independent(p).members)
        if (g.contains(project(p, x))) out.push_back(x);
    return make_family_unchecked(p, std::move(out));
}

i128 coef(int n, int k, int r, int l) {
    if (l < 0) throw param_error("coef needs l >= 0");
    if (l > r || r - l > n - l) return 0;
    return checked_mul(binom(n - l, r - l), ipow(k - 1, r - l));
}

i128 lifted_size(const GroundFamily& g, const Params& p) {
    if (g.n != p.n)
        throw param_error("lifted_size: ground universe [n] must match Params n");
    i128 total = 0;
    for (GroundSet s : g.members) {
        if (s.size() > p.r) throw param_error("lifted_size: ground set larger than r");
        total = checked_add(total, coef(p.n, p.k, p.r, s.size()));
    }
    return total;
}

} // namespace indfam
