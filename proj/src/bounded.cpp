#include "indfam/bounded.hpp"

#include <string>

#include "indfam/shift.hpp"

namespace indfam {

namespace {

bool meets_all(GroundSet x, const std::vector<GroundSet>& fam) {
    for (GroundSet m : fam)
        if (!x.intersects(m)) return false;
    return true;
}

} // namespace

GroundFamily up_closure(const GroundFamily& g) {
    std::vector<GroundSet> out;
    for (GroundSet s : ground_universe(g.n, g.r)) {
        for (GroundSet m : g.members) {
            if (m.subset_of(s)) {
                out.push_back(s);
                break;
            }
        }
    }
    return make_ground_family(g.n, g.r, std::move(out));
}

bool is_up_family(const GroundFamily& g) { return up_closure(g) == g; }

bool is_r_maximal_intersecting(const GroundFamily& g) {
    if (!ground_is_intersecting(g)) return false;
    for (GroundSet s : ground_universe(g.n, g.r)) {
        if (g.contains(s) || s.bits == 0) continue;
        if (meets_all(s, g.members)) return false;
    }
    return true;
}

bool is_r_maximal_cross_pair(const GroundFamily& s, const GroundFamily& t) {
    if (!ground_is_cross_intersecting(s, t)) return false;
    for (GroundSet c : ground_universe(s.n, s.r)) {
        if (c.bits == 0) continue;
        if (!s.contains(c) && meets_all(c, t.members)) return false;
        if (!t.contains(c) && meets_all(c, s.members)) return false;
    }
    return true;
}

GroundFamily maximalize_intersecting(const GroundFamily& g) {
    if (!ground_is_intersecting(g))
        throw param_error("maximalize: input family is not intersecting");
    std::vector<GroundSet> fam = g.members;
    for (GroundSet c : ground_universe(g.n, g.r)) {
        if (c.bits == 0) continue;
        if (std::binary_search(fam.begin(), fam.end(), c, ground_less)) continue;
        if (meets_all(c, fam))
            fam.insert(std::lower_bound(fam.begin(), fam.end(), c, ground_less), c);
    }
    return make_ground_family(g.n, g.r, std::move(fam));
}

std::pair<GroundFamily, GroundFamily> maximalize_cross_pair(const GroundFamily& s,
                                                            const GroundFamily& t) {
    if (!ground_is_cross_intersecting(s, t))
        throw param_error("maximalize: input pair is not cross-intersecting");
    std::vector<GroundSet> fs = s.members, ft = t.members;
    for (GroundSet c : ground_universe(s.n, s.r)) {
        if (c.bits == 0) continue;
        if (!std::binary_search(fs.begin(), fs.end(), c, ground_less) && meets_all(c, ft))
            fs.insert(std::lower_bound(fs.begin(), fs.end(), c, ground_less), c);
    }
    for (GroundSet c : ground_universe(s.n, s.r)) {
        if (c.bits == 0) continue;
        if (!std::binary_search(ft.begin(), ft.end(), c, ground_less) && meets_all(c, fs))
            ft.insert(std::lower_bound(ft.begin(), ft.end(), c, ground_less), c);
    }
    return {make_ground_family(s.n, s.r, std::move(fs)),
            make_ground_family(t.n, t.r, std::move(ft))};
}

GroundFamily uniform_part(const GroundFamily& g, int l) {
    std::vector<GroundSet> out;
    for (GroundSet s : g.members)
        if (s.size() == l) out.push_back(s);
    return make_ground_family(g.n, g.r, std::move(out));
}

GroundFamily v_family(int n, int r) {
    if (r < 1 || r > n - 1) throw param_error("V_{n,r} needs 1 <= r <= n-1");
    std::uint64_t window = 0; // [2, r+1]
    for (int e = 2; e <= r + 1; ++e) window |= 1ull << (e - 1);
    std::vector<GroundSet> out{GroundSet{window}};
    for (GroundSet s : ground_universe(n, r))
        if (s.contains(1) && (s.bits & window) != 0) out.push_back(s);
    return make_ground_family(n, r, std::move(out));
}

GroundFamily x_family(int n, int r) {
    if (r < 1 || r > n) throw param_error("X_{n,r} needs 1 <= r <= n");
    std::uint64_t head = (r == 64) ? ~0ull : ((1ull << r) - 1);
    return make_ground_family(n, r, {GroundSet{head}});
}

GroundFamily y_family(int n, int r) {
    if (r < 1 || r > n) throw param_error("Y_{n,r} needs 1 <= r <= n");
    std::uint64_t head = (r == 64) ? ~0ull : ((1ull << r) - 1);
    std::vector<GroundSet> out;
    for (GroundSet s : ground_universe(n, r))
        if ((s.bits & head) != 0) out.push_back(s);
    return make_ground_family(n, r, std::move(out));
}

i128 v_uniform_size(int n, int r, int l) {
    if (r < 1 || r > n - 1) throw param_error("V size needs 1 <= r <= n-1");
    if (l < 0) throw param_error("V size needs l >= 0");
    if (l == 0) return 0;
    i128 base = binom(n - 1, l - 1) - binom(n - r - 1, l - 1);
    return l == r ? checked_add(base, 1) : base;
}

bool check_complement_identity(const GroundFamily& s, const GroundFamily& t, int l) {
    const int n = s.n, r = s.r;
    if (2 * r < n) throw param_error("complement identity needs n/2 <= r <= n");
    if (l < 0 || l > r || n - l > r)
        throw param_error("complement identity needs l and n-l within [0, r]");
    if (!is_r_maximal_cross_pair(s, t))
        throw param_error("complement identity needs an r-maximal cross-intersecting pair");
    i128 total = static_cast<i128>(uniform_part(s, n - l).size()) +
                 static_cast<i128>(uniform_part(t, n - l).size()) +
                 static_cast<i128>(uniform_part(s, l).size()) +
                 static_cast<i128>(uniform_part(t, l).size());
    return total == checked_mul(2, binom(n, l));
}

i128 cint_uniform_bound(int n, int r, int l) {
    if (r < 2 || r > n) throw param_error("bound needs 2 <= r <= n");
    if (l < 0 || l > r) throw param_error("bound needs 0 <= l <= r");
    i128 base = binom(n, l) - binom(n - r, l);
    return l == r ? checked_add(base, 1) : base;
}

CheckOutcome binom_diff_check(int n, int m, int r) {
    if (!(m < r && r <= n && 2 * m <= n))
        throw param_error("binom diff needs m < r <= n and 2m <= n");
    i128 diff = binom(n - m, m) - binom(n - r, m);
    if (diff < 1) return {false, "bound-violated"};
    bool eq_chars = (r == m + 1 && n == 2 * m);
    if ((diff == 1) != eq_chars) return {false, "equality-characterization-violated"};
    return {true, diff == 1 ? "equality" : "strict"};
}

CheckOutcome pairwise_opt_check(int n, int k, int r, int l, i128 x0, i128 y0, i128 x, i128 y) {
    if (!(r <= n && 1 <= l && 2 * l < n))
        throw param_error("pairwise opt needs r <= n and 1 <= l < n/2");
    if (x0 <= 0 || y0 <= 0) throw param_error("pairwise opt needs x0, y0 > 0");
    if (x > x0 || x + y != x0 + y0)
        throw param_error("pairwise opt needs x <= x0 and x + y = x0 + y0");
    i128 cl = coef(n, k, r, l), cnl = coef(n, k, r, n - l);
    i128 lhs = checked_add(checked_mul(x, cl), checked_mul(y, cnl));
    i128 rhs = checked_add(checked_mul(x0, cl), checked_mul(y0, cnl));
    if (lhs > rhs) return {false, "bound-violated"};
    if ((lhs == rhs) != (x == x0)) return {false, "equality-characterization-violated"};
    return {true, lhs == rhs ? "equality" : "strict"};
}

CheckOutcome summing_check(const std::vector<i128>& x, const std::vector<i128>& y,
                           const std::vector<i128>& c, const std::vector<int>& m1,
                           const std::vector<int>& m2, const std::vector<int>& psi) {
    const int r = static_cast<int>(x.size());
    if (static_cast<int>(y.size()) != r || static_cast<int>(c.size()) != r)
        throw param_error("summing: x, y, c must share length r");
    if (m2.size() != psi.size()) throw param_error("summing: psi must pair with m2");

    std::vector<int> seen(r + 1, 0);
    auto mark = [&](int l) {
        if (l < 1 || l > r) throw param_error("summing: index outside [1, r]");
        if (seen[l]++) throw param_error("summing: indices must partition [r]");
    };
    for (int l : m1) mark(l);
    for (int l : m2) mark(l);
    for (int l : psi) mark(l);
    for (int l = 1; l <= r; ++l)
        if (!seen[l]) throw param_error("summing: indices must partition [r]");

    for (int l : m1)
        if (x[l - 1] > y[l - 1]) throw param_error("summing: hypothesis fails on M1");
    bool furthermore = true; // c_l > c_psi(l) and matching pair sums, on every M2 pair
    for (std::size_t i = 0; i < m2.size(); ++i) {
        int l = m2[i], pl = psi[i];
        i128 lhs = checked_add(checked_mul(c[l - 1], x[l - 1]), checked_mul(c[pl - 1], x[pl - 1]));
        i128 rhs = checked_add(checked_mul(c[l - 1], y[l - 1]), checked_mul(c[pl - 1], y[pl - 1]));
        if (lhs > rhs) throw param_error("summing: hypothesis fails on M2 pair");
        if (!(c[l - 1] > c[pl - 1] && x[l - 1] + x[pl - 1] == y[l - 1] + y[pl - 1]))
            furthermore = false;
    }

    i128 lhs = 0, rhs = 0;
    for (int l = 1; l <= r; ++l) {
        lhs = checked_add(lhs, checked_mul(c[l - 1], x[l - 1]));
        rhs = checked_add(rhs, checked_mul(c[l - 1], y[l - 1]));
    }
    if (lhs > rhs) return {false, "bound-violated"};
    if (furthermore) {
        bool all_equal = true;
        for (int l = 1; l <= r; ++l)
            if (x[l - 1] != y[l - 1]) all_equal = false;
        if ((lhs == rhs) != all_equal) return {false, "equality-characterization-violated"};
    }
    return {true, lhs == rhs ? "equality" : "strict"};
}

bool apply_hm_bound(const GroundFamily& b, int l) {
    const int n = b.n, r = b.r;
    if (n < 3 || r < 2 || r > n - 1)
        throw param_error("hm bound needs n >= 3 and 2 <= r <= n-1");
    if (l < 2 || l > std::min(r, n / 2))
        throw param_error("hm bound needs 2 <= l <= min(r, n/2)");
    if (!is_r_maximal_intersecting(b))
        throw param_error("hm bound needs an r-maximal intersecting family");
    if (!ground_common_intersection(b).empty())
        throw param_error("hm bound needs empty common intersection");
    return static_cast<i128>(uniform_part(b, l).size()) <= v_uniform_size(n, r, l);
}

bool nonzerodiff_check(const GroundFamily& b) {
    for (int a = 1; a <= b.n; ++a) {
        bool found = false;
        for (GroundSet s : b.members)
            if (s.size() == b.r && !s.contains(a)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

std::vector<int> ground_common_intersection(const GroundFamily& g) {
    if (g.members.empty()) throw param_error("common intersection of an empty family");
    std::uint64_t acc = ~0ull;
    for (GroundSet s : g.members) acc &= s.bits;
    if (g.n < 64) acc &= (1ull << g.n) - 1;
    return elements_of(GroundSet{acc});
}

} // namespace indfam
