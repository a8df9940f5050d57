#include "indfam/ground.hpp"

#include <string>

namespace indfam {

GroundSet make_ground_set(int n, const std::vector<int>& elems) {
    GroundSet s;
    for (int e : elems) {
        if (e < 1 || e > n)
            throw param_error("ground element " + std::to_string(e) + " outside [1," +
                              std::to_string(n) + "]");
        s.bits |= 1ull << (e - 1);
    }
    return s;
}

std::vector<int> elements_of(GroundSet s) {
    std::vector<int> out;
    std::uint64_t b = s.bits;
    while (b) {
        out.push_back(std::countr_zero(b) + 1);
        b &= b - 1;
    }
    return out;
}

bool ground_less(GroundSet a, GroundSet b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    // lexicographic on ascending element lists: compare smallest differing
    // element; the set owning it comes first
    std::uint64_t diff = a.bits ^ b.bits;
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits & low) != 0;
}

GroundFamily make_ground_family(int n, int r, std::vector<GroundSet> members) {
    if (n < 1 || n > 64) throw param_error("ground universe needs 1 <= n <= 64");
    if (r < 0 || r > n) throw param_error("ground family needs 0 <= r <= n");
    for (GroundSet s : members) {
        if (n < 64 && (s.bits >> n) != 0) throw param_error("ground set outside [n]");
        if (s.size() > r)
            throw param_error("ground set of size " + std::to_string(s.size()) +
                              " exceeds r=" + std::to_string(r));
    }
    std::sort(members.begin(), members.end(), ground_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return GroundFamily{n, r, std::move(members)};
}

std::vector<GroundSet> ground_universe(int n, int r) {
    if (n < 1 || n > 20) throw capacity_error("ground universe enumeration supports n <= 20");
    std::vector<GroundSet> out;
    out.reserve(1u << n);
    for (std::uint64_t b = 0; b < (1ull << n); ++b)
        if (std::popcount(b) <= r) out.push_back(GroundSet{b});
    std::sort(out.begin(), out.end(), ground_less);
    return out;
}

bool ground_is_intersecting(const GroundFamily& f) {
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (!f.members[i].intersects(f.members[j])) return false;
    return true;
}

bool ground_is_cross_intersecting(const GroundFamily& a, const GroundFamily& b) {
    if (a.n != b.n || a.r != b.r)
        throw param_error("cross-intersection needs matching ground parameters");
    if (a.members.empty() || b.members.empty())
        throw param_error("cross-intersecting pair must have both sides non-empty");
    for (const GroundSet& x : a.members)
        for (const GroundSet& y : b.members)
            if (!x.intersects(y)) return false;
    return true;
}

} // namespace indfam
