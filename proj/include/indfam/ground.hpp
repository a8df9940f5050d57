#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "indfam/core.hpp"

namespace indfam {

// Subset of [n], elements 1-based, bit i-1 <-> element i.
struct GroundSet {
    std::uint64_t bits = 0;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

    int size() const { return std::popcount(bits); }
    bool contains(int e) const { return (bits >> (e - 1)) & 1u; }
    bool intersects(const GroundSet& o) const { return (bits & o.bits) != 0; }
    bool subset_of(const GroundSet& o) const { return (bits & ~o.bits) == 0; }
};

GroundSet make_ground_set(int n, const std::vector<int>& elems);
std::vector<int> elements_of(GroundSet s);

// Scan order used everywhere ground sets are ordered: cardinality ascending,
// then lexicographic on the sorted element list.  This order is part of the
// external contract (maximalization scans candidates in it).
bool ground_less(GroundSet a, GroundSet b);

// Family over the universe C([n], <= r), members sorted in scan order.
struct GroundFamily {
    int n = 0;
    int r = 0;
    std::vector<GroundSet> members;

    std::size_t size() const { return members.size(); }
    bool contains(GroundSet s) const {
        return std::binary_search(members.begin(), members.end(), s, ground_less);
    }

    friend bool operator==(const GroundFamily&, const GroundFamily&) = default;
};

// Sorts, deduplicates, checks every member has size <= r and fits in [n].
GroundFamily make_ground_family(int n, int r, std::vector<GroundSet> members);

// All subsets of [n] with size <= r, in scan order.
std::vector<GroundSet> ground_universe(int n, int r);

bool ground_is_intersecting(const GroundFamily& f);
bool ground_is_cross_intersecting(const GroundFamily& a, const GroundFamily& b);

} // namespace indfam
