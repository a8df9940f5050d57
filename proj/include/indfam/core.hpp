#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "indfam/errors.hpp"
#include "indfam/exact.hpp"

namespace indfam {

// Vertex bit vectors.  Default width is 64 bits; configure INDFAM_WIDE_BITSET
// for 128-bit words when n*k > 64.
#ifdef INDFAM_WIDE_BITSET
using word = unsigned __int128;
#else
using word = std::uint64_t;
#endif

inline constexpr int kWordBits = static_cast<int>(sizeof(word) * 8);

inline int popcount_word(word w) {
#ifdef INDFAM_WIDE_BITSET
    return std::popcount(static_cast<std::uint64_t>(w)) +
           std::popcount(static_cast<std::uint64_t>(w >> 64));
#else
    return std::popcount(w);
#endif
}

// (n, k, r): n cliques of order k, independent sets of size r.
struct Params {
    int n = 0;
    int k = 0;
    int r = 0;

    friend bool operator==(const Params&, const Params&) = default;

    int slots() const { return n * k; }
};

// Validates ranges (n, k >= 1, 0 <= r <= n) and the bit-vector capacity.
Params make_params(int n, int k, int r);

// Vertex (i, j): vertex j of clique i, both 1-based as in the labelling of
// Gamma_{n,k}.
struct Vertex {
    int clique = 0;
    int pos = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline int bit_index(const Params& p, Vertex v) { return (v.clique - 1) * p.k + (v.pos - 1); }

inline Vertex vertex_at(const Params& p, int bit) {
    return Vertex{bit / p.k + 1, bit % p.k + 1};
}

inline bool vertex_valid(const Params& p, Vertex v) {
    return v.clique >= 1 && v.clique <= p.n && v.pos >= 1 && v.pos <= p.k;
}

// An r-independent set of Gamma_{n,k}: at most one vertex per clique block.
struct IndSet {
    word bits = 0;

    friend auto operator<=>(const IndSet&, const IndSet&) = default;

    bool contains(const Params& p, Vertex v) const {
        return (bits >> bit_index(p, v)) & word{1};
    }
    int size() const { return popcount_word(bits); }
    bool intersects(const IndSet& o) const { return (bits & o.bits) != 0; }
};

IndSet make_indset(const Params& p, const std::vector<Vertex>& vs);
std::vector<Vertex> vertices_of(const Params& p, IndSet x);

// One vertex per clique at most?
bool indset_valid(const Params& p, IndSet x);

// Duplicate-free family over one parameter triple, members kept in ascending
// bit-vector order (the determinism contract for every returned family).
struct Family {
    Params params;
    std::vector<IndSet> members;

    std::size_t size() const { return members.size(); }
    bool contains(IndSet x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }

    friend bool operator==(const Family&, const Family&) = default;
};

// Sorts, deduplicates and validates (each member a valid r-set under params).
Family make_family(const Params& p, std::vector<IndSet> members);
// Sorts and deduplicates without the r-set validity check (internal helper
// for callers that already guarantee it).
Family make_family_unchecked(const Params& p, std::vector<IndSet> members);

// All of I^r_{n,k} in ascending bit-vector order.
Family enumerate_r_independent(const Params& p);

// |I^r_{n,k}| = C(n,r) k^r, evaluated exactly.
i128 count_r_independent(const Params& p);

// Every pair of members shares a vertex.  Vacuously true for empty families.
bool is_intersecting(const Family& f);

// Every A-member meets every B-member; both families must be non-empty and
// share Params.
bool is_cross_intersecting(const Family& a, const Family& b);

// Vertices contained in every member; error on an empty family.
std::vector<Vertex> common_intersection(const Family& f);
word common_intersection_bits(const Family& f);

} // namespace indfam
