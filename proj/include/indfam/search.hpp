#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "indfam/core.hpp"

namespace indfam {

struct SearchBudget {
    std::uint64_t node_cap = 100'000'000;
    long long time_cap_ms = 600'000;
};

struct SearchResult {
    long long optimum = 0;
    std::vector<Family> witnesses;
    std::vector<std::pair<Family, Family>> pair_witnesses;
    std::uint64_t explored_nodes = 0;
    double wall_ms = 0.0;
};

// Exact maximum intersecting family size in I^r_{n,k}.  Every intersecting
// family either has a common vertex (then it fits inside a star, whose sizes
// are counted directly) or has empty common intersection (handled by the
// branch-and-bound below), so the maximum is the larger of the two.
SearchResult max_intersecting(const Params& p, const SearchBudget& budget = {},
                              int workers = 1);

// Exact maximum size of an intersecting family with empty common
// intersection.  Branch and bound over the meet graph: greedy-coloring upper
// bounds, plus a feasibility look-ahead that prunes any branch whose running
// common intersection contains a vertex present in every remaining candidate.
SearchResult max_intersecting_empty_cap(const Params& p, const SearchBudget& budget = {},
                                        int workers = 1);

// All maximum-size families with empty common intersection.
SearchResult enumerate_optimal_empty_cap(const Params& p, const SearchBudget& budget = {},
                                         int workers = 1);

// Exact maximum of |A| + |B| over non-empty cross-intersecting pairs.
// Maximal pairs are exactly the Galois-closed pairs of the meets relation;
// the walk enumerates closed families in lectic order (NextClosure).
SearchResult max_cross_sum(const Params& p, const SearchBudget& budget = {});
SearchResult enumerate_optimal_cross_pairs(const Params& p, const SearchBudget& budget = {});

// Generic engine over an arbitrary universe of vertex-set words.  The claw
// module reuses these on its own universe.
struct UniverseResult {
    long long optimum = 0;
    std::vector<std::vector<int>> witness_indices; // into the universe, sorted
    std::uint64_t explored_nodes = 0;
};

// Largest star: max over vertex slots of the number of sets containing it.
UniverseResult universe_star_max(const std::vector<word>& sets, int slots);

// Same-support pattern-shift cover classes for the I^r_{n,k} universe.
std::vector<int> gamma_shift_classes(const Params& p, const std::vector<word>& sets);

// With transitive_sets, the universe's automorphism group is transitive on
// sets, so the value search may fix sets[0] as a member (the Gamma meet
// universes are; the claw universe is not).
// cover_classes (optional): ids of pairwise-disjoint set classes, a clique
// cover of the disjointness relation used as an extra upper bound.
UniverseResult universe_empty_cap_max(const std::vector<word>& sets, int slots,
                                      const SearchBudget& budget,
                                      bool transitive_sets = false,
                                      const std::vector<int>& cover_classes = {});

UniverseResult universe_empty_cap_enumerate(const std::vector<word>& sets, int slots,
                                            long long target, const SearchBudget& budget,
                                            int workers = 1,
                                            const std::vector<int>& cover_classes = {});

struct UniversePairResult {
    long long optimum = 0;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pair_indices;
    std::uint64_t explored_nodes = 0;
};

UniversePairResult universe_max_cross(const std::vector<word>& sets, bool collect_all,
                                      const SearchBudget& budget);

} // namespace indfam
