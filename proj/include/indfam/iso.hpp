#pragma once

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "indfam/core.hpp"
#include "indfam/ground.hpp"
#include "indfam/rng.hpp"

namespace indfam {

// Automorphism of Gamma_{n,k}: a clique permutation composed with independent
// within-clique relabelings; group order (k!)^n * n!.
struct WreathElement {
    std::vector<int> clique_perm;          // 0-based, image of clique i
    std::vector<std::vector<int>> within;  // n permutations of [k], 0-based

    bool is_identity() const;
};

WreathElement wreath_identity(const Params& p);
WreathElement random_wreath(const Params& p, SplitMix64& rng);
i128 wreath_order(const Params& p);

// Image family, re-sorted.
Family apply(const WreathElement& g, const Family& f);

inline constexpr i128 kDefaultGroupBudget = 10'000'000;

// Minimum hex serialization over the full group.  Families with equal
// canonical forms are exactly the isomorphic ones.
std::string canonical_form(const Family& f, i128 budget = kDefaultGroupBudget);

// Every serialization in the orbit of f; membership tests against this set
// replace per-witness canonicalization when classifying many families.
std::unordered_set<std::string> orbit_forms(const Family& f, i128 budget = kDefaultGroupBudget);

bool are_isomorphic(const Family& a, const Family& b, i128 budget = kDefaultGroupBudget);

// Ordered-pair serialization is "A|B"; pairs are matched unordered, so each
// group image contributes min(A|B, B|A).
std::string pair_canonical_form(const Family& a, const Family& b,
                                i128 budget = kDefaultGroupBudget);
std::unordered_set<std::string> pair_orbit_forms(const Family& a, const Family& b,
                                                 i128 budget = kDefaultGroupBudget);
std::string pair_form(const Family& a, const Family& b);

// S_n relabelings of ground families.
std::string ground_canonical_form(const GroundFamily& g, i128 budget = kDefaultGroupBudget);
bool ground_are_isomorphic(const GroundFamily& a, const GroundFamily& b,
                           i128 budget = kDefaultGroupBudget);

// Sorted membership-count multiset, an isomorphism invariant.
std::vector<long long> sorted_degree_profile(const Family& f);

// Number of isomorphism classes among `families` (orbit-removal; every member
// of an orbit is erased once a representative is seen).
std::size_t count_isomorphism_classes(const std::vector<Family>& families,
                                      i128 budget = kDefaultGroupBudget);

} // namespace indfam
