#pragma once

#include <string>
#include <vector>

#include "indfam/bounded.hpp"
#include "indfam/core.hpp"
#include "indfam/search.hpp"

namespace indfam {

// Depth-two claw G_n: root c, middles b_i adjacent to c, leaves a_i adjacent
// to b_i.  Bit layout mirrors Gamma_{n,2} on the root-free part:
//   leaf a_i  -> bit 2(i-1)
//   mid  b_i  -> bit 2(i-1)+1
//   root c    -> bit 2n
struct ClawVertex {
    enum class Kind { Root, Mid, Leaf };
    Kind kind = Kind::Root;
    int leg = 0; // 1..n; unused for the root
};

int claw_bit(int n, ClawVertex v);
ClawVertex claw_vertex_at(int n, int bit);

struct ClawFamily {
    int n = 0;
    int r = 0;
    std::vector<word> members; // sorted ascending

    std::size_t size() const { return members.size(); }
    friend bool operator==(const ClawFamily&, const ClawFamily&) = default;
};

bool claw_set_valid(int n, word bits); // no adjacent pair present
ClawFamily make_claw_family(int n, int r, std::vector<word> members);

// All r-independent sets of G_n; |result| = C(n,r) 2^r + C(n,r-1).
ClawFamily enumerate_claw_independent(int n, int r);
i128 count_claw_independent(int n, int r);

// Size of the star at a leaf: C(n-1,r-1) 2^(r-1) + C(n-1,r-2).
i128 canonical_claw_size(int n, int r);

// sum_{j=0}^{r-1} C(m,j) C(n-m-1,r-j-1) 2^(r-j-1)
i128 tech_sum(int n, int r, int m);
// > 1 + C(n-1,r-1) when m < n-1; == C(n-1,r-1) when m = n-1.
// Needs 4 <= r <= n-1 and m in {r, r-1, r-2}.
CheckOutcome tech_check(int n, int r, int m);

// The r = n family that beats every star: root-free sets with a leaf
// majority (plus the a_1 tie-break class for even n), together with all
// root-containing sets.  Size 2^(n-1) + n.
ClawFamily prop_counterexample_family(int n);

bool claw_is_intersecting(const ClawFamily& f);
std::vector<ClawVertex> claw_common_intersection(const ClawFamily& f);

// psi: root-free claw sets -> independent sets of Gamma_{n,2},
// a_i -> (i,1), b_i -> (i,2).
IndSet claw_psi(int n, word root_free_bits);

struct ClawSearchResult {
    long long optimum = 0;
    std::vector<ClawFamily> witnesses;
    std::uint64_t explored_nodes = 0;
};

// Exact maximum intersecting family size among r-independent sets of G_n
// (star scan + empty-common-intersection branch and bound, as in module
// search).
ClawSearchResult max_intersecting_claw(int n, int r, const SearchBudget& budget = {},
                                       bool enumerate_optima = false, int workers = 1);

// Canonical form under the leg permutations S_n (the automorphisms of G_n).
std::string claw_canonical_form(const ClawFamily& f);

// Serialization: header "claw n r", vertex tokens "c", "a<i>", "b<i>".
std::string claw_to_text(const ClawFamily& f);
ClawFamily claw_from_text(const std::string& text);

} // namespace indfam
