#pragma once

#include <utility>

#include "indfam/core.hpp"

namespace indfam {

enum class FamilyTag { EKR, HM, HM_CROSS_H, HM_CROSS_M, TRIANGLE_R3, MAIN_RN };

const char* family_tag_name(FamilyTag tag);
FamilyTag family_tag_from_name(const std::string& name);

struct NamedFamily {
    FamilyTag tag;
    Params params;
    Family family;        // for the cross pair, the H side
    Family second;        // cross pair only: the M side (empty otherwise)
};

// Star at `anchor`: all members of I^r containing it.
Family ekr_family(const Params& p, Vertex anchor);
i128 ekr_size(const Params& p); // C(n-1, r-1) k^(r-1)

// H = [2, r+1] x {1} plus every star member meeting it; needs 2 <= r <= n-1.
Family hm_family(const Params& p);
// 1 + sum_{j=1}^{r-1} C(r,j) C(n-r-1, r-j-1) k^(r-j-1) (k^j - (k-1)^j)
i128 hm_size(const Params& p);

// ( { [r] x {1} },  { X : X meets [r] x {1} } )
std::pair<Family, Family> hm_cross_pair(const Params& p);

// |{ X : X meets [r] x {1} }| by complement count:
// C(n,r) k^r - sum_j C(r,j) (k-1)^j C(n-r, r-j) k^(r-j).
i128 hm_cross_m_size(const Params& p);

// r = 3 only: all X with |X cap {(1,1),(2,1),(3,1)}| >= 2; size 3kn - 6k - 2.
Family triangle_family(const Params& p);
i128 triangle_size(const Params& p);

// r = n extremal family of the main theorem; size k^(n-1) - (k-1)^(n-1) + k-1.
Family main_rn_family(int n, int k);
i128 main_rn_size(int n, int k);

// Membership count of each vertex slot, an isomorphism invariant.
std::vector<long long> degree_profile(const Family& f);

NamedFamily build_named(FamilyTag tag, const Params& p);

} // namespace indfam
