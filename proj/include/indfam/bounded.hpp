#pragma once

#include <string>
#include <utility>
#include <vector>

#include "indfam/exact.hpp"
#include "indfam/ground.hpp"

namespace indfam {

// Smallest up-family (within size <= r) containing g.
GroundFamily up_closure(const GroundFamily& g);
bool is_up_family(const GroundFamily& g);

bool is_r_maximal_intersecting(const GroundFamily& g);
bool is_r_maximal_cross_pair(const GroundFamily& s, const GroundFamily& t);

// Scans the universe in scan order, adding every set compatible with the
// current family.  For pairs: one side completes fully first, then the other
// completes against it.
GroundFamily maximalize_intersecting(const GroundFamily& g);
std::pair<GroundFamily, GroundFamily> maximalize_cross_pair(const GroundFamily& s,
                                                            const GroundFamily& t);

GroundFamily uniform_part(const GroundFamily& g, int l);

// V_{n,r} = {[2,r+1]} + {X : 1 in X, X meets [2,r+1]};  X_{n,r} = {[r]};
// Y_{n,r} = {Y : Y meets [r]}.
GroundFamily v_family(int n, int r);
GroundFamily x_family(int n, int r);
GroundFamily y_family(int n, int r);

// |V_{n,r}(l)|: C(n-1,l-1) - C(n-r-1,l-1), plus 1 at l = r.
i128 v_uniform_size(int n, int r, int l);

// |S(n-l)| + |T(n-l)| + |S(l)| + |T(l)| == 2 C(n,l) for an r-maximal
// cross-intersecting pair with n/2 <= r <= n and l, n-l <= r.
bool check_complement_identity(const GroundFamily& s, const GroundFamily& t, int l);

// C(n,l) - C(n-r,l) for l < r; 1 + C(n,r) - C(n-r,r) at l = r.
i128 cint_uniform_bound(int n, int r, int l);

struct CheckOutcome {
    bool ok = false;
    std::string clause; // which side of the statement fired
};

// C(n-m,m) - C(n-r,m) >= 1 with equality iff r = m+1 and n = 2m
// (needs m < r <= n and 2m <= n).
CheckOutcome binom_diff_check(int n, int m, int r);

// x C_{r,l} + y C_{r,n-l} <= x0 C_{r,l} + y0 C_{r,n-l} for x <= x0,
// x + y = x0 + y0, with equality iff x = x0.  Integer instantiation.
CheckOutcome pairwise_opt_check(int n, int k, int r, int l, i128 x0, i128 y0, i128 x, i128 y);

// The paired-sum optimization: indices 1..r partitioned into m1 and m2 with
// bijection psi : m2 -> m3 (m3 = values of psi).  Hypotheses are validated,
// then sum c x <= sum c y is checked; under the strict-coefficient hypothesis
// equality must force x == y.
CheckOutcome summing_check(const std::vector<i128>& x, const std::vector<i128>& y,
                           const std::vector<i128>& c, const std::vector<int>& m1,
                           const std::vector<int>& m2, const std::vector<int>& psi);

// |B(l)| <= |V_{n,r}(l)| for an r-maximal intersecting B with empty common
// intersection, 2 <= l <= min(r, n/2).
bool apply_hm_bound(const GroundFamily& b, int l);

// For every a in [n] there is an r-set in B avoiding a.
bool nonzerodiff_check(const GroundFamily& b);

std::vector<int> ground_common_intersection(const GroundFamily& g);

} // namespace indfam
