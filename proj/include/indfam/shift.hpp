#pragma once

#include <utility>

#include "indfam/core.hpp"
#include "indfam/ground.hpp"

namespace indfam {

// Compression target: push (i, s) down to (i, 1).  s >= 2 always.
struct ShiftIndex {
    int clique = 0;
    int pos = 0;
};

ShiftIndex make_shift_index(const Params& p, int clique, int pos);

// Replace (i,s) by (i,1) when present, otherwise identity.
IndSet push_up(const Params& p, IndSet x, ShiftIndex idx);

// { P(X) : X in F } united with { X : X and P(X) both in F }.  Preserves |F|.
Family compress_family(const Family& f, ShiftIndex idx);

bool is_stable(const Family& f);

// Fixed-point iteration over all shift indices in scan order (clique
// ascending, position ascending).  Same-clique compressions do not commute,
// so the scan loops to a global fixed point rather than assuming one pass
// suffices.  Each effective application strictly lowers the total position
// sum, which bounds the iteration.
Family stabilize(const Family& f);

// Applies identical compressions to both sides until both are stable, the
// size- and cross-intersection-preserving route to a stable pair.
std::pair<Family, Family> stabilize_pair(const Family& a, const Family& b);

// phi(X) = { i : (i,1) in X }
GroundSet project(const Params& p, IndSet x);
GroundFamily project_family(const Family& f);

// phi^{-1}: all A in I^r with phi(A) a member of g.
Family lift(const GroundFamily& g, const Params& p);

// Lift coefficient C^{n,k}_{r,l} = C(n-l, r-l) (k-1)^(r-l); 0 out of range.
i128 coef(int n, int k, int r, int l);

// sum_l C^{n,k}_{r,l} |g(l)|, which must equal |lift(g, p)|.
i128 lifted_size(const GroundFamily& g, const Params& p);

} // namespace indfam
