#pragma once

#include <string>
#include <vector>

#include "indfam/report.hpp"

namespace indfam {

// Verification suites.  Ids:
//   ekr-baseline   exact maximum intersecting = star size on the small grid
//   thm-main       maximum with empty common intersection = HM size, r < n
//   thm-main-uniq  optimum classification at (5,2,4), (5,3,4), (4,2,3)
//   thm-main-rn    r = n optima and the k = 2 coincidence
//   thm-aux        maximum cross-intersecting pair sums and their shapes
//   compression    push-up / stabilize property batch
//   lift           projection & lift identities
//   bounded        bounded-universe lemma batch (sub-ids selectable:
//                  lemma-l-n-l, cintsetrefinement, vufmpart, binomdiff,
//                  ineq, pairwise-opt, summing, apply-hm)
//   claw           depth-two claw suite (alias claw-ekr)
//   formulas       closed-form cross-checks
//   determinism    byte-identical reruns, worker-count independence
//   all            every suite above
std::vector<std::string> suite_ids();
bool is_suite_id(const std::string& id);

SuiteResult run_suite(const std::string& id, const RunConfig& cfg);
std::vector<SuiteResult> run_all_suites(const RunConfig& cfg);

} // namespace indfam
