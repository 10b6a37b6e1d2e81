#pragma once

#include <map>
#include <string>
#include <vector>

#include "sgap/gapset.hpp"

namespace sgap {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

// One named cross-check verdict for one spec.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;  // short human-readable note (why skipped / what failed)
};

struct CheckOptions {
    int pmax = 8;         // periodic-point agreement range (capped at 16 by the oracle)
    double tol = 1e-12;   // entropy bisection tolerance
    int estimate_n = 24;  // block length for the finite-n entropy estimate
};

// Every cross-check this library knows how to run against one spec:
//   presentation_minimal      pairwise-distinct follower tails, labels resolve,
//                             row sums in {1,2}
//   presentation_irreducible  strong connectivity
//   case_matrix_match         closed-form adjacency == follower-set adjacency
//   char_poly_identity        the case identity linking chi and f_S
//   zeta_routes_equal         closed form == matrix route (cross-multiplied)
//   periodic_triple_agree     brute force == series == corrected traces, n <= pmax
//   entropy_consistent        bisection vs Perron vs finite-n estimate
//   bf_predictions               predicted group, transpose match, kernels, det < 0
//   det_sign_negative         sign of det(Id - A)
// Degenerate specs (|S| = 1) mark the group-prediction checks Skip.
std::vector<CheckResult> run_spec_checks(const GapSpec& spec, const CheckOptions& opt = {});

// Convenience: map form of run_spec_checks for embedding in reports.
std::map<std::string, std::string> checks_as_map(const std::vector<CheckResult>& checks);

}  // namespace sgap
