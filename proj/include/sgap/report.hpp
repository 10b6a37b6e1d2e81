#pragma once

#include <map>
#include <string>
#include <vector>

#include "sgap/bowen_franks.hpp"
#include "sgap/gapset.hpp"
#include "sgap/matrix.hpp"
#include "sgap/poly.hpp"
#include "sgap/presentation.hpp"
#include "sgap/ratfunc.hpp"
#include "sgap/verify.hpp"

namespace sgap {

struct ReportOptions {
    int periodic_n = 20;      // how many p_n to tabulate
    int check_pmax = 8;       // agreement range inside the embedded checks
    double tol = 1e-12;       // entropy tolerance
    bool run_checks = true;   // embedding the cross-checks is optional (they cost time)
};

// Everything the analyzer computes for one spec, in one serialisable record.
struct AnalysisReport {
    std::string spec;              // canonical rendering
    std::string shift_class;       // FiniteSFT / CofiniteSFT / StrictlySofic
    std::string case_tag;
    bool degenerate = false;
    int vertices = 0;
    IntMatrix adjacency;
    IntPoly char_poly_coeffs;      // variable x, ascending
    double lambda = 0.0;
    double h_bits = 0.0;
    double residual = 0.0;
    RatFunc f_s;                   // entropy function, variable x
    RatFunc q_s;                   // chi / f_s, variable x
    RatFunc zeta;                  // variable t
    std::vector<BigInt> periodic_counts;
    AbelianGroup bf;
    AbelianGroup bf_t;
    int bf1_rank = 0;
    int bf1_t_rank = 0;
    int det_sign = 0;              // sign of det(Id - A)
    std::string flow;              // flow-invariant summary ("" when degenerate)
    std::int64_t graph_period = 0;
    std::map<std::string, std::string> checks;

    bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport build_analysis(const GapSpec& spec, const ReportOptions& opt = {});

// JSON (de)serialisation.  Big integers are emitted as JSON numbers when they
// fit in int64 and as decimal strings otherwise; parsing accepts both, so a
// report survives a round trip bit-for-bit.
std::string report_to_json(const AnalysisReport& rep, int indent = 2);
AnalysisReport report_from_json(const std::string& text);

// Terminal rendering.
std::string report_to_text(const AnalysisReport& rep);

}  // namespace sgap
