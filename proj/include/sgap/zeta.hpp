#pragma once

#include <vector>

#include "sgap/gapset.hpp"
#include "sgap/matrix.hpp"
#include "sgap/ratfunc.hpp"

namespace sgap {

// Zeta function of X(S) from the entropy function alone:
//   finite S:    zeta(t) = 1 / f_S(1/t)
//   infinite S:  zeta(t) = 1 / ((1-t) f_S(1/t))
// (the extra (1-t) accounts for the fixed point 0^infinity).
RatFunc zeta_closed_form(const GapSpec& spec);

// Zeta function through the presentation: det(Id - tA) is the degree-n
// reversal of char_poly(A); SFT classes give 1/det(Id - tA), strictly sofic
// specs carry the (1 - t^g)/(1 - t) correction for the g-cycle of 0-edges
// that covers the fixed point 0^infinity.
RatFunc zeta_from_matrix(const GapSpec& spec, const IntMatrix& adjacency);

// Periodic-point counts p_1..p_N extracted exactly from t zeta'/zeta as a
// power series via the linear recurrence of its denominator. Throws
// NormalizationError unless zeta(0) = 1, NonIntegerCoefficient if a
// coefficient comes out fractional.
std::vector<BigInt> periodic_counts(const RatFunc& zeta, int n_max);

// p_n by the trace formula: tr(A^n) for SFT classes; for strictly sofic specs
// tr(A^n) - (g-1) when g | n, tr(A^n) + 1 otherwise.
BigInt trace_corrected_count(const GapSpec& spec, const IntMatrix& adjacency, int n);

// All of p_1..p_N by the trace formula with one incremental power sweep.
std::vector<BigInt> trace_corrected_counts_upto(const GapSpec& spec, const IntMatrix& adjacency,
                                                int n_max);

}  // namespace sgap
