#pragma once

#include <string>

#include "sgap/gapset.hpp"
#include "sgap/presentation.hpp"
#include "sgap/ratfunc.hpp"

namespace sgap {

// The entropy function f_S(x) = 1 - sum_{s in S} x^{-(s+1)} as an exact
// rational function of x (geometric tails summed in closed form for infinite
// S). The Perron value of X(S) is the unique root of f_S in (1, 2].
RatFunc entropy_function(const GapSpec& spec);

struct EntropyResult {
    double lambda = 1.0;    // Perron value, root of f_S in [1, 2]
    double h_bits = 0.0;    // log2(lambda)
    double residual = 0.0;  // |f_S(lambda)| at the returned double
    IntPoly cleared_numerator;
};

// Root of the cleared numerator of f_S on [1, 2] by bisection with exact
// rational sign evaluations; the bracket is exact, so the answer is within
// tol of the true Perron value. |S| = 1 returns lambda = 1 exactly.
EntropyResult entropy(const GapSpec& spec, double tol = 1e-12);

// Perron root of a nonnegative irreducible integer matrix by power iteration
// on A + Id (shift kills periodicity) with Collatz-Wielandt enclosure bounds;
// returns when the enclosure width drops below tol, throws ConvergenceError
// at the iteration cap.
double perron_root(const IntMatrix& a, double tol = 1e-10, int max_iter = 2000000);

// Which closed-form identity links char_poly(A) to f_S for this case, and
// whether it holds. For 0 in S the literal identity is tried first and the
// (x-1)/x-scaled variant second; `adjusted` records that the 0-in-S path ran
// and `adjustment` which variant held.
struct CharPolyIdentityReport {
    CaseTag tag = CaseTag::FiniteCase;
    IntPoly char_poly;     // det(x Id - A) for the minimal presentation
    RatFunc f_s;           // entropy function
    RatFunc q_s;           // char_poly / f_S
    std::string identity;  // human-readable statement of the checked identity
    bool holds = false;
    bool adjusted = false;         // 0 in S: empirical-adjustment path taken
    std::string adjustment;        // "", "literal", "scale-by-(x-1)/x", "none"
};

CharPolyIdentityReport char_poly_identity_report(const GapSpec& spec);

}  // namespace sgap
