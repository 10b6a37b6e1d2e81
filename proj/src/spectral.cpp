#include "sgap/spectral.hpp"

#include <cmath>

#include "sgap/errors.hpp"

namespace sgap {

RatFunc entropy_function(const GapSpec& spec) {
    GapSpec c = canonicalize(spec);
    if (c.is_finite()) {
        // f = (x^{s_k+1} - sum_i x^{s_k - s_i}) / x^{s_k+1}
        int64_t sk = c.s_k();
        IntPoly num = IntPoly::monomial(static_cast<int>(sk) + 1);
        for (int64_t s : c.finite_gaps) num = num - IntPoly::monomial(static_cast<int>(sk - s));
        return RatFunc(num, IntPoly::monomial(static_cast<int>(sk) + 1));
    }

    const auto trans = c.transient_sums();  // s_1 .. s_k
    if (classify(c) == ShiftClass::CofiniteSFT) {
        // f = 1 - sum_{i<k} x^{-(s_i+1)} - x^{-(s_k+1)} * x/(x-1), cleared to
        // the common denominator x^{s_k} (x-1).
        int64_t sk = trans.back();
        IntPoly xm1 = IntPoly::x() - IntPoly::constant(1);
        IntPoly den = IntPoly::monomial(static_cast<int>(sk)) * xm1;
        IntPoly num = den;
        for (size_t i = 0; i + 1 < trans.size(); ++i)
            num = num - xm1 * IntPoly::monomial(static_cast<int>(sk - trans[i] - 1));
        num = num - IntPoly::constant(1);
        return RatFunc(num, den);
    }

    // Strictly sofic: the periodic window s_k..s_{k+l-1} repeats with period
    // g, so its geometric tail sums to x^g/(x^g - 1) times the window terms.
    // Cleared to the common denominator x^{sigma+1} (x^g - 1) with
    // sigma = s_{k+l-1}:
    //   num = x^{sigma+1}(x^g - 1) - (x^g - 1) sum_{i<k} x^{sigma - s_i}
    //                             - x^g sum_{window} x^{sigma - s_i}
    const auto window = c.period_window_sums();  // s_k .. s_{k+l-1}
    int64_t sigma = window.back();
    int64_t g = c.period_sum();
    IntPoly xg1 = IntPoly::monomial(static_cast<int>(g)) - IntPoly::constant(1);
    IntPoly den = IntPoly::monomial(static_cast<int>(sigma) + 1) * xg1;
    IntPoly num = den;
    for (size_t i = 0; i + 1 < trans.size(); ++i)
        num = num - xg1 * IntPoly::monomial(static_cast<int>(sigma - trans[i]));
    for (int64_t s : window)
        num = num - IntPoly::monomial(static_cast<int>(g)) * IntPoly::monomial(static_cast<int>(sigma - s));
    return RatFunc(num, den);
}

EntropyResult entropy(const GapSpec& spec, double tol) {
    if (tol <= 0) throw ValidationError("entropy: tolerance must be positive");
    RatFunc f = entropy_function(spec);
    EntropyResult r;
    r.cleared_numerator = f.num();

    const IntPoly& p = f.num();
    auto sign_at = [&p](const BigRat& x) { return sgn(p.eval(x)); };

    BigRat lo(1), hi(2);
    int slo = sign_at(lo), shi = sign_at(hi);
    double lambda;
    if (slo == 0) {
        lambda = 1.0;  // |S| = 1: entropy zero, exactly
    } else if (shi == 0) {
        lambda = 2.0;  // S = {0,1,2,...}: the full 2-shift, exactly
    } else {
        if (slo > 0 || shi < 0)
            throw ConvergenceError("entropy: numerator does not bracket a root on [1,2] (internal bug)");
        // f is negative left of the Perron value and positive right of it on
        // (1,2], so plain bisection homes in on the unique sign change.
        BigRat width = hi - lo;
        BigRat target(tol);
        while (width > target) {
            BigRat mid = (lo + hi) / 2;
            int s = sign_at(mid);
            if (s == 0) {
                lo = hi = mid;
                break;
            }
            (s < 0 ? lo : hi) = mid;
            width = hi - lo;
        }
        lambda = BigRat((lo + hi) / 2).get_d();
    }
    r.lambda = lambda;
    r.h_bits = std::log2(lambda);
    r.residual = std::abs(f.eval(lambda));
    return r;
}

double perron_root(const IntMatrix& a, double tol, int max_iter) {
    if (!a.square() || a.rows() == 0) throw DimensionError("perron_root: need a nonempty square matrix");
    int n = a.rows();
    // Work on M = A + Id: irreducible nonnegative + positive diagonal makes M
    // primitive, so the Collatz-Wielandt bounds min_i (Mv)_i/v_i and
    // max_i (Mv)_i/v_i close in on rho(M) = rho(A) + 1.
    std::vector<double> v(static_cast<size_t>(n), 1.0), w(static_cast<size_t>(n));
    for (int it = 0; it < max_iter; ++it) {
        double lo = 0.0, hi = 0.0, norm = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = v[static_cast<size_t>(i)];  // the +Id term
            for (int j = 0; j < n; ++j) {
                const BigInt& aij = a.at(i, j);
                if (aij != 0) acc += aij.get_d() * v[static_cast<size_t>(j)];
            }
            w[static_cast<size_t>(i)] = acc;
            double q = acc / v[static_cast<size_t>(i)];
            if (i == 0) {
                lo = hi = q;
            } else {
                lo = std::min(lo, q);
                hi = std::max(hi, q);
            }
            norm = std::max(norm, acc);
        }
        if (hi - lo <= tol) return (lo + hi) / 2.0 - 1.0;
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] / norm;
    }
    throw ConvergenceError("perron_root: iteration cap reached before tolerance");
}

CharPolyIdentityReport char_poly_identity_report(const GapSpec& spec) {
    GapSpec c = canonicalize(spec);
    CharPolyIdentityReport rep;
    rep.tag = case_tag(c);
    rep.char_poly = char_poly(build_presentation(c).adjacency);
    rep.f_s = entropy_function(c);
    rep.q_s = RatFunc(rep.char_poly * rep.f_s.den(), rep.f_s.num());

    // The identity for each case, stated as lhs_factor * chi = rhs_factor * f_S
    // with polynomial factors (so both sides clear to integer polynomials).
    IntPoly lhs_factor = IntPoly::constant(1);
    IntPoly rhs_factor;
    int64_t g = c.is_finite() ? 0 : c.period_sum();
    switch (rep.tag) {
        case CaseTag::FiniteCase:
            rhs_factor = IntPoly::monomial(static_cast<int>(c.s_k()) + 1);
            rep.identity = "chi = x^(s_k+1) * f_S";
            break;
        case CaseTag::CofiniteCase:
            rhs_factor = IntPoly::monomial(static_cast<int>(c.s_k())) *
                         (IntPoly::x() - IntPoly::constant(1));
            rep.identity = "chi = x^s_k (x-1) * f_S";
            break;
        case CaseTag::WrapDouble:
        case CaseTag::WrapRoot:
            rhs_factor = IntPoly::monomial(static_cast<int>(g)) - IntPoly::constant(1);
            rep.identity = "chi = (x^g - 1) * f_S";
            break;
        case CaseTag::WrapTransient: {
            const auto sums = c.transient_sums();
            int64_t sigma = c.period_window_sums().back();
            int64_t sk_minus_1 = sums[sums.size() - 2];
            lhs_factor = IntPoly::monomial(static_cast<int>(sigma - sk_minus_1));
            rhs_factor = IntPoly::monomial(static_cast<int>(sigma) + 1) *
                         (IntPoly::monomial(static_cast<int>(g)) - IntPoly::constant(1));
            rep.identity = "x^(sigma - s_{k-1}) * chi = x^(sigma+1) (x^g - 1) * f_S";
            break;
        }
        case CaseTag::WrapWindow: {
            int64_t sigma = c.period_window_sums().back();
            lhs_factor = IntPoly::monomial(static_cast<int>(g));
            rhs_factor = IntPoly::monomial(static_cast<int>(sigma) + 1) *
                         (IntPoly::monomial(static_cast<int>(g)) - IntPoly::constant(1));
            rep.identity = "x^g * chi = x^(sigma+1) (x^g - 1) * f_S";
            break;
        }
    }

    // Cleared comparison: lhs_factor * chi * f.den == rhs_factor * f.num.
    IntPoly lhs = lhs_factor * rep.char_poly * rep.f_s.den();
    IntPoly rhs = rhs_factor * rep.f_s.num();
    bool literal = (lhs == rhs);

    if (!contains(c, 0)) {
        rep.holds = literal;
        rep.adjustment = literal ? "literal" : "none";
        return rep;
    }

    // 0 in S: record empirically which form holds — the literal identity, or
    // the right side scaled by (x-1)/x as the source text suggests.
    rep.adjusted = true;
    if (literal) {
        rep.holds = true;
        rep.adjustment = "literal";
        return rep;
    }
    IntPoly lhs_scaled = IntPoly::x() * lhs;
    IntPoly rhs_scaled = (IntPoly::x() - IntPoly::constant(1)) * rhs;
    if (lhs_scaled == rhs_scaled) {
        rep.holds = true;
        rep.adjustment = "scale-by-(x-1)/x";
        return rep;
    }
    rep.holds = false;
    rep.adjustment = "none";
    return rep;
}

}  // namespace sgap
