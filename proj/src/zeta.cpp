#include "sgap/zeta.hpp"

#include "sgap/errors.hpp"
#include "sgap/spectral.hpp"

namespace sgap {

RatFunc zeta_closed_form(const GapSpec& spec) {
    GapSpec c = canonicalize(spec);
    RatFunc f_recip = entropy_function(c).substitute_reciprocal();  // f_S(1/t)
    RatFunc z = f_recip.reciprocal();
    if (!c.is_finite()) {
        RatFunc one_minus_t = RatFunc::from_poly(IntPoly::constant(1) - IntPoly::x());
        z = z / one_minus_t;
    }
    return z;
}

RatFunc zeta_from_matrix(const GapSpec& spec, const IntMatrix& adjacency) {
    GapSpec c = canonicalize(spec);
    IntPoly chi = char_poly(adjacency);
    IntPoly det_id_minus_ta = chi.reverse_at_degree(adjacency.rows());
    RatFunc z(IntPoly::constant(1), det_id_minus_ta);
    if (classify(c) == ShiftClass::StrictlySofic) {
        // The g-cycle of 0-edges maps g graph points onto the single fixed
        // point 0^infinity; multiplying by (1-t^g)/(1-t) trades those g
        // points per divisible period for the one true fixed point.
        int64_t g = c.period_sum();
        RatFunc corr(IntPoly::constant(1) - IntPoly::monomial(static_cast<int>(g)),
                     IntPoly::constant(1) - IntPoly::x());
        z = z * corr;
    }
    return z;
}

std::vector<BigInt> periodic_counts(const RatFunc& zeta, int n_max) {
    if (n_max < 1) throw IndexError("periodic_counts: need n_max >= 1");
    const IntPoly& p = zeta.num();
    const IntPoly& q = zeta.den();
    if (p.coeff(0) == 0 || p.coeff(0) != q.coeff(0))
        throw NormalizationError("periodic_counts: zeta(0) != 1 (constant terms " +
                                 p.coeff(0).get_str() + " / " + q.coeff(0).get_str() + ")");

    // t zeta'/zeta = t (p'q - q'p) / (pq) = u/v with v(0) != 0, so the series
    // coefficients satisfy c_m = (u_m - sum_{j>=1} v_j c_{m-j}) / v_0.
    IntPoly u = (p.derivative() * q - q.derivative() * p).shifted(1);
    IntPoly v = p * q;
    const BigInt& v0 = v.coeff(0);
    std::vector<BigRat> c(static_cast<size_t>(n_max) + 1, BigRat(0));
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(n_max));
    for (int m = 1; m <= n_max; ++m) {
        BigRat acc(u.coeff(m));
        for (int j = 1; j <= m; ++j)
            if (v.coeff(j) != 0) acc -= BigRat(v.coeff(j)) * c[static_cast<size_t>(m - j)];
        acc /= v0;
        c[static_cast<size_t>(m)] = acc;
        if (acc.get_den() != 1)
            throw NonIntegerCoefficient("periodic_counts: p_" + std::to_string(m) +
                                        " is not an integer: " + acc.get_str());
        out.push_back(acc.get_num());
    }
    return out;
}

namespace {

BigInt apply_correction(const GapSpec& canonical, int n, const BigInt& trace) {
    if (classify(canonical) != ShiftClass::StrictlySofic) return trace;
    int64_t g = canonical.period_sum();
    return (n % g == 0) ? BigInt(trace - (g - 1)) : BigInt(trace + 1);
}

}  // namespace

BigInt trace_corrected_count(const GapSpec& spec, const IntMatrix& adjacency, int n) {
    GapSpec c = canonicalize(spec);
    return apply_correction(c, n, trace_power(adjacency, n));
}

std::vector<BigInt> trace_corrected_counts_upto(const GapSpec& spec, const IntMatrix& adjacency,
                                                int n_max) {
    GapSpec c = canonicalize(spec);
    std::vector<BigInt> traces = trace_powers_upto(adjacency, n_max);
    std::vector<BigInt> out;
    out.reserve(traces.size());
    for (int n = 1; n <= n_max; ++n)
        out.push_back(apply_correction(c, n, traces[static_cast<size_t>(n) - 1]));
    return out;
}

}  // namespace sgap
