#pragma once

#include <gmpxx.h>

#include <string>

namespace sgap {

// All exact arithmetic in this library runs on GMP via its C++ bindings.
// Doubles appear only at the explicitly numeric edges (entropy values,
// Perron root, block-count entropy estimates).
using BigInt = mpz_class;
using BigRat = mpq_class;

// Exact quotient a/b for b | a. Asserts divisibility in debug builds; the
// callers (Bareiss elimination, interpolation by forward differences) are
// correct only when the division is exact.
inline BigInt div_exact(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline int sign_of(const BigInt& a) { return mpz_sgn(a.get_mpz_t()); }

inline bool fits_int64(const BigInt& a) {
    return a.fits_slong_p();  // long is 64-bit on this platform
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

}  // namespace sgap
