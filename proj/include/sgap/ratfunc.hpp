#pragma once

#include <string>

#include "sgap/poly.hpp"

namespace sgap {

// Rational function num/den over Z[x], kept in canonical form: the
// constructor cancels the gcd (so the fraction is in lowest terms over Z,
// 0/q becomes 0/1) and makes the denominator's leading coefficient positive.
// With that normalization the stored representation is unique, so operator==
// agrees with mathematical equality; `equals` decides the same relation by
// cross-multiplication without relying on canonicalization.
class RatFunc {
  public:
    RatFunc() : num_(IntPoly::zero()), den_(IntPoly::constant(1)) {}
    RatFunc(IntPoly num, IntPoly den);
    static RatFunc from_poly(IntPoly p) { return RatFunc(std::move(p), IntPoly::constant(1)); }
    static RatFunc constant(BigInt c) { return from_poly(IntPoly::constant(std::move(c))); }
    static RatFunc one() { return constant(1); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;

    // Cross-multiplication equality: a/b == c/d iff a*d == c*b. Equivalent
    // to operator== on canonical forms; kept as an independent decision
    // procedure (tests compare the two).
    bool equals(const RatFunc& o) const;

    bool operator==(const RatFunc& o) const = default;

    // 1 / f. Requires num != 0.
    RatFunc reciprocal() const;

    // f(1/t) as a rational function of t, clearing the common power of t:
    // with D = max(deg num, deg den), returns rev_D(num) / rev_D(den).
    RatFunc substitute_reciprocal() const;

    // Exact evaluation; throws ValidationError if den(x) = 0.
    BigRat eval(const BigRat& x) const;
    double eval(double x) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    IntPoly num_, den_;
};

}  // namespace sgap
