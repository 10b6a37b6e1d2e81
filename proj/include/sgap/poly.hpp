#pragma once

#include <string>
#include <vector>

#include "sgap/bigint.hpp"

namespace sgap {

// Dense univariate polynomial over Z, coefficients ascending (coeffs[i] is
// the coefficient of x^i). The zero polynomial has an empty coefficient
// vector and degree -1. Every mutating path renormalizes (strips trailing
// zero coefficients), so two IntPoly values are equal iff their coefficient
// vectors are equal.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(BigInt c);
    // c * x^k
    static IntPoly monomial(int k, BigInt c = 1);
    // The polynomial x.
    static IntPoly x() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Smallest i with coeffs[i] != 0, or -1 for the zero polynomial.
    int valuation() const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    // Coefficient of x^i (zero outside the stored range).
    const BigInt& coeff(int i) const;
    BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const = default;

    IntPoly scaled(const BigInt& c) const;
    // p(x) * x^k
    IntPoly shifted(int k) const;
    // Exact division of every coefficient by d (d must divide each).
    IntPoly div_scalar_exact(const BigInt& d) const;
    IntPoly derivative() const;

    // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const;
    // p / content(p); the zero polynomial maps to itself.
    IntPoly primitive_part() const;

    // t^n * p(1/t) for n >= degree: the coefficient sequence reversed at
    // declared degree n.
    IntPoly reverse_at_degree(int n) const;

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;
    double eval(double x) const;

    // Human-readable rendering like "x^3 - x - 1" using the given variable
    // name; "0" for the zero polynomial.
    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

// Exact quotient a/b in Z[x]; throws ValidationError unless b divides a.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

// gcd in Z[x] (primitive pseudo-remainder sequence), normalized to a positive
// leading coefficient; poly_gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

}  // namespace sgap
