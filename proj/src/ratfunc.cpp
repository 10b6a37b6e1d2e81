#include "sgap/ratfunc.hpp"

#include "sgap/errors.hpp"

namespace sgap {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ValidationError("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly::constant(1);
        return;
    }
    int v = std::min(num_.valuation(), den_.valuation());
    if (v > 0) {
        // Cancel the common x^v factor first; it is cheap and shrinks the
        // gcd computation below.
        auto drop = [v](const IntPoly& p) {
            std::vector<BigInt> c(p.coeffs().begin() + v, p.coeffs().end());
            return IntPoly(std::move(c));
        };
        num_ = drop(num_);
        den_ = drop(den_);
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw ValidationError("RatFunc: division by zero function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

bool RatFunc::equals(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw ValidationError("RatFunc: reciprocal of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::substitute_reciprocal() const {
    int d = std::max(num_.degree(), den_.degree());
    if (d < 0) return RatFunc();  // zero function stays zero
    return RatFunc(num_.reverse_at_degree(d), den_.reverse_at_degree(d));
}

BigRat RatFunc::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d == 0) throw ValidationError("RatFunc: evaluation at a pole");
    BigRat r = num_.eval(x) / d;
    r.canonicalize();
    return r;
}

double RatFunc::eval(double x) const { return num_.eval(x) / den_.eval(x); }

std::string RatFunc::to_string(const std::string& var) const {
    if (den_ == IntPoly::constant(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace sgap
