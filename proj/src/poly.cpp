#include "sgap/poly.hpp"

#include <sstream>
#include <utility>

#include "sgap/errors.hpp"

namespace sgap {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(int k, BigInt c) {
    if (k < 0) throw IndexError("monomial: negative exponent " + std::to_string(k));
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(k) + 1, BigInt(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPoly::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

const BigInt& IntPoly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
    if (c == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

IntPoly IntPoly::shifted(int k) const {
    if (k < 0) throw IndexError("shifted: negative shift " + std::to_string(k));
    if (is_zero()) return IntPoly();
    std::vector<BigInt> r(static_cast<size_t>(k), BigInt(0));
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    IntPoly p;
    p.coeffs_ = std::move(r);
    return p;
}

IntPoly IntPoly::div_scalar_exact(const BigInt& d) const {
    if (d == 0) throw ValidationError("div_scalar_exact: division by zero");
    IntPoly r(*this);
    for (auto& a : r.coeffs_) {
        if (a % d != 0)
            throw NonIntegerCoefficient("div_scalar_exact: " + a.get_str() +
                                        " not divisible by " + d.get_str());
        a = div_exact(a, d);
    }
    return r;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<BigInt> r(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * BigInt(static_cast<long>(i));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reverse_at_degree(int n) const {
    if (n < degree())
        throw IndexError("reverse_at_degree: declared degree " + std::to_string(n) +
                         " below actual degree " + std::to_string(degree()));
    std::vector<BigInt> r(static_cast<size_t>(n) + 1, BigInt(0));
    for (int i = 0; i <= n; ++i) r[static_cast<size_t>(i)] = coeff(n - i);
    return IntPoly(std::move(r));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double IntPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const BigInt& c : coeffs_) g = BigInt(gcd(g, c));
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    return div_scalar_exact(content());
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw ValidationError("poly_divexact: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw ValidationError("poly_divexact: not divisible (degree)");
    // Schoolbook long division. When b | a the quotient lies in Z[x], so every
    // leading-coefficient division along the way is exact.
    std::vector<BigInt> q(static_cast<size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    IntPoly r = a;
    const BigInt& lead = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        if (r.leading() % lead != 0) throw ValidationError("poly_divexact: not divisible");
        BigInt c = div_exact(r.leading(), lead);
        int k = r.degree() - b.degree();
        q[static_cast<size_t>(k)] = c;
        r = r - b.scaled(c).shifted(k);
    }
    if (!r.is_zero()) throw ValidationError("poly_divexact: not divisible (remainder)");
    return IntPoly(std::move(q));
}

namespace {

// Pseudo-remainder: the remainder of lc(b)^k * a divided by b for the minimal
// k that keeps the division in Z[x]. Only its vanishing/primitive part matter
// to the gcd computation below.
IntPoly poly_pseudo_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        r = r.scaled(b.leading()) - b.scaled(r.leading()).shifted(k);
    }
    return r;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    auto positive = [](IntPoly p) { return p.leading() < 0 ? -p : p; };
    if (a.is_zero()) return b.is_zero() ? IntPoly() : positive(b);
    if (b.is_zero()) return positive(a);
    BigInt c = BigInt(gcd(a.content(), b.content()));
    // Primitive pseudo-remainder sequence on the primitive parts.
    IntPoly r0 = a.primitive_part();
    IntPoly r1 = b.primitive_part();
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        IntPoly r2 = poly_pseudo_rem(r0, r1);
        if (!r2.is_zero()) r2 = r2.primitive_part();
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return positive(r0.scaled(c));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeff(i);
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace sgap
