#include <doctest.h>

#include <random>
#include <set>

#include "sgap/errors.hpp"
#include "sgap/matrix.hpp"
#include "sgap/poly.hpp"
#include "sgap/ratfunc.hpp"
#include "sgap/smith.hpp"

using namespace sgap;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

std::vector<std::vector<IntPoly>> char_matrix(const IntMatrix& a) {
    const int n = a.rows();
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i][j] = IntPoly::constant(-a.at(i, j));
            if (i == j) m[i][j] = m[i][j] + IntPoly::x();
        }
    return m;
}

}  // namespace

TEST_CASE("polynomial basics") {
    IntPoly p({-1, -1, 0, 1});  // x^3 - x - 1
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "x^3 - x - 1");
    CHECK(p.eval(BigInt(2)) == 5);
    CHECK(p.derivative() == IntPoly({-1, 0, 3}));
    CHECK(IntPoly({0, 0, 0}).is_zero());
    CHECK((p - p).is_zero());
    CHECK(p * IntPoly::zero() == IntPoly::zero());
    CHECK(IntPoly({0, 0, 2, 4}).valuation() == 2);
}

TEST_CASE("polynomial reversal and exact division") {
    IntPoly p({-1, -1, 0, 1});
    CHECK(p.reverse_at_degree(3) == IntPoly({1, 0, -1, -1}));   // 1 - t^2 - t^3
    CHECK(p.reverse_at_degree(4) == IntPoly({0, 1, 0, -1, -1}));
    CHECK_THROWS_AS(p.reverse_at_degree(2), IndexError);
    CHECK(IntPoly({2, 4, 6}).div_scalar_exact(2) == IntPoly({1, 2, 3}));
    CHECK_THROWS_AS(IntPoly({1, 2}).div_scalar_exact(2), NonIntegerCoefficient);
}

TEST_CASE("rational function normalization and arithmetic") {
    // Common monomial factor is cancelled, denominator leading made positive.
    RatFunc f(IntPoly({0, 0, 1}), IntPoly({0, -1, 0, -1}));  // x^2 / (-x - x^3)
    CHECK(f.num() == IntPoly({0, -1}));
    CHECK(f.den() == IntPoly({1, 0, 1}));
    CHECK_THROWS_AS(RatFunc(IntPoly::x(), IntPoly::zero()), ValidationError);

    RatFunc a(IntPoly({1}), IntPoly({0, 1}));   // 1/x
    RatFunc b(IntPoly({1}), IntPoly({0, 0, 1})); // 1/x^2
    CHECK((a * a).equals(b));
    CHECK((a + a).equals(RatFunc(IntPoly({2}), IntPoly({0, 1}))));
    CHECK((a - a).is_zero());
    CHECK((a / b).equals(RatFunc::from_poly(IntPoly::x())));
    CHECK(a.reciprocal().equals(RatFunc::from_poly(IntPoly::x())));
}

TEST_CASE("substitute reciprocal") {
    // f(x) = (x^2 - x - 1) / x^2  ->  f(1/t) = 1 - t - t^2.
    RatFunc f(IntPoly({-1, -1, 1}), IntPoly({0, 0, 1}));
    RatFunc g = f.substitute_reciprocal();
    CHECK(g.equals(RatFunc::from_poly(IntPoly({1, -1, -1}))));
    // Sanity: agreement at a sample point, f(1/3) == g(3).
    CHECK(f.eval(BigRat(1, 3)) == g.eval(BigRat(3)));
}

TEST_CASE("content, primitive part, polynomial exact division") {
    CHECK(IntPoly({2, 4, 6}).content() == 2);
    CHECK(IntPoly({3, -6}).content() == 3);
    CHECK(IntPoly::zero().content() == 0);
    CHECK(IntPoly({-2, -4}).primitive_part() == IntPoly({-1, -2}));
    CHECK(poly_divexact(IntPoly({-1, 0, 0, 1}), IntPoly({-1, 1})) == IntPoly({1, 1, 1}));
    CHECK(poly_divexact(IntPoly::zero(), IntPoly::x()) == IntPoly::zero());
    CHECK_THROWS_AS(poly_divexact(IntPoly({-1, 0, 0, 1}), IntPoly({-2, 1})), ValidationError);
    CHECK_THROWS_AS(poly_divexact(IntPoly({0, 0, 1}), IntPoly({0, 2})), ValidationError);
    CHECK_THROWS_AS(poly_divexact(IntPoly::x(), IntPoly::zero()), ValidationError);
}

TEST_CASE("polynomial gcd: fixed examples") {
    CHECK(poly_gcd(IntPoly({-1, 0, 1}), IntPoly({1, 2, 1})) == IntPoly({1, 1}));
    CHECK(poly_gcd(IntPoly({6}), IntPoly({4})) == IntPoly({2}));
    CHECK(poly_gcd(IntPoly::zero(), IntPoly({0, -1})) == IntPoly({0, 1}));
    CHECK(poly_gcd(IntPoly::zero(), IntPoly::zero()) == IntPoly::zero());
    // Coprime inputs give a constant gcd.
    CHECK(poly_gcd(IntPoly({-1, 1}), IntPoly({1, 1})).degree() == 0);
}

TEST_CASE("polynomial gcd properties (random)") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> deg(0, 4);
    auto random_poly = [&]() {
        std::vector<BigInt> c(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        return IntPoly(std::move(c));
    };
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly a = random_poly(), b = random_poly(), g = random_poly();
        if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
        IntPoly d = poly_gcd(a, b);
        CHECK(d.leading() > 0);
        // d divides both, and the cofactors are coprime.
        IntPoly qa = poly_divexact(a, d);
        IntPoly qb = poly_divexact(b, d);
        CHECK(poly_gcd(qa, qb) == IntPoly({1}));
        // gcd is multiplicative up to the sign normalization.
        IntPoly gd = g * d;
        if (gd.leading() < 0) gd = -gd;
        CHECK(poly_gcd(g * a, g * b) == gd);
        // Exact division inverts multiplication.
        CHECK(poly_divexact(a * b, b) == a);
    }
}

TEST_CASE("rational functions reduce to lowest terms") {
    // (x^2 - 1) / (x^3 + x^2) -> (x - 1) / x^2.
    RatFunc f(IntPoly({-1, 0, 1}), IntPoly({0, 0, 1, 1}));
    CHECK(f.num() == IntPoly({-1, 1}));
    CHECK(f.den() == IntPoly({0, 0, 1}));
    // (1 - t) / (1 - 2t + t^3) == 1 / (1 - t - t^2): same canonical form.
    RatFunc lhs(IntPoly({1, -1}), IntPoly({1, -2, 0, 1}));
    RatFunc rhs(IntPoly({1}), IntPoly({1, -1, -1}));
    CHECK(lhs == rhs);
    CHECK(lhs.equals(rhs));
    // A common constant factor cancels too.
    CHECK(RatFunc(IntPoly({2}), IntPoly({4})) == RatFunc(IntPoly({1}), IntPoly({2})));
    // Denominator 1 renders as a plain polynomial.
    RatFunc poly_like(IntPoly({0, 1, 1}) * IntPoly({3, 1}), IntPoly({3, 1}));
    CHECK(poly_like.num() == IntPoly({0, 1, 1}));
    CHECK(poly_like.den() == IntPoly({1}));
    CHECK(poly_like.to_string() == "x^2 + x");
}

TEST_CASE("canonical equality agrees with cross-multiplication (random)") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> deg(0, 3);
    auto random_poly = [&]() {
        std::vector<BigInt> c(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        return IntPoly(std::move(c));
    };
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly a = random_poly(), b = random_poly(), c = random_poly();
        if (b.is_zero() || c.is_zero()) continue;
        RatFunc scaled(a * c, b * c);
        RatFunc plain(a, b);
        CHECK(scaled == plain);
        CHECK(scaled.equals(plain));
    }
}

TEST_CASE("determinant: fixed examples") {
    CHECK(det(IntMatrix::from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(det(IntMatrix::identity(5)) == 1);
    CHECK(det(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);  // needs a pivot swap
    CHECK(det(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(det(IntMatrix::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == 30);
    CHECK(det(IntMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
    CHECK(det(IntMatrix::from_rows({{1, -1}, {-2, 1}})) == -1);
    CHECK(det(IntMatrix::from_rows(
              {{1, -1, 0, 0}, {0, 1, -1, 0}, {-1, 0, 1, -1}, {-1, -1, 0, 1}})) == -2);
}

TEST_CASE("determinant is multiplicative (random)") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix a = random_matrix(rng, 4, -5, 5);
        IntMatrix b = random_matrix(rng, 4, -5, 5);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("char_poly: fixed examples") {
    CHECK(char_poly(IntMatrix::from_rows({{2}})) == IntPoly({-2, 1}));
    CHECK(char_poly(IntMatrix::from_rows({{0, 1}, {2, 0}})) == IntPoly({-2, 0, 1}));
    CHECK(char_poly(IntMatrix::identity(3)) == IntPoly({-1, 3, -3, 1}));
    // Companion matrix of x^3 - x - 1.
    IntMatrix c = IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
    CHECK(char_poly(c) == IntPoly({-1, -1, 0, 1}));
    // A different matrix with the same characteristic polynomial.
    CHECK(char_poly(IntMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {1, 0, 0}})) ==
          IntPoly({-1, -1, 0, 1}));
}

TEST_CASE("char_poly matches cofactor oracle (random)") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + (int)(rng() % 4);  // 2..5
        IntMatrix a = random_matrix(rng, n, -3, 3);
        CHECK(char_poly(a) == poly_det_cofactor(char_matrix(a)));
    }
}

TEST_CASE("char_poly coefficients carry trace and determinant") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + (int)(rng() % 3);
        IntMatrix a = random_matrix(rng, n, -4, 4);
        IntPoly p = char_poly(a);
        CHECK(p.coeff(n) == 1);
        CHECK(p.coeff(n - 1) == -a.trace());
        BigInt d = det(a);
        CHECK(p.coeff(0) == (n % 2 == 0 ? d : -d));
    }
}

TEST_CASE("trace powers match explicit matrix powers") {
    IntMatrix a = IntMatrix::from_rows({{0, 1}, {2, 0}});
    CHECK(trace_power(a, 1) == 0);
    CHECK(trace_power(a, 2) == 4);
    CHECK(trace_power(a, 3) == 0);
    CHECK(trace_power(a, 4) == 8);
    auto all = trace_powers_upto(a, 6);
    IntMatrix p = a;
    for (int n = 1; n <= 6; ++n) {
        CHECK(all[n - 1] == p.trace());
        p = p * a;
    }
    // tr(A^n) for the Fibonacci matrix is the Lucas sequence 1, 3, 4, 7, ...
    IntMatrix fib = IntMatrix::from_rows({{1, 1}, {1, 0}});
    CHECK(trace_power(fib, 3) == 4);
    CHECK(trace_powers_upto(fib, 5) == std::vector<BigInt>{1, 3, 4, 7, 11});
}

TEST_CASE("structured determinant: fixed examples") {
    std::vector<IntPoly> d2(2, IntPoly::x());
    std::vector<IntPoly> d3(3, IntPoly::x());
    std::vector<IntPoly> d4(4, IntPoly::x());
    // Row 1 a pivot: the forced -1 at (1,1) kills the diagonal product and
    // the determinant is minus the sum of diagonal suffix products.
    CHECK(pivot_column_det(3, d3, {1}) == IntPoly({0, 0, -1}));        // -x^2
    CHECK(pivot_column_det(3, d3, {1, 3}) == IntPoly({-1, 0, -1}));    // -x^2 - 1
    CHECK(pivot_column_det(4, d4, {1, 2}) == IntPoly({0, 0, -1, -1})); // -x^3 - x^2
    // Row 1 not a pivot: the (1,1) diagonal entry survives and contributes
    // the full diagonal product on top of the suffix-product terms.
    CHECK(pivot_column_det(3, d3, {3}) == IntPoly({-1, 0, 0, 1}));         // x^3 - 1
    CHECK(pivot_column_det(4, d4, {2, 4}) == IntPoly({-1, 0, -1, 0, 1}));  // x^4 - x^2 - 1
    CHECK(pivot_column_det(2, d2, {2}) == IntPoly({-1, 0, 1}));            // x^2 - 1
}

TEST_CASE("closed-form structured determinant vs cofactor oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + (int)(rng() % 7);  // 1..7
        std::vector<IntPoly> diag;
        for (int i = 0; i < n; ++i)
            diag.push_back(IntPoly({(long)(rng() % 5) - 2, 1}));  // x + c
        std::set<int> pivots;
        const int npiv = 1 + (int)(rng() % n);
        while ((int)pivots.size() < npiv) pivots.insert(1 + (int)(rng() % n));
        IntPoly closed = pivot_column_det(n, diag, pivots);
        IntPoly generic = poly_det_cofactor(pivot_column_matrix(n, diag, pivots));
        CHECK(closed == generic);
    }
}

TEST_CASE("structured determinant rejects bad input") {
    std::vector<IntPoly> diag(3, IntPoly::x());
    CHECK_THROWS_AS(pivot_column_det(3, diag, {}), IndexError);
    CHECK_THROWS_AS(pivot_column_det(3, diag, {4}), IndexError);
    CHECK_THROWS_AS(pivot_column_det(2, diag, {1}), DimensionError);
}

TEST_CASE("smith normal form: fixed examples") {
    CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).diag ==
          std::vector<BigInt>{1, 6});
    CHECK(smith_normal_form(IntMatrix::from_rows({{2, 4}, {4, 8}})).diag ==
          std::vector<BigInt>{2, 0});
    CHECK(smith_normal_form(IntMatrix::from_rows({{0, -1}, {-1, 1}})).diag ==
          std::vector<BigInt>{1, 1});
    CHECK(smith_normal_form(IntMatrix::from_rows({{1, 0}, {0, 0}})).diag ==
          std::vector<BigInt>{1, 0});
    CHECK(smith_normal_form(IntMatrix::from_rows({{-1}})).diag == std::vector<BigInt>{1});
    // 3x3 with nontrivial torsion: diag(2, 6, 12) has SNF (2, 6, 12) already.
    CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0, 0}, {0, 6, 0}, {0, 0, 12}})).diag ==
          std::vector<BigInt>{2, 6, 12});
}

TEST_CASE("smith normal form properties (random)") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + (int)(rng() % 5);  // 2..6
        IntMatrix a = random_matrix(rng, n, -5, 5);
        SmithForm s = smith_normal_form(a);
        REQUIRE((int)s.diag.size() == n);
        // Divisibility chain, nonnegative entries, zeros trailing.
        for (int i = 0; i + 1 < n; ++i) {
            CHECK(s.diag[i] >= 0);
            if (s.diag[i + 1] != 0) {
                REQUIRE(s.diag[i] != 0);
                CHECK(s.diag[i + 1] % s.diag[i] == 0);
            }
            if (s.diag[i] == 0) CHECK(s.diag[i + 1] == 0);
        }
        // |det| preservation.
        BigInt d = det(a);
        BigInt prod = 1;
        for (const BigInt& v : s.diag) prod *= v;
        CHECK(abs(d) == abs(prod));
        // Transpose invariance.
        CHECK(smith_normal_form(a.transpose()).diag == s.diag);
    }
}
