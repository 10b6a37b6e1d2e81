#include <doctest.h>

#include <map>

#include "sgap/corpus.hpp"
#include "sgap/errors.hpp"
#include "sgap/oracle.hpp"
#include "sgap/presentation.hpp"
#include "sgap/zeta.hpp"

using namespace sgap;

namespace {

std::vector<BigInt> big_vec(std::initializer_list<long> v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("golden mean zeta and its counts") {
    // S = {0,1}: zeta = 1 / (1 - t - t^2); p_n is the Lucas sequence.
    RatFunc z = zeta_closed_form(parse_spec("finite:0,1"));
    CHECK(z.equals(RatFunc(IntPoly({1}), IntPoly({1, -1, -1}))));
    CHECK(periodic_counts(z, 8) == big_vec({1, 3, 4, 7, 11, 18, 29, 47}));
}

TEST_CASE("full shift zeta") {
    RatFunc z = zeta_closed_form(parse_spec("delta:0|1"));
    CHECK(z.equals(RatFunc(IntPoly({1}), IntPoly({1, -2}))));
    CHECK(periodic_counts(z, 5) == big_vec({2, 4, 8, 16, 32}));
}

TEST_CASE("odd gaps zeta") {
    // zeta = (1 + t) / (1 - 2 t^2); p_n = 2^(n/2+1) - 1 for even n, 1 for odd n
    RatFunc z = zeta_closed_form(parse_spec("delta:1|2"));
    CHECK(z.equals(RatFunc(IntPoly({1, 1}), IntPoly({1, 0, -2}))));
    CHECK(periodic_counts(z, 6) == big_vec({1, 3, 1, 7, 1, 15}));
}

TEST_CASE("matrix route agrees with the closed form on the corpus") {
    for (const GapSpec& s : default_corpus()) {
        CAPTURE(render_spec(s));
        Presentation p = build_presentation(s);
        CHECK(zeta_closed_form(s).equals(zeta_from_matrix(s, p.adjacency)));
    }
}

TEST_CASE("trace counts match series counts") {
    for (const char* text : {"finite:1,2", "delta:2|1", "delta:1|2", "delta:2|1,2",
                             "delta:1,2|4", "delta:0|2", "finite:3"}) {
        CAPTURE(text);
        GapSpec s = parse_spec(text);
        Presentation p = build_presentation(s);
        auto series = periodic_counts(zeta_closed_form(s), 10);
        auto traces = trace_corrected_counts_upto(s, p.adjacency, 10);
        CHECK(series == traces);
        for (int n = 1; n <= 10; ++n)
            CHECK(trace_corrected_count(s, p.adjacency, n) == traces[n - 1]);
    }
}

TEST_CASE("series counts match the brute-force oracle") {
    for (const char* text : {"finite:0,1", "finite:1,2", "delta:2|1", "delta:1|2",
                             "delta:2|1,2", "delta:0|2", "delta:1,2|4", "finite:3"}) {
        CAPTURE(text);
        GapSpec s = parse_spec(text);
        auto series = periodic_counts(zeta_closed_form(s), 10);
        for (int n = 1; n <= 10; ++n) CHECK(series[n - 1] == brute_periodic_count(s, n));
    }
}

TEST_CASE("periodic counts decompose into nonnegative orbit counts") {
    // p_n = sum over d | n of d * o_d must be invertible to integers o_d >= 0.
    for (const char* text : {"finite:0,1", "delta:2|1,2", "delta:1|2", "delta:0|3,5"}) {
        CAPTURE(text);
        GapSpec s = parse_spec(text);
        auto p = periodic_counts(zeta_closed_form(s), 14);
        std::map<int, BigInt> orbits;
        for (int n = 1; n <= 14; ++n) {
            BigInt rest = p[n - 1];
            for (int d = 1; d < n; ++d)
                if (n % d == 0) rest -= BigInt(d) * orbits[d];
            CHECK(rest % n == 0);
            orbits[n] = rest / n;
            CHECK(orbits[n] >= 0);
        }
    }
}

TEST_CASE("count extraction rejects a zeta without unit constant term") {
    RatFunc bad(IntPoly({0, 1}), IntPoly({1, -1}));  // zeta(0) = 0
    CHECK_THROWS_AS(periodic_counts(bad, 4), NormalizationError);
}

TEST_CASE("count extraction rejects fractional counts") {
    // (2 + t) / (2 - t) has zeta(0) = 1 but p_3 = 1/4.
    RatFunc bad(IntPoly({2, 1}), IntPoly({2, -1}));
    CHECK_THROWS_AS(periodic_counts(bad, 4), NonIntegerCoefficient);
}

TEST_CASE("degenerate single-gap shifts count only the loop orbit") {
    // S = {3}: points of period n are the rotations of (1000)^infinity.
    GapSpec s = parse_spec("finite:3");
    auto p = periodic_counts(zeta_closed_form(s), 8);
    CHECK(p == big_vec({0, 0, 0, 4, 0, 0, 0, 4}));
}
