#include <doctest.h>

#include <cmath>

#include "sgap/corpus.hpp"
#include "sgap/errors.hpp"
#include "sgap/presentation.hpp"
#include "sgap/spectral.hpp"

using namespace sgap;

TEST_CASE("entropy function closed forms") {
    // Finite S = {1,2}: f = (x^3 - x - 1) / x^3.
    RatFunc f = entropy_function(parse_spec("finite:1,2"));
    CHECK(f.equals(RatFunc(IntPoly({-1, -1, 0, 1}), IntPoly::monomial(3))));
    // Cofinite S = {2,3,...}: f = (x^3 - x^2 - 1) / (x^2 (x - 1)).
    f = entropy_function(parse_spec("delta:2|1"));
    CHECK(f.equals(RatFunc(IntPoly({-1, 0, -1, 1}), IntPoly({0, 0, -1, 1}))));
    // Odd gaps: f = (x^2 - 2) / (x^2 - 1).
    f = entropy_function(parse_spec("delta:1|2"));
    CHECK(f.equals(RatFunc(IntPoly({-2, 0, 1}), IntPoly({-1, 0, 1}))));
    // Full shift S = N0: f = (x - 2) / (x - 1).
    f = entropy_function(parse_spec("delta:0|1"));
    CHECK(f.equals(RatFunc(IntPoly({-2, 1}), IntPoly({-1, 1}))));
}

TEST_CASE("entropy function vanishes exactly at the growth rate") {
    // The defining series at the root: sum over S of lambda^-(s+1) = 1.
    // For S = {0,1} (golden mean) the root is the golden ratio.
    EntropyResult er = entropy(parse_spec("finite:0,1"));
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(er.lambda - phi) <= 1e-9);
    CHECK(std::abs(er.h_bits - std::log2(phi)) <= 1e-9);
    CHECK(er.residual <= 1e-9);
}

TEST_CASE("entropy endpoints are exact") {
    CHECK(entropy(parse_spec("finite:4")).lambda == 1.0);      // degenerate: lambda = 1
    CHECK(entropy(parse_spec("delta:0|1")).lambda == 2.0);     // full shift: lambda = 2
    CHECK(entropy(parse_spec("finite:0")).lambda == 1.0);
}

TEST_CASE("square root of two for odd gaps") {
    EntropyResult er = entropy(parse_spec("delta:1|2"), 1e-13);
    CHECK(std::abs(er.lambda - std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("perron root matches bisection on the corpus") {
    for (const GapSpec& s : default_corpus()) {
        CAPTURE(render_spec(s));
        Presentation p = build_presentation(s);
        double pr = perron_root(p.adjacency, 1e-10);
        EntropyResult er = entropy(s);
        CHECK(std::abs(pr - er.lambda) <= 1e-8);
    }
}

TEST_CASE("perron root on fixed matrices") {
    CHECK(std::abs(perron_root(IntMatrix::from_rows({{2}})) - 2.0) <= 1e-10);
    CHECK(std::abs(perron_root(IntMatrix::from_rows({{0, 1}, {2, 0}})) - std::sqrt(2.0)) <= 1e-9);
    CHECK(std::abs(perron_root(IntMatrix::from_rows({{1, 1}, {1, 0}})) -
                   (1.0 + std::sqrt(5.0)) / 2.0) <= 1e-9);
}

TEST_CASE("identity linking char poly and entropy function: SFT cases") {
    // Finite: chi = x^{s_k + 1} f_S.
    CharPolyIdentityReport r = char_poly_identity_report(parse_spec("finite:1,2"));
    CHECK(r.tag == CaseTag::FiniteCase);
    CHECK(r.holds);
    CHECK_FALSE(r.adjusted);
    CHECK(r.char_poly == IntPoly({-1, -1, 0, 1}));
    CHECK(r.q_s.equals(RatFunc::from_poly(IntPoly::monomial(3))));
    // Cofinite: chi = x^{s_k} (x - 1) f_S.
    r = char_poly_identity_report(parse_spec("delta:2|1"));
    CHECK(r.tag == CaseTag::CofiniteCase);
    CHECK(r.holds);
    CHECK(r.char_poly == IntPoly({-1, 0, -1, 1}));
}

TEST_CASE("identity linking char poly and entropy function: sofic cases") {
    // Odd gaps: chi = (x^g - 1) f_S with g = 2.
    CharPolyIdentityReport r = char_poly_identity_report(parse_spec("delta:1|2"));
    CHECK(r.tag == CaseTag::WrapDouble);
    CHECK(r.holds);
    CHECK(r.char_poly == IntPoly({-2, 0, 1}));
    CHECK(r.q_s.equals(RatFunc::from_poly(IntPoly({-1, 0, 1}))));

    r = char_poly_identity_report(parse_spec("delta:2|1,2"));
    CHECK(r.tag == CaseTag::WrapWindow);
    CHECK(r.holds);

    r = char_poly_identity_report(parse_spec("delta:1,2|4"));
    CHECK(r.tag == CaseTag::WrapTransient);
    CHECK(r.holds);
}

TEST_CASE("identities hold with zero in S, flagged as the adjusted path") {
    for (const char* text : {"finite:0,1", "finite:0,2,5,9", "delta:0|2", "delta:0,2|1",
                             "delta:0|2,1", "delta:0,3|2"}) {
        CAPTURE(text);
        CharPolyIdentityReport r = char_poly_identity_report(parse_spec(text));
        CHECK(r.holds);
        CHECK(r.adjusted);
        CHECK(r.adjustment == "literal");
    }
}

TEST_CASE("identity holds on the whole corpus") {
    for (const GapSpec& s : default_corpus()) {
        CAPTURE(render_spec(s));
        CHECK(char_poly_identity_report(s).holds);
    }
}

TEST_CASE("entropy rejects nonsense tolerances") {
    CHECK_THROWS_AS(entropy(parse_spec("finite:1,2"), 0.0), ValidationError);
    CHECK_THROWS_AS(entropy(parse_spec("finite:1,2"), -1e-9), ValidationError);
}
