#include <doctest.h>

#include "sgap/report.hpp"

using namespace sgap;

TEST_CASE("analysis report fields") {
    ReportOptions opt;
    opt.periodic_n = 6;
    opt.check_pmax = 6;
    AnalysisReport rep = build_analysis(parse_spec("delta:2|1,2"), opt);
    CHECK(rep.spec == "delta:2|1,2");
    CHECK(rep.shift_class == "StrictlySofic");
    CHECK(rep.vertices == 4);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.periodic_counts.size() == 6);
    CHECK(rep.bf.to_string() == "Z_2");
    CHECK(rep.det_sign == -1);
    CHECK(!rep.flow.empty());
    CHECK(!rep.checks.empty());
    for (const auto& [name, status] : rep.checks) {
        CAPTURE(name);
        CHECK(status != "fail");
    }
}

TEST_CASE("degenerate spec still yields a report") {
    ReportOptions opt;
    opt.periodic_n = 4;
    opt.run_checks = false;
    AnalysisReport rep = build_analysis(parse_spec("finite:3"), opt);
    CHECK(rep.degenerate);
    CHECK(rep.flow.empty());
    CHECK(rep.lambda == 1.0);
}

TEST_CASE("json round trip") {
    ReportOptions opt;
    opt.periodic_n = 8;
    opt.check_pmax = 6;
    for (const char* text : {"finite:0,1", "finite:3", "delta:2|1", "delta:2|1,2", "delta:0|2"}) {
        CAPTURE(text);
        AnalysisReport rep = build_analysis(parse_spec(text), opt);
        AnalysisReport back = report_from_json(report_to_json(rep));
        CHECK(rep == back);
    }
}

TEST_CASE("json round trip survives counts beyond 64 bits") {
    ReportOptions opt;
    opt.periodic_n = 250;  // p_250 = 2^250 for the full shift
    opt.run_checks = false;
    AnalysisReport rep = build_analysis(parse_spec("delta:0|1"), opt);
    CHECK(rep.periodic_counts.back() == BigInt(1) << 250);
    AnalysisReport back = report_from_json(report_to_json(rep));
    CHECK(rep == back);
    // The big count must have gone through the string path.
    CHECK(report_to_json(rep).find("\"1809251394333065553493296640760748560207343510400633813116524750123642650624\"") != std::string::npos);
}

TEST_CASE("text rendering mentions the essentials") {
    ReportOptions opt;
    opt.periodic_n = 4;
    opt.check_pmax = 4;
    std::string text = report_to_text(build_analysis(parse_spec("finite:0,1"), opt));
    CHECK(text.find("FiniteSFT") != std::string::npos);
    CHECK(text.find("entropy") != std::string::npos);
    CHECK(text.find("zeta") != std::string::npos);
    CHECK(text.find("checks:") != std::string::npos);
}
