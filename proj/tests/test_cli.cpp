#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sgap/cli.hpp"

namespace {

// Run the CLI with captured stdout/stderr.
struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::vector<char*> argv;
    std::string prog = "sgap";
    argv.push_back(prog.data());
    for (std::string& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    int code = sgap::run_cli((int)argv.size(), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze text output") {
    CliRun r = run({"analyze", "--spec", "finite:1,2", "--pmax", "6", "-N", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FiniteSFT") != std::string::npos);
    CHECK(r.out.find("lambda") != std::string::npos);
}

TEST_CASE("analyze json output") {
    CliRun r = run({"analyze", "--spec", "delta:2|1,2", "--format", "json", "--pmax", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"class\": \"StrictlySofic\"") != std::string::npos);
    CHECK(r.out.find("\"vertices\": 4") != std::string::npos);
}

TEST_CASE("parse errors exit with the usage code") {
    CliRun r = run({"analyze", "--spec", "finite:2,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("ValidationError") != std::string::npos);
    r = run({"oracle", "--spec", "delta:2", "--op", "count-blocks", "-n", "4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("SyntaxError") != std::string::npos);
    r = run({"definitely-not-a-command"});
    CHECK(r.code == 2);
}

TEST_CASE("oracle subcommand") {
    CliRun r = run({"oracle", "--spec", "finite:0,1", "--op", "count-blocks", "-n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "55\n");
    r = run({"oracle", "--spec", "finite:0,1", "--op", "admissible", "--word", "1001"});
    CHECK(r.code == 0);
    CHECK(r.out == "no\n");
    r = run({"oracle", "--spec", "delta:1|2", "--op", "periodic", "-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "7\n");
}

TEST_CASE("graph subcommand emits DOT") {
    CliRun r = run({"graph", "--spec", "finite:0,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph") != std::string::npos);
}

TEST_CASE("flow-compare verdicts") {
    CliRun r = run({"flow-compare", "--a", "finite:1,2", "--b", "delta:2|1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: flow equivalent") != std::string::npos);
    CHECK(r.out.find("not flow") == std::string::npos);
    r = run({"flow-compare", "--a", "finite:1,2", "--b", "finite:1,2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("not flow equivalent") != std::string::npos);
    // Degenerate operands are a usage error.
    r = run({"flow-compare", "--a", "finite:2", "--b", "finite:5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("DegenerateError") != std::string::npos);
}

TEST_CASE("verify on a small corpus file") {
    std::string path = "cli_test_corpus.txt";
    {
        std::ofstream f(path);
        f << "# tiny corpus\nfinite:1,2\ndelta:1|2\ndelta:2|1,2\n";
    }
    CliRun r = run({"verify", "--corpus", path, "--pmax", "6"});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out.find("verified 3 specs") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify json shape") {
    std::string path = "cli_test_corpus2.txt";
    {
        std::ofstream f(path);
        f << "finite:0,1\n";
    }
    CliRun r = run({"verify", "--corpus", path, "--pmax", "5", "--format", "json"});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out.find("\"specs\": 1") != std::string::npos);
    CHECK(r.out.find("\"failures\": []") != std::string::npos);
}
