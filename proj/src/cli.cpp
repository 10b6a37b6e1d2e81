#include "sgap/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <cstdint>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sgap/bowen_franks.hpp"
#include "sgap/corpus.hpp"
#include "sgap/errors.hpp"
#include "sgap/oracle.hpp"
#include "sgap/presentation.hpp"
#include "sgap/report.hpp"
#include "sgap/verify.hpp"

namespace sgap {

namespace {

using nlohmann::json;

int cmd_analyze(const std::string& spec_text, const std::string& format, int periodic_n,
                double tol, int pmax, bool no_checks) {
    GapSpec spec = parse_spec(spec_text);
    ReportOptions opt;
    opt.periodic_n = periodic_n;
    opt.check_pmax = pmax;
    opt.tol = tol;
    opt.run_checks = !no_checks;
    AnalysisReport rep = build_analysis(spec, opt);
    if (format == "json")
        std::cout << report_to_json(rep) << "\n";
    else
        std::cout << report_to_text(rep);
    for (const auto& [name, status] : rep.checks)
        if (status == "fail") {
            std::cerr << "check failed: " << name << "\n";
            return 1;
        }
    return 0;
}

int cmd_verify(const std::string& corpus_arg, int pmax, std::uint64_t seed, int augment,
               bool allow_zero, std::int64_t max_value, const std::string& format) {
    std::vector<GapSpec> specs = (corpus_arg == "default" || corpus_arg.empty())
                                     ? default_corpus()
                                     : load_corpus_file(corpus_arg);
    if (augment > 0) {
        AugmentOptions aopt;
        aopt.seed = seed;
        aopt.count = augment;
        aopt.allow_zero = allow_zero;
        aopt.max_value = max_value;
        std::vector<GapSpec> extra = augment_corpus(aopt, specs);
        specs.insert(specs.end(), extra.begin(), extra.end());
    }
    CheckOptions copt;
    copt.pmax = std::min(pmax, 16);

    std::map<std::string, std::array<int, 3>> tally;  // name -> {pass, fail, skip}
    struct Failure {
        std::string spec, check, detail;
    };
    std::vector<Failure> failures;
    std::vector<std::pair<std::string, std::string>> renamed;  // non-canonical -> canonical
    for (const GapSpec& s : specs) {
        const std::string name = render_spec(canonicalize(s));
        if (const std::string given = render_spec(s); given != name)
            renamed.emplace_back(given, name);
        for (const CheckResult& c : run_spec_checks(s, copt)) {
            auto& t = tally[c.name];
            switch (c.status) {
                case CheckStatus::Pass: ++t[0]; break;
                case CheckStatus::Fail:
                    ++t[1];
                    failures.push_back({name, c.name, c.detail});
                    break;
                case CheckStatus::Skip: ++t[2]; break;
            }
        }
    }
    if (format == "json") {
        json j;
        j["specs"] = specs.size();
        json res = json::object();
        for (const auto& [name, t] : tally)
            res[name] = json{{"pass", t[0]}, {"fail", t[1]}, {"skip", t[2]}};
        j["results"] = std::move(res);
        json fj = json::array();
        for (const Failure& f : failures)
            fj.push_back(json{{"spec", f.spec}, {"check", f.check}, {"detail", f.detail}});
        j["failures"] = std::move(fj);
        json cj = json::array();
        for (const auto& [from, to] : renamed) cj.push_back(json{{"from", from}, {"to", to}});
        j["canonicalized"] = std::move(cj);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verified " << specs.size() << " specs\n";
        for (const auto& [from, to] : renamed)
            std::cout << "  canonicalized " << from << " -> " << to << "\n";
        for (const auto& [name, t] : tally) {
            std::cout << "  " << name << ": " << t[0] << " pass";
            if (t[1]) std::cout << ", " << t[1] << " FAIL";
            if (t[2]) std::cout << ", " << t[2] << " skip";
            std::cout << "\n";
        }
        for (const Failure& f : failures)
            std::cout << "FAIL " << f.spec << " " << f.check << ": " << f.detail << "\n";
    }
    return failures.empty() ? 0 : 1;
}

int cmd_flow_compare(const std::string& a_text, const std::string& b_text,
                     const std::string& format) {
    GapSpec a = canonicalize(parse_spec(a_text));
    GapSpec b = canonicalize(parse_spec(b_text));
    FlowClass fa = flow_class(a);
    FlowClass fb = flow_class(b);
    const bool invariants_match =
        fa.group == fb.group && fa.determinant_sign == fb.determinant_sign;
    std::string verdict;
    if (!invariants_match)
        verdict = "not flow equivalent";
    else if (fa.complete && fb.complete)
        verdict = "flow equivalent";
    else
        verdict = "invariants agree (necessary, not sufficient): undecided";
    if (format == "json") {
        json j;
        j["a"] = json{{"spec", render_spec(a)}, {"class", fa.to_string()}};
        j["b"] = json{{"spec", render_spec(b)}, {"class", fb.to_string()}};
        j["invariants_match"] = invariants_match;
        j["verdict"] = verdict;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "a: " << render_spec(a) << "  ->  " << fa.to_string() << "\n";
        std::cout << "b: " << render_spec(b) << "  ->  " << fb.to_string() << "\n";
        std::cout << "verdict: " << verdict << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& spec_text, const std::string& op, int n,
               const std::string& word) {
    GapSpec spec = parse_spec(spec_text);
    if (op == "count-blocks") {
        std::cout << count_blocks(spec, n).get_str() << "\n";
    } else if (op == "periodic") {
        std::cout << brute_periodic_count(spec, n).get_str() << "\n";
    } else if (op == "admissible") {
        std::cout << (is_admissible_block(spec, word) ? "yes" : "no") << "\n";
    } else if (op == "entropy-estimate") {
        std::cout << entropy_estimate(spec, n) << "\n";
    } else {
        throw SyntaxError("unknown oracle op: " + op);
    }
    return 0;
}

int cmd_graph(const std::string& spec_text) {
    GapSpec spec = parse_spec(spec_text);
    std::cout << to_dot(build_presentation(spec));
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"exact invariants of S-gap shifts: minimal presentation, entropy, zeta, "
                 "periodic points, Bowen-Franks groups"};
    app.require_subcommand(1);

    std::string spec_text, format = "text", corpus_arg = "default", op = "count-blocks", word;
    std::string a_text, b_text;
    int periodic_n = 20, pmax = 8, n = 6, augment = 0;
    double tol = 1e-12;
    std::int64_t max_value = 30;
    std::uint64_t seed = 0;
    bool no_checks = false, allow_zero = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full invariant report for one spec");
    analyze->add_option("--spec", spec_text, "gap spec, e.g. \"finite:1,2\" or \"delta:2|1,2\"")
        ->required();
    analyze->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("-N,--periodic", periodic_n, "periodic-point counts p_1..p_N (default 20)");
    analyze->add_option("--tol", tol, "entropy bisection tolerance");
    analyze->add_option("--pmax", pmax, "agreement range for the embedded checks");
    analyze->add_flag("--no-checks", no_checks, "skip the embedded cross-checks");

    CLI::App* verify = app.add_subcommand("verify", "run every cross-check over a corpus");
    verify->add_option("--corpus", corpus_arg, "'default' or a corpus file path");
    verify->add_option("--pmax", pmax, "periodic-point agreement range (capped at 16)");
    verify->add_option("--seed", seed, "seed for randomized augmentation");
    verify->add_option("--augment", augment, "number of random specs to add");
    verify->add_option("--max-value", max_value, "cap on gap values in augmented specs");
    verify->add_flag("--allow-zero", allow_zero, "allow 0 in augmented specs");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* flow = app.add_subcommand("flow-compare", "compare flow-equivalence invariants");
    flow->add_option("--a", a_text, "first spec")->required();
    flow->add_option("--b", b_text, "second spec")->required();
    flow->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth for one spec");
    oracle->add_option("--spec", spec_text, "gap spec")->required();
    oracle->add_option("--op", op, "count-blocks | periodic | admissible | entropy-estimate")
        ->check(CLI::IsMember({"count-blocks", "periodic", "admissible", "entropy-estimate"}));
    oracle->add_option("-n", n, "block length / period (default 6)");
    oracle->add_option("--word", word, "0/1 word for --op admissible");

    CLI::App* graph = app.add_subcommand("graph", "DOT rendering of the minimal presentation");
    graph->add_option("--spec", spec_text, "gap spec")->required();

    try {
        app.parse(argc, argv);
        if (analyze->parsed())
            return cmd_analyze(spec_text, format, periodic_n, tol, pmax, no_checks);
        if (verify->parsed())
            return cmd_verify(corpus_arg, pmax, seed, augment, allow_zero, max_value, format);
        if (flow->parsed()) return cmd_flow_compare(a_text, b_text, format);
        if (oracle->parsed()) return cmd_oracle(spec_text, op, n, word);
        if (graph->parsed()) return cmd_graph(spec_text);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "SyntaxError: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "ValidationError: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateError& e) {
        std::cerr << "DegenerateError: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace sgap
