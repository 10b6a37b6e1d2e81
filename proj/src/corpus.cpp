#include "sgap/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>

#include "sgap/errors.hpp"
#include "sgap/presentation.hpp"

#ifndef SGAP_DATA_DIR_PATH
#define SGAP_DATA_DIR_PATH "data"
#endif

namespace sgap {

std::vector<GapSpec> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open corpus file: " + path);
    std::vector<GapSpec> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        try {
            out.push_back(parse_spec(line.substr(first, last - first + 1)));
        } catch (const Error& e) {
            throw ValidationError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string default_corpus_path() {
    if (const char* env = std::getenv("SGAP_CORPUS"); env && *env) return env;
    return std::string(SGAP_DATA_DIR_PATH) + "/corpus_default.txt";
}

std::vector<GapSpec> default_corpus() { return load_corpus_file(default_corpus_path()); }

namespace {

// Predicted presentation size from the case shape (same arithmetic the
// closed-form adjacency uses), so oversized candidates can be rejected
// without building anything.
std::int64_t predicted_vertices(const GapSpec& c, CaseTag tag) {
    switch (tag) {
        case CaseTag::FiniteCase:
        case CaseTag::CofiniteCase:
            return c.s_k() + 1;
        case CaseTag::WrapDouble:
        case CaseTag::WrapWindow:
            return c.period_window_sums().back() + 1;
        case CaseTag::WrapRoot:
            return c.period_sum();
        case CaseTag::WrapTransient: {
            auto sums = c.transient_sums();
            return c.period_sum() + sums[sums.size() - 2] + 1;
        }
    }
    return 0;
}

}  // namespace

std::vector<GapSpec> augment_corpus(const AugmentOptions& opt, const std::vector<GapSpec>& existing) {
    if (opt.max_value < 4) throw ValidationError("augment_corpus: max_value must be at least 4");
    std::mt19937_64 rng(opt.seed);
    auto rint = [&rng](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    std::set<std::string> seen;
    for (const GapSpec& s : existing) seen.insert(render_spec(canonicalize(s)));

    const CaseTag targets[] = {CaseTag::FiniteCase,  CaseTag::CofiniteCase, CaseTag::WrapDouble,
                               CaseTag::WrapRoot, CaseTag::WrapTransient,   CaseTag::WrapWindow};
    const std::int64_t lo0 = opt.allow_zero ? 0 : 1;  // smallest legal first element

    std::vector<GapSpec> out;
    out.reserve(opt.count);
    for (int slot = 0; slot < opt.count; ++slot) {
        const CaseTag want = targets[slot % 6];
        bool placed = false;
        for (int attempt = 0; attempt < 400 && !placed; ++attempt) {
            GapSpec c;
            switch (want) {
                case CaseTag::FiniteCase: {
                    c.kind = GapSpec::Kind::Finite;
                    const int m = (int)rint(2, opt.max_finite_size);
                    std::set<std::int64_t> vals;
                    while ((int)vals.size() < m) vals.insert(rint(lo0, opt.max_value));
                    c.finite_gaps.assign(vals.begin(), vals.end());
                    break;
                }
                case CaseTag::CofiniteCase: {
                    c.kind = GapSpec::Kind::EventuallyPeriodic;
                    const int k = (int)rint(1, opt.max_transient_len);
                    c.transient.push_back(rint(lo0, opt.max_value));
                    for (int i = 1; i < k; ++i) c.transient.push_back(rint(1, opt.max_value));
                    c.period = {1};
                    break;
                }
                case CaseTag::WrapDouble: {
                    c.kind = GapSpec::Kind::EventuallyPeriodic;
                    const std::int64_t s1 = rint(lo0, opt.max_value - 1);
                    c.transient = {s1};
                    const int l = (int)rint(1, opt.max_period_len);
                    for (int i = 1; i < l; ++i) c.period.push_back(rint(1, opt.max_value));
                    c.period.push_back(s1 + 1);
                    break;
                }
                case CaseTag::WrapRoot: {
                    c.kind = GapSpec::Kind::EventuallyPeriodic;
                    const std::int64_t s1 = rint(lo0, opt.max_value - 2);
                    c.transient = {s1};
                    const int l = (int)rint(1, opt.max_period_len);
                    for (int i = 1; i < l; ++i) c.period.push_back(rint(1, opt.max_value));
                    c.period.push_back(rint(s1 + 2, opt.max_value));
                    break;
                }
                case CaseTag::WrapTransient: {
                    c.kind = GapSpec::Kind::EventuallyPeriodic;
                    const int k = (int)rint(2, std::max(2, opt.max_transient_len));
                    c.transient.push_back(rint(lo0, opt.max_value));
                    for (int i = 1; i + 1 < k; ++i) c.transient.push_back(rint(1, opt.max_value));
                    const std::int64_t dk = rint(1, opt.max_value - 1);
                    c.transient.push_back(dk);
                    const int l = (int)rint(1, opt.max_period_len);
                    for (int i = 1; i < l; ++i) c.period.push_back(rint(1, opt.max_value));
                    c.period.push_back(rint(dk + 1, opt.max_value));
                    break;
                }
                case CaseTag::WrapWindow: {
                    c.kind = GapSpec::Kind::EventuallyPeriodic;
                    const int k = (int)rint(1, opt.max_transient_len);
                    if (k > 1) c.transient.push_back(rint(lo0, opt.max_value));
                    for (int i = 1; i + 1 < k; ++i) c.transient.push_back(rint(1, opt.max_value));
                    const std::int64_t dk = rint(1, opt.max_value);
                    c.transient.push_back(dk);
                    const int l = (int)rint(1, opt.max_period_len);
                    for (int i = 1; i < l; ++i) c.period.push_back(rint(1, opt.max_value));
                    c.period.push_back(rint(1, dk));
                    break;
                }
            }
            GapSpec canon = canonicalize(c);
            if (canon.degenerate()) continue;
            if (case_tag(canon) != want) continue;
            if (predicted_vertices(canon, want) > opt.max_vertices) continue;
            std::string key = render_spec(canon);
            if (!seen.insert(std::move(key)).second) continue;
            out.push_back(std::move(canon));
            placed = true;
        }
        if (!placed)
            throw Error("augment_corpus: could not place a fresh spec for case " + to_string(want) +
                        "; relax the caps or lower the count");
    }
    return out;
}

}  // namespace sgap
