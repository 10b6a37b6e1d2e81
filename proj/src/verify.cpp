#include "sgap/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>

#include "sgap/bowen_franks.hpp"
#include "sgap/errors.hpp"
#include "sgap/matrix.hpp"
#include "sgap/oracle.hpp"
#include "sgap/presentation.hpp"
#include "sgap/spectral.hpp"
#include "sgap/zeta.hpp"

namespace sgap {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

namespace {

CheckResult make(const std::string& name, bool ok, const std::string& why_bad = "") {
    CheckResult r;
    r.name = name;
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    if (!ok) r.detail = why_bad;
    return r;
}

CheckResult skip(const std::string& name, const std::string& why) {
    CheckResult r;
    r.name = name;
    r.status = CheckStatus::Skip;
    r.detail = why;
    return r;
}

// Labels out of each vertex must be distinct (right-resolving) and row sums
// must be 1 or 2; minimality = no two vertices with identical follower tails,
// which the builder guarantees by construction, so here we re-check it
// directly on the graph: no two vertices may have identical outgoing
// (label -> target) maps AND identical acceptance behaviour.  For these
// graphs a cheap complete test is partition refinement (Hopcroft-style) on
// the labelled graph.
bool presentation_is_minimal(const Presentation& p, std::string* why) {
    const int n = p.n;
    // succ[v][c] = target or -1
    std::vector<std::array<int, 2>> succ(n, {-1, -1});
    for (const Edge& e : p.edges) {
        if (succ[e.from][e.label] != -1) {
            if (why) *why = "vertex has two edges with the same label";
            return false;
        }
        succ[e.from][e.label] = e.to;
    }
    // Partition refinement: start with one class (all vertices accept all
    // right-infinite admissible continuations -- every vertex is "final"),
    // refine by (class of succ on 0, class of succ on 1, presence bits).
    std::vector<int> cls(n, 0);
    int n_classes = 1;
    for (bool changed = true; changed;) {
        changed = false;
        std::map<std::array<int, 5>, int> sig_to_new;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            std::array<int, 5> sig = {cls[v],
                                      succ[v][0] == -1 ? -1 : cls[succ[v][0]],
                                      succ[v][1] == -1 ? -1 : cls[succ[v][1]],
                                      succ[v][0] == -1 ? 0 : 1,
                                      succ[v][1] == -1 ? 0 : 1};
            auto it = sig_to_new.find(sig);
            if (it == sig_to_new.end()) it = sig_to_new.emplace(sig, (int)sig_to_new.size()).first;
            next[v] = it->second;
        }
        if ((int)sig_to_new.size() != n_classes) {
            changed = true;
            n_classes = (int)sig_to_new.size();
        }
        cls = next;
    }
    if (n_classes != n) {
        if (why) *why = "two vertices share a follower set (graph not minimal)";
        return false;
    }
    // Row sums 1 or 2.
    for (int v = 0; v < n; ++v) {
        int out = (succ[v][0] != -1) + (succ[v][1] != -1);
        if (out < 1 || out > 2) {
            if (why) *why = "row sum outside {1,2}";
            return false;
        }
    }
    return true;
}

CheckResult check_periodic_triple(const GapSpec& spec, const Presentation& pres, int pmax,
                                  std::string* first_bad) {
    const int cap = std::min(pmax, 16);
    RatFunc z = zeta_closed_form(spec);
    std::vector<BigInt> series = periodic_counts(z, cap);
    std::vector<BigInt> traces = trace_corrected_counts_upto(spec, pres.adjacency, cap);
    for (int n = 1; n <= cap; ++n) {
        BigInt brute = brute_periodic_count(spec, n);
        if (series[n - 1] != brute || traces[n - 1] != brute) {
            std::ostringstream os;
            os << "n=" << n << ": brute=" << brute.get_str() << " series=" << series[n - 1].get_str()
               << " traces=" << traces[n - 1].get_str();
            if (first_bad) *first_bad = os.str();
            return make("periodic_triple_agree", false, os.str());
        }
    }
    return make("periodic_triple_agree", true);
}

}  // namespace

std::vector<CheckResult> run_spec_checks(const GapSpec& raw, const CheckOptions& opt) {
    std::vector<CheckResult> out;
    GapSpec spec = canonicalize(raw);
    Presentation pres = build_presentation(spec);

    {
        std::string why;
        bool ok = presentation_is_minimal(pres, &why);
        out.push_back(make("presentation_minimal", ok, why));
    }
    out.push_back(make("presentation_irreducible", is_irreducible(pres.adjacency),
                       "labelled graph is not strongly connected"));
    {
        IntMatrix closed = case_matrix(spec);
        bool ok = closed == pres.adjacency;
        out.push_back(make("case_matrix_match", ok,
                           ok ? "" : "closed-form adjacency differs from follower-set adjacency"));
    }
    {
        CharPolyIdentityReport rep = char_poly_identity_report(spec);
        std::ostringstream os;
        os << to_string(rep.tag) << ", " << rep.identity;
        if (rep.adjusted) os << " [" << rep.adjustment << "]";
        CheckResult r = make("char_poly_identity", rep.holds, "identity fails: " + rep.identity);
        if (rep.holds) r.detail = os.str();
        out.push_back(r);
    }
    {
        RatFunc a = zeta_closed_form(spec);
        RatFunc b = zeta_from_matrix(spec, pres.adjacency);
        out.push_back(make("zeta_routes_equal", a.equals(b),
                           "closed-form zeta != matrix-route zeta"));
    }
    out.push_back(check_periodic_triple(spec, pres, opt.pmax, nullptr));
    {
        EntropyResult er = entropy(spec, opt.tol);
        double perron = perron_root(pres.adjacency, 1e-10);
        double est = entropy_estimate(spec, opt.estimate_n);
        // The finite-n estimate log2(B(n))/n is a true upper bound on the
        // entropy (subadditivity of log B), so it may sit above h by an
        // amount that shrinks like 1/n but never below it; how far above
        // depends on the spec, so only the one-sided bound is a corpus-wide
        // invariant.
        bool ok = std::abs(er.lambda - perron) <= 1e-8 && er.residual <= 1e-8 &&
                  est >= er.h_bits - 1e-6 && est <= 1.0 + 1e-9;
        std::ostringstream os;
        os << "lambda=" << er.lambda << " perron=" << perron << " residual=" << er.residual
           << " estimate(" << opt.estimate_n << ")=" << est << " h=" << er.h_bits;
        CheckResult r = make("entropy_consistent", ok, os.str());
        if (ok) r.detail = "";
        out.push_back(r);
    }
    if (spec.degenerate()) {
        out.push_back(skip("bf_predictions", "single-gap shift: group predictions do not apply"));
        out.push_back(skip("det_sign_negative", "single-gap shift: det(Id - A) = 0"));
    } else {
        GroupPredictionReport hm = check_group_predictions(spec);
        std::ostringstream os;
        os << "bf=" << hm.bf.to_string() << " predicted=" << hm.predicted.to_string()
           << " group=" << (hm.group_matches ? "ok" : "BAD")
           << " transpose=" << (hm.transpose_matches ? "ok" : "BAD")
           << " kernels=" << (hm.kernels_trivial ? "ok" : "BAD");
        out.push_back(make("bf_predictions", hm.pass, os.str()));
        int ds = det_sign(pres.adjacency);
        out.push_back(make("det_sign_negative", ds < 0,
                           "det(Id - A) sign is " + std::to_string(ds)));
    }
    return out;
}

std::map<std::string, std::string> checks_as_map(const std::vector<CheckResult>& checks) {
    std::map<std::string, std::string> m;
    for (const CheckResult& c : checks) m[c.name] = to_string(c.status);
    return m;
}

}  // namespace sgap
