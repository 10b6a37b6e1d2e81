#include "sgap/presentation.hpp"

#include <numeric>
#include <queue>
#include <sstream>

#include "sgap/errors.hpp"

namespace sgap {

std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::FiniteCase: return "FiniteCase";
        case CaseTag::CofiniteCase: return "CofiniteCase";
        case CaseTag::WrapDouble: return "WrapDouble";
        case CaseTag::WrapRoot: return "WrapRoot";
        case CaseTag::WrapTransient: return "WrapTransient";
        case CaseTag::WrapWindow: return "WrapWindow";
    }
    return "?";
}

CaseTag case_tag(const GapSpec& spec) {
    switch (classify(spec)) {
        case ShiftClass::FiniteSFT: return CaseTag::FiniteCase;
        case ShiftClass::CofiniteSFT: return CaseTag::CofiniteCase;
        case ShiftClass::StrictlySofic: break;
    }
    GapSpec c = canonicalize(spec);
    int64_t dk = c.transient.back();
    int64_t gl = c.period.back();
    if (c.transient.size() == 1) {
        int64_t s1 = dk;  // d_1 = s_1
        if (gl > s1) return gl == s1 + 1 ? CaseTag::WrapDouble : CaseTag::WrapRoot;
        return CaseTag::WrapWindow;
    }
    return gl > dk ? CaseTag::WrapTransient : CaseTag::WrapWindow;
}

namespace {

// Precomputed membership indicator of S on 0..limit-1 for O(1) tail lookups.
std::vector<char> indicator(const GapSpec& spec, int64_t limit) {
    std::vector<char> ind(static_cast<size_t>(limit), 0);
    for (int64_t j = 0; j < limit; ++j) ind[static_cast<size_t>(j)] = contains(spec, j) ? 1 : 0;
    return ind;
}

}  // namespace

Presentation build_presentation(const GapSpec& spec) {
    GapSpec c = canonicalize(spec);
    int64_t sk = c.s_k();
    bool finite = c.is_finite();
    int64_t g = finite ? 0 : c.period_sum();

    // Tail-equality window: the indicator is periodic with period g from
    // position s_k on, so agreement on preperiod + 2*period symbols decides
    // equality of two tails.
    int64_t window = sk + 1 + (finite ? 1 : 2 * g);
    // The 0-chain closes (or ends) within #distinct-tails + 1 states.
    int64_t max_state = sk + g + 2;
    std::vector<char> ind = indicator(c, max_state + window + 1);

    auto tails_equal = [&](int64_t i, int64_t j) {
        for (int64_t m = 0; m < window; ++m)
            if (ind[static_cast<size_t>(i + m)] != ind[static_cast<size_t>(j + m)]) return false;
        return true;
    };

    // Walk the zero-run chain 0, 1, 2, ...; stop when there is no 0-successor
    // (finite S exhausted) or when the next tail matches an earlier class.
    int n = 0;
    int wrap_target = -1;  // class of the state the chain closes onto
    for (int64_t i = 0;; ++i) {
        if (i > max_state)
            throw CaseDispatchError("build_presentation: state chain failed to close (internal bug)");
        int found = -1;
        for (int64_t r = 0; r < i; ++r)
            if (tails_equal(r, i)) {
                found = static_cast<int>(r);
                break;
            }
        if (found >= 0) {
            n = static_cast<int>(i);
            wrap_target = found;
            break;
        }
        if (!exists_gap_at_least(c, i + 1)) {
            // 1 0^{i+1} is inadmissible: the chain ends at vertex i.
            n = static_cast<int>(i) + 1;
            break;
        }
    }

    Presentation p;
    p.n = n;
    p.case_tag = case_tag(c);
    p.adjacency = IntMatrix(n, n);
    for (int v = 0; v < n; ++v) {
        if (exists_gap_at_least(c, int64_t(v) + 1)) {
            int to = (v + 1 < n) ? v + 1 : wrap_target;
            p.edges.push_back({v, to, 0});
            p.adjacency.at(v, to) += 1;
        }
        if (ind[static_cast<size_t>(v)]) {  // v in S: a 1 closes the run
            p.edges.push_back({v, 0, 1});
            p.adjacency.at(v, 0) += 1;
        }
    }
    return p;
}

IntMatrix case_matrix(const GapSpec& spec) {
    GapSpec c = canonicalize(spec);
    CaseTag tag = case_tag(c);
    int64_t sk = c.s_k();

    int64_t n = 0;
    int64_t wrap_col = 0;  // 1-based target of the 0-edge out of vertex n; 0 = none
    switch (tag) {
        case CaseTag::FiniteCase:
            n = sk + 1;
            wrap_col = 0;
            break;
        case CaseTag::CofiniteCase:
            n = sk + 1;
            wrap_col = n;  // terminal self-loop
            break;
        case CaseTag::WrapDouble:
        case CaseTag::WrapRoot: {
            const auto w = c.period_window_sums();  // s_k .. s_{k+l-1}
            n = (tag == CaseTag::WrapDouble) ? w.back() + 1 : c.period_sum();
            wrap_col = 1;
            break;
        }
        case CaseTag::WrapTransient: {
            const auto sums = c.transient_sums();
            int64_t sk_minus_1 = sums[sums.size() - 2];  // s_{k-1}, k >= 2 here
            n = c.period_sum() + sk_minus_1 + 1;
            wrap_col = sk_minus_1 + 2;
            break;
        }
        case CaseTag::WrapWindow: {
            const auto w = c.period_window_sums();
            n = w.back() + 1;  // s_{k+l-1} + 1
            wrap_col = sk - c.period.back() + 2;
            break;
        }
    }
    if (n <= 0) throw CaseDispatchError("case_matrix: nonpositive dimension (internal bug)");

    IntMatrix a(static_cast<int>(n), static_cast<int>(n));
    for (int64_t i = 1; i < n; ++i) a.at(int(i) - 1, int(i)) += 1;  // 0-edges along the spine
    if (wrap_col > 0) a.at(int(n) - 1, int(wrap_col) - 1) += 1;     // 0-edge out of vertex n
    for (int64_t i = 1; i <= n; ++i)                                // 1-edges back to vertex 1
        if (contains(c, i - 1)) a.at(int(i) - 1, 0) += 1;
    return a;
}

int64_t graph_period(const IntMatrix& adjacency) {
    int n = adjacency.rows();
    if (n == 0) return 0;
    // BFS levels from vertex 0; every edge u->v contributes
    // gcd(level[u] + 1 - level[v]) (classic strongly-connected graph period).
    std::vector<int64_t> level(static_cast<size_t>(n), -1);
    std::queue<int> q;
    level[0] = 0;
    q.push(0);
    int64_t g = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v) {
            if (adjacency.at(u, v) == 0) continue;
            if (level[static_cast<size_t>(v)] < 0) {
                level[static_cast<size_t>(v)] = level[static_cast<size_t>(u)] + 1;
                q.push(v);
            } else {
                g = std::gcd(g, level[static_cast<size_t>(u)] + 1 - level[static_cast<size_t>(v)]);
            }
        }
    }
    return g < 0 ? -g : g;
}

bool is_irreducible(const IntMatrix& adjacency) {
    int n = adjacency.rows();
    if (n == 0) return false;
    auto reaches_all = [n](auto edge_from) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::queue<int> q;
        seen[0] = 1;
        q.push(0);
        int count = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (!seen[static_cast<size_t>(v)] && edge_from(u, v)) {
                    seen[static_cast<size_t>(v)] = 1;
                    ++count;
                    q.push(v);
                }
        }
        return count == n;
    };
    return reaches_all([&](int u, int v) { return adjacency.at(u, v) != 0; }) &&
           reaches_all([&](int u, int v) { return adjacency.at(v, u) != 0; });
}

std::string to_dot(const Presentation& p, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int v = 0; v < p.n; ++v) out << "  v" << v + 1 << " [label=\"" << v + 1 << "\"];\n";
    for (const Edge& e : p.edges)
        out << "  v" << e.from + 1 << " -> v" << e.to + 1 << " [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace sgap
