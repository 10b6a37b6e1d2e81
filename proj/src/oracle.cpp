#include "sgap/oracle.hpp"

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "sgap/errors.hpp"
#include "sgap/presentation.hpp"

namespace sgap {

bool is_admissible_block(const GapSpec& spec, const std::string& word) {
    if (word.empty()) return true;  // the empty word occurs in every point
    for (char c : word)
        if (c != '0' && c != '1')
            throw ValidationError(std::string("is_admissible_block: bad character '") + c + "'");

    int n = static_cast<int>(word.size());
    int first_one = -1, last_one = -1;
    for (int i = 0; i < n; ++i)
        if (word[static_cast<size_t>(i)] == '1') {
            if (first_one < 0) first_one = i;
            last_one = i;
        }
    if (first_one < 0) return exists_gap_at_least(spec, n);  // 0^n
    // Leading and trailing zero runs extend into neighbouring gaps.
    if (!exists_gap_at_least(spec, first_one)) return false;
    if (!exists_gap_at_least(spec, n - 1 - last_one)) return false;
    // Internal maximal zero-runs between consecutive 1s (length may be 0).
    int prev = first_one;
    for (int i = first_one + 1; i <= last_one; ++i) {
        if (word[static_cast<size_t>(i)] != '1') continue;
        if (!contains(spec, i - prev - 1)) return false;
        prev = i;
    }
    return true;
}

BigInt count_blocks_enumeration(const GapSpec& spec, int n) {
    if (n < 0) throw IndexError("count_blocks_enumeration: negative length");
    if (n > 24) throw IndexError("count_blocks_enumeration: n > 24; use the automaton route");
    if (n == 0) return 1;
    // Same admissibility logic as is_admissible_block, on bit masks with the
    // membership indicator precomputed so the 2^n sweep stays cheap.
    int64_t sk_limit = spec.is_finite() ? spec.finite_gaps.back() : -1;  // -1 = no bound
    auto gap_ok_at_least = [&](int a) { return sk_limit < 0 || sk_limit >= a; };
    std::vector<char> member(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) member[static_cast<size_t>(j)] = contains(spec, j) ? 1 : 0;
    BigInt count = 0;
    const uint32_t top = uint32_t(1) << n;
    for (uint32_t w = 0; w < top; ++w) {
        if (w == 0) {
            if (gap_ok_at_least(n)) ++count;
            continue;
        }
        int first_one = -1, last_one = -1, prev = -1;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (((w >> i) & 1u) == 0) continue;
            if (first_one < 0)
                first_one = i;
            else if (!member[static_cast<size_t>(i - prev - 1)])
                ok = false;
            prev = i;
        }
        last_one = prev;
        if (ok && gap_ok_at_least(first_one) && gap_ok_at_least(n - 1 - last_one)) ++count;
    }
    return count;
}

namespace {

// Deterministic word automaton for B(X(S)): subset construction over the
// right-resolving presentation, starting from the full vertex set (a word is
// a block iff it is readable from some vertex).
struct SubsetAutomaton {
    std::vector<std::array<int, 2>> next;  // -1 = dead
    int start = 0;
};

SubsetAutomaton determinize(const Presentation& p) {
    // Per-vertex successor under each label (right-resolving: at most one).
    std::vector<std::array<int, 2>> succ(static_cast<size_t>(p.n), {-1, -1});
    for (const Edge& e : p.edges) succ[static_cast<size_t>(e.from)][static_cast<size_t>(e.label)] = e.to;

    std::map<std::vector<char>, int> ids;
    SubsetAutomaton aut;
    std::vector<std::vector<char>> worklist;
    std::vector<char> full(static_cast<size_t>(p.n), 1);
    ids[full] = 0;
    worklist.push_back(full);
    aut.next.emplace_back();
    aut.next[0] = {-1, -1};
    for (size_t idx = 0; idx < worklist.size(); ++idx) {
        std::vector<char> state = worklist[idx];
        for (int label = 0; label < 2; ++label) {
            std::vector<char> image(static_cast<size_t>(p.n), 0);
            bool nonempty = false;
            for (int v = 0; v < p.n; ++v) {
                if (!state[static_cast<size_t>(v)]) continue;
                int t = succ[static_cast<size_t>(v)][static_cast<size_t>(label)];
                if (t >= 0) {
                    image[static_cast<size_t>(t)] = 1;
                    nonempty = true;
                }
            }
            if (!nonempty) continue;  // dead transition
            auto [it, inserted] = ids.try_emplace(image, static_cast<int>(worklist.size()));
            if (inserted) {
                worklist.push_back(image);
                aut.next.emplace_back();
                aut.next.back() = {-1, -1};
            }
            aut.next[idx][static_cast<size_t>(label)] = it->second;
        }
    }
    return aut;
}

}  // namespace

BigInt count_blocks_automaton(const GapSpec& spec, int n) {
    if (n < 0) throw IndexError("count_blocks_automaton: negative length");
    if (n == 0) return 1;
    SubsetAutomaton aut = determinize(build_presentation(spec));
    size_t states = aut.next.size();
    // paths[s] = number of words of the remaining length readable from s; the
    // automaton is deterministic, so words and paths coincide.
    std::vector<BigInt> paths(states, BigInt(1)), step(states);
    for (int m = 0; m < n; ++m) {
        for (size_t s = 0; s < states; ++s) {
            BigInt acc = 0;
            if (aut.next[s][0] >= 0) acc += paths[static_cast<size_t>(aut.next[s][0])];
            if (aut.next[s][1] >= 0) acc += paths[static_cast<size_t>(aut.next[s][1])];
            step[s] = acc;
        }
        paths.swap(step);
    }
    return paths[static_cast<size_t>(aut.start)];
}

BigInt count_blocks(const GapSpec& spec, int n) {
    return n <= 20 ? count_blocks_enumeration(spec, n) : count_blocks_automaton(spec, n);
}

BigInt brute_periodic_count(const GapSpec& spec, int n) {
    if (n < 1) throw IndexError("brute_periodic_count: need n >= 1");
    if (n > 16) throw IndexError("brute_periodic_count: n > 16 exceeds the enumeration contract");
    bool infinite = !spec.is_finite();
    std::vector<char> member(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) member[static_cast<size_t>(j)] = contains(spec, j) ? 1 : 0;
    BigInt count = 0;
    const uint32_t top = uint32_t(1) << n;
    for (uint32_t w = 0; w < top; ++w) {
        if (w == 0) {
            if (infinite) ++count;  // 0^infinity is a point iff S is infinite
            continue;
        }
        // Cyclic gaps: distance between consecutive 1s around the circle.
        int first_one = -1, prev = -1;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (((w >> i) & 1u) == 0) continue;
            if (first_one < 0)
                first_one = i;
            else if (!member[static_cast<size_t>(i - prev - 1)])
                ok = false;
            prev = i;
        }
        // Wrap-around gap from the last 1 back to the first.
        if (ok && member[static_cast<size_t>(n - 1 - prev + first_one)]) ++count;
    }
    return count;
}

double entropy_estimate(const GapSpec& spec, int n) {
    if (n < 1) throw IndexError("entropy_estimate: need n >= 1");
    BigInt c = count_blocks_automaton(spec, n);
    // log2 via mpz size: exact enough for an estimate (counts fit doubles
    // far beyond the n used here, but stay safe for large n).
    double lg = std::log2(c.get_d());
    return lg / n;
}

}  // namespace sgap
