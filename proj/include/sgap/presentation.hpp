#pragma once

#include <string>
#include <vector>

#include "sgap/gapset.hpp"
#include "sgap/matrix.hpp"

namespace sgap {

// Which closed-form adjacency shape a spec falls under. The split mirrors the
// structure of the minimal presentation: finite S (path with return edges),
// cofinite S (terminal self-loop), and the three eventually-periodic wrap
// shapes distinguished by how the last period increment g_l compares with the
// last transient difference.
enum class CaseTag {
    FiniteCase,
    CofiniteCase,
    WrapDouble,     // k = 1, g_l = s_1 + 1: wrap to vertex 1 with a double edge
    WrapRoot,       // k = 1, g_l > s_1 + 1: wrap to vertex 1
    WrapTransient,  // k > 1, g_l > d_k: wrap into the transient spine
    WrapWindow,     // g_l <= d_k: wrap into the tail window
};

std::string to_string(CaseTag t);

// One labeled edge of the presentation graph (vertices 0-based internally).
struct Edge {
    int from;
    int to;
    int label;  // 0 or 1
    bool operator==(const Edge& o) const = default;
};

// Minimal right-resolving presentation of X(S). Vertex v represents the
// follower set of the synchronizing word 1 0^v; vertex 0 is F(1).
struct Presentation {
    int n = 0;
    std::vector<Edge> edges;
    IntMatrix adjacency;  // adjacency[u][v] = number of edges u -> v (0..2)
    CaseTag case_tag = CaseTag::FiniteCase;
};

// Case dispatch on the canonical form of the spec.
CaseTag case_tag(const GapSpec& spec);

// Ground truth: build the presentation from follower sets. States are
// zero-run lengths i (the word 1 0^i); two states merge iff the membership
// indicator tails {m : i+m in S} agree, decided on a window of
// preperiod + 2*period symbols. The chain 0 -> 1 -> ... either terminates
// (finite S, no gap long enough) or closes onto an earlier class.
Presentation build_presentation(const GapSpec& spec);

// Closed-form adjacency for the spec's case: superdiagonal 0-edges, a
// case-specific wrap edge from the last vertex, and 1-edges into column 1
// from every vertex v with v-1 in S (1-based). Cross-checked entrywise
// against build_presentation by the verification suite.
IntMatrix case_matrix(const GapSpec& spec);

// Graph period: gcd of all cycle lengths of the (strongly connected)
// presentation graph; 1 means aperiodic (primitive adjacency matrix).
int64_t graph_period(const IntMatrix& adjacency);

// True iff the graph is strongly connected.
bool is_irreducible(const IntMatrix& adjacency);

// DOT rendering of the labeled graph (1-based vertex names).
std::string to_dot(const Presentation& p, const std::string& name = "presentation");

}  // namespace sgap
