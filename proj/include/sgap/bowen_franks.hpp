#pragma once

#include <string>
#include <vector>

#include "sgap/gapset.hpp"
#include "sgap/matrix.hpp"
#include "sgap/smith.hpp"

namespace sgap {

// Finitely generated abelian group as free rank plus invariant factors
// (each > 1, each dividing the next). The trivial group has rank 0, no
// factors, and renders as "0".
struct AbelianGroup {
    int free_rank = 0;
    std::vector<BigInt> factors;

    bool trivial() const { return free_rank == 0 && factors.empty(); }
    bool operator==(const AbelianGroup& o) const = default;
    std::string to_string() const;
};

// Group encoded by a Smith form of Id - A: unit diagonal entries vanish,
// entries > 1 are invariant factors, zeros contribute free rank.
AbelianGroup group_from_smith(const SmithForm& s);

// The four Bowen-Franks invariants of an adjacency matrix A: coker(Id - A)
// for A and its transpose (computed independently, not copied), plus the free
// ranks of the kernels of Id - A and its transpose.
struct BfGroups {
    AbelianGroup bf;    // Z^n / (Id - A) Z^n
    AbelianGroup bf_t;  // same for A^t
    int bf1_rank = 0;   // rank of ker(Id - A)
    int bf1_t_rank = 0;
    SmithForm snf;      // Smith form of Id - A
    SmithForm snf_t;
};

BfGroups bf_groups(const IntMatrix& adjacency);

// Sign of det(Id - A): -1, 0, or +1.
int det_sign(const IntMatrix& adjacency);

// Flow-equivalence classification data. For SFT classes the pair
// (Bowen-Franks group, sign of det(Id - A)) is a complete invariant among
// irreducible SFTs, and the closed forms identify the class outright:
// finite |S| = k gives the full k-shift, cofinite the full 2-shift. For
// strictly sofic specs the invariant pair is reported without completeness.
struct FlowClass {
    enum class Kind { FullShift, InvariantPair };
    Kind kind = Kind::InvariantPair;
    int64_t full_shift_symbols = 0;  // meaningful for Kind::FullShift
    AbelianGroup group;
    int determinant_sign = 0;
    bool complete = false;  // true iff the invariant decides flow equivalence

    std::string to_string() const;
};

// Throws DegenerateError for |S| = 1 (the classification needs a
// nondegenerate irreducible presentation).
FlowClass flow_class(const GapSpec& spec);

// Predictions of the closed-form Bowen-Franks group formulas against the computed
// groups: finite |S| = k predicts Z_{k-1}, cofinite predicts the trivial
// group, strictly sofic predicts Z_l (l = canonical period length); in every
// case BF = BF^t, both kernels are trivial, and det(Id - A) < 0.
struct GroupPredictionReport {
    AbelianGroup predicted;
    AbelianGroup bf, bf_t;
    bool group_matches = false;
    bool transpose_matches = false;
    bool kernels_trivial = false;
    bool det_negative = false;
    bool pass = false;
};

// Throws DegenerateError for |S| = 1.
GroupPredictionReport check_group_predictions(const GapSpec& spec);

}  // namespace sgap
