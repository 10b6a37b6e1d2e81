#pragma once

#include <cstdint>
#include <string>

#include "sgap/bigint.hpp"
#include "sgap/gapset.hpp"

namespace sgap {

// Is the binary word admissible in X(S)? Rules, straight from the definition
// of the shift:
//   * every maximal zero-run strictly between two 1s must have length in S;
//   * a leading run of a zeros needs some gap >= a (it is the tail of one);
//   * a trailing run of b zeros needs some gap >= b;
//   * the all-zero word 0^n needs some gap >= n (for infinite S that is
//     always true; 0^infinity itself is then a point of the shift).
// The word may contain only '0' and '1' characters.
bool is_admissible_block(const GapSpec& spec, const std::string& word);

// Number of admissible words of length n. Enumeration walks all 2^n words
// (n <= 24); the automaton route determinizes the presentation by subset
// construction and counts paths, and serves any n. Both agree on the overlap
// and cross-check each other in the tests.
BigInt count_blocks_enumeration(const GapSpec& spec, int n);
BigInt count_blocks_automaton(const GapSpec& spec, int n);
// Dispatcher: enumeration for n <= 20, automaton DP beyond.
BigInt count_blocks(const GapSpec& spec, int n);

// Number of words w of length n with w^infinity a point of X(S): every
// cyclic zero-gap between consecutive 1s lies in S; the all-zero word counts
// exactly when S is infinite. Direct enumeration, n <= 16 by contract.
BigInt brute_periodic_count(const GapSpec& spec, int n);

// log2(count_blocks(n)) / n, a finite-n upper approximation of the entropy.
double entropy_estimate(const GapSpec& spec, int n);

}  // namespace sgap
