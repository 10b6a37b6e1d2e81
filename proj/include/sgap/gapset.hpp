#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sgap {

// Dynamical class of the shift X(S).
enum class ShiftClass { FiniteSFT, CofiniteSFT, StrictlySofic };

std::string to_string(ShiftClass c);

// A gap set S, the set of allowed zero-run lengths between consecutive 1s.
// Two storage forms:
//   * Finite: the strictly increasing list of elements of S.
//   * EventuallyPeriodic: the difference sequence Delta(S) split into a
//     transient prefix d_1..d_k and a repeating block g_1..g_l, with
//     d_1 = s_1 (so s_0 = 0) and d_i = s_i - s_{i-1} for i >= 2.
// S is always nonempty; elements are nonnegative; only d_1 may be zero.
struct GapSpec {
    enum class Kind { Finite, EventuallyPeriodic };
    Kind kind = Kind::Finite;
    std::vector<int64_t> finite_gaps;  // Finite: elements of S, strictly increasing
    std::vector<int64_t> transient;    // EventuallyPeriodic: d_1..d_k, k >= 1
    std::vector<int64_t> period;       // EventuallyPeriodic: g_1..g_l, l >= 1

    bool operator==(const GapSpec& o) const = default;

    bool is_finite() const { return kind == Kind::Finite; }
    // Number of elements of S; nullopt for infinite S.
    std::optional<int64_t> size() const;
    bool degenerate() const { return size() == std::optional<int64_t>(1); }

    // Transient prefix sums s_1..s_k (EventuallyPeriodic only).
    std::vector<int64_t> transient_sums() const;
    // Largest transient member s_k; for Finite, the maximum of S.
    int64_t s_k() const;
    // Prefix sums s_k, s_{k+1}, ..., s_{k+l-1} of the first period window.
    std::vector<int64_t> period_window_sums() const;
    // Sum of the period block, g = g_1 + ... + g_l.
    int64_t period_sum() const;
};

// Parse the textual forms
//   finite: n(,n)*
//   delta: d(,d)* | g(,g)*
// Whitespace-insensitive. Grammar violations throw SyntaxError; semantic
// violations (non-increasing finite list, d_i <= 0 for i >= 2, g_i <= 0)
// throw ValidationError.
GapSpec parse_spec(const std::string& text);

// Canonical textual rendering, parse_spec's inverse: "finite:1,2" or
// "delta:2|1,2".
std::string render_spec(const GapSpec& spec);

// Canonical form: the period block is primitive (not a repetition of a
// shorter block) and the transient is shortest: trailing transient elements
// equal to the period's last element are absorbed by right-rotating the
// period, keeping k >= 1. Finite specs are already canonical.
GapSpec canonicalize(const GapSpec& spec);

// FiniteSFT / CofiniteSFT (canonical period [1]) / StrictlySofic.
ShiftClass classify(const GapSpec& spec);

// Is j an element of S? (j < 0 is never a member.)
bool contains(const GapSpec& spec, int64_t j);

// Does S contain an element >= a? Constant-true for infinite S.
bool exists_gap_at_least(const GapSpec& spec, int64_t a);

}  // namespace sgap
