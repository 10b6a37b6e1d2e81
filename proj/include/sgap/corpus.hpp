#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgap/gapset.hpp"

namespace sgap {

// Constraints for randomized corpus augmentation. Defaults match the
// verification suite: no zero gaps, small values, all six case shapes.
struct AugmentOptions {
    std::uint64_t seed = 0;
    int count = 200;
    bool allow_zero = false;        // permit 0 as the first gap element
    std::int64_t max_value = 30;    // cap on every difference / gap element
    int max_period_len = 5;         // cap on the repeating block length l
    int max_transient_len = 4;      // cap on the transient length k
    int max_finite_size = 6;        // cap on |S| for finite specs
    int max_vertices = 120;         // reject specs with larger presentations
};

// One spec per nonempty line; '#' starts a comment. Throws ValidationError
// (with the line number) if a line fails to parse.
std::vector<GapSpec> load_corpus_file(const std::string& path);

// The curated corpus shipped with the build. Looks at the SGAP_CORPUS
// environment variable first, then the baked-in data directory.
std::vector<GapSpec> default_corpus();
std::string default_corpus_path();

// Deterministic pseudo-random specs cycling through all six case shapes,
// deduplicated by canonical rendering against `existing` and one another.
// Every returned spec is canonical, non-degenerate, and within the caps.
std::vector<GapSpec> augment_corpus(const AugmentOptions& opt,
                                    const std::vector<GapSpec>& existing = {});

}  // namespace sgap
