#ifndef OBSLANG_ENUMERATION_HPP
#define OBSLANG_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "obslang/observer.hpp"

namespace obslang {

// Generation mode: free keeps every output; bottom_filtered intersects with
// the bottom-free words (and prunes a branch the moment bottom is emitted,
// which is sound because an emitted bottom persists in the catenation).
enum class Mode { free, bottom_filtered };

// Bounds for grammar/observer enumeration. max_steps (the derivation
// length) is mandatory and must be >= 1; the other two are optional.
struct EnumerationBounds {
    std::size_t max_steps = 0;
    std::optional<std::size_t> max_form_len;
    std::optional<std::size_t> max_output_len;
};

// Bounds for sticker computations: number of sticking operations (>= 0;
// zero admits computations consisting of a single complete axiom).
struct ComputationBounds {
    std::size_t max_steps = 0;
};

struct EnumerationStats {
    std::uint64_t forms_explored = 0;
    std::size_t max_nonterminals_seen = 0;
};

// A bounded slice of an observed language. `exhausted` is true iff no
// branch was cut by the form or output bound, i.e. `words` is exactly the
// observed set over all qualifying evolutions of length <= max_steps.
struct ObservedLanguage {
    std::vector<OutputWord> words;  // deduplicated, sorted length-lexicographically
    bool exhausted = true;
    EnumerationStats stats;
};

}  // namespace obslang

#endif
