#ifndef OBSLANG_GO_SYSTEM_HPP
#define OBSLANG_GO_SYSTEM_HPP

#include <optional>
#include <span>
#include <vector>

#include "obslang/enumeration.hpp"
#include "obslang/grammar.hpp"
#include "obslang/observer.hpp"

namespace obslang {

// A grammar coupled with an observer whose input alphabet is the grammar's
// combined alphabet, so it can read every sentential form.
struct GOSystem {
    GOSystem(Grammar g, MonadicTransducer a);

    Grammar grammar;
    MonadicTransducer observer;
};

struct TraceRow {
    std::size_t step;
    SententialForm form;
    std::optional<RuleApplication> applied;  // empty for step 0
    OutputSymbol emitted;
};

struct GOWitness {
    std::vector<RuleApplication> applications;
};

// Bounded slice of the observed language: outputs of all terminating
// derivations of length 1..max_steps (the start form itself is observed).
// jobs > 1 processes each breadth-first level with OpenMP workers; the
// result is identical for every worker count.
ObservedLanguage enumerate(const GOSystem& sys, const EnumerationBounds& bounds, Mode mode,
                           int jobs = 1);

// Searches for a terminating derivation within bounds whose observation
// equals `word` (a word over the output alphabet). No value means
// not-found-within-bounds, which is not a proof of non-membership.
std::optional<GOWitness> member(const GOSystem& sys, const OutputWord& word,
                                const EnumerationBounds& bounds);

// Replays `apps` from the start symbol, emitting one row per sentential
// form. Throws ReplayError naming the failing step on invalid scripts.
std::vector<TraceRow> trace(const GOSystem& sys, std::span<const RuleApplication> apps);

}  // namespace obslang

#endif
