#ifndef OBSLANG_GRAMMAR_HPP
#define OBSLANG_GRAMMAR_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "obslang/alphabet.hpp"

namespace obslang {

// An intermediate string of a derivation, over nonterminals and terminals.
using SententialForm = Word;

struct Rule {
    SymbolId lhs;
    Word rhs;  // may be empty (erasing rule)

    bool operator==(const Rule&) const = default;
};

// Witness data for one derivation step: which rule was applied where.
struct RuleApplication {
    std::uint32_t rule_index;
    std::uint32_t position;  // 0-based index of the rewritten occurrence

    bool operator==(const RuleApplication&) const = default;
};

// A context-free grammar. Immutable after construction; construction
// validates all invariants (disjoint alphabets, start is a nonterminal,
// rules over the declared alphabet, no duplicate rules).
class Grammar {
public:
    Grammar(Alphabet alphabet, std::vector<bool> is_nonterminal, SymbolId start,
            std::vector<Rule> rules);

    const Alphabet& alphabet() const { return alphabet_; }
    SymbolId start() const { return start_; }
    const std::vector<Rule>& rules() const { return rules_; }

    bool is_nonterminal(SymbolId id) const;
    bool is_terminal(SymbolId id) const { return !is_nonterminal(id); }

    std::size_t nonterminal_count_in(std::span<const SymbolId> form) const;
    bool is_terminal_form(std::span<const SymbolId> form) const;

    // All forms reachable from `form` in one derivation step, one entry per
    // (rule, occurrence) pair, ordered by rule index then position. Any
    // occurrence may be rewritten (free derivation mode).
    std::vector<std::pair<SententialForm, RuleApplication>> successors(
        std::span<const SymbolId> form) const;

    // Replays one application: splices the rule's rhs at `app.position`.
    // Throws ReplayError (naming `step`) when the application does not fit.
    SententialForm apply(std::span<const SymbolId> form, const RuleApplication& app,
                         std::size_t step = 0) const;

    // Rule indices whose lhs is `id`, in rule order.
    std::span<const std::uint32_t> rules_for(SymbolId id) const;

private:
    void check_form(std::span<const SymbolId> form) const;

    Alphabet alphabet_;
    std::vector<bool> is_nonterminal_;
    SymbolId start_;
    std::vector<Rule> rules_;
    std::vector<std::vector<std::uint32_t>> rules_by_lhs_;
};

}  // namespace obslang

#endif
