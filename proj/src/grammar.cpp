#include "obslang/grammar.hpp"

#include <algorithm>
#include <set>

#include "obslang/errors.hpp"

namespace obslang {

Grammar::Grammar(Alphabet alphabet, std::vector<bool> is_nonterminal, SymbolId start,
                 std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)),
      is_nonterminal_(std::move(is_nonterminal)),
      start_(start),
      rules_(std::move(rules)) {
    if (is_nonterminal_.size() != alphabet_.size())
        throw ValidationError("nonterminal flags do not cover the alphabet");
    if (start_ >= alphabet_.size() || !is_nonterminal_[start_])
        throw ValidationError("start symbol must be a declared nonterminal");

    std::set<std::pair<SymbolId, Word>> seen;
    rules_by_lhs_.assign(alphabet_.size(), {});
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Rule& r = rules_[i];
        if (r.lhs >= alphabet_.size() || !is_nonterminal_[r.lhs])
            throw ValidationError("rule " + std::to_string(i) +
                                  ": left-hand side must be a nonterminal");
        for (SymbolId s : r.rhs)
            if (s >= alphabet_.size())
                throw ValidationError("rule " + std::to_string(i) +
                                      ": right-hand side symbol outside the alphabet");
        // Duplicate rules would double-count successors.
        if (!seen.emplace(r.lhs, r.rhs).second)
            throw ValidationError("rule " + std::to_string(i) + ": duplicate rule " +
                                  alphabet_.name(r.lhs));
        rules_by_lhs_[r.lhs].push_back(static_cast<std::uint32_t>(i));
    }
}

bool Grammar::is_nonterminal(SymbolId id) const {
    if (id >= alphabet_.size())
        throw AlphabetMismatchError("symbol id " + std::to_string(id) + " outside the alphabet");
    return is_nonterminal_[id];
}

void Grammar::check_form(std::span<const SymbolId> form) const {
    for (SymbolId s : form)
        if (s >= alphabet_.size())
            throw AlphabetMismatchError("sentential form contains a foreign symbol id " +
                                        std::to_string(s));
}

std::size_t Grammar::nonterminal_count_in(std::span<const SymbolId> form) const {
    check_form(form);
    std::size_t n = 0;
    for (SymbolId s : form)
        if (is_nonterminal_[s])
            ++n;
    return n;
}

bool Grammar::is_terminal_form(std::span<const SymbolId> form) const {
    return nonterminal_count_in(form) == 0;
}

std::vector<std::pair<SententialForm, RuleApplication>> Grammar::successors(
    std::span<const SymbolId> form) const {
    check_form(form);
    std::vector<std::pair<SententialForm, RuleApplication>> out;
    for (std::uint32_t ri = 0; ri < rules_.size(); ++ri) {
        const Rule& r = rules_[ri];
        for (std::uint32_t pos = 0; pos < form.size(); ++pos) {
            if (form[pos] != r.lhs)
                continue;
            SententialForm next;
            next.reserve(form.size() - 1 + r.rhs.size());
            next.insert(next.end(), form.begin(), form.begin() + pos);
            next.insert(next.end(), r.rhs.begin(), r.rhs.end());
            next.insert(next.end(), form.begin() + pos + 1, form.end());
            out.emplace_back(std::move(next), RuleApplication{ri, pos});
        }
    }
    return out;
}

SententialForm Grammar::apply(std::span<const SymbolId> form, const RuleApplication& app,
                              std::size_t step) const {
    check_form(form);
    if (app.rule_index >= rules_.size())
        throw ReplayError(step, "rule index " + std::to_string(app.rule_index) + " out of range");
    const Rule& r = rules_[app.rule_index];
    if (app.position >= form.size() || form[app.position] != r.lhs)
        throw ReplayError(step, "rule " + alphabet_.name(r.lhs) + " does not apply at position " +
                                    std::to_string(app.position));
    SententialForm next;
    next.reserve(form.size() - 1 + r.rhs.size());
    next.insert(next.end(), form.begin(), form.begin() + app.position);
    next.insert(next.end(), r.rhs.begin(), r.rhs.end());
    next.insert(next.end(), form.begin() + app.position + 1, form.end());
    return next;
}

std::span<const std::uint32_t> Grammar::rules_for(SymbolId id) const {
    if (id >= alphabet_.size())
        throw AlphabetMismatchError("symbol id " + std::to_string(id) + " outside the alphabet");
    return rules_by_lhs_[id];
}

}  // namespace obslang
