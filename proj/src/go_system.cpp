#include "obslang/go_system.hpp"

#include <algorithm>

#include "obslang/detail/bounded_search.hpp"
#include "obslang/errors.hpp"

namespace obslang {

GOSystem::GOSystem(Grammar g, MonadicTransducer a)
    : grammar(std::move(g)), observer(std::move(a)) {
    if (!(observer.input_alphabet() == grammar.alphabet()))
        throw ValidationError(
            "observer input alphabet must equal the grammar's combined alphabet");
}

namespace {

struct GrammarAdapter {
    using Config = SententialForm;
    using Edge = RuleApplication;

    const GOSystem& sys;

    std::vector<Config> roots() const { return {SententialForm{sys.grammar.start()}}; }

    void expand(const Config& form, std::vector<std::pair<Config, Edge>>& out) const {
        out = sys.grammar.successors(form);
    }

    bool is_final(const Config& form) const { return sys.grammar.is_terminal_form(form); }

    OutputSymbol observe(const Config& form) const { return sys.observer.observe(form); }

    std::size_t size(const Config& form) const { return form.size(); }

    std::size_t diagnostic(const Config& form) const {
        return sys.grammar.nonterminal_count_in(form);
    }

    void encode(const Config& form, std::vector<std::uint32_t>& key) const {
        key.insert(key.end(), form.begin(), form.end());
    }
};

detail::SearchBounds to_search_bounds(const EnumerationBounds& b) {
    if (b.max_steps == 0)
        throw BoundsError("derivation step bound must be at least 1");
    return detail::SearchBounds{b.max_steps, b.max_form_len, b.max_output_len};
}

void check_output_word(const MonadicTransducer& t, const OutputWord& word) {
    for (std::uint32_t code : word)
        if (code < 2 || code - 2 >= t.output_alphabet().size())
            throw AlphabetMismatchError("queried word must be over the output alphabet");
}

}  // namespace

ObservedLanguage enumerate(const GOSystem& sys, const EnumerationBounds& bounds, Mode mode,
                           int jobs) {
    GrammarAdapter adapter{sys};
    detail::BoundedSearch<GrammarAdapter> search(adapter, to_search_bounds(bounds), mode);
    detail::SearchOutcome outcome = search.run(jobs);

    ObservedLanguage lang;
    lang.words = std::move(outcome.words);
    std::sort(lang.words.begin(), lang.words.end(),
              [&](const OutputWord& a, const OutputWord& b) {
                  return output_word_less(sys.observer, a, b);
              });
    lang.words.erase(std::unique(lang.words.begin(), lang.words.end()), lang.words.end());
    lang.exhausted = outcome.exhausted;
    lang.stats.forms_explored = outcome.explored;
    lang.stats.max_nonterminals_seen = outcome.max_diagnostic;
    return lang;
}

std::optional<GOWitness> member(const GOSystem& sys, const OutputWord& word,
                                const EnumerationBounds& bounds) {
    check_output_word(sys.observer, word);
    GrammarAdapter adapter{sys};
    auto found = detail::member_search(adapter, word, to_search_bounds(bounds));
    if (!found)
        return std::nullopt;
    return GOWitness{std::move(found->edges)};
}

std::vector<TraceRow> trace(const GOSystem& sys, std::span<const RuleApplication> apps) {
    std::vector<TraceRow> rows;
    SententialForm form{sys.grammar.start()};
    rows.push_back(TraceRow{0, form, std::nullopt, sys.observer.observe(form)});
    for (std::size_t i = 0; i < apps.size(); ++i) {
        form = sys.grammar.apply(form, apps[i], i + 1);
        rows.push_back(TraceRow{i + 1, form, apps[i], sys.observer.observe(form)});
    }
    return rows;
}

}  // namespace obslang
