#include "obslang/observer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "obslang/errors.hpp"
#include "obslang/regex.hpp"

namespace obslang {

MonadicTransducer::MonadicTransducer(Alphabet input_alphabet, Alphabet output_alphabet,
                                     std::uint32_t initial, std::vector<std::uint32_t> table,
                                     std::vector<OutputSymbol> labels)
    : input_(std::move(input_alphabet)),
      output_(std::move(output_alphabet)),
      initial_(initial),
      table_(std::move(table)),
      labels_(std::move(labels)) {
    if (labels_.empty() || initial_ >= labels_.size())
        throw ValidationError("transducer must have a valid initial state");
    if (table_.size() != labels_.size() * input_.size())
        throw ValidationError("transducer transition table is not total");
    for (std::uint32_t t : table_)
        if (t >= labels_.size())
            throw ValidationError("transducer transition leaves the state set");
    for (OutputSymbol l : labels_)
        if (l.is_letter() && l.letter_index() >= output_.size())
            throw ValidationError("state label outside the output alphabet");
}

std::uint32_t MonadicTransducer::transition(std::uint32_t state, SymbolId sym) const {
    if (sym >= input_.size())
        throw AlphabetMismatchError("symbol id " + std::to_string(sym) +
                                    " outside the observer input alphabet");
    return table_[state * input_.size() + sym];
}

OutputSymbol MonadicTransducer::observe(std::span<const SymbolId> word) const {
    std::uint32_t state = initial_;
    const std::size_t n = input_.size();
    for (SymbolId sym : word) {
        if (sym >= n)
            throw AlphabetMismatchError("symbol id " + std::to_string(sym) +
                                        " outside the observer input alphabet");
        state = table_[state * n + sym];
    }
    return labels_[state];
}

void MonadicTransducer::observe_into(std::span<const SymbolId> word, OutputWord& out) const {
    OutputSymbol s = observe(word);
    if (!s.is_lambda())
        out.push_back(s.raw());
}

OutputWord MonadicTransducer::observe_sequence(std::span<const Word> words) const {
    OutputWord out;
    for (const Word& w : words)
        observe_into(w, out);
    return out;
}

MonadicTransducer MonadicTransducer::minimized() const {
    const std::size_t n = labels_.size();
    const std::size_t k = input_.size();

    // Moore-style partition refinement, starting from the label partition.
    std::vector<std::uint32_t> block(n);
    std::map<std::uint32_t, std::uint32_t> label_block;
    for (std::size_t s = 0; s < n; ++s)
        block[s] = label_block.emplace(labels_[s].raw(), static_cast<std::uint32_t>(label_block.size()))
                       .first->second;

    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> sig_ids;
        std::vector<std::uint32_t> next(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::uint32_t> sig;
            sig.reserve(k + 1);
            sig.push_back(block[s]);
            for (std::size_t x = 0; x < k; ++x)
                sig.push_back(block[table_[s * k + x]]);
            next[s] = sig_ids.emplace(std::move(sig), static_cast<std::uint32_t>(sig_ids.size()))
                          .first->second;
        }
        bool stable = sig_ids.size() == static_cast<std::size_t>(
                                            *std::max_element(block.begin(), block.end()) + 1);
        block = std::move(next);
        if (stable)
            break;
    }

    std::uint32_t n_blocks = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<std::uint32_t> table(n_blocks * k);
    std::vector<OutputSymbol> labels(n_blocks, OutputSymbol::lambda());
    std::vector<bool> filled(n_blocks, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (filled[block[s]])
            continue;
        filled[block[s]] = true;
        labels[block[s]] = labels_[s];
        for (std::size_t x = 0; x < k; ++x)
            table[block[s] * k + x] = block[table_[s * k + x]];
    }
    return MonadicTransducer(input_, output_, block[initial_], std::move(table), std::move(labels));
}

std::string MonadicTransducer::render_output_symbol(OutputSymbol s) const {
    if (s.is_lambda())
        return "~";
    if (s.is_bottom())
        return "!";
    return output_.name(s.letter_index());
}

std::string MonadicTransducer::render_output(const OutputWord& word) const {
    if (word.empty())
        return "~";
    const bool compact = output_.compact();
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !compact)
            out += ' ';
        OutputSymbol s = word[i] == OutputSymbol::kBottom
                             ? OutputSymbol::bottom()
                             : OutputSymbol::letter(word[i] - 2);
        out += render_output_symbol(s);
    }
    return out;
}

bool output_word_less(const MonadicTransducer& t, const OutputWord& a, const OutputWord& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i])
            continue;
        auto name = [&](std::uint32_t code) {
            return code == OutputSymbol::kBottom ? std::string("!")
                                                 : t.output_alphabet().name(code - 2);
        };
        return name(a[i]) < name(b[i]);
    }
    return false;
}

namespace {

OutputSymbol resolve_output(const std::string& token, const Alphabet& sigma, int line) {
    if (token == "~")
        return OutputSymbol::lambda();
    if (token == "!")
        return OutputSymbol::bottom();
    if (auto id = sigma.find(token))
        return OutputSymbol::letter(*id);
    throw ParseError(line, "output symbol \"" + token + "\" is not in the output alphabet");
}

}  // namespace

MonadicTransducer compile_observer(const ObserverSpec& spec, const Alphabet& input_alphabet) {
    Alphabet sigma;
    for (const std::string& name : spec.output_alphabet) {
        if (!is_valid_symbol_name(name))
            throw ValidationError("invalid output symbol name \"" + name + "\"");
        if (sigma.contains(name))
            throw ValidationError("duplicate output symbol \"" + name + "\"");
        sigma.intern(name);
    }

    const std::uint32_t n_inputs = static_cast<std::uint32_t>(input_alphabet.size());
    std::vector<CaseDfa> dfas;
    std::vector<OutputSymbol> outputs;
    dfas.reserve(spec.cases.size());
    for (const PatternCase& c : spec.cases) {
        dfas.push_back(compile_case(parse_regex(c.pattern, input_alphabet), n_inputs));
        outputs.push_back(resolve_output(c.output, sigma, c.line));
    }
    OutputSymbol default_output = resolve_output(spec.default_output, sigma, spec.default_line);

    // Lazy product of the case automata; each product state is labeled by
    // its first accepting component (first-match-wins).
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::vector<std::uint32_t>> tuples;
    std::vector<OutputSymbol> labels;
    auto state_of = [&](std::vector<std::uint32_t> tuple) {
        auto [it, fresh] = ids.emplace(std::move(tuple), static_cast<std::uint32_t>(tuples.size()));
        if (fresh) {
            tuples.push_back(it->first);
            OutputSymbol label = default_output;
            for (std::size_t i = 0; i < dfas.size(); ++i) {
                if (dfas[i].accepting[it->first[i]]) {
                    label = outputs[i];
                    break;
                }
            }
            labels.push_back(label);
        }
        return it->second;
    };

    std::vector<std::uint32_t> init(dfas.size());
    for (std::size_t i = 0; i < dfas.size(); ++i)
        init[i] = dfas[i].initial;
    std::uint32_t initial = state_of(std::move(init));

    // tuples grows while rows are appended; the loop rechecks the size, so
    // every discovered state gets its row, in state order
    std::vector<std::uint32_t> table;
    for (std::uint32_t q = 0; q < tuples.size(); ++q) {
        for (SymbolId x = 0; x < n_inputs; ++x) {
            std::vector<std::uint32_t> next(dfas.size());
            for (std::size_t i = 0; i < dfas.size(); ++i)
                next[i] = dfas[i].step(tuples[q][i], x);
            table.push_back(state_of(std::move(next)));
        }
    }

    return MonadicTransducer(input_alphabet, std::move(sigma), initial, std::move(table),
                             std::move(labels));
}

std::vector<OverlapWarning> lint_disjointness(const ObserverSpec& spec,
                                              const Alphabet& input_alphabet) {
    const std::uint32_t n_inputs = static_cast<std::uint32_t>(input_alphabet.size());
    std::vector<CaseDfa> dfas;
    dfas.reserve(spec.cases.size());
    for (const PatternCase& c : spec.cases)
        dfas.push_back(compile_case(parse_regex(c.pattern, input_alphabet), n_inputs));

    std::vector<OverlapWarning> warnings;
    for (std::size_t i = 0; i < dfas.size(); ++i)
        for (std::size_t j = i + 1; j < dfas.size(); ++j)
            if (auto w = shortest_common_word(dfas[i], dfas[j]))
                warnings.push_back({i, j, std::move(*w)});
    return warnings;
}

}  // namespace obslang
