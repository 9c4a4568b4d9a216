#ifndef OBSLANG_OBSERVER_HPP
#define OBSLANG_OBSERVER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "obslang/alphabet.hpp"

namespace obslang {

// One output symbol of an observer: a letter of the output alphabet, the
// reject marker (bottom) or the empty word (lambda). Bottom renders as "!",
// lambda as "~"; neither is a legal letter name.
class OutputSymbol {
public:
    static constexpr std::uint32_t kLambda = 0;
    static constexpr std::uint32_t kBottom = 1;

    static OutputSymbol lambda() { return OutputSymbol(kLambda); }
    static OutputSymbol bottom() { return OutputSymbol(kBottom); }
    static OutputSymbol letter(std::uint32_t index) { return OutputSymbol(index + 2); }

    bool is_lambda() const { return code_ == kLambda; }
    bool is_bottom() const { return code_ == kBottom; }
    bool is_letter() const { return code_ >= 2; }
    std::uint32_t letter_index() const { return code_ - 2; }
    std::uint32_t raw() const { return code_; }

    bool operator==(const OutputSymbol&) const = default;

private:
    explicit OutputSymbol(std::uint32_t code) : code_(code) {}
    std::uint32_t code_;
};

// A word over the output alphabet plus bottom; stores raw OutputSymbol
// codes. Lambda never occurs inside a word (it contributes nothing).
using OutputWord = std::vector<std::uint32_t>;

// Surface syntax of one observer case: a pattern plus the symbol it emits
// ("~" for lambda, "!" for bottom). `line` is kept for error reporting.
struct PatternCase {
    std::string pattern;
    std::string output;
    int line = 0;
};

// An ordered case list with the mandatory catch-all. Cases are tried in
// order; the first pattern matching the whole input decides the output.
struct ObserverSpec {
    std::vector<std::string> output_alphabet;
    std::vector<PatternCase> cases;
    std::string default_output = "!";
    int default_line = 0;
};

// A deterministic complete finite automaton with output-labeled states: it
// maps an entire input word to the label of the state it halts in.
class MonadicTransducer {
public:
    MonadicTransducer(Alphabet input_alphabet, Alphabet output_alphabet, std::uint32_t initial,
                      std::vector<std::uint32_t> table, std::vector<OutputSymbol> labels);

    const Alphabet& input_alphabet() const { return input_; }
    const Alphabet& output_alphabet() const { return output_; }

    std::size_t state_count() const { return labels_.size(); }
    std::uint32_t initial_state() const { return initial_; }
    std::uint32_t transition(std::uint32_t state, SymbolId sym) const;
    OutputSymbol label(std::uint32_t state) const { return labels_[state]; }

    // Label of the state reached after consuming all of `word`. Total over
    // the input alphabet; foreign symbols raise AlphabetMismatchError.
    OutputSymbol observe(std::span<const SymbolId> word) const;

    // Catenation of per-word observations, lambda contributing nothing.
    OutputWord observe_sequence(std::span<const Word> words) const;

    // Appends observe(word) to `out` unless it is lambda.
    void observe_into(std::span<const SymbolId> word, OutputWord& out) const;

    // Equivalent transducer with classes of indistinguishable states merged
    // (optional post-pass; compilation does not minimize).
    MonadicTransducer minimized() const;

    std::string render_output(const OutputWord& word) const;
    std::string render_output_symbol(OutputSymbol s) const;

private:
    Alphabet input_;
    Alphabet output_;
    std::uint32_t initial_;
    std::vector<std::uint32_t> table_;  // state_count x input size
    std::vector<OutputSymbol> labels_;
};

// Compiles an ordered case list into one transducer: the product of the
// per-case automata, each product state labeled by the first accepting
// case (or the default when none accepts).
MonadicTransducer compile_observer(const ObserverSpec& spec, const Alphabet& input_alphabet);

struct OverlapWarning {
    std::size_t case_a;  // 0-based indexes into spec.cases
    std::size_t case_b;
    Word witness;  // a shortest word matched by both
};

// One warning per pair of cases whose languages intersect. The catch-all
// is not a case and never participates.
std::vector<OverlapWarning> lint_disjointness(const ObserverSpec& spec,
                                              const Alphabet& input_alphabet);

// Length-lexicographic comparison of output words under the transducer's
// output symbol names (bottom spelled "!"): by symbol count, then by the
// rendered names.
bool output_word_less(const MonadicTransducer& t, const OutputWord& a, const OutputWord& b);

}  // namespace obslang

#endif
