#ifndef OBSLANG_REGEX_HPP
#define OBSLANG_REGEX_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "obslang/alphabet.hpp"

namespace obslang {

// Regular expressions over interned symbols rather than characters: a token
// of the pattern is one symbol of the input alphabet, so observers can run
// over multi-character tokens such as the bracketed sticker double symbols.
//
// Pattern syntax: symbol tokens separated by the operators, postfix * + ?,
// infix |, grouping with parentheses, juxtaposition for concatenation.
// "[...]" is lexed as a single symbol token (sticker double symbols).
struct RegexAst {
    enum class Kind : std::uint8_t { epsilon, symbol, concat, alt, star, plus, opt };

    struct Node {
        Kind kind;
        SymbolId sym = 0;  // for Kind::symbol
        int a = -1;        // first child
        int b = -1;        // second child (concat, alt)
    };

    std::vector<Node> nodes;
    int root = -1;
};

// Parses `pattern` against `alphabet`. Throws RegexParseError (with a
// character offset) on malformed input, AlphabetMismatchError on a token
// that is not a declared input symbol.
RegexAst parse_regex(std::string_view pattern, const Alphabet& alphabet);

// A deterministic complete automaton for one pattern, over the full input
// alphabet (columns are symbol ids 0..n_inputs-1).
struct CaseDfa {
    std::uint32_t n_states = 0;
    std::uint32_t n_inputs = 0;
    std::uint32_t initial = 0;
    std::vector<std::uint32_t> table;  // n_states x n_inputs, row-major
    std::vector<bool> accepting;

    std::uint32_t step(std::uint32_t state, SymbolId sym) const {
        return table[state * n_inputs + sym];
    }
};

// Thompson construction followed by the subset construction.
CaseDfa compile_case(const RegexAst& ast, std::uint32_t n_inputs);

// Shortest word accepted by both automata, or no value when the
// intersection is empty. Ties are broken by symbol id order.
std::optional<Word> shortest_common_word(const CaseDfa& a, const CaseDfa& b);

}  // namespace obslang

#endif
