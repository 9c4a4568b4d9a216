#ifndef OBSLANG_ALPHABET_HPP
#define OBSLANG_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace obslang {

using SymbolId = std::uint32_t;

// A word over some alphabet, as a sequence of interned symbol ids.
using Word = std::vector<SymbolId>;

// Interning table mapping symbol names to dense ids. Ids are assigned in
// insertion order, so an alphabet built from a file is deterministic.
class Alphabet {
public:
    SymbolId intern(std::string_view name);

    std::optional<SymbolId> find(std::string_view name) const;

    const std::string& name(SymbolId id) const;

    std::size_t size() const { return names_.size(); }

    bool contains(std::string_view name) const { return find(name).has_value(); }

    // True when every symbol name is a single character; such alphabets
    // render words as plain concatenation (e.g. "aabbcc").
    bool compact() const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, SymbolId> ids_;
};

// Checks that `name` is usable as a symbol: nonempty, printable, free of
// whitespace and of the characters reserved by patterns and file syntax,
// and not one of the reserved spellings "~", "!", "_", "-".
bool is_valid_symbol_name(std::string_view name);

// Renders a word using the alphabet's symbol names: concatenated for
// single-character alphabets, space-separated otherwise. Empty word -> "~".
std::string render_word(const Alphabet& alphabet, std::span<const SymbolId> word);

// Splits `text` into symbols of `alphabet`. Whitespace always separates
// symbols; a whitespace-free chunk that is not itself a symbol name is
// resolved by greedy longest-match tokenization (so "aab" over {a, b} works).
// Throws AlphabetMismatchError when the text cannot be resolved.
Word parse_word(const Alphabet& alphabet, std::string_view text);

}  // namespace obslang

#endif
