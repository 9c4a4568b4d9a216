#include "obslang/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "obslang/errors.hpp"

namespace obslang {

SymbolId Alphabet::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end())
        return it->second;
    SymbolId id = static_cast<SymbolId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

const std::string& Alphabet::name(SymbolId id) const {
    if (id >= names_.size())
        throw AlphabetMismatchError("symbol id " + std::to_string(id) +
                                    " outside alphabet of size " + std::to_string(names_.size()));
    return names_[id];
}

bool Alphabet::compact() const {
    return std::all_of(names_.begin(), names_.end(),
                       [](const std::string& n) { return n.size() == 1; });
}

bool is_valid_symbol_name(std::string_view name) {
    if (name.empty())
        return false;
    if (name == "~" || name == "!" || name == "_" || name == "-")
        return false;
    static const std::string_view reserved = "#()|*+?[]{}~!/@=<>:.";
    for (char c : name) {
        unsigned char uc = static_cast<unsigned char>(c);
        if (std::isspace(uc) || !std::isprint(uc))
            return false;
        if (reserved.find(c) != std::string_view::npos)
            return false;
    }
    return true;
}

std::string render_word(const Alphabet& alphabet, std::span<const SymbolId> word) {
    if (word.empty())
        return "~";
    const bool compact = alphabet.compact();
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !compact)
            out += ' ';
        out += alphabet.name(word[i]);
    }
    return out;
}

namespace {

// Greedy longest-match split of a whitespace-free chunk.
void tokenize_chunk(const Alphabet& alphabet, std::string_view chunk, Word& out) {
    std::size_t pos = 0;
    while (pos < chunk.size()) {
        std::size_t best = 0;
        SymbolId best_id = 0;
        for (std::size_t len = chunk.size() - pos; len > 0; --len) {
            if (auto id = alphabet.find(chunk.substr(pos, len))) {
                best = len;
                best_id = *id;
                break;
            }
        }
        if (best == 0)
            throw AlphabetMismatchError("cannot resolve \"" + std::string(chunk.substr(pos)) +
                                        "\" against the declared alphabet");
        out.push_back(best_id);
        pos += best;
    }
}

}  // namespace

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        if (j > i) {
            std::string_view chunk = text.substr(i, j - i);
            if (auto id = alphabet.find(chunk))
                out.push_back(*id);
            else
                tokenize_chunk(alphabet, chunk, out);
        }
        i = j;
    }
    return out;
}

}  // namespace obslang
