#include "obslang/render.hpp"

#include "obslang/errors.hpp"

namespace obslang {

std::string render_strand(const Alphabet& v, const Word& strand) {
    if (strand.empty())
        return "-";
    const bool compact = v.compact();
    std::string out;
    for (std::size_t i = 0; i < strand.size(); ++i) {
        if (i > 0 && !compact)
            out += '.';
        out += v.name(strand[i]);
    }
    return out;
}

std::string render_molecule(const Alphabet& v, const Molecule& m) {
    return render_strand(v, m.upper) + "/" + render_strand(v, m.lower);
}

std::string render_domino(const Alphabet& v, const SingleStrand& s) {
    if (s.side == StrandSide::upper)
        return render_strand(v, s.content) + "/-";
    return "-/" + render_strand(v, s.content);
}

std::string print_rule(const Grammar& g, const Rule& r) {
    std::string out = g.alphabet().name(r.lhs) + " ->";
    if (r.rhs.empty())
        return out + " ~";
    for (SymbolId s : r.rhs)
        out += " " + g.alphabet().name(s);
    return out;
}

std::string render_rule_application(const Grammar& g, const RuleApplication& app) {
    const Rule& r = g.rules().at(app.rule_index);
    const bool compact = g.alphabet().compact();
    std::string rhs;
    for (std::size_t i = 0; i < r.rhs.size(); ++i) {
        if (i > 0 && !compact)
            rhs += ' ';
        rhs += g.alphabet().name(r.rhs[i]);
    }
    if (r.rhs.empty())
        rhs = "~";
    std::string arrow = compact ? "->" : " -> ";
    std::string at = compact ? "@" : " @";
    return g.alphabet().name(r.lhs) + arrow + rhs + at + std::to_string(app.position);
}

std::string render_replay_token(const RuleApplication& app) {
    return std::to_string(app.rule_index) + "@" + std::to_string(app.position);
}

Word parse_strand(const Alphabet& v, std::string_view text, int line) {
    if (text == "-")
        return {};
    if (text.empty())
        throw ParseError(line, "empty strand; use '-' for an empty strand");
    try {
        if (text.find('.') != std::string_view::npos) {
            Word out;
            std::size_t pos = 0;
            while (pos <= text.size()) {
                std::size_t dot = text.find('.', pos);
                std::string_view part =
                    text.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
                auto id = v.find(part);
                if (!id)
                    throw AlphabetMismatchError("unknown symbol \"" + std::string(part) + "\"");
                out.push_back(*id);
                if (dot == std::string_view::npos)
                    break;
                pos = dot + 1;
            }
            return out;
        }
        return parse_word(v, text);
    } catch (const AlphabetMismatchError& e) {
        throw ParseError(line, e.what());
    }
}

Molecule parse_molecule(const Alphabet& v, std::string_view text, int line) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos)
        throw ParseError(line, "molecule must have the form UPPER/LOWER");
    return Molecule{parse_strand(v, text.substr(0, slash), line),
                    parse_strand(v, text.substr(slash + 1), line)};
}

SingleStrand parse_domino(const Alphabet& v, std::string_view text, int line) {
    Molecule m = parse_molecule(v, text, line);
    if (m.upper.empty() == m.lower.empty())
        throw ParseError(line, "a domino is a single strand: exactly one side must be '-'");
    if (m.lower.empty())
        return SingleStrand{StrandSide::upper, std::move(m.upper)};
    return SingleStrand{StrandSide::lower, std::move(m.lower)};
}

}  // namespace obslang
