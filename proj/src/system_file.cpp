#include "obslang/system_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "obslang/errors.hpp"
#include "obslang/regex.hpp"
#include "obslang/render.hpp"

namespace obslang {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        if (j > i)
            out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

struct Line {
    int number;
    std::string text;  // comment-stripped, trimmed
};

struct Directive {
    std::string key;
    int line;
    std::vector<Line> items;  // same-line remainder first, then continuations
};

struct Section {
    std::string name;
    int line;
    std::vector<Directive> directives;
};

const std::map<std::string, std::set<std::string>> kSectionKeys = {
    {"grammar", {"nonterminals", "terminals", "start", "rules"}},
    {"sticker", {"alphabet", "rho", "axioms", "dominoes"}},
    {"observer", {"output", "cases"}},
};

std::vector<Section> split_sections(std::string_view text) {
    std::vector<Section> sections;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::string line{trim(raw)};
        if (line.empty())
            continue;
        if (line.front() == '[' && line.back() == ']') {
            std::string name = line.substr(1, line.size() - 2);
            if (!kSectionKeys.count(name))
                throw ParseError(number, "unknown section [" + name + "]");
            for (const Section& s : sections)
                if (s.name == name)
                    throw ParseError(number, "duplicated section [" + name + "]");
            sections.push_back(Section{name, number, {}});
            continue;
        }
        if (sections.empty())
            throw ParseError(number, "content before the first section header");
        Section& section = sections.back();
        const std::set<std::string>& keys = kSectionKeys.at(section.name);
        std::size_t colon = line.find(':');
        std::string head = colon == std::string::npos ? "" : line.substr(0, colon);
        if (!head.empty() && keys.count(head)) {
            Directive d{head, number, {}};
            std::string rest{trim(std::string_view(line).substr(colon + 1))};
            if (!rest.empty())
                d.items.push_back(Line{number, rest});
            for (const Directive& prev : section.directives)
                if (prev.key == head)
                    throw ParseError(number, "duplicated key \"" + head + ":\"");
            section.directives.push_back(std::move(d));
        } else {
            if (section.directives.empty())
                throw ParseError(number, "expected a \"key:\" directive");
            section.directives.back().items.push_back(Line{number, line});
        }
    }
    return sections;
}

const Directive* find_directive(const Section& s, const std::string& key) {
    for (const Directive& d : s.directives)
        if (d.key == key)
            return &d;
    return nullptr;
}

const Directive& require_directive(const Section& s, const std::string& key) {
    if (const Directive* d = find_directive(s, key))
        return *d;
    throw ParseError(s.line, "section [" + s.name + "] is missing \"" + key + ":\"");
}

std::vector<std::pair<std::string, int>> directive_tokens(const Directive& d) {
    std::vector<std::pair<std::string, int>> out;
    for (const Line& item : d.items)
        for (std::string& tok : split_tokens(item.text))
            out.emplace_back(std::move(tok), item.number);
    return out;
}

SymbolId intern_symbol(Alphabet& alphabet, const std::string& name, int line) {
    if (!is_valid_symbol_name(name))
        throw ParseError(line, "invalid symbol name \"" + name + "\"");
    if (alphabet.contains(name))
        throw ParseError(line, "duplicate symbol \"" + name + "\"");
    return alphabet.intern(name);
}

Grammar parse_grammar_section(const Section& s) {
    Alphabet alphabet;
    std::vector<bool> is_nonterminal;

    for (auto& [name, line] : directive_tokens(require_directive(s, "nonterminals"))) {
        intern_symbol(alphabet, name, line);
        is_nonterminal.push_back(true);
    }
    if (alphabet.size() == 0)
        throw ParseError(s.line, "at least one nonterminal is required");
    for (auto& [name, line] : directive_tokens(require_directive(s, "terminals"))) {
        intern_symbol(alphabet, name, line);
        is_nonterminal.push_back(false);
    }

    const Directive& start_d = require_directive(s, "start");
    auto start_tokens = directive_tokens(start_d);
    if (start_tokens.size() != 1)
        throw ParseError(start_d.line, "\"start:\" takes exactly one symbol");
    auto start = alphabet.find(start_tokens[0].first);
    if (!start)
        throw ParseError(start_tokens[0].second,
                         "undeclared start symbol \"" + start_tokens[0].first + "\"");

    std::vector<Rule> rules;
    std::set<std::pair<SymbolId, Word>> seen;
    for (const Line& item : require_directive(s, "rules").items) {
        std::vector<std::string> toks = split_tokens(item.text);
        if (toks.size() < 2 || toks[1] != "->")
            throw ParseError(item.number, "a rule has the form \"LHS -> SYMBOLS\" or \"LHS -> ~\"");
        auto lhs = alphabet.find(toks[0]);
        if (!lhs)
            throw ParseError(item.number, "undeclared symbol \"" + toks[0] + "\"");
        if (!is_nonterminal[*lhs])
            throw ParseError(item.number, "rule left-hand side \"" + toks[0] +
                                              "\" must be a nonterminal");
        Word rhs;
        if (toks.size() == 3 && toks[2] == "~") {
            // empty right side
        } else {
            for (std::size_t i = 2; i < toks.size(); ++i) {
                if (toks[i] == "~")
                    throw ParseError(item.number, "'~' must stand alone as an empty right side");
                auto sym = alphabet.find(toks[i]);
                if (!sym)
                    throw ParseError(item.number, "undeclared symbol \"" + toks[i] + "\"");
                rhs.push_back(*sym);
            }
            if (toks.size() == 2)
                throw ParseError(item.number, "missing right side; use '~' for an empty one");
        }
        if (!seen.emplace(*lhs, rhs).second)
            throw ParseError(item.number, "duplicate rule");
        rules.push_back(Rule{*lhs, std::move(rhs)});
    }

    return Grammar(std::move(alphabet), std::move(is_nonterminal), *start, std::move(rules));
}

StickerSystem parse_sticker_section(const Section& s) {
    Alphabet alphabet;
    for (auto& [name, line] : directive_tokens(require_directive(s, "alphabet")))
        intern_symbol(alphabet, name, line);
    if (alphabet.size() == 0)
        throw ParseError(s.line, "the sticker alphabet must not be empty");

    std::vector<std::pair<SymbolId, SymbolId>> pairs;
    for (auto& [tok, line] : directive_tokens(require_directive(s, "rho"))) {
        std::size_t tilde = tok.find('~');
        if (tilde == std::string::npos || tok.find('~', tilde + 1) != std::string::npos)
            throw ParseError(line, "a complementarity pair has the form A~B");
        std::string a = tok.substr(0, tilde), b = tok.substr(tilde + 1);
        auto ia = alphabet.find(a);
        if (!ia)
            throw ParseError(line, "undeclared symbol \"" + a + "\" in rho");
        auto ib = alphabet.find(b);
        if (!ib)
            throw ParseError(line, "undeclared symbol \"" + b + "\" in rho");
        pairs.emplace_back(*ia, *ib);
    }
    Complementarity rho(alphabet.size(), pairs);

    std::vector<Molecule> axioms;
    for (auto& [tok, line] : directive_tokens(require_directive(s, "axioms"))) {
        Molecule m = parse_molecule(alphabet, tok, line);
        if (!is_well_started(rho, m))
            throw ParseError(line, "axiom \"" + tok + "\" is not well-started under rho");
        axioms.push_back(std::move(m));
    }
    if (axioms.empty())
        throw ParseError(s.line, "at least one axiom is required");

    std::vector<SingleStrand> dominoes;
    for (auto& [tok, line] : directive_tokens(require_directive(s, "dominoes")))
        dominoes.push_back(parse_domino(alphabet, tok, line));

    return StickerSystem(std::move(alphabet), std::move(rho), std::move(axioms),
                         std::move(dominoes));
}

ObserverSpec parse_observer_section(const Section& s) {
    ObserverSpec spec;
    for (auto& [name, line] : directive_tokens(require_directive(s, "output"))) {
        if (!is_valid_symbol_name(name))
            throw ParseError(line, "invalid output symbol name \"" + name + "\"");
        if (std::find(spec.output_alphabet.begin(), spec.output_alphabet.end(), name) !=
            spec.output_alphabet.end())
            throw ParseError(line, "duplicate output symbol \"" + name + "\"");
        spec.output_alphabet.push_back(name);
    }

    bool have_default = false;
    for (const Line& item : require_directive(s, "cases").items) {
        std::size_t arrow = item.text.find("=>");
        if (arrow == std::string::npos)
            throw ParseError(item.number, "a case has the form \"PATTERN => SYMBOL\"");
        std::string pattern{trim(std::string_view(item.text).substr(0, arrow))};
        std::string output{trim(std::string_view(item.text).substr(arrow + 2))};
        if (output.empty() || split_tokens(output).size() != 1)
            throw ParseError(item.number, "a case emits exactly one symbol");
        if (have_default)
            throw ParseError(item.number, "the catch-all \"_ =>\" must be the last case");
        if (pattern == "_") {
            spec.default_output = output;
            spec.default_line = item.number;
            have_default = true;
        } else {
            spec.cases.push_back(PatternCase{std::move(pattern), std::move(output), item.number});
        }
    }
    if (!have_default)
        throw ParseError(s.line, "observer incomplete: missing the catch-all case \"_ => SYMBOL\"");
    return spec;
}

MonadicTransducer compile_with_lines(const ObserverSpec& spec, const Alphabet& input) {
    // surface each per-case error with its source line
    for (const PatternCase& c : spec.cases) {
        try {
            parse_regex(c.pattern, input);
        } catch (const RegexParseError& e) {
            throw ParseError(c.line, e.what());
        } catch (const AlphabetMismatchError& e) {
            throw ParseError(c.line, e.what());
        }
    }
    try {
        return compile_observer(spec, input);
    } catch (const ValidationError& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace

LoadedSystem parse_system(std::string_view text) {
    std::vector<Section> sections = split_sections(text);

    const Section* grammar_s = nullptr;
    const Section* sticker_s = nullptr;
    const Section* observer_s = nullptr;
    for (const Section& s : sections) {
        if (s.name == "grammar")
            grammar_s = &s;
        else if (s.name == "sticker")
            sticker_s = &s;
        else
            observer_s = &s;
    }
    if (grammar_s && sticker_s)
        throw ParseError(sticker_s->line, "a file holds one basic system: [grammar] or [sticker]");
    if (!grammar_s && !sticker_s)
        throw ParseError(0, "missing the basic system section ([grammar] or [sticker])");
    if (!observer_s)
        throw ParseError(0, "missing the [observer] section");

    ObserverSpec spec = parse_observer_section(*observer_s);

    if (grammar_s) {
        Grammar grammar = parse_grammar_section(*grammar_s);
        MonadicTransducer observer = compile_with_lines(spec, grammar.alphabet());
        return LoadedSystem{GOSystem(std::move(grammar), std::move(observer)), std::move(spec)};
    }

    StickerSystem system = parse_sticker_section(*sticker_s);
    DoubleAlphabet vd(system.alphabet, system.rho);
    MonadicTransducer observer = compile_with_lines(spec, vd.alphabet());
    return LoadedSystem{ObservableStickerSystem(std::move(system), std::move(observer)),
                        std::move(spec)};
}

std::string print_system(const LoadedSystem& s) {
    std::string out;
    if (!s.is_sticker()) {
        const Grammar& g = s.go().grammar;
        out += "[grammar]\nnonterminals:";
        for (SymbolId id = 0; id < g.alphabet().size(); ++id)
            if (g.is_nonterminal(id))
                out += " " + g.alphabet().name(id);
        out += "\nterminals:";
        for (SymbolId id = 0; id < g.alphabet().size(); ++id)
            if (g.is_terminal(id))
                out += " " + g.alphabet().name(id);
        out += "\nstart: " + g.alphabet().name(g.start()) + "\nrules:\n";
        for (const Rule& r : g.rules())
            out += "  " + print_rule(g, r) + "\n";
    } else {
        const StickerSystem& sys = s.sticker().system;
        out += "[sticker]\nalphabet:";
        for (SymbolId id = 0; id < sys.alphabet.size(); ++id)
            out += " " + sys.alphabet.name(id);
        out += "\nrho:";
        for (const auto& [a, b] : sys.rho.pairs())
            if (a <= b)
                out += " " + sys.alphabet.name(a) + "~" + sys.alphabet.name(b);
        out += "\naxioms:";
        for (const Molecule& m : sys.axioms)
            out += " " + render_molecule(sys.alphabet, m);
        out += "\ndominoes:";
        for (const SingleStrand& d : sys.dominoes)
            out += " " + render_domino(sys.alphabet, d);
        out += "\n";
    }

    out += "\n[observer]\noutput:";
    for (const std::string& name : s.observer_spec.output_alphabet)
        out += " " + name;
    out += "\ncases:\n";
    for (const PatternCase& c : s.observer_spec.cases)
        out += "  " + c.pattern + " => " + c.output + "\n";
    out += "  _ => " + s.observer_spec.default_output + "\n";
    return out;
}

}  // namespace obslang
