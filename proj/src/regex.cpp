#include "obslang/regex.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "obslang/errors.hpp"

namespace obslang {

namespace {

struct Token {
    enum class Kind { symbol, lparen, rparen, alt, star, plus, opt, end };
    Kind kind;
    SymbolId sym = 0;
    std::size_t pos = 0;
};

std::vector<Token> lex_pattern(std::string_view pattern, const Alphabet& alphabet) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < pattern.size()) {
        char c = pattern[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        switch (c) {
            case '(': toks.push_back({Token::Kind::lparen, 0, i}); ++i; continue;
            case ')': toks.push_back({Token::Kind::rparen, 0, i}); ++i; continue;
            case '|': toks.push_back({Token::Kind::alt, 0, i}); ++i; continue;
            case '*': toks.push_back({Token::Kind::star, 0, i}); ++i; continue;
            case '+': toks.push_back({Token::Kind::plus, 0, i}); ++i; continue;
            case '?': toks.push_back({Token::Kind::opt, 0, i}); ++i; continue;
            default: break;
        }
        std::size_t start = i;
        std::string name;
        if (c == '[') {
            // one bracketed double symbol, e.g. [a/t]
            std::size_t close = pattern.find(']', i);
            if (close == std::string_view::npos)
                throw RegexParseError(i, "unterminated '['");
            name = std::string(pattern.substr(i, close - i + 1));
            i = close + 1;
        } else {
            while (i < pattern.size()) {
                char d = pattern[i];
                if (std::isspace(static_cast<unsigned char>(d)) ||
                    std::string_view("()|*+?[]").find(d) != std::string_view::npos)
                    break;
                ++i;
            }
            name = std::string(pattern.substr(start, i - start));
        }
        auto id = alphabet.find(name);
        if (!id)
            throw AlphabetMismatchError("pattern symbol \"" + name +
                                        "\" is not in the input alphabet");
        toks.push_back({Token::Kind::symbol, *id, start});
    }
    toks.push_back({Token::Kind::end, 0, pattern.size()});
    return toks;
}

// alternation := concat ('|' concat)*
// concat      := repeat*               (empty sequence denotes the empty word)
// repeat      := atom ('*' | '+' | '?')*
// atom        := SYMBOL | '(' alternation ')'
class Parser {
public:
    Parser(std::vector<Token> toks, RegexAst& ast) : toks_(std::move(toks)), ast_(ast) {}

    int parse() {
        int r = alternation();
        if (peek().kind != Token::Kind::end)
            throw RegexParseError(peek().pos, "unexpected ')'");
        return r;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    int add(RegexAst::Node n) {
        ast_.nodes.push_back(n);
        return static_cast<int>(ast_.nodes.size() - 1);
    }

    int alternation() {
        int left = concat();
        while (peek().kind == Token::Kind::alt) {
            take();
            int right = concat();
            left = add({RegexAst::Kind::alt, 0, left, right});
        }
        return left;
    }

    bool starts_atom(const Token& t) const {
        return t.kind == Token::Kind::symbol || t.kind == Token::Kind::lparen;
    }

    int concat() {
        if (!starts_atom(peek()))
            return add({RegexAst::Kind::epsilon, 0, -1, -1});
        int left = repeat();
        while (starts_atom(peek())) {
            int right = repeat();
            left = add({RegexAst::Kind::concat, 0, left, right});
        }
        return left;
    }

    int repeat() {
        int node = atom();
        for (;;) {
            switch (peek().kind) {
                case Token::Kind::star: take(); node = add({RegexAst::Kind::star, 0, node, -1}); break;
                case Token::Kind::plus: take(); node = add({RegexAst::Kind::plus, 0, node, -1}); break;
                case Token::Kind::opt: take(); node = add({RegexAst::Kind::opt, 0, node, -1}); break;
                default: return node;
            }
        }
    }

    int atom() {
        Token t = take();
        if (t.kind == Token::Kind::symbol)
            return add({RegexAst::Kind::symbol, t.sym, -1, -1});
        if (t.kind == Token::Kind::lparen) {
            int inner = alternation();
            if (peek().kind != Token::Kind::rparen)
                throw RegexParseError(peek().pos, "expected ')'");
            take();
            return inner;
        }
        throw RegexParseError(t.pos, "expected a symbol or '('");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    RegexAst& ast_;
};

// Thompson NFA with epsilon moves; state 0.. with one (start, accept) pair.
struct Nfa {
    struct State {
        std::vector<std::pair<SymbolId, std::uint32_t>> edges;
        std::vector<std::uint32_t> eps;
    };
    std::vector<State> states;

    std::uint32_t add_state() {
        states.emplace_back();
        return static_cast<std::uint32_t>(states.size() - 1);
    }
};

struct Frag {
    std::uint32_t start, accept;
};

Frag build_nfa(const RegexAst& ast, int node, Nfa& nfa) {
    const RegexAst::Node& n = ast.nodes[static_cast<std::size_t>(node)];
    switch (n.kind) {
        case RegexAst::Kind::epsilon: {
            std::uint32_t s = nfa.add_state();
            return {s, s};
        }
        case RegexAst::Kind::symbol: {
            std::uint32_t s = nfa.add_state(), t = nfa.add_state();
            nfa.states[s].edges.emplace_back(n.sym, t);
            return {s, t};
        }
        case RegexAst::Kind::concat: {
            Frag a = build_nfa(ast, n.a, nfa);
            Frag b = build_nfa(ast, n.b, nfa);
            nfa.states[a.accept].eps.push_back(b.start);
            return {a.start, b.accept};
        }
        case RegexAst::Kind::alt: {
            Frag a = build_nfa(ast, n.a, nfa);
            Frag b = build_nfa(ast, n.b, nfa);
            std::uint32_t s = nfa.add_state(), t = nfa.add_state();
            nfa.states[s].eps = {a.start, b.start};
            nfa.states[a.accept].eps.push_back(t);
            nfa.states[b.accept].eps.push_back(t);
            return {s, t};
        }
        case RegexAst::Kind::star: {
            Frag a = build_nfa(ast, n.a, nfa);
            std::uint32_t s = nfa.add_state(), t = nfa.add_state();
            nfa.states[s].eps = {a.start, t};
            nfa.states[a.accept].eps.push_back(a.start);
            nfa.states[a.accept].eps.push_back(t);
            return {s, t};
        }
        case RegexAst::Kind::plus: {
            Frag a = build_nfa(ast, n.a, nfa);
            std::uint32_t t = nfa.add_state();
            nfa.states[a.accept].eps.push_back(a.start);
            nfa.states[a.accept].eps.push_back(t);
            return {a.start, t};
        }
        case RegexAst::Kind::opt: {
            Frag a = build_nfa(ast, n.a, nfa);
            std::uint32_t s = nfa.add_state(), t = nfa.add_state();
            nfa.states[s].eps = {a.start, t};
            nfa.states[a.accept].eps.push_back(t);
            return {s, t};
        }
    }
    throw Error("corrupt regex ast");
}

std::set<std::uint32_t> eps_closure(const Nfa& nfa, std::set<std::uint32_t> states) {
    std::deque<std::uint32_t> work(states.begin(), states.end());
    while (!work.empty()) {
        std::uint32_t s = work.front();
        work.pop_front();
        for (std::uint32_t t : nfa.states[s].eps)
            if (states.insert(t).second)
                work.push_back(t);
    }
    return states;
}

}  // namespace

RegexAst parse_regex(std::string_view pattern, const Alphabet& alphabet) {
    RegexAst ast;
    Parser p(lex_pattern(pattern, alphabet), ast);
    ast.root = p.parse();
    return ast;
}

CaseDfa compile_case(const RegexAst& ast, std::uint32_t n_inputs) {
    Nfa nfa;
    Frag frag = build_nfa(ast, ast.root, nfa);

    CaseDfa dfa;
    dfa.n_inputs = n_inputs;

    std::map<std::set<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::set<std::uint32_t>> sets;
    auto state_of = [&](std::set<std::uint32_t> closed) {
        auto [it, fresh] = ids.emplace(std::move(closed), static_cast<std::uint32_t>(sets.size()));
        if (fresh) {
            sets.push_back(it->first);
            dfa.accepting.push_back(it->first.count(frag.accept) > 0);
        }
        return it->second;
    };

    dfa.initial = state_of(eps_closure(nfa, {frag.start}));
    for (std::uint32_t q = 0; q < sets.size(); ++q) {
        for (SymbolId x = 0; x < n_inputs; ++x) {
            std::set<std::uint32_t> next;
            for (std::uint32_t s : sets[q])
                for (const auto& [sym, t] : nfa.states[s].edges)
                    if (sym == x)
                        next.insert(t);
            dfa.table.push_back(state_of(eps_closure(nfa, std::move(next))));
        }
    }
    dfa.n_states = static_cast<std::uint32_t>(sets.size());
    return dfa;
}

std::optional<Word> shortest_common_word(const CaseDfa& a, const CaseDfa& b) {
    if (a.n_inputs != b.n_inputs)
        throw Error("automata over different alphabets");
    const std::uint32_t n = a.n_inputs;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::pair<std::uint32_t, std::uint32_t>, SymbolId>> parent;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
    auto start = std::make_pair(a.initial, b.initial);
    parent.emplace(start, std::make_pair(start, n));  // sentinel edge
    work.push_back(start);
    while (!work.empty()) {
        auto cur = work.front();
        work.pop_front();
        if (a.accepting[cur.first] && b.accepting[cur.second]) {
            Word w;
            // only the start pair carries the sentinel symbol n
            for (auto at = cur; parent.at(at).second != n; at = parent.at(at).first)
                w.push_back(parent.at(at).second);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (SymbolId x = 0; x < n; ++x) {
            auto next = std::make_pair(a.step(cur.first, x), b.step(cur.second, x));
            if (parent.emplace(next, std::make_pair(cur, x)).second)
                work.push_back(next);
        }
    }
    return std::nullopt;
}

}  // namespace obslang
