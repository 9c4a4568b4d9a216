#include "obslang/sticker.hpp"

#include <algorithm>
#include <unordered_set>

#include "obslang/detail/bounded_search.hpp"
#include "obslang/errors.hpp"

namespace obslang {

namespace {
constexpr SymbolId kNone = 0xffffffffu;
}

Complementarity::Complementarity(std::size_t alphabet_size,
                                 std::span<const std::pair<SymbolId, SymbolId>> pairs)
    : n_(alphabet_size), rel_(alphabet_size * alphabet_size, false) {
    for (const auto& [a, b] : pairs) {
        if (a >= n_ || b >= n_)
            throw AlphabetMismatchError("complementarity pair outside the alphabet");
        rel_[a * n_ + b] = true;
        rel_[b * n_ + a] = true;  // symmetric closure
    }
    for (SymbolId a = 0; a < n_; ++a)
        for (SymbolId b = 0; b < n_; ++b)
            if (rel_[a * n_ + b])
                pairs_.emplace_back(a, b);
}

bool Complementarity::related(SymbolId a, SymbolId b) const {
    if (a >= n_ || b >= n_)
        throw AlphabetMismatchError("symbol outside the sticker alphabet");
    return rel_[a * n_ + b];
}

bool is_well_started(const Complementarity& rho, const Molecule& m) {
    const std::size_t overlap = std::min(m.upper.size(), m.lower.size());
    for (std::size_t i = 0; i < overlap; ++i)
        if (!rho.related(m.upper[i], m.lower[i]))
            return false;
    return true;
}

bool is_complete(const Molecule& m) { return m.upper.size() == m.lower.size(); }

std::optional<Molecule> stick(const Complementarity& rho, const Molecule& m,
                              const SingleStrand& s) {
    for (SymbolId x : s.content)
        if (x >= rho.alphabet_size())
            throw AlphabetMismatchError("strand symbol outside the sticker alphabet");

    Molecule result = m;
    Word& target = s.side == StrandSide::upper ? result.upper : result.lower;
    const Word& other = s.side == StrandSide::upper ? result.lower : result.upper;
    const std::size_t old_len = target.size();
    target.insert(target.end(), s.content.begin(), s.content.end());

    // only the newly overlapped region needs checking
    const std::size_t end = std::min(target.size(), other.size());
    for (std::size_t i = old_len; i < end; ++i) {
        SymbolId up = s.side == StrandSide::upper ? target[i] : other[i];
        SymbolId lo = s.side == StrandSide::upper ? other[i] : target[i];
        if (!rho.related(up, lo))
            return std::nullopt;
    }
    return result;
}

StickerSystem::StickerSystem(Alphabet alphabet_in, Complementarity rho_in,
                             std::vector<Molecule> axioms_in,
                             std::vector<SingleStrand> dominoes_in)
    : alphabet(std::move(alphabet_in)),
      rho(std::move(rho_in)),
      axioms(std::move(axioms_in)),
      dominoes(std::move(dominoes_in)) {
    if (rho.alphabet_size() != alphabet.size())
        throw ValidationError("complementarity relation does not cover the alphabet");
    for (const Molecule& m : axioms) {
        for (SymbolId x : m.upper)
            if (x >= alphabet.size())
                throw ValidationError("axiom symbol outside the alphabet");
        for (SymbolId x : m.lower)
            if (x >= alphabet.size())
                throw ValidationError("axiom symbol outside the alphabet");
        if (!is_well_started(rho, m))
            throw ValidationError("axiom is not well-started under the complementarity relation");
    }
    for (const SingleStrand& s : dominoes) {
        if (s.content.empty())
            throw ValidationError("dominoes must be nonempty single strands");
        for (SymbolId x : s.content)
            if (x >= alphabet.size())
                throw ValidationError("domino symbol outside the alphabet");
    }
}

DoubleAlphabet::DoubleAlphabet(const Alphabet& v, const Complementarity& rho)
    : n_(v.size()),
      pair_ids_(v.size() * v.size(), kNone),
      upper_ids_(v.size(), kNone),
      lower_ids_(v.size(), kNone) {
    if (rho.alphabet_size() != v.size())
        throw ValidationError("complementarity relation does not cover the alphabet");
    for (const auto& [a, b] : rho.pairs())
        pair_ids_[a * n_ + b] = vd_.intern("[" + v.name(a) + "/" + v.name(b) + "]");
    for (SymbolId a = 0; a < n_; ++a)
        upper_ids_[a] = vd_.intern("[" + v.name(a) + "/-]");
    for (SymbolId b = 0; b < n_; ++b)
        lower_ids_[b] = vd_.intern("[-/" + v.name(b) + "]");
}

SymbolId DoubleAlphabet::pair_symbol(SymbolId a, SymbolId b) const {
    if (a >= n_ || b >= n_ || pair_ids_[a * n_ + b] == kNone)
        throw AlphabetMismatchError("no complete double symbol for this pair");
    return pair_ids_[a * n_ + b];
}

SymbolId DoubleAlphabet::upper_symbol(SymbolId a) const {
    if (a >= n_)
        throw AlphabetMismatchError("symbol outside the sticker alphabet");
    return upper_ids_[a];
}

SymbolId DoubleAlphabet::lower_symbol(SymbolId b) const {
    if (b >= n_)
        throw AlphabetMismatchError("symbol outside the sticker alphabet");
    return lower_ids_[b];
}

Word tokenize(const DoubleAlphabet& vd, const Molecule& m) {
    const std::size_t overlap = std::min(m.upper.size(), m.lower.size());
    Word out;
    out.reserve(std::max(m.upper.size(), m.lower.size()));
    for (std::size_t i = 0; i < overlap; ++i)
        out.push_back(vd.pair_symbol(m.upper[i], m.lower[i]));
    for (std::size_t i = overlap; i < m.upper.size(); ++i)
        out.push_back(vd.upper_symbol(m.upper[i]));
    for (std::size_t i = overlap; i < m.lower.size(); ++i)
        out.push_back(vd.lower_symbol(m.lower[i]));
    return out;
}

ObservableStickerSystem::ObservableStickerSystem(StickerSystem sys, MonadicTransducer obs)
    : system(std::move(sys)), vd(system.alphabet, system.rho), observer(std::move(obs)) {
    if (!(observer.input_alphabet() == vd.alphabet()))
        throw ValidationError(
            "observer input alphabet must equal the system's double-symbol alphabet");
}

namespace {

struct StickerAdapter {
    using Config = Molecule;
    using Edge = std::uint32_t;  // domino index

    const ObservableStickerSystem& phi;

    std::vector<Config> roots() const { return phi.system.axioms; }

    void expand(const Config& m, std::vector<std::pair<Config, Edge>>& out) const {
        out.clear();
        for (std::uint32_t d = 0; d < phi.system.dominoes.size(); ++d)
            if (auto next = stick(phi.system.rho, m, phi.system.dominoes[d]))
                out.emplace_back(std::move(*next), d);
    }

    bool is_final(const Config& m) const { return is_complete(m); }

    OutputSymbol observe(const Config& m) const {
        return phi.observer.observe(tokenize(phi.vd, m));
    }

    std::size_t size(const Config& m) const { return std::max(m.upper.size(), m.lower.size()); }

    std::size_t diagnostic(const Config&) const { return 0; }

    void encode(const Config& m, std::vector<std::uint32_t>& key) const {
        key.insert(key.end(), m.upper.begin(), m.upper.end());
        key.push_back(detail::kKeySeparator);
        key.insert(key.end(), m.lower.begin(), m.lower.end());
    }
};

}  // namespace

ObservedLanguage enumerate_observed(const ObservableStickerSystem& phi,
                                    const ComputationBounds& bounds, Mode mode, int jobs) {
    StickerAdapter adapter{phi};
    detail::SearchBounds sb{bounds.max_steps, std::nullopt, std::nullopt};
    detail::BoundedSearch<StickerAdapter> search(adapter, sb, mode);
    detail::SearchOutcome outcome = search.run(jobs);

    ObservedLanguage lang;
    lang.words = std::move(outcome.words);
    std::sort(lang.words.begin(), lang.words.end(),
              [&](const OutputWord& a, const OutputWord& b) {
                  return output_word_less(phi.observer, a, b);
              });
    lang.words.erase(std::unique(lang.words.begin(), lang.words.end()), lang.words.end());
    lang.exhausted = outcome.exhausted;
    lang.stats.forms_explored = outcome.explored;
    lang.stats.max_nonterminals_seen = 0;
    return lang;
}

std::vector<std::string> classical_language(const StickerSystem& gamma,
                                            const ComputationBounds& bounds) {
    // molecule-only dedup is sound here: no output accumulates along a path
    std::unordered_set<std::vector<std::uint32_t>, detail::KeyHash> visited;
    std::vector<Molecule> frontier;
    std::vector<std::string> result;

    auto render_upper = [&](const Molecule& m) {
        std::string s;
        const bool compact = gamma.alphabet.compact();
        for (std::size_t i = 0; i < m.upper.size(); ++i) {
            if (i > 0 && !compact)
                s += ' ';
            s += gamma.alphabet.name(m.upper[i]);
        }
        return s;
    };

    auto place = [&](Molecule&& m, std::vector<Molecule>& out) {
        std::vector<std::uint32_t> key(m.upper.begin(), m.upper.end());
        key.push_back(detail::kKeySeparator);
        key.insert(key.end(), m.lower.begin(), m.lower.end());
        if (!visited.insert(std::move(key)).second)
            return;
        if (is_complete(m))
            result.push_back(render_upper(m));
        out.push_back(std::move(m));
    };

    for (Molecule axiom : gamma.axioms)
        place(std::move(axiom), frontier);
    for (std::size_t depth = 0; depth < bounds.max_steps && !frontier.empty(); ++depth) {
        std::vector<Molecule> next;
        for (const Molecule& m : frontier)
            for (const SingleStrand& s : gamma.dominoes)
                if (auto stuck = stick(gamma.rho, m, s))
                    place(std::move(*stuck), next);
        frontier = std::move(next);
    }

    std::sort(result.begin(), result.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<StickerTraceRow> trace(const ObservableStickerSystem& phi, std::size_t axiom,
                                   std::span<const std::uint32_t> dominoes) {
    if (axiom >= phi.system.axioms.size())
        throw ReplayError(0, "axiom index out of range");
    std::vector<StickerTraceRow> rows;
    Molecule m = phi.system.axioms[axiom];
    rows.push_back(StickerTraceRow{0, m, std::nullopt,
                                   phi.observer.observe(tokenize(phi.vd, m))});
    for (std::size_t i = 0; i < dominoes.size(); ++i) {
        if (dominoes[i] >= phi.system.dominoes.size())
            throw ReplayError(i + 1, "domino index out of range");
        auto next = stick(phi.system.rho, m, phi.system.dominoes[dominoes[i]]);
        if (!next)
            throw ReplayError(i + 1, "sticking is undefined: a new overlap position is not complementary");
        m = std::move(*next);
        rows.push_back(StickerTraceRow{i + 1, m, dominoes[i],
                                       phi.observer.observe(tokenize(phi.vd, m))});
    }
    return rows;
}

std::optional<StickerWitness> member(const ObservableStickerSystem& phi, const OutputWord& word,
                                     const ComputationBounds& bounds) {
    for (std::uint32_t code : word)
        if (code < 2 || code - 2 >= phi.observer.output_alphabet().size())
            throw AlphabetMismatchError("queried word must be over the output alphabet");
    StickerAdapter adapter{phi};
    detail::SearchBounds sb{bounds.max_steps, std::nullopt, std::nullopt};
    auto found = detail::member_search(adapter, word, sb);
    if (!found)
        return std::nullopt;
    return StickerWitness{found->root, std::move(found->edges)};
}

}  // namespace obslang
