#ifndef OBSLANG_STICKER_HPP
#define OBSLANG_STICKER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "obslang/alphabet.hpp"
#include "obslang/enumeration.hpp"
#include "obslang/observer.hpp"

namespace obslang {

// Symmetric complementarity relation over a sticker alphabet. The closure
// is taken at construction, so listing one direction of a pair suffices.
class Complementarity {
public:
    Complementarity(std::size_t alphabet_size,
                    std::span<const std::pair<SymbolId, SymbolId>> pairs);

    bool related(SymbolId a, SymbolId b) const;
    std::size_t alphabet_size() const { return n_; }

    // All ordered related pairs, ascending; both directions are present.
    const std::vector<std::pair<SymbolId, SymbolId>>& pairs() const { return pairs_; }

private:
    std::size_t n_;
    std::vector<bool> rel_;
    std::vector<std::pair<SymbolId, SymbolId>> pairs_;
};

enum class StrandSide { upper, lower };

// Two left-aligned strands. Well-started means every overlapped position is
// complementary; the representation leaves room for at most one overhang,
// on the right of the longer strand.
struct Molecule {
    Word upper;
    Word lower;

    bool operator==(const Molecule&) const = default;
};

struct SingleStrand {
    StrandSide side;
    Word content;  // nonempty

    bool operator==(const SingleStrand&) const = default;
};

bool is_well_started(const Complementarity& rho, const Molecule& m);
bool is_complete(const Molecule& m);

// Sticking: appends the strand on its side of the molecule; defined iff
// every newly overlapped position is complementary (the result is then
// well-started again, given a well-started input). Foreign symbols raise
// AlphabetMismatchError; an undefined result is a plain nullopt.
std::optional<Molecule> stick(const Complementarity& rho, const Molecule& m,
                              const SingleStrand& s);

// A simple regular sticker system: axioms plus single-strand dominoes that
// may only be pasted on the right.
struct StickerSystem {
    StickerSystem(Alphabet alphabet, Complementarity rho, std::vector<Molecule> axioms,
                  std::vector<SingleStrand> dominoes);

    Alphabet alphabet;
    Complementarity rho;
    std::vector<Molecule> axioms;
    std::vector<SingleStrand> dominoes;
};

// The double-symbol alphabet over (V, rho): complete double symbols [a/b]
// for related pairs plus the single-strand symbols [a/-] and [-/b].
class DoubleAlphabet {
public:
    DoubleAlphabet(const Alphabet& v, const Complementarity& rho);

    const Alphabet& alphabet() const { return vd_; }
    SymbolId pair_symbol(SymbolId a, SymbolId b) const;
    SymbolId upper_symbol(SymbolId a) const;
    SymbolId lower_symbol(SymbolId b) const;

private:
    std::size_t n_;
    Alphabet vd_;
    std::vector<SymbolId> pair_ids_;  // n x n, kNone where unrelated
    std::vector<SymbolId> upper_ids_;
    std::vector<SymbolId> lower_ids_;
};

// Reads a well-started molecule left to right, one double symbol at a time.
Word tokenize(const DoubleAlphabet& vd, const Molecule& m);

// A sticker system observed through a transducer over the double-symbol
// alphabet.
struct ObservableStickerSystem {
    ObservableStickerSystem(StickerSystem sys, MonadicTransducer obs);

    StickerSystem system;
    DoubleAlphabet vd;
    MonadicTransducer observer;
};

// Bounded slice of the observed language: outputs of all complete
// computations with at most max_steps sticking operations (a complete axiom
// alone is a computation). Dedup and worker contract as for G/O systems.
ObservedLanguage enumerate_observed(const ObservableStickerSystem& phi,
                                    const ComputationBounds& bounds, Mode mode, int jobs = 1);

// Upper strands of all complete molecules reachable within the bound,
// deduplicated and sorted length-lexicographically.
std::vector<std::string> classical_language(const StickerSystem& gamma,
                                            const ComputationBounds& bounds);

struct StickerTraceRow {
    std::size_t step;
    Molecule molecule;
    std::optional<std::uint32_t> domino;  // index into dominoes; empty for step 0
    OutputSymbol emitted;
};

struct StickerWitness {
    std::size_t axiom;  // index into axioms
    std::vector<std::uint32_t> dominoes;
};

// Replays a domino sequence from one axiom. Throws ReplayError when a stick
// is undefined or an index is out of range.
std::vector<StickerTraceRow> trace(const ObservableStickerSystem& phi, std::size_t axiom,
                                   std::span<const std::uint32_t> dominoes);

// Searches for a complete computation within bounds observing to `word`.
std::optional<StickerWitness> member(const ObservableStickerSystem& phi, const OutputWord& word,
                                     const ComputationBounds& bounds);

}  // namespace obslang

#endif
