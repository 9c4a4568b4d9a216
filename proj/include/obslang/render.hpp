#ifndef OBSLANG_RENDER_HPP
#define OBSLANG_RENDER_HPP

#include <string>

#include "obslang/grammar.hpp"
#include "obslang/sticker.hpp"

namespace obslang {

// Text renderings used by the file printer, the CLI and the tests. All of
// them re-parse to the value they came from: single-character alphabets
// concatenate, other alphabets separate with '.' inside strands and with
// spaces inside forms.

std::string render_strand(const Alphabet& v, const Word& strand);  // "-" when empty
std::string render_molecule(const Alphabet& v, const Molecule& m);
std::string render_domino(const Alphabet& v, const SingleStrand& s);

// "S -> p S" (file style, space-separated; "~" for an empty rhs).
std::string print_rule(const Grammar& g, const Rule& r);

// "S->pS@0" / "S -> p S @0": one derivation step for trace tables.
std::string render_rule_application(const Grammar& g, const RuleApplication& app);

// "2@0" tokens for replay scripts.
std::string render_replay_token(const RuleApplication& app);

Word parse_strand(const Alphabet& v, std::string_view text, int line);
Molecule parse_molecule(const Alphabet& v, std::string_view text, int line);
SingleStrand parse_domino(const Alphabet& v, std::string_view text, int line);

}  // namespace obslang

#endif
