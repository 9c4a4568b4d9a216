#ifndef OBSLANG_SYSTEM_FILE_HPP
#define OBSLANG_SYSTEM_FILE_HPP

#include <string>
#include <string_view>
#include <variant>

#include "obslang/go_system.hpp"
#include "obslang/sticker.hpp"

namespace obslang {

// A parsed system file: one grammar or sticker section plus one observer
// section. The observer's surface spec is kept so the file can be printed
// back and linted.
//
// File syntax ('#' comments to end of line):
//
//   [grammar]                        [sticker]
//   nonterminals: S A B C            alphabet: a c g t
//   terminals: t p                   rho: a~t c~g
//   start: S                         axioms: a/t
//   rules:                           dominoes: a/- -/t c/- -/g
//     S -> p S
//     S -> ~                         # '~' denotes an empty right side
//
//   [observer]
//   output: a b c
//   cases:
//     A B* => a                      # first matching case wins
//     _ => !                         # mandatory catch-all ('!': bottom)
//
// The observer's input alphabet is derived from the basic system: the
// grammar's combined alphabet, or the sticker double-symbol alphabet with
// tokens written [a/t], [a/-], [-/t].
struct LoadedSystem {
    std::variant<GOSystem, ObservableStickerSystem> system;
    ObserverSpec observer_spec;

    bool is_sticker() const { return system.index() == 1; }
    const GOSystem& go() const { return std::get<GOSystem>(system); }
    const ObservableStickerSystem& sticker() const {
        return std::get<ObservableStickerSystem>(system);
    }
    const MonadicTransducer& observer() const {
        return is_sticker() ? sticker().observer : go().observer;
    }
};

// Parses and fully validates a system file. Throws ParseError with a line
// number on malformed input, never crashes on it.
LoadedSystem parse_system(std::string_view text);

// Canonical text form; parse(print_system(s)) reproduces s.
std::string print_system(const LoadedSystem& s);

}  // namespace obslang

#endif
