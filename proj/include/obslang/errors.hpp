#ifndef OBSLANG_ERRORS_HPP
#define OBSLANG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace obslang {

// Base class for all obslang errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A symbol does not belong to the alphabet an operation expects.
class AlphabetMismatchError : public Error {
public:
    explicit AlphabetMismatchError(const std::string& msg) : Error(msg) {}
};

// Invalid system definition (grammar, observer or sticker invariant broken).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Malformed input text. `line` is 1-based; 0 means "no line available".
class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Malformed regular expression. `pos` is a 0-based offset into the pattern.
class RegexParseError : public Error {
public:
    RegexParseError(std::size_t pos, const std::string& msg)
        : Error("pattern offset " + std::to_string(pos) + ": " + msg), pos_(pos) {}

    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// A replay script does not describe a valid derivation or computation.
class ReplayError : public Error {
public:
    ReplayError(std::size_t step, const std::string& msg)
        : Error("step " + std::to_string(step) + ": " + msg), step_(step) {}

    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

// Invalid enumeration bounds (e.g. a zero step bound where >= 1 is required).
class BoundsError : public Error {
public:
    explicit BoundsError(const std::string& msg) : Error(msg) {}
};

}  // namespace obslang

#endif
