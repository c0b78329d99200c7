#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strsolve {

/// Base of every structured error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Source position (1-based) attached to frontend diagnostics.
struct SourcePos {
    std::size_t line = 0;
    std::size_t column = 0;
};

class PositionedError : public Error {
public:
    PositionedError(const std::string& kind, const std::string& msg, SourcePos pos)
        : Error(kind + " at " + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg),
          pos_(pos) {}

    SourcePos position() const { return pos_; }

private:
    SourcePos pos_;
};

class SyntaxError : public PositionedError {
public:
    SyntaxError(const std::string& msg, SourcePos pos) : PositionedError("syntax error", msg, pos) {}
};

class SortError : public PositionedError {
public:
    SortError(const std::string& msg, SourcePos pos) : PositionedError("sort error", msg, pos) {}
};

class UnknownSymbol : public PositionedError {
public:
    UnknownSymbol(const std::string& msg, SourcePos pos) : PositionedError("unknown symbol", msg, pos) {}
};

/// get-model issued without a preceding sat answer.
class ModelUnavailable : public Error {
public:
    ModelUnavailable() : Error("model unavailable: last check-sat did not return sat") {}
};

/// An automaton construction exceeded the configured state cap.
class StateBlowup : public Error {
public:
    explicit StateBlowup(std::size_t cap)
        : Error("automaton construction exceeded the state cap of " + std::to_string(cap)), cap_(cap) {}

    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// `str.to_re` applied to something other than a string literal.
class NonConstantRegex : public Error {
public:
    using Error::Error;
};

/// Malformed `re.from_automaton` literal.
class FormatError : public Error {
public:
    FormatError(const std::string& msg, std::size_t offset)
        : Error("automaton format error at offset " + std::to_string(offset) + ": " + msg), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Interval endpoint out of order or outside the alphabet.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Bounded repetition beyond the unfold cap.
class RepetitionLimit : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration exceeded its budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded() : Error("enumeration budget exceeded") {}
};

/// A candidate model failed concrete re-evaluation.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

/// Violated operation precondition.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// Rejected solver configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace strsolve
