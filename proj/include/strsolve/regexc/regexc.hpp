#pragma once

#include <string>
#include <vector>

#include "strsolve/automata/db.hpp"
#include "strsolve/frontend/term.hpp"

namespace strsolve::regexc {

using automata::AutomatonDb;
using automata::AutomatonRef;

/// Largest bound accepted by `re.loop` / `re.^` before RepetitionLimit.
inline constexpr std::uint32_t kLoopUnfoldCap = 1000;

/// Parsed `re.from_automaton` literal, before state numbering.
struct AutomatonSource {
    struct Transition {
        std::string src;
        std::string dst;
        CodePoint lo;
        CodePoint hi;
    };

    std::string name;
    std::string init;
    std::vector<Transition> transitions;
    std::vector<std::string> accepting;
};

/// Grammar (whitespace between tokens is free, identifiers are [A-Za-z0-9_]+,
/// bounds are decimal):
///
///   automaton NAME { init S; (S -> S [LO, HI];)* accepting S(, S)*; } [;]
///
/// The init, transition and accepting statements may appear in any order;
/// exactly one init and one accepting statement are required.
/// Throws FormatError (with the code-point offset) or RangeError.
AutomatonSource parse_automaton_source(const Word& text);

/// States are numbered in order of first mention, starting with init.
automata::Automaton to_automaton(const AutomatonSource& src);

AutomatonRef parse_automaton_literal(AutomatonDb& db, const Word& text);

/// Compiles a RegLan term. Throws NonConstantRegex, RepetitionLimit,
/// FormatError/RangeError (automaton literals) and StateBlowup (re.comp, re.diff).
AutomatonRef compile_regex(AutomatonDb& db, const frontend::Term& t);

AutomatonRef singleton(AutomatonDb& db, const Word& w);

}  // namespace strsolve::regexc
