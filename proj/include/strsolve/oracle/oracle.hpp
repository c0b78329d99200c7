#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "strsolve/automata/automaton.hpp"
#include "strsolve/automata/db.hpp"
#include "strsolve/frontend/term.hpp"
#include "strsolve/ir/ir.hpp"
#include "strsolve/value.hpp"

// Reference semantics, written directly from the SMT-LIB definitions and
// sharing no code with the automata / transducer constructions.
namespace strsolve::oracle {

// SMT-LIB string functions on concrete values.
Word substr(const Word& s, std::int64_t i, std::int64_t n);
Word at(const Word& s, std::int64_t i);
std::int64_t indexof(const Word& s, const Word& t, std::int64_t i);
Word replace(const Word& s, const Word& p, const Word& r);
Word replace_all(const Word& s, const Word& p, const Word& r);
/// -1 for the empty string or any non-digit; saturates at INT64_MAX.
std::int64_t to_int(const Word& s);
/// "" for negative n.
Word from_int(std::int64_t n);
Word reverse(const Word& s);
bool prefixof(const Word& a, const Word& b);
bool suffixof(const Word& a, const Word& b);
bool contains(const Word& a, const Word& b);

/// Language predicate used by the regex-replace functions.
using Matcher = std::function<bool(const Word&)>;
/// Replaces the leftmost, then shortest, match (possibly empty).
Word replace_re(const Word& s, const Matcher& m, const Word& r);
/// Replaces, left to right, each leftmost shortest non-empty match.
Word replace_re_all(const Word& s, const Matcher& m, const Word& r);

/// Recursive regex matcher over RegLan terms (memoized per call).
bool regex_match(const frontend::Term& re, const Word& w);

/// NFA simulation by subset stepping.
bool membership(const automata::Automaton& a, const Word& w);

using Env = std::map<std::string, Value>;

/// Evaluates a String/Int term; throws PreconditionViolation on an unbound variable.
Value eval_term(const frontend::Term& t, const Env& env);
bool eval_bool(const frontend::Term& t, const Env& env);

using Valuation = std::unordered_map<ir::VarId, Value>;

/// Evaluates a normal-form atom. InRe languages are tested with `membership`.
bool eval_atom(const ir::Atom& a, const Valuation& v, const automata::AutomatonDb& db);
bool eval_literal(const ir::Literal& l, const Valuation& v, const automata::AutomatonDb& db);
bool eval_formula(const ir::Formula& f, const Valuation& v, const automata::AutomatonDb& db);

/// Value of out = fn(args) under v (args must be bound).
Value eval_fun(const ir::FunEq& fe, const Valuation& v, const automata::AutomatonDb& db);

struct Bounds {
    Word alphabet{U'a', U'b'};
    std::size_t max_len = 3;
    std::int64_t int_lo = -8;
    std::int64_t int_hi = 8;
    std::uint64_t budget = 20'000'000;  ///< candidate evaluations before BudgetExceeded
};

struct EnumResult {
    bool sat = false;
    Valuation witness;  ///< normal-form valuation when sat
};

/// Exhaustive search over all valuations of the formula's free variables in
/// the box; variables defined by top-level FunEqs with fresh outputs, length
/// variables and constant variables are computed rather than enumerated.
/// `sat == false` only means unsat within the bounds.
EnumResult enumerate_verdict(const ir::Formula& f, const ir::Interner& in, const automata::AutomatonDb& db,
                             const Bounds& bounds);

struct ScriptEnumResult {
    bool sat = false;
    Env witness;
};

/// Term-level variant over the declared variables of a script.
ScriptEnumResult enumerate_script_verdict(const std::vector<frontend::TermPtr>& assertions,
                                          const std::vector<std::pair<std::string, frontend::Sort>>& vars,
                                          const Bounds& bounds);

/// All words over `alphabet` of length <= max_len, shortest first.
std::vector<Word> all_words(const Word& alphabet, std::size_t max_len);

}  // namespace strsolve::oracle
