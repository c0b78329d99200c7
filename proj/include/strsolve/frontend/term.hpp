#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "strsolve/error.hpp"
#include "strsolve/unicode.hpp"

namespace strsolve::frontend {

enum class Sort { Bool, String, Int, RegLan };

std::string_view sort_name(Sort s);

enum class Op {
    // literals and variables
    True,
    False,
    IntLit,
    StrLit,
    Var,
    // Boolean
    Not,
    And,
    Or,
    Implies,
    Eq,
    Distinct,
    // integer arithmetic
    Le,
    Lt,
    Ge,
    Gt,
    Add,
    Sub,
    Neg,
    Mul,  ///< at most one non-literal factor
    // strings
    StrConcat,
    StrLen,
    StrAt,
    StrSubstr,
    StrIndexOf,
    StrPrefixOf,
    StrSuffixOf,
    StrContains,
    StrReplace,
    StrReplaceAll,
    StrReplaceRe,
    StrReplaceReAll,
    StrReverse,
    StrToInt,
    StrFromInt,
    StrInRe,
    // regular expressions
    StrToRe,
    ReNone,
    ReAll,
    ReAllChar,
    ReConcat,
    ReUnion,
    ReInter,
    ReStar,
    RePlus,
    ReOpt,
    ReRange,
    ReComp,
    ReDiff,
    ReLoop,           ///< bounds in Term::lo / Term::hi
    ReFromAutomaton,  ///< literal text in Term::str
};

/// SMT-LIB spelling of an operator (for printing).
std::string_view op_name(Op op);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable sorted AST node.
struct Term {
    Op op;
    Sort sort;
    std::vector<TermPtr> args;
    std::string name;         ///< Var
    Word str;                 ///< StrLit, ReFromAutomaton
    std::int64_t value = 0;   ///< IntLit
    std::uint32_t lo = 0;     ///< ReLoop
    std::uint32_t hi = 0;     ///< ReLoop
    SourcePos pos;
};

TermPtr mk_true();
TermPtr mk_false();
TermPtr mk_bool(bool b);
TermPtr mk_int(std::int64_t v);
TermPtr mk_str(Word w);
TermPtr mk_var(std::string name, Sort sort);
/// Generic application; the result sort is derived from `op`.
TermPtr mk_app(Op op, std::vector<TermPtr> args);
TermPtr mk_loop(TermPtr re, std::uint32_t lo, std::uint32_t hi);
TermPtr mk_from_automaton(Word text);

/// Structural equality ignoring source positions.
bool term_equal(const Term& a, const Term& b);

enum class CommandKind { SetLogic, SetOption, SetInfo, DeclareFun, Assert, CheckSat, GetModel, Exit };

struct Command {
    CommandKind kind;
    std::string name;   ///< logic, option key, info key, or declared constant
    std::string value;  ///< option/info value as written
    Sort sort = Sort::Bool;
    TermPtr term;
    SourcePos pos;
};

struct Script {
    std::vector<Command> commands;
};

bool command_equal(const Command& a, const Command& b);
bool script_equal(const Script& a, const Script& b);

}  // namespace strsolve::frontend
