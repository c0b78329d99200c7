#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "strsolve/automata/db.hpp"
#include "strsolve/unicode.hpp"

namespace strsolve::ir {

using automata::AutomatonDb;
using automata::AutomatonRef;

using VarId = std::uint32_t;

enum class VarSort { String, Int };

struct VarInfo {
    std::string name;
    VarSort sort;
    bool fresh;  ///< introduced by the solver; never visible in models
};

/// Variable table shared by normalization and proof search. Reads may run
/// concurrently; writes are serialized.
///
/// Fresh names start with '@', which is not a legal first character of an
/// SMT-LIB simple symbol, so they never collide with user names.
class Interner {
public:
    Interner() = default;
    Interner(const Interner&) = delete;
    Interner& operator=(const Interner&) = delete;

    /// Same name gives the same id; throws PreconditionViolation on a sort clash.
    VarId intern(const std::string& name, VarSort sort);
    VarId fresh(VarSort sort, const std::string& hint = "t");
    /// Int variable standing for |x|, one per string variable.
    VarId length_var(VarId x);
    /// The string variable whose length `len` stands for, if any.
    std::optional<VarId> length_of(VarId len) const;
    /// Fresh variable carrying a string constant; shared per literal.
    VarId const_var(const Word& w);
    /// Fresh variable carrying an integer constant; shared per value.
    VarId int_const(std::int64_t v);
    std::optional<Word> const_string(VarId x) const;
    std::optional<std::int64_t> const_int(VarId x) const;

    std::optional<VarId> lookup(const std::string& name) const;
    VarInfo info(VarId x) const;
    std::string name(VarId x) const { return info(x).name; }
    VarSort sort(VarId x) const { return info(x).sort; }
    bool is_fresh(VarId x) const { return info(x).fresh; }
    std::size_t size() const;

private:
    VarId add(std::string name, VarSort sort, bool fresh);

    mutable std::shared_mutex mu_;
    std::vector<VarInfo> vars_;
    std::unordered_map<std::string, VarId> by_name_;
    std::unordered_map<VarId, VarId> length_;
    std::unordered_map<VarId, VarId> length_rev_;
    std::map<Word, VarId> str_consts_;
    std::map<std::int64_t, VarId> int_consts_;
    std::unordered_map<VarId, Word> str_value_;
    std::unordered_map<VarId, std::int64_t> int_value_;
    std::uint64_t counter_ = 0;
};

enum class PredKind { PrefixOf, SuffixOf, Contains, StrEq, StrDiseq };

/// prefixof(a, b): a is a prefix of b; contains(a, b): a contains b.
struct Pred {
    PredKind kind;
    VarId a;
    VarId b;

    auto operator<=>(const Pred&) const = default;
};

enum class Fn { Concat, Replace, ReplaceAll, ReplaceRe, ReplaceReAll, Reverse, At, Substr, IndexOf, ToInt, FromInt, Len };

std::size_t arity(Fn fn);
const char* fn_name(Fn fn);

/// out = fn(args). ReplaceRe/ReplaceReAll take (subject, replacement) as args
/// and the pattern language in `lang`.
struct FunEq {
    VarId out;
    Fn fn;
    std::vector<VarId> args;
    std::optional<AutomatonRef> lang;

    auto operator<=>(const FunEq&) const = default;
};

struct InRe {
    VarId x;
    AutomatonRef lang;

    auto operator<=>(const InRe&) const = default;
};

enum class Rel { Eq, Le };

/// Σ coeff·var + constant (= | <=) 0.
struct Lin {
    std::vector<std::pair<std::int64_t, VarId>> terms;
    std::int64_t constant = 0;
    Rel rel = Rel::Eq;

    auto operator<=>(const Lin&) const = default;
};

using Atom = std::variant<Pred, FunEq, InRe, Lin>;

struct Literal {
    Atom atom;
    bool negated = false;

    auto operator<=>(const Literal&) const = default;
};

/// Negation-normal-form formula; negation lives only on literals.
struct Formula {
    enum class Kind { True, False, Lit, And, Or };

    Kind kind = Kind::True;
    Literal lit{};
    std::vector<Formula> children;

    static Formula truth() { return Formula{}; }
    static Formula falsity() { return Formula{Kind::False, {}, {}}; }
    static Formula atom(Atom a, bool negated = false) { return Formula{Kind::Lit, Literal{std::move(a), negated}, {}}; }
    static Formula conj(std::vector<Formula> cs);
    static Formula disj(std::vector<Formula> cs);

    bool operator==(const Formula&) const = default;
};

/// Builds Lin atoms from readable pieces.
Lin lin_eq(std::vector<std::pair<std::int64_t, VarId>> terms, std::int64_t constant);
Lin lin_le(std::vector<std::pair<std::int64_t, VarId>> terms, std::int64_t constant);

/// Variables mentioned by an atom (outputs first for FunEq).
std::vector<VarId> vars_of(const Atom& a);
void collect_vars(const Formula& f, std::vector<VarId>& out);

/// Applies a variable renaming everywhere.
Atom rename(const Atom& a, const std::unordered_map<VarId, VarId>& m);
Formula rename(const Formula& f, const std::unordered_map<VarId, VarId>& m);

/// Conjuncts of the top-level And (the formula itself if it is not an And).
std::vector<const Formula*> top_conjuncts(const Formula& f);

/// S-expression dump of the normal form.
std::string to_string(const Atom& a, const Interner& in);
std::string to_string(const Literal& l, const Interner& in);
std::string to_string(const Formula& f, const Interner& in);

}  // namespace strsolve::ir
