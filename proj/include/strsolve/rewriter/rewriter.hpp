#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "strsolve/automata/db.hpp"
#include "strsolve/ir/ir.hpp"
#include "strsolve/value.hpp"

namespace strsolve::rewriter {

using automata::AutomatonDb;
using automata::AutomatonRef;
using ir::Atom;
using ir::Formula;
using ir::FunEq;
using ir::Interner;
using ir::Lin;
using ir::Literal;
using ir::VarId;

/// Concrete value of a variable, if known.
using Lookup = std::function<std::optional<Value>(VarId)>;

struct RewriteContext {
    Interner& in;
    AutomatonDb& db;
    /// Current concrete bindings; interner constants are always concrete.
    Lookup groundings = nullptr;

    std::optional<Word> concrete_string(VarId x) const;
    std::optional<std::int64_t> concrete_int(VarId x) const;
};

/// Rewrites a (possibly negated) prefixof/suffixof/contains literal.
/// nullopt means "keep unchanged": a negated literal with no concrete argument.
std::optional<Formula> simplify_prefix_suffix_contains(const Literal& l, RewriteContext& ctx);

/// Extra constraints for r = substr(s, i, n): the three-way case split. The
/// FunEq itself is kept by the caller as a ground check.
Formula rewrite_substr(const FunEq& fe, RewriteContext& ctx);

/// Extra constraints for at (as substr(s, i, 1)) and indexof.
Formula rewrite_at_indexof(const FunEq& fe, RewriteContext& ctx);

/// Length relations implied by one function equation. May create length
/// variables and fresh counters.
std::vector<Lin> length_facts(const FunEq& fe, Interner& in);

/// length_facts over all FunEqs plus the length bounds of every InRe language.
std::vector<Lin> length_abstraction_pass(const std::vector<Atom>& atoms, Interner& in, AutomatonDb& db);

/// All preprocessing rewrites: prefix/suffix/contains simplification,
/// substr/at/indexof encodings, empty-pattern replace, and conversion range
/// facts. Length facts are left to the engine.
Formula preprocess(const Formula& f, RewriteContext& ctx);

// Ground evaluation used by inprocessing. Written against the SMT-LIB
// definitions; nullopt when some argument is not concrete.
std::optional<Value> eval_fun(const FunEq& fe, const Lookup& v, AutomatonDb& db);
std::optional<bool> eval_literal(const Literal& l, const Lookup& v, AutomatonDb& db);

namespace ground {
Word substr(const Word& s, std::int64_t i, std::int64_t n);
std::int64_t indexof(const Word& s, const Word& t, std::int64_t i);
Word replace(const Word& s, const Word& p, const Word& r);
Word replace_all(const Word& s, const Word& p, const Word& r);
std::int64_t to_int(const Word& s);
Word from_int(std::int64_t n);
/// Leftmost-shortest match replacement; `all` repeats with non-empty matches.
Word replace_re(const Word& s, const std::function<bool(const Word&)>& in_lang, const Word& r, bool all);
}  // namespace ground

}  // namespace strsolve::rewriter
