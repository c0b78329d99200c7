#pragma once

#include <map>
#include <set>
#include <vector>

#include "strsolve/frontend/term.hpp"
#include "strsolve/ir/ir.hpp"

namespace strsolve::ir {

/// Lowers a Bool term into negation normal form over normal-form atoms.
///
/// Nested applications get fresh output variables whose defining FunEq atoms
/// are hoisted to the top-level conjunction (every function is total, so this
/// is sound under any polarity). String constants become shared constant
/// variables with a singleton InRe; integer constants become constant
/// variables fixed by a Lin atom. Regex terms are compiled into `db`.
Formula normalize(const frontend::Term& t, Interner& in, AutomatonDb& db);

/// Normalizes the conjunction of several Bool terms.
Formula normalize_all(const std::vector<frontend::TermPtr>& ts, Interner& in, AutomatonDb& db);

/// Merges top-level definitions of expensive functions (indexof, substr, at,
/// replace*, to_int, from_int) that have identical right-hand sides and fresh
/// outputs. Iterated to a fixpoint.
Formula cse(const Formula& f, const Interner& in);

/// out = x1·x2·…·xn as right-nested binary concat atoms with fresh
/// intermediates; a chain of one gives a StrEq atom.
std::vector<Atom> concat_flatten(VarId out, const std::vector<VarId>& chain, Interner& in);

/// Edge u -> v iff some FunEq has input u and output v.
class DependencyGraph {
public:
    void add_node(VarId v) { adj_[v]; }
    void add_edge(VarId from, VarId to);
    const std::map<VarId, std::set<VarId>>& edges() const { return adj_; }
    bool has_edge(VarId from, VarId to) const;

    /// Strongly connected components (Tarjan), each sorted.
    std::vector<std::vector<VarId>> sccs() const;
    /// Components of size >= 2, plus singletons with a self-loop.
    std::vector<std::vector<VarId>> cyclic_sccs() const;

private:
    std::map<VarId, std::set<VarId>> adj_;
};

DependencyGraph dependency_graph(const std::vector<Atom>& atoms);

}  // namespace strsolve::ir
