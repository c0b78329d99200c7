#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "strsolve/automata/db.hpp"
#include "strsolve/engine/config.hpp"
#include "strsolve/ir/ir.hpp"
#include "strsolve/lia/lia.hpp"
#include "strsolve/value.hpp"
#include "strsolve/xform/transducer.hpp"

namespace strsolve::engine {

using automata::AutomatonDb;
using automata::AutomatonRef;
using ir::Formula;
using ir::FunEq;
using ir::Interner;
using ir::Lin;
using ir::Literal;
using ir::VarId;

/// Concrete values of variables (same shape as oracle::Valuation).
using Valuation = std::unordered_map<VarId, Value>;

enum class Rule {
    Close,
    Intersect,
    Forward,
    Backward,
    BreakCycles,
    EqDecompose,
    LengthAbstraction,
    Nielsen,
    StrInt,
    IndexOf,
    Cut,
    Subdivide,
    Split,
    Eval,
    Subst,
    Verify,
};

/// Short tag used in trace lines ("fwd", "bwd", "close", ...).
const char* rule_tag(Rule r);

/// One branch of the proof tree.
struct Goal {
    std::vector<Literal> atoms;  ///< FunEq and Pred literals still to be discharged
    std::vector<Lin> lins;
    std::vector<Formula> ors;    ///< unexpanded disjunctions
    std::map<VarId, std::vector<AutomatonRef>> langs;
    std::map<VarId, Word> strings;  ///< bound string variables (representatives only)
    lia::IntervalStore ints;
    std::map<VarId, VarId> alias;   ///< merged string variable -> other member of its class
    std::map<std::string, std::uint64_t> birth;     ///< queue key -> age at first enqueue
    std::map<std::string, std::string> applied;     ///< rule key -> operand fingerprint at last application
    std::set<VarId> dirty;          ///< variables whose languages changed since the last close check
    std::uint64_t age = 0;
    bool tainted = false;           ///< some image used was an over-approximation
    bool closed = false;
    std::string id = "0";
};

struct RuleApplication {
    Rule rule;
    std::string key;                 ///< identifies the application across steps
    std::string fingerprint;         ///< operand languages when the application was generated
    std::optional<FunEq> eq;
    std::optional<FunEq> eq2;        ///< Nielsen: the second equation
    VarId var = 0;
    std::size_t index = 0;           ///< Split: position in Goal::ors
    std::int64_t priority = 0;
    std::uint64_t birth = 0;
};

enum class Status { Sat, Unsat, Unknown };

const char* status_name(Status s);

struct SolveStats {
    std::uint64_t steps = 0;
    std::uint64_t branches = 1;
    std::uint64_t closed = 0;
};

struct Verdict {
    Status status = Status::Unknown;
    Valuation model;                ///< first model (Sat)
    std::vector<Valuation> models;  ///< all collected models (max_models)
    std::string reason;                 ///< Unknown
    SolveStats stats;
};

/// The RCP proof search.
class Prover {
public:
    Prover(Interner& in, AutomatonDb& db, SolverConfig cfg);

    /// Preprocesses and solves a normalized formula.
    Verdict solve(const Formula& normalized);

    // Building blocks, public for tests.

    /// Goal holding a preprocessed formula (before any inprocessing).
    Goal make_goal(const Formula& preprocessed);
    /// Eager rules to a fixpoint; false when the branch closed.
    bool inprocess(Goal& g);
    /// Queued rule applications available in `g` (birth recorded on first sight).
    std::vector<RuleApplication> candidates(Goal& g);
    /// Weighted score; higher runs first.
    std::int64_t priority_of(const RuleApplication& r, const Goal& g);
    /// Children of applying `r`; a single child continues the branch.
    std::vector<Goal> apply(Goal g, const RuleApplication& r);

    /// Closes g when the automata of x (with the length window of |x|) have an empty intersection.
    bool rule_close(Goal& g, VarId x);
    /// Merges the automata of x into one; keeps the set on StateBlowup.
    void rule_intersect_eager(Goal& g, VarId x);
    /// Forward propagation through out = f(args). Returns false on closure.
    bool rule_rcp_forward(Goal& g, const FunEq& eq);
    std::vector<Goal> rule_rcp_backward(Goal g, const FunEq& eq);
    /// Empties the non-cyclic side of every concat equation inside a dependency cycle.
    bool rule_break_cycles(Goal& g);
    bool rule_eq_decompose(Goal& g);
    bool rule_length_abstraction(Goal& g, VarId x);
    std::vector<Goal> rule_nielsen(Goal g, const FunEq& a, const FunEq& b);
    std::vector<Goal> rule_cut(Goal g, VarId x);
    std::vector<Goal> rule_subdivide(Goal g, VarId n, Rule tag);

    /// Valuation of `vars` in a fully ground goal; VerificationFailed when
    /// `original` evaluates to false, PreconditionViolation when some
    /// variable is unbound.
    Valuation extract_model(const Goal& g, const Formula& original, const std::vector<VarId>& vars);

    VarId rep(const Goal& g, VarId x) const;
    std::optional<Value> value_of(const Goal& g, VarId x) const;
    /// Intersection of the automata of x (Σ* when none, the word when bound).
    AutomatonRef lang_of(Goal& g, VarId x, bool* exact = nullptr);

    // Goal updates; each returns false when the branch closes.
    bool add_formula(Goal& g, const Formula& f);
    bool add_literal(Goal& g, Literal l);
    bool add_lang(Goal& g, VarId x, AutomatonRef a);
    bool bind_string(Goal& g, VarId x, const Word& w);
    bool bind_int(Goal& g, VarId n, std::int64_t v);
    bool merge(Goal& g, VarId a, VarId b);

    const SolverConfig& config() const { return cfg_; }

private:
    /// How a replace-style equation acts on its subject: the identity, a
    /// constant prefix (empty pattern), a transducer, or nothing exact.
    struct Replacer {
        bool exact = false;
        bool identity = false;
        std::optional<Word> prefix;
        const xform::Transducer* t = nullptr;
    };
    Replacer replacer_for(const Goal& g, const FunEq& eq);
    std::vector<VarId> choice_order(const Goal& g) const;
    bool propagate_ints(Goal& g);
    bool evaluate_atoms(Goal& g, bool& changed);
    bool check_langs(Goal& g, bool& changed);
    bool simplify_ors(Goal& g, bool& changed);
    bool close(Goal& g, const std::string& why);
    void trace(const Goal& g, Rule r, const std::string& target, std::int64_t priority);
    std::string describe(const FunEq& eq) const;
    bool over_budget(std::string& reason) const;
    std::vector<VarId> goal_vars(const Goal& g) const;

    Interner& in_;
    AutomatonDb& db_;
    SolverConfig cfg_;
    Formula original_;
    std::vector<VarId> original_vars_;
    SolveStats stats_;
    std::chrono::steady_clock::time_point start_;
    std::map<std::string, xform::Transducer> transducers_;
};

/// Normalized formula in, verdict out (constructs a Prover).
Verdict solve(const Formula& normalized, Interner& in, AutomatonDb& db, const SolverConfig& cfg);

/// Runs +F+B-N and then -F+B+N, each with half of cfg.time_cap_ms (which
/// must be set), and returns the first definitive verdict.
Verdict portfolio(const Formula& normalized, Interner& in, AutomatonDb& db, const SolverConfig& cfg);

}  // namespace strsolve::engine
