#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strsolve/automata/db.hpp"

namespace strsolve::xform {

using automata::Automaton;
using automata::AutomatonDb;
using automata::AutomatonRef;
using automata::State;

/// One output symbol: a literal code point, or COPY (the consumed input code point).
struct OutSym {
    bool copy = false;
    CodePoint c = 0;

    bool operator==(const OutSym&) const = default;
};

using Template = std::vector<OutSym>;

Template literal(const Word& w);

struct TEdge {
    CodePoint lo;
    CodePoint hi;
    Template out;  ///< at most one COPY
    State to;
};

/// Deterministic, total functional transducer: one initial state, and every
/// state accepting with a literal final output flushed at end of input.
class Transducer {
public:
    State add_state(Word final_output = {});
    /// Throws RangeError on a bad interval, PreconditionViolation on two COPY symbols.
    void add_edge(State from, CodePoint lo, CodePoint hi, Template out, State to);
    void set_final_output(State s, Word w) { final_[s] = std::move(w); }

    std::size_t num_states() const { return edges_.size(); }
    State initial() const { return 0; }
    const std::vector<TEdge>& edges(State s) const { return edges_[s]; }
    const Word& final_output(State s) const { return final_[s]; }

    /// Runs the transducer; throws PreconditionViolation if some code point has no edge.
    Word apply(const Word& w) const;

private:
    std::vector<std::vector<TEdge>> edges_;
    std::vector<Word> final_;
};

Transducer identity();

/// Leftmost, non-overlapping replacement of every occurrence. Pattern must be non-empty.
Transducer build_replace_all(const Word& pattern, const Word& replacement);
/// Replaces the leftmost occurrence only. Pattern must be non-empty.
Transducer build_replace_first(const Word& pattern, const Word& replacement);
/// Leftmost-shortest replacement over a finite set of non-empty patterns,
/// once (`all == false`) or repeatedly. This is the SMT-LIB str.replace_re /
/// str.replace_re_all semantics for a finite pattern language without ε.
Transducer build_replace_set(const std::vector<Word>& patterns, const Word& replacement, bool all);

/// { w | t(w) ∈ L(out) }. Throws StateBlowup past `state_cap` product states.
Automaton pre_image(const Transducer& t, const Automaton& out, std::size_t state_cap = automata::kDefaultStateCap);
/// { t(w) | w ∈ L(inp) } exactly. Throws StateBlowup past `state_cap` states.
Automaton post_image(const Transducer& t, const Automaton& inp, std::size_t state_cap = automata::kDefaultStateCap);

AutomatonRef pre_image(AutomatonDb& db, const Transducer& t, AutomatonRef out);
AutomatonRef post_image(AutomatonDb& db, const Transducer& t, AutomatonRef inp);

}  // namespace strsolve::xform
