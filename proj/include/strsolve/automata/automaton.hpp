#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "strsolve/unicode.hpp"

namespace strsolve::automata {

using State = std::uint32_t;

/// Outgoing transition labelled with the inclusive code-point interval [lo, hi].
struct Edge {
    CodePoint lo;
    CodePoint hi;
    State to;

    auto operator<=>(const Edge&) const = default;
};

struct Transition {
    State from;
    CodePoint lo;
    CodePoint hi;
    State to;

    auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic finite automaton whose transitions carry code-point
/// intervals. There are no epsilon transitions; several initial states are
/// allowed.
class Automaton {
public:
    Automaton() = default;
    explicit Automaton(std::size_t num_states);

    State add_state();
    /// Throws RangeError when hi < lo or hi exceeds kMaxCodePoint, and
    /// PreconditionViolation when a state is undefined.
    void add_edge(State from, CodePoint lo, CodePoint hi, State to);
    void add_initial(State s);
    void set_accepting(State s, bool accepting = true);
    void clear_initial() { initial_.clear(); }
    void clear_accepting();

    std::size_t num_states() const { return out_.size(); }
    std::size_t num_transitions() const;
    const std::vector<Edge>& edges(State s) const { return out_[s]; }
    const std::vector<State>& initial() const { return initial_; }
    bool is_initial(State s) const;
    bool is_accepting(State s) const { return accepting_[s] != 0; }
    std::vector<State> accepting_states() const;
    std::vector<Transition> transitions() const;

    /// Sorts edges and initial states, merges duplicate/adjacent intervals
    /// that share a target.
    void normalize();

    bool operator==(const Automaton&) const = default;

private:
    void check_state(State s) const;

    std::vector<std::vector<Edge>> out_;
    std::vector<State> initial_;
    std::vector<char> accepting_;
};

}  // namespace strsolve::automata
