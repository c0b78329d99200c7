#include "strsolve/automata/automaton.hpp"

#include <algorithm>
#include <string>

#include "strsolve/error.hpp"

namespace strsolve::automata {

Automaton::Automaton(std::size_t num_states) : out_(num_states), accepting_(num_states, 0) {}

State Automaton::add_state() {
    out_.emplace_back();
    accepting_.push_back(0);
    return static_cast<State>(out_.size() - 1);
}

void Automaton::check_state(State s) const {
    if (s >= out_.size()) {
        throw PreconditionViolation("undefined automaton state " + std::to_string(s));
    }
}

void Automaton::add_edge(State from, CodePoint lo, CodePoint hi, State to) {
    check_state(from);
    check_state(to);
    if (hi < lo || hi > kMaxCodePoint) {
        throw RangeError("invalid transition interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    out_[from].push_back(Edge{lo, hi, to});
}

void Automaton::add_initial(State s) {
    check_state(s);
    if (std::find(initial_.begin(), initial_.end(), s) == initial_.end()) initial_.push_back(s);
}

void Automaton::set_accepting(State s, bool accepting) {
    check_state(s);
    accepting_[s] = accepting ? 1 : 0;
}

void Automaton::clear_accepting() { std::fill(accepting_.begin(), accepting_.end(), 0); }

std::size_t Automaton::num_transitions() const {
    std::size_t n = 0;
    for (const auto& es : out_) n += es.size();
    return n;
}

bool Automaton::is_initial(State s) const {
    return std::find(initial_.begin(), initial_.end(), s) != initial_.end();
}

std::vector<State> Automaton::accepting_states() const {
    std::vector<State> out;
    for (State s = 0; s < out_.size(); ++s) {
        if (accepting_[s]) out.push_back(s);
    }
    return out;
}

std::vector<Transition> Automaton::transitions() const {
    std::vector<Transition> out;
    for (State s = 0; s < out_.size(); ++s) {
        for (const Edge& e : out_[s]) out.push_back(Transition{s, e.lo, e.hi, e.to});
    }
    return out;
}

void Automaton::normalize() {
    std::sort(initial_.begin(), initial_.end());
    initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
    for (auto& es : out_) {
        // group by target, merge overlapping or adjacent intervals
        std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
            return a.to != b.to ? a.to < b.to : (a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi);
        });
        std::vector<Edge> merged;
        for (const Edge& e : es) {
            if (!merged.empty() && merged.back().to == e.to &&
                static_cast<std::uint64_t>(e.lo) <= static_cast<std::uint64_t>(merged.back().hi) + 1) {
                merged.back().hi = std::max(merged.back().hi, e.hi);
            } else {
                merged.push_back(e);
            }
        }
        std::sort(merged.begin(), merged.end());
        es = std::move(merged);
    }
}

}  // namespace strsolve::automata
