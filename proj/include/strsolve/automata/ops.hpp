#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strsolve/automata/automaton.hpp"

namespace strsolve::automata {

inline constexpr std::size_t kDefaultStateCap = 10'000;

/// Result of an emptiness check; `witness` is the shortest accepted word,
/// ties broken by the smallest code point at the earliest position.
struct EmptinessResult {
    bool empty = true;
    std::optional<Word> witness;
};

struct LengthBounds {
    std::uint64_t min = 0;
    std::optional<std::uint64_t> max;  ///< nullopt: unbounded (accepting lasso)
};

/// Automaton with epsilon edges, used as a construction scratchpad.
class NfaBuilder {
public:
    State add_state();
    void add_edge(State from, CodePoint lo, CodePoint hi, State to);
    void add_epsilon(State from, State to);
    void add_initial(State s) { initial_.push_back(s); }
    void set_accepting(State s) { accepting_[s] = 1; }
    std::size_t num_states() const { return edges_.size(); }

    /// Epsilon-closure elimination followed by trimming.
    Automaton build() const;

private:
    std::vector<std::vector<Edge>> edges_;
    std::vector<std::vector<State>> eps_;
    std::vector<State> initial_;
    std::vector<char> accepting_;
};

// Basic languages.
Automaton empty_language();
Automaton universal();
Automaton epsilon();
Automaton word(const Word& w);
Automaton char_range(CodePoint lo, CodePoint hi);
/// Σ^lo ∪ … ∪ Σ^hi; `hi == nullopt` means unbounded.
Automaton length_window(std::uint64_t lo, std::optional<std::uint64_t> hi);
/// Every word except `w`.
Automaton excluding_word(const Word& w);

/// Removes states that are unreachable or cannot reach acceptance and
/// renumbers the rest in BFS discovery order from the initial states.
Automaton trim(const Automaton& a);

Automaton intersect(const Automaton& a, const Automaton& b, std::size_t state_cap = kDefaultStateCap);
Automaton unite(const Automaton& a, const Automaton& b);
Automaton concat(const Automaton& a, const Automaton& b);
Automaton star(const Automaton& a);
Automaton plus(const Automaton& a);
Automaton reverse(const Automaton& a);
/// Subset construction over refined intervals; the result is deterministic but partial.
Automaton determinize(const Automaton& a, std::size_t state_cap = kDefaultStateCap);
Automaton complement(const Automaton& a, std::size_t state_cap = kDefaultStateCap);
/// { v | w·v ∈ L(a) }
Automaton left_quotient(const Word& w, const Automaton& a);
/// { v | v·w ∈ L(a) }
Automaton right_quotient(const Automaton& a, const Word& w);

EmptinessResult check_empty(const Automaton& a);
bool accepts(const Automaton& a, const Word& w);
LengthBounds length_bounds(const Automaton& a);
bool char_absence(const Automaton& a, CodePoint c);
/// True iff the accepted language is exactly Σ*.
bool is_universal(const Automaton& a, std::size_t state_cap = kDefaultStateCap);
/// The unique accepted word, if the language is a singleton.
std::optional<Word> single_word(const Automaton& a);
/// All accepted words if the language is finite and has at most `max_words` elements.
std::optional<std::vector<Word>> finite_words(const Automaton& a, std::size_t max_words);
/// L(a) ⊆ L(b); nullopt when the on-the-fly subset exploration exceeds the cap.
std::optional<bool> subset_of(const Automaton& a, const Automaton& b, std::size_t state_cap = kDefaultStateCap);

/// One (prefix, suffix) pair per state q of the trimmed automaton, in BFS
/// order: prefix accepts at q only, suffix starts at q only.
std::vector<std::pair<Automaton, Automaton>> split_at_states(const Automaton& a);

/// Interval refinement: partitions the union of the edges' intervals into
/// maximal segments with a constant target set. Each segment carries the sorted
/// targets. Segments with no target are omitted.
struct Segment {
    CodePoint lo;
    CodePoint hi;
    std::vector<State> targets;
};
std::vector<Segment> refine(const std::vector<Edge>& edges);

/// GraphViz rendering for debugging.
std::string to_dot(const Automaton& a, const std::string& name = "A");

}  // namespace strsolve::automata
