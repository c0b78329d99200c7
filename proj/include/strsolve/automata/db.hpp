#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strsolve/automata/ops.hpp"

namespace strsolve::automata {

/// Handle into an AutomatonDb. Handles of one database compare equal iff the
/// canonical forms of their automata are identical.
struct AutomatonRef {
    std::uint32_t id = 0;

    auto operator<=>(const AutomatonRef&) const = default;
};

/// Hash-consing store for automata, with memo tables for the expensive
/// operations. Every stored automaton is trimmed and canonically numbered.
///
/// Lookups and insertions are serialized by an internal mutex; the
/// constructions themselves run outside the lock on immutable operands.
class AutomatonDb {
public:
    explicit AutomatonDb(std::size_t state_cap = kDefaultStateCap);

    AutomatonRef intern(const Automaton& a);
    std::shared_ptr<const Automaton> get(AutomatonRef r) const;
    std::size_t num_states(AutomatonRef r) const { return get(r)->num_states(); }
    std::size_t size() const;

    std::size_t state_cap() const { return state_cap_; }
    void set_state_cap(std::size_t cap) { state_cap_ = cap; }

    AutomatonRef empty() const { return empty_; }
    AutomatonRef universal() const { return universal_; }
    AutomatonRef epsilon() const { return epsilon_; }
    AutomatonRef word(const Word& w);
    AutomatonRef char_range(CodePoint lo, CodePoint hi);
    AutomatonRef length_window(std::uint64_t lo, std::optional<std::uint64_t> hi);
    AutomatonRef excluding_word(const Word& w);

    AutomatonRef intersect(AutomatonRef a, AutomatonRef b);
    AutomatonRef unite(AutomatonRef a, AutomatonRef b);
    AutomatonRef concat(AutomatonRef a, AutomatonRef b);
    AutomatonRef star(AutomatonRef a);
    AutomatonRef plus(AutomatonRef a);
    AutomatonRef reverse(AutomatonRef a);
    /// Throws StateBlowup when determinization exceeds the state cap.
    AutomatonRef complement(AutomatonRef a);
    AutomatonRef left_quotient(const Word& w, AutomatonRef a);
    AutomatonRef right_quotient(AutomatonRef a, const Word& w);

    EmptinessResult is_empty(AutomatonRef a);
    bool accepts(AutomatonRef a, const Word& w) const;
    LengthBounds length_bounds(AutomatonRef a);
    bool char_absence(AutomatonRef a, CodePoint c) const;
    /// Exact universality; throws StateBlowup like complement.
    bool is_universal(AutomatonRef a);
    std::optional<Word> single_word(AutomatonRef a);
    /// nullopt when the inclusion check exceeds the state cap.
    std::optional<bool> subset_of(AutomatonRef a, AutomatonRef b);
    std::vector<std::pair<AutomatonRef, AutomatonRef>> split_at_states(AutomatonRef a);

private:
    using Key = std::pair<std::uint32_t, std::uint32_t>;
    template <typename V>
    using Memo = std::map<Key, V>;

    template <typename V, typename F>
    V memoized(Memo<V>& memo, Key key, F&& compute);

    std::size_t state_cap_;
    mutable std::mutex mu_;
    std::vector<std::shared_ptr<const Automaton>> store_;
    std::unordered_map<std::string, std::uint32_t> index_;

    Memo<AutomatonRef> intersect_, unite_, concat_, star_, reverse_, complement_;
    Memo<EmptinessResult> empty_memo_;
    Memo<LengthBounds> bounds_memo_;
    Memo<bool> universal_memo_;
    Memo<std::optional<Word>> single_memo_;
    Memo<std::optional<bool>> subset_memo_;

    AutomatonRef empty_, universal_, epsilon_;
};

}  // namespace strsolve::automata
