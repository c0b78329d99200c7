#include "strsolve/automata/db.hpp"

#include "strsolve/error.hpp"

namespace strsolve::automata {

namespace {

std::string canonical_key(const Automaton& a) {
    std::string key;
    auto put = [&](std::uint32_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
    put(static_cast<std::uint32_t>(a.num_states()));
    for (State s : a.initial()) put(s);
    put(~0u);
    for (State s = 0; s < a.num_states(); ++s) {
        put(a.is_accepting(s) ? 1u : 0u);
        for (const Edge& e : a.edges(s)) {
            put(e.lo);
            put(e.hi);
            put(e.to);
        }
        put(~0u);
    }
    return key;
}

}  // namespace

AutomatonDb::AutomatonDb(std::size_t state_cap) : state_cap_(state_cap) {
    empty_ = intern(automata::empty_language());
    universal_ = intern(automata::universal());
    epsilon_ = intern(automata::epsilon());
}

AutomatonRef AutomatonDb::intern(const Automaton& input) {
    auto canon = std::make_shared<const Automaton>(trim(input));
    std::string key = canonical_key(*canon);
    std::lock_guard lock(mu_);
    auto it = index_.find(key);
    if (it != index_.end()) return AutomatonRef{it->second};
    auto id = static_cast<std::uint32_t>(store_.size());
    store_.push_back(std::move(canon));
    index_.emplace(std::move(key), id);
    return AutomatonRef{id};
}

std::shared_ptr<const Automaton> AutomatonDb::get(AutomatonRef r) const {
    std::lock_guard lock(mu_);
    if (r.id >= store_.size()) throw PreconditionViolation("unknown automaton handle");
    return store_[r.id];
}

std::size_t AutomatonDb::size() const {
    std::lock_guard lock(mu_);
    return store_.size();
}

template <typename V, typename F>
V AutomatonDb::memoized(Memo<V>& memo, Key key, F&& compute) {
    {
        std::lock_guard lock(mu_);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    V value = compute();
    std::lock_guard lock(mu_);
    memo.emplace(key, value);
    return value;
}

AutomatonRef AutomatonDb::word(const Word& w) { return intern(automata::word(w)); }

AutomatonRef AutomatonDb::char_range(CodePoint lo, CodePoint hi) {
    if (hi < lo || hi > kMaxCodePoint) throw RangeError("invalid character range");
    return intern(automata::char_range(lo, hi));
}

AutomatonRef AutomatonDb::length_window(std::uint64_t lo, std::optional<std::uint64_t> hi) {
    if ((hi ? *hi : lo) + 1 > state_cap_) throw StateBlowup(state_cap_);
    return intern(automata::length_window(lo, hi));
}

AutomatonRef AutomatonDb::excluding_word(const Word& w) { return intern(automata::excluding_word(w)); }

AutomatonRef AutomatonDb::intersect(AutomatonRef a, AutomatonRef b) {
    if (a == b) return a;
    if (a == universal_) return b;
    if (b == universal_) return a;
    if (a == empty_ || b == empty_) return empty_;
    Key key{std::min(a.id, b.id), std::max(a.id, b.id)};
    return memoized(intersect_, key, [&] { return intern(automata::intersect(*get(a), *get(b), state_cap_)); });
}

AutomatonRef AutomatonDb::unite(AutomatonRef a, AutomatonRef b) {
    if (a == b || b == empty_) return a;
    if (a == empty_) return b;
    Key key{std::min(a.id, b.id), std::max(a.id, b.id)};
    return memoized(unite_, key, [&] { return intern(automata::unite(*get(a), *get(b))); });
}

AutomatonRef AutomatonDb::concat(AutomatonRef a, AutomatonRef b) {
    if (a == epsilon_) return b;
    if (b == epsilon_) return a;
    if (a == empty_ || b == empty_) return empty_;
    return memoized(concat_, Key{a.id, b.id}, [&] { return intern(automata::concat(*get(a), *get(b))); });
}

AutomatonRef AutomatonDb::star(AutomatonRef a) {
    return memoized(star_, Key{a.id, 0}, [&] { return intern(automata::star(*get(a))); });
}

AutomatonRef AutomatonDb::plus(AutomatonRef a) { return concat(a, star(a)); }

AutomatonRef AutomatonDb::reverse(AutomatonRef a) {
    return memoized(reverse_, Key{a.id, 0}, [&] { return intern(automata::reverse(*get(a))); });
}

AutomatonRef AutomatonDb::complement(AutomatonRef a) {
    if (a == empty_) return universal_;
    if (a == universal_) return empty_;
    return memoized(complement_, Key{a.id, 0}, [&] { return intern(automata::complement(*get(a), state_cap_)); });
}

AutomatonRef AutomatonDb::left_quotient(const Word& w, AutomatonRef a) {
    if (w.empty()) return a;
    return intern(automata::left_quotient(w, *get(a)));
}

AutomatonRef AutomatonDb::right_quotient(AutomatonRef a, const Word& w) {
    if (w.empty()) return a;
    return intern(automata::right_quotient(*get(a), w));
}

EmptinessResult AutomatonDb::is_empty(AutomatonRef a) {
    return memoized(empty_memo_, Key{a.id, 0}, [&] { return check_empty(*get(a)); });
}

bool AutomatonDb::accepts(AutomatonRef a, const Word& w) const { return automata::accepts(*get(a), w); }

LengthBounds AutomatonDb::length_bounds(AutomatonRef a) {
    return memoized(bounds_memo_, Key{a.id, 0}, [&] { return automata::length_bounds(*get(a)); });
}

bool AutomatonDb::char_absence(AutomatonRef a, CodePoint c) const { return automata::char_absence(*get(a), c); }

bool AutomatonDb::is_universal(AutomatonRef a) {
    if (a == universal_) return true;
    return memoized(universal_memo_, Key{a.id, 0}, [&] { return complement(a) == empty_; });
}

std::optional<Word> AutomatonDb::single_word(AutomatonRef a) {
    return memoized(single_memo_, Key{a.id, 0}, [&] { return automata::single_word(*get(a)); });
}

std::optional<bool> AutomatonDb::subset_of(AutomatonRef a, AutomatonRef b) {
    if (a == b || b == universal_ || a == empty_) return true;
    return memoized(subset_memo_, Key{a.id, b.id}, [&] { return automata::subset_of(*get(a), *get(b), state_cap_); });
}

std::vector<std::pair<AutomatonRef, AutomatonRef>> AutomatonDb::split_at_states(AutomatonRef a) {
    std::vector<std::pair<AutomatonRef, AutomatonRef>> out;
    for (auto& [p, s] : automata::split_at_states(*get(a))) out.emplace_back(intern(p), intern(s));
    return out;
}

}  // namespace strsolve::automata
