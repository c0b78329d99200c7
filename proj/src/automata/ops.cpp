#include "strsolve/automata/ops.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>

#include "strsolve/error.hpp"

namespace strsolve::automata {

namespace {

void require_cap(std::size_t states, std::size_t cap) {
    if (states > cap) throw StateBlowup(cap);
}

std::vector<std::vector<State>> reverse_adjacency(const Automaton& a) {
    std::vector<std::vector<State>> rev(a.num_states());
    for (State s = 0; s < a.num_states(); ++s) {
        for (const Edge& e : a.edges(s)) rev[e.to].push_back(s);
    }
    return rev;
}

// Adds edges from `from` covering the complement (within the alphabet) of the
// union of `edges`, all pointing to `to`.
void add_gap_edges(Automaton& a, State from, std::vector<Edge> edges, State to) {
    std::sort(edges.begin(), edges.end());
    std::uint64_t next = 0;
    for (const Edge& e : edges) {
        if (e.lo > next) a.add_edge(from, static_cast<CodePoint>(next), e.lo - 1, to);
        next = std::max<std::uint64_t>(next, static_cast<std::uint64_t>(e.hi) + 1);
    }
    if (next <= kMaxCodePoint) a.add_edge(from, static_cast<CodePoint>(next), kMaxCodePoint, to);
}

bool has_cycle(const Automaton& a) {
    // iterative three-colour DFS
    std::vector<char> colour(a.num_states(), 0);
    for (State root = 0; root < a.num_states(); ++root) {
        if (colour[root] != 0) continue;
        std::vector<std::pair<State, std::size_t>> stack{{root, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
            auto& [s, idx] = stack.back();
            if (idx < a.edges(s).size()) {
                State t = a.edges(s)[idx++].to;
                if (colour[t] == 1) return true;
                if (colour[t] == 0) {
                    colour[t] = 1;
                    stack.emplace_back(t, 0);
                }
            } else {
                colour[s] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

std::vector<State> step(const Automaton& a, const std::vector<State>& from, CodePoint c) {
    std::vector<State> out;
    for (State s : from) {
        for (const Edge& e : a.edges(s)) {
            if (e.lo <= c && c <= e.hi) out.push_back(e.to);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

// ---------------------------------------------------------------- NfaBuilder

State NfaBuilder::add_state() {
    edges_.emplace_back();
    eps_.emplace_back();
    accepting_.push_back(0);
    return static_cast<State>(edges_.size() - 1);
}

void NfaBuilder::add_edge(State from, CodePoint lo, CodePoint hi, State to) {
    if (hi < lo || hi > kMaxCodePoint) throw RangeError("invalid transition interval");
    edges_[from].push_back(Edge{lo, hi, to});
}

void NfaBuilder::add_epsilon(State from, State to) { eps_[from].push_back(to); }

Automaton NfaBuilder::build() const {
    const std::size_t n = edges_.size();
    Automaton out(n);
    std::vector<char> seen(n, 0);
    for (State s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<State> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            State t = stack.back();
            stack.pop_back();
            if (accepting_[t]) out.set_accepting(s);
            for (const Edge& e : edges_[t]) out.add_edge(s, e.lo, e.hi, e.to);
            for (State u : eps_[t]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
    }
    for (State s : initial_) out.add_initial(s);
    return trim(out);
}

// ---------------------------------------------------------- basic languages

Automaton empty_language() { return Automaton{}; }

Automaton universal() {
    Automaton a(1);
    a.add_initial(0);
    a.set_accepting(0);
    a.add_edge(0, 0, kMaxCodePoint, 0);
    return a;
}

Automaton epsilon() {
    Automaton a(1);
    a.add_initial(0);
    a.set_accepting(0);
    return a;
}

Automaton word(const Word& w) {
    Automaton a(w.size() + 1);
    a.add_initial(0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > kMaxCodePoint) throw RangeError("code point outside the alphabet");
        a.add_edge(static_cast<State>(i), w[i], w[i], static_cast<State>(i + 1));
    }
    a.set_accepting(static_cast<State>(w.size()));
    return a;
}

Automaton char_range(CodePoint lo, CodePoint hi) {
    if (hi < lo) return empty_language();
    Automaton a(2);
    a.add_initial(0);
    a.set_accepting(1);
    a.add_edge(0, lo, hi, 1);
    return a;
}

Automaton length_window(std::uint64_t lo, std::optional<std::uint64_t> hi) {
    if (hi && *hi < lo) throw PreconditionViolation("length_window requires lo <= hi");
    const std::uint64_t last = hi ? *hi : lo;
    Automaton a(static_cast<std::size_t>(last + 1));
    a.add_initial(0);
    for (std::uint64_t i = 0; i < last; ++i) {
        a.add_edge(static_cast<State>(i), 0, kMaxCodePoint, static_cast<State>(i + 1));
    }
    for (std::uint64_t i = lo; i <= last; ++i) a.set_accepting(static_cast<State>(i));
    if (!hi) a.add_edge(static_cast<State>(last), 0, kMaxCodePoint, static_cast<State>(last));
    return a;
}

Automaton excluding_word(const Word& w) {
    const auto n = static_cast<State>(w.size());
    Automaton a(w.size() + 2);
    const State sink = n + 1;
    a.add_initial(0);
    for (State i = 0; i < n; ++i) {
        a.add_edge(i, w[i], w[i], i + 1);
        add_gap_edges(a, i, {Edge{w[i], w[i], i + 1}}, sink);
        a.set_accepting(i);
    }
    a.add_edge(n, 0, kMaxCodePoint, sink);
    a.add_edge(sink, 0, kMaxCodePoint, sink);
    a.set_accepting(sink);
    return trim(a);
}

// --------------------------------------------------------------------- trim

Automaton trim(const Automaton& input) {
    Automaton a = input;
    a.normalize();
    const std::size_t n = a.num_states();
    std::vector<char> fwd(n, 0), bwd(n, 0);
    std::vector<State> stack;
    for (State s : a.initial()) {
        if (!fwd[s]) {
            fwd[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (const Edge& e : a.edges(s)) {
            if (!fwd[e.to]) {
                fwd[e.to] = 1;
                stack.push_back(e.to);
            }
        }
    }
    auto rev = reverse_adjacency(a);
    for (State s = 0; s < n; ++s) {
        if (a.is_accepting(s) && fwd[s]) {
            bwd[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (State p : rev[s]) {
            if (!bwd[p] && fwd[p]) {
                bwd[p] = 1;
                stack.push_back(p);
            }
        }
    }
    constexpr State kNone = ~State{0};
    std::vector<State> renum(n, kNone);
    std::vector<State> order;
    for (State s : a.initial()) {
        if (bwd[s] && renum[s] == kNone) {
            renum[s] = static_cast<State>(order.size());
            order.push_back(s);
        }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const Edge& e : a.edges(order[i])) {
            if (bwd[e.to] && renum[e.to] == kNone) {
                renum[e.to] = static_cast<State>(order.size());
                order.push_back(e.to);
            }
        }
    }
    Automaton out(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        State old = order[i];
        if (a.is_accepting(old)) out.set_accepting(static_cast<State>(i));
        if (a.is_initial(old)) out.add_initial(static_cast<State>(i));
        for (const Edge& e : a.edges(old)) {
            if (renum[e.to] != kNone) out.add_edge(static_cast<State>(i), e.lo, e.hi, renum[e.to]);
        }
    }
    out.normalize();
    return out;
}

// --------------------------------------------------------------- refinement

std::vector<Segment> refine(const std::vector<Edge>& edges) {
    struct Event {
        std::uint64_t pos;
        int delta;
        State to;
    };
    std::vector<Event> events;
    events.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        events.push_back(Event{e.lo, +1, e.to});
        events.push_back(Event{static_cast<std::uint64_t>(e.hi) + 1, -1, e.to});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.pos < b.pos; });
    std::map<State, int> active;
    std::vector<Segment> out;
    std::size_t i = 0;
    while (i < events.size()) {
        const std::uint64_t pos = events[i].pos;
        while (i < events.size() && events[i].pos == pos) {
            auto& cnt = active[events[i].to];
            cnt += events[i].delta;
            if (cnt == 0) active.erase(events[i].to);
            ++i;
        }
        if (i == events.size() || active.empty()) continue;
        const std::uint64_t next = events[i].pos;
        std::vector<State> targets;
        targets.reserve(active.size());
        for (const auto& [s, c] : active) targets.push_back(s);
        auto lo = static_cast<CodePoint>(pos);
        auto hi = static_cast<CodePoint>(next - 1);
        if (!out.empty() && out.back().targets == targets && static_cast<std::uint64_t>(out.back().hi) + 1 == pos) {
            out.back().hi = hi;
        } else {
            out.push_back(Segment{lo, hi, std::move(targets)});
        }
    }
    return out;
}

// --------------------------------------------------------------- operations

Automaton intersect(const Automaton& a, const Automaton& b, std::size_t state_cap) {
    Automaton out;
    std::unordered_map<std::uint64_t, State> index;
    std::deque<std::pair<State, State>> work;
    const std::uint64_t nb = b.num_states();
    auto get = [&](State p, State q) {
        std::uint64_t key = static_cast<std::uint64_t>(p) * nb + q;
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        State s = out.add_state();
        require_cap(out.num_states(), state_cap);
        if (a.is_accepting(p) && b.is_accepting(q)) out.set_accepting(s);
        index.emplace(key, s);
        work.emplace_back(p, q);
        return s;
    };
    for (State p : a.initial()) {
        for (State q : b.initial()) out.add_initial(get(p, q));
    }
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop_front();
        State from = index.at(static_cast<std::uint64_t>(p) * nb + q);
        for (const Edge& e1 : a.edges(p)) {
            for (const Edge& e2 : b.edges(q)) {
                CodePoint lo = std::max(e1.lo, e2.lo);
                CodePoint hi = std::min(e1.hi, e2.hi);
                if (lo <= hi) out.add_edge(from, lo, hi, get(e1.to, e2.to));
            }
        }
    }
    return trim(out);
}

Automaton unite(const Automaton& a, const Automaton& b) {
    Automaton out(a.num_states() + b.num_states());
    const auto off = static_cast<State>(a.num_states());
    for (const Transition& t : a.transitions()) out.add_edge(t.from, t.lo, t.hi, t.to);
    for (const Transition& t : b.transitions()) out.add_edge(t.from + off, t.lo, t.hi, t.to + off);
    for (State s : a.initial()) out.add_initial(s);
    for (State s : b.initial()) out.add_initial(s + off);
    for (State s : a.accepting_states()) out.set_accepting(s);
    for (State s : b.accepting_states()) out.set_accepting(s + off);
    return trim(out);
}

Automaton concat(const Automaton& a, const Automaton& b) {
    Automaton out(a.num_states() + b.num_states());
    const auto off = static_cast<State>(a.num_states());
    for (const Transition& t : a.transitions()) out.add_edge(t.from, t.lo, t.hi, t.to);
    for (const Transition& t : b.transitions()) out.add_edge(t.from + off, t.lo, t.hi, t.to + off);
    bool b_nullable = false;
    for (State s : b.initial()) b_nullable = b_nullable || b.is_accepting(s);
    for (State f : a.accepting_states()) {
        for (State s : b.initial()) {
            for (const Edge& e : b.edges(s)) out.add_edge(f, e.lo, e.hi, e.to + off);
        }
        if (b_nullable) out.set_accepting(f);
    }
    for (State s : b.accepting_states()) out.set_accepting(s + off);
    for (State s : a.initial()) out.add_initial(s);
    return trim(out);
}

Automaton star(const Automaton& a) {
    Automaton out(a.num_states() + 1);
    const State start = 0;
    out.add_initial(start);
    out.set_accepting(start);
    for (const Transition& t : a.transitions()) out.add_edge(t.from + 1, t.lo, t.hi, t.to + 1);
    auto glue = [&](State from) {
        for (State s : a.initial()) {
            for (const Edge& e : a.edges(s)) out.add_edge(from, e.lo, e.hi, e.to + 1);
        }
    };
    glue(start);
    for (State f : a.accepting_states()) {
        glue(f + 1);
        out.set_accepting(f + 1);
    }
    return trim(out);
}

Automaton plus(const Automaton& a) { return concat(a, star(a)); }

Automaton reverse(const Automaton& a) {
    Automaton out(a.num_states());
    for (const Transition& t : a.transitions()) out.add_edge(t.to, t.lo, t.hi, t.from);
    for (State s : a.accepting_states()) out.add_initial(s);
    for (State s : a.initial()) out.set_accepting(s);
    return trim(out);
}

Automaton determinize(const Automaton& a, std::size_t state_cap) {
    Automaton out;
    std::map<std::vector<State>, State> index;
    std::deque<std::vector<State>> work;
    auto get = [&](std::vector<State> set) {
        auto it = index.find(set);
        if (it != index.end()) return it->second;
        State s = out.add_state();
        require_cap(out.num_states(), state_cap);
        for (State q : set) {
            if (a.is_accepting(q)) {
                out.set_accepting(s);
                break;
            }
        }
        index.emplace(set, s);
        work.push_back(std::move(set));
        return s;
    };
    std::vector<State> init = a.initial();
    std::sort(init.begin(), init.end());
    if (init.empty()) return out;
    out.add_initial(get(init));
    while (!work.empty()) {
        std::vector<State> set = std::move(work.front());
        work.pop_front();
        State from = index.at(set);
        std::vector<Edge> edges;
        for (State q : set) edges.insert(edges.end(), a.edges(q).begin(), a.edges(q).end());
        for (Segment& seg : refine(edges)) {
            State to = get(std::move(seg.targets));
            out.add_edge(from, seg.lo, seg.hi, to);
        }
    }
    out.normalize();
    return out;
}

Automaton complement(const Automaton& a, std::size_t state_cap) {
    Automaton d = determinize(trim(a), state_cap);
    if (d.num_states() == 0) return universal();
    const State sink = d.add_state();
    require_cap(d.num_states(), state_cap);
    for (State s = 0; s < sink; ++s) {
        std::vector<Edge> es = d.edges(s);
        add_gap_edges(d, s, std::move(es), sink);
        d.set_accepting(s, !d.is_accepting(s));
    }
    d.add_edge(sink, 0, kMaxCodePoint, sink);
    d.set_accepting(sink);
    return trim(d);
}

Automaton left_quotient(const Word& w, const Automaton& a) {
    std::vector<State> cur = a.initial();
    std::sort(cur.begin(), cur.end());
    for (CodePoint c : w) cur = step(a, cur, c);
    Automaton out = a;
    out.clear_initial();
    for (State s : cur) out.add_initial(s);
    return trim(out);
}

Automaton right_quotient(const Automaton& a, const Word& w) {
    std::vector<char> cur(a.num_states(), 0);
    for (State s : a.accepting_states()) cur[s] = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        std::vector<char> prev(a.num_states(), 0);
        for (State s = 0; s < a.num_states(); ++s) {
            for (const Edge& e : a.edges(s)) {
                if (cur[e.to] && e.lo <= *it && *it <= e.hi) {
                    prev[s] = 1;
                    break;
                }
            }
        }
        cur = std::move(prev);
    }
    Automaton out = a;
    out.clear_accepting();
    for (State s = 0; s < a.num_states(); ++s) {
        if (cur[s]) out.set_accepting(s);
    }
    return trim(out);
}

// ------------------------------------------------------------------ queries

EmptinessResult check_empty(const Automaton& input) {
    Automaton a = trim(input);
    if (a.initial().empty()) return {};
    // Dijkstra over the length-lexicographic order; appending keeps the order
    // monotone, so the first accepting state popped carries the minimal word.
    struct Item {
        Word w;
        State s;
    };
    auto later = [](const Item& x, const Item& y) {
        if (x.w.size() != y.w.size()) return x.w.size() > y.w.size();
        return x.w > y.w;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
    std::vector<char> done(a.num_states(), 0);
    for (State s : a.initial()) queue.push(Item{Word{}, s});
    while (!queue.empty()) {
        Item it = queue.top();
        queue.pop();
        if (done[it.s]) continue;
        done[it.s] = 1;
        if (a.is_accepting(it.s)) return EmptinessResult{false, it.w};
        for (const Edge& e : a.edges(it.s)) {
            if (done[e.to]) continue;
            Word next = it.w;
            next.push_back(e.lo);
            queue.push(Item{std::move(next), e.to});
        }
    }
    return {};
}

bool accepts(const Automaton& a, const Word& w) {
    std::vector<State> cur = a.initial();
    std::sort(cur.begin(), cur.end());
    for (CodePoint c : w) {
        cur = step(a, cur, c);
        if (cur.empty()) return false;
    }
    return std::any_of(cur.begin(), cur.end(), [&](State s) { return a.is_accepting(s); });
}

LengthBounds length_bounds(const Automaton& input) {
    Automaton a = trim(input);
    LengthBounds out;
    if (a.initial().empty()) {
        out.max = 0;
        return out;
    }
    // shortest: BFS
    std::vector<std::int64_t> dist(a.num_states(), -1);
    std::deque<State> work;
    for (State s : a.initial()) {
        dist[s] = 0;
        work.push_back(s);
    }
    std::uint64_t best = ~std::uint64_t{0};
    while (!work.empty()) {
        State s = work.front();
        work.pop_front();
        if (a.is_accepting(s)) best = std::min<std::uint64_t>(best, static_cast<std::uint64_t>(dist[s]));
        for (const Edge& e : a.edges(s)) {
            if (dist[e.to] < 0) {
                dist[e.to] = dist[s] + 1;
                work.push_back(e.to);
            }
        }
    }
    out.min = best;
    if (has_cycle(a)) return out;
    // longest path over the DAG (Kahn order)
    std::vector<int> indeg(a.num_states(), 0);
    for (State s = 0; s < a.num_states(); ++s) {
        for (const Edge& e : a.edges(s)) ++indeg[e.to];
    }
    std::vector<std::int64_t> longest(a.num_states(), -1);
    for (State s : a.initial()) longest[s] = 0;
    std::deque<State> order;
    for (State s = 0; s < a.num_states(); ++s) {
        if (indeg[s] == 0) order.push_back(s);
    }
    std::uint64_t max_len = 0;
    while (!order.empty()) {
        State s = order.front();
        order.pop_front();
        if (longest[s] >= 0 && a.is_accepting(s)) {
            max_len = std::max<std::uint64_t>(max_len, static_cast<std::uint64_t>(longest[s]));
        }
        for (const Edge& e : a.edges(s)) {
            if (longest[s] >= 0) longest[e.to] = std::max(longest[e.to], longest[s] + 1);
            if (--indeg[e.to] == 0) order.push_back(e.to);
        }
    }
    out.max = max_len;
    return out;
}

bool char_absence(const Automaton& a, CodePoint c) {
    for (State s = 0; s < a.num_states(); ++s) {
        for (const Edge& e : a.edges(s)) {
            if (e.lo <= c && c <= e.hi) return false;
        }
    }
    return true;
}

bool is_universal(const Automaton& a, std::size_t state_cap) {
    return check_empty(complement(a, state_cap)).empty;
}

std::optional<Word> single_word(const Automaton& a) {
    EmptinessResult r = check_empty(a);
    if (r.empty) return std::nullopt;
    Automaton rest = intersect(a, excluding_word(*r.witness), std::max<std::size_t>(kDefaultStateCap, a.num_states() * (r.witness->size() + 2)));
    if (!check_empty(rest).empty) return std::nullopt;
    return r.witness;
}

std::optional<std::vector<Word>> finite_words(const Automaton& input, std::size_t max_words) {
    Automaton a = trim(input);
    if (has_cycle(a)) return std::nullopt;
    std::vector<Word> out;
    Word current;
    bool overflow = false;
    std::function<void(State)> walk = [&](State s) {
        if (overflow) return;
        if (a.is_accepting(s)) {
            out.push_back(current);
            if (out.size() > max_words) {
                overflow = true;
                return;
            }
        }
        for (const Edge& e : a.edges(s)) {
            if (static_cast<std::uint64_t>(e.hi - e.lo) + 1 > max_words) {
                overflow = true;
                return;
            }
            for (std::uint64_t c = e.lo; c <= e.hi; ++c) {
                current.push_back(static_cast<CodePoint>(c));
                walk(e.to);
                current.pop_back();
                if (overflow) return;
            }
        }
    };
    for (State s : a.initial()) walk(s);
    if (overflow) return std::nullopt;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<bool> subset_of(const Automaton& input, const Automaton& b, std::size_t state_cap) {
    Automaton a = trim(input);
    std::map<std::pair<State, std::vector<State>>, char> seen;
    std::deque<std::pair<State, std::vector<State>>> work;
    std::vector<State> binit = b.initial();
    std::sort(binit.begin(), binit.end());
    auto accepting_any = [&](const std::vector<State>& set) {
        return std::any_of(set.begin(), set.end(), [&](State q) { return b.is_accepting(q); });
    };
    auto push = [&](State p, std::vector<State> set) -> bool {
        if (a.is_accepting(p) && !accepting_any(set)) return false;
        auto key = std::make_pair(p, std::move(set));
        if (seen.emplace(key, 1).second) work.push_back(std::move(key));
        return true;
    };
    for (State p : a.initial()) {
        if (!push(p, binit)) return false;
    }
    while (!work.empty()) {
        if (seen.size() > state_cap) return std::nullopt;
        auto [p, set] = std::move(work.front());
        work.pop_front();
        std::vector<Edge> bedges;
        for (State q : set) bedges.insert(bedges.end(), b.edges(q).begin(), b.edges(q).end());
        std::vector<Segment> segs = refine(bedges);
        for (const Edge& e : a.edges(p)) {
            // walk the segments overlapping [e.lo, e.hi]; uncovered gaps mean L(a) escapes b
            std::uint64_t next = e.lo;
            for (const Segment& seg : segs) {
                if (seg.hi < e.lo || seg.lo > e.hi) continue;
                if (seg.lo > next) return false;
                if (!push(e.to, seg.targets)) return false;
                next = static_cast<std::uint64_t>(std::min(seg.hi, e.hi)) + 1;
            }
            if (next <= e.hi) return false;
        }
    }
    return true;
}

std::vector<std::pair<Automaton, Automaton>> split_at_states(const Automaton& input) {
    Automaton a = trim(input);
    std::vector<std::pair<Automaton, Automaton>> out;
    out.reserve(a.num_states());
    for (State q = 0; q < a.num_states(); ++q) {
        Automaton prefix = a;
        prefix.clear_accepting();
        prefix.set_accepting(q);
        Automaton suffix = a;
        suffix.clear_initial();
        suffix.add_initial(q);
        out.emplace_back(trim(prefix), trim(suffix));
    }
    return out;
}

std::string to_dot(const Automaton& a, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n";
    for (State s = 0; s < a.num_states(); ++s) {
        os << "  q" << s << " [shape=" << (a.is_accepting(s) ? "doublecircle" : "circle") << "];\n";
        if (a.is_initial(s)) os << "  init" << s << " [shape=point];\n  init" << s << " -> q" << s << ";\n";
    }
    for (const Transition& t : a.transitions()) {
        os << "  q" << t.from << " -> q" << t.to << " [label=\"[" << static_cast<std::uint32_t>(t.lo) << "," << static_cast<std::uint32_t>(t.hi) << "]\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace strsolve::automata
