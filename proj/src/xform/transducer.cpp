#include "strsolve/xform/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "strsolve/error.hpp"

namespace strsolve::xform {

Template literal(const Word& w) {
    Template t;
    t.reserve(w.size());
    for (CodePoint c : w) t.push_back(OutSym{false, c});
    return t;
}

State Transducer::add_state(Word final_output) {
    edges_.emplace_back();
    final_.push_back(std::move(final_output));
    return static_cast<State>(edges_.size() - 1);
}

void Transducer::add_edge(State from, CodePoint lo, CodePoint hi, Template out, State to) {
    if (hi < lo || hi > kMaxCodePoint) throw RangeError("invalid transducer interval");
    if (from >= edges_.size() || to >= edges_.size()) throw PreconditionViolation("undefined transducer state");
    if (std::count_if(out.begin(), out.end(), [](const OutSym& s) { return s.copy; }) > 1) {
        throw PreconditionViolation("output template with more than one COPY");
    }
    edges_[from].push_back(TEdge{lo, hi, std::move(out), to});
}

Word Transducer::apply(const Word& w) const {
    Word out;
    State s = initial();
    for (CodePoint c : w) {
        const TEdge* hit = nullptr;
        for (const TEdge& e : edges_[s]) {
            if (e.lo <= c && c <= e.hi) {
                hit = &e;
                break;
            }
        }
        if (!hit) throw PreconditionViolation("transducer has no transition for the input");
        for (const OutSym& o : hit->out) out.push_back(o.copy ? c : o.c);
        s = hit->to;
    }
    return out + final_[s];
}

Transducer identity() {
    Transducer t;
    State s = t.add_state();
    t.add_edge(s, 0, kMaxCodePoint, Template{OutSym{true, 0}}, s);
    return t;
}

namespace {

// Buffer symbols: code points, or kOpaque for "some code point outside every pattern".
using Sym = std::int64_t;
using Buf = std::vector<Sym>;
constexpr Sym kOpaque = -1;

struct ReplaceSpec {
    std::vector<Word> patterns;
    Word replacement;
    bool all;
};

bool matches_at(const Word& p, const Buf& b, std::size_t i, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        if (b[i + k] != static_cast<Sym>(p[k])) return false;
    }
    return true;
}

bool complete(const ReplaceSpec& spec, const Buf& b, std::size_t i, std::size_t j) {
    for (const Word& p : spec.patterns) {
        if (p.size() == j - i && matches_at(p, b, i, j - i)) return true;
    }
    return false;
}

bool viable(const ReplaceSpec& spec, const Buf& b, std::size_t i) {
    const std::size_t n = b.size() - i;
    for (const Word& p : spec.patterns) {
        if (p.size() > n && matches_at(p, b, i, n)) return true;
    }
    return false;
}

struct Step {
    Buf emitted;
    Buf buffer;
    bool done = false;
};

// Commits everything in `b` that can no longer change; keeps the pending
// suffix that may still start the leftmost match.
Step process(const ReplaceSpec& spec, Buf b, bool at_end) {
    Step out;
    auto emit = [&](std::size_t from, std::size_t to) { out.emitted.insert(out.emitted.end(), b.begin() + from, b.begin() + to); };
    for (;;) {
        bool replaced = false;
        for (std::size_t i = 0; i < b.size() && !replaced; ++i) {
            for (std::size_t j = i + 1; j <= b.size(); ++j) {
                if (complete(spec, b, i, j)) {
                    emit(0, i);
                    out.emitted.insert(out.emitted.end(), spec.replacement.begin(), spec.replacement.end());
                    b.erase(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(j));
                    replaced = true;
                    break;
                }
            }
            if (replaced) break;
            if (!at_end && viable(spec, b, i)) {
                emit(0, i);
                out.buffer.assign(b.begin() + static_cast<std::ptrdiff_t>(i), b.end());
                return out;
            }
        }
        if (!replaced) {
            emit(0, b.size());
            return out;
        }
        if (!spec.all) {
            emit(0, b.size());
            out.done = true;
            return out;
        }
    }
}

Word to_word(const Buf& b) {
    Word w;
    for (Sym s : b) w.push_back(static_cast<CodePoint>(s));
    return w;
}

Template to_template(const Buf& b) {
    Template t;
    for (Sym s : b) t.push_back(s == kOpaque ? OutSym{true, 0} : OutSym{false, static_cast<CodePoint>(s)});
    return t;
}

Transducer build(const ReplaceSpec& spec) {
    for (const Word& p : spec.patterns) {
        if (p.empty()) throw PreconditionViolation("replacement pattern must be non-empty");
    }
    std::set<CodePoint> chars;
    for (const Word& p : spec.patterns) chars.insert(p.begin(), p.end());
    // complement of the pattern characters as intervals
    std::vector<std::pair<CodePoint, CodePoint>> gaps;
    std::uint64_t next = 0;
    for (CodePoint c : chars) {
        if (c > next) gaps.emplace_back(static_cast<CodePoint>(next), c - 1);
        next = static_cast<std::uint64_t>(c) + 1;
    }
    if (next <= kMaxCodePoint) gaps.emplace_back(static_cast<CodePoint>(next), kMaxCodePoint);

    Transducer t;
    std::map<Buf, State> ids;
    std::deque<Buf> work;
    std::optional<State> done;
    auto state_of = [&](const Buf& b) {
        auto it = ids.find(b);
        if (it != ids.end()) return it->second;
        State s = t.add_state(to_word(process(spec, b, true).emitted));
        ids.emplace(b, s);
        work.push_back(b);
        return s;
    };
    auto done_state = [&] {
        if (!done) {
            done = t.add_state();
            t.add_edge(*done, 0, kMaxCodePoint, Template{OutSym{true, 0}}, *done);
        }
        return *done;
    };
    state_of(Buf{});
    while (!work.empty()) {
        Buf u = work.front();
        work.pop_front();
        State from = ids.at(u);
        auto target = [&](const Step& st) { return st.done ? done_state() : state_of(st.buffer); };
        for (CodePoint c : chars) {
            Buf b = u;
            b.push_back(c);
            Step st = process(spec, b, false);
            State to = target(st);
            t.add_edge(from, c, c, to_template(st.emitted), to);
        }
        if (!gaps.empty()) {
            Buf b = u;
            b.push_back(kOpaque);
            Step st = process(spec, b, false);
            State to = target(st);
            for (auto [lo, hi] : gaps) t.add_edge(from, lo, hi, to_template(st.emitted), to);
        }
    }
    return t;
}

// States reached from `from` in `a` after reading the literal word.
std::vector<State> read_word(const Automaton& a, std::vector<State> from, const Template& out, std::size_t begin,
                             std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
        const CodePoint c = out[k].c;
        std::vector<State> next;
        for (State s : from) {
            for (const auto& e : a.edges(s)) {
                if (e.lo <= c && c <= e.hi) next.push_back(e.to);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        from = std::move(next);
        if (from.empty()) break;
    }
    return from;
}

std::size_t copy_index(const Template& out) {
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k].copy) return k;
    }
    return out.size();
}

}  // namespace

Transducer build_replace_all(const Word& pattern, const Word& replacement) {
    return build(ReplaceSpec{{pattern}, replacement, true});
}

Transducer build_replace_first(const Word& pattern, const Word& replacement) {
    return build(ReplaceSpec{{pattern}, replacement, false});
}

Transducer build_replace_set(const std::vector<Word>& patterns, const Word& replacement, bool all) {
    return build(ReplaceSpec{patterns, replacement, all});
}

Automaton pre_image(const Transducer& t, const Automaton& out, std::size_t state_cap) {
    Automaton res;
    std::map<std::pair<State, State>, State> ids;
    std::deque<std::pair<State, State>> work;
    auto get = [&](State ts, State as) {
        auto key = std::make_pair(ts, as);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        State s = res.add_state();
        if (s >= state_cap) throw StateBlowup(state_cap);
        ids.emplace(key, s);
        work.push_back(key);
        const Word& fin = t.final_output(ts);
        for (State q : read_word(out, {as}, literal(fin), 0, fin.size())) {
            if (out.is_accepting(q)) {
                res.set_accepting(s);
                break;
            }
        }
        return s;
    };
    for (State a0 : out.initial()) res.add_initial(get(t.initial(), a0));
    while (!work.empty()) {
        auto [ts, as] = work.front();
        work.pop_front();
        State from = ids.at({ts, as});
        for (const TEdge& e : t.edges(ts)) {
            const std::size_t k = copy_index(e.out);
            std::vector<State> before = read_word(out, {as}, e.out, 0, k);
            if (k == e.out.size()) {
                for (State q : before) res.add_edge(from, e.lo, e.hi, get(e.to, q));
                continue;
            }
            for (State q : before) {
                for (const auto& ae : out.edges(q)) {
                    CodePoint lo = std::max(e.lo, ae.lo);
                    CodePoint hi = std::min(e.hi, ae.hi);
                    if (lo > hi) continue;
                    for (State r : read_word(out, {ae.to}, e.out, k + 1, e.out.size())) {
                        res.add_edge(from, lo, hi, get(e.to, r));
                    }
                }
            }
        }
    }
    return automata::trim(res);
}

Automaton post_image(const Transducer& t, const Automaton& inp, std::size_t state_cap) {
    automata::NfaBuilder nb;
    std::map<std::pair<State, State>, State> ids;
    std::deque<std::pair<State, State>> work;
    const State sink = nb.add_state();
    nb.set_accepting(sink);
    auto check = [&] {
        if (nb.num_states() > state_cap) throw StateBlowup(state_cap);
    };
    // chain emitting the literal symbols out[begin, end) from `from`, returns the last state
    auto chain = [&](State from, const Template& out, std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            State s = nb.add_state();
            nb.add_edge(from, out[k].c, out[k].c, s);
            from = s;
        }
        check();
        return from;
    };
    auto get = [&](State ts, State as) {
        auto key = std::make_pair(ts, as);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        State s = nb.add_state();
        check();
        ids.emplace(key, s);
        work.push_back(key);
        if (inp.is_accepting(as)) {
            const Word& fin = t.final_output(ts);
            State last = chain(s, literal(fin), 0, fin.size());
            nb.add_epsilon(last, sink);
        }
        return s;
    };
    for (State a0 : inp.initial()) nb.add_initial(get(t.initial(), a0));
    while (!work.empty()) {
        auto [ts, as] = work.front();
        work.pop_front();
        State from = ids.at({ts, as});
        for (const TEdge& e : t.edges(ts)) {
            const std::size_t k = copy_index(e.out);
            for (const auto& ae : inp.edges(as)) {
                CodePoint lo = std::max(e.lo, ae.lo);
                CodePoint hi = std::min(e.hi, ae.hi);
                if (lo > hi) continue;
                State target = get(e.to, ae.to);
                if (k == e.out.size()) {
                    State last = chain(from, e.out, 0, e.out.size());
                    nb.add_epsilon(last, target);
                } else {
                    State mid = chain(from, e.out, 0, k);
                    State after = nb.add_state();
                    nb.add_edge(mid, lo, hi, after);
                    State last = chain(after, e.out, k + 1, e.out.size());
                    nb.add_epsilon(last, target);
                }
            }
        }
    }
    return nb.build();
}

AutomatonRef pre_image(AutomatonDb& db, const Transducer& t, AutomatonRef out) {
    return db.intern(pre_image(t, *db.get(out), db.state_cap()));
}

AutomatonRef post_image(AutomatonDb& db, const Transducer& t, AutomatonRef inp) {
    return db.intern(post_image(t, *db.get(inp), db.state_cap()));
}

}  // namespace strsolve::xform
