#include <algorithm>

#include "strsolve/engine/engine.hpp"
#include "strsolve/error.hpp"
#include "strsolve/ir/normalize.hpp"
#include "strsolve/rewriter/rewriter.hpp"

namespace strsolve::engine {

using ir::Fn;
using ir::InRe;
using ir::Pred;
using ir::PredKind;
using ir::VarSort;

namespace {

// Exact window checks are only attempted for windows up to this length.
constexpr std::int64_t kWindowCheckLimit = 256;
// Length-abstraction windows never get more explicit states than this.
constexpr std::int64_t kWindowLimit = 1000;

struct Snapshot {
    std::size_t atoms, lins, ors, strings, alias, langs;
    lia::IntervalStore ints;

    bool operator==(const Snapshot&) const = default;
};

Snapshot snapshot(const Goal& g) {
    std::size_t langs = 0;
    for (const auto& [x, v] : g.langs) langs += v.size() * 1'000'003u + (v.empty() ? 0 : v.back().id);
    return {g.atoms.size(), g.lins.size(), g.ors.size(), g.strings.size(), g.alias.size(), langs, g.ints};
}

bool is_decimal(const Word& w) {
    if (w.empty()) return false;
    if (w.size() > 1 && w[0] == U'0') return false;
    return std::all_of(w.begin(), w.end(), [](char32_t c) { return c >= U'0' && c <= U'9'; });
}

// Interval of Σ c·v + k under the store; nullopt ends are infinite.
lia::Interval range_of(const Lin& l, const lia::IntervalStore& s) {
    __int128 lo = l.constant, hi = l.constant;
    bool lo_inf = false, hi_inf = false;
    for (auto [c, v] : l.terms) {
        lia::Interval iv = s.get(v);
        auto lo_end = c > 0 ? iv.lo : iv.hi;
        auto hi_end = c > 0 ? iv.hi : iv.lo;
        if (lo_end) lo += __int128{c} * *lo_end; else lo_inf = true;
        if (hi_end) hi += __int128{c} * *hi_end; else hi_inf = true;
    }
    auto clamp = [](__int128 v) {
        return static_cast<std::int64_t>(std::clamp<__int128>(v, -lia::kBoundLimit, lia::kBoundLimit));
    };
    lia::Interval r;
    if (!lo_inf) r.lo = clamp(lo);
    if (!hi_inf) r.hi = clamp(hi);
    return r;
}

}  // namespace

bool Prover::propagate_ints(Goal& g) {
    if (g.closed) return false;
    auto res = lia::propagate(g.lins, g.ints);
    if (!res.consistent) return close(g, "lia");
    std::vector<VarId> empties;
    for (const auto& [n, iv] : g.ints.entries()) {
        if (iv.lo && iv.hi && *iv.lo == 0 && *iv.hi == 0) {
            if (auto x = in_.length_of(n); x && !g.strings.count(rep(g, *x))) empties.push_back(*x);
        }
    }
    for (VarId x : empties) {
        if (!bind_string(g, x, Word{})) return false;
    }
    return true;
}

bool Prover::evaluate_atoms(Goal& g, bool& changed) {
    auto lookup = [this, &g](VarId x) { return value_of(g, x); };
    auto str = [&](VarId x) -> std::optional<Word> {
        auto it = g.strings.find(rep(g, x));
        if (it == g.strings.end()) return std::nullopt;
        return it->second;
    };
    auto num = [&](VarId x) { return lia::concrete_value(x, g.ints); };

    for (std::size_t i = 0; i < g.atoms.size() && !g.closed;) {
        const Literal l = g.atoms[i];
        auto drop = [&] {
            g.atoms.erase(g.atoms.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
        };
        if (auto full = rewriter::eval_literal(l, lookup, db_)) {
            if (!*full) return close(g, "eval " + ir::to_string(l, in_));
            trace(g, Rule::Eval, ir::to_string(l, in_), 0);
            drop();
            continue;
        }
        if (const auto* fe = std::get_if<FunEq>(&l.atom)) {
            if (auto v = rewriter::eval_fun(*fe, lookup, db_)) {
                trace(g, Rule::Eval, describe(*fe), 0);
                FunEq e = *fe;
                drop();
                bool ok = is_string(*v) ? bind_string(g, e.out, as_string(*v)) : bind_int(g, e.out, as_int(*v));
                if (!ok) return false;
                continue;
            }
            const FunEq e = *fe;
            switch (e.fn) {
                case Fn::Concat: {
                    auto o = str(e.out), a = str(e.args[0]), b = str(e.args[1]);
                    if ((a && a->empty()) || (b && b->empty())) {
                        drop();
                        if (!merge(g, e.out, a && a->empty() ? e.args[1] : e.args[0])) return false;
                        continue;
                    }
                    if (o && (a || b)) {
                        drop();
                        if (a) {
                            if (a->size() > o->size() || o->compare(0, a->size(), *a) != 0) return close(g, "prefix mismatch");
                            if (!bind_string(g, e.args[1], o->substr(a->size()))) return false;
                        } else {
                            if (b->size() > o->size() || o->compare(o->size() - b->size(), b->size(), *b) != 0) {
                                return close(g, "suffix mismatch");
                            }
                            if (!bind_string(g, e.args[0], o->substr(0, o->size() - b->size()))) return false;
                        }
                        continue;
                    }
                    break;
                }
                case Fn::Reverse:
                    if (auto o = str(e.out)) {
                        drop();
                        if (!bind_string(g, e.args[0], Word(o->rbegin(), o->rend()))) return false;
                        continue;
                    }
                    break;
                case Fn::FromInt:
                    if (auto o = str(e.out)) {
                        drop();
                        if (o->empty()) {
                            g.lins.push_back(ir::lin_le({{1, e.args[0]}}, 1));  // n <= -1
                            continue;
                        }
                        if (!is_decimal(*o) || o->size() > 18) return close(g, "from_int image");
                        std::int64_t n = 0;
                        for (char32_t c : *o) n = n * 10 + (c - U'0');
                        if (!bind_int(g, e.args[0], n)) return false;
                        continue;
                    }
                    break;
                case Fn::ToInt:
                    if (auto n = num(e.out); n && *n < INT64_MAX) {
                        drop();
                        AutomatonRef digits = db_.plus(db_.char_range(U'0', U'9'));
                        AutomatonRef lang;
                        if (*n < -1) return close(g, "to_int range");
                        if (*n == -1) {
                            lang = db_.complement(digits);
                        } else {
                            std::string dec = std::to_string(*n);
                            lang = db_.concat(db_.star(db_.word(U"0")), db_.word(Word(dec.begin(), dec.end())));
                        }
                        if (!add_lang(g, e.args[0], lang)) return false;
                        continue;
                    }
                    break;
                default: break;
            }
        } else if (const auto* p = std::get_if<Pred>(&l.atom)) {
            if (p->kind == PredKind::StrDiseq) {
                if (rep(g, p->a) == rep(g, p->b)) return close(g, "disequality");
                auto a = str(p->a), b = str(p->b);
                if (a || b) {
                    Pred q = *p;
                    drop();
                    if (!add_lang(g, a ? q.b : q.a, db_.excluding_word(a ? *a : *b))) return false;
                    continue;
                }
            } else if (l.negated && (str(p->a) || str(p->b) || rep(g, p->a) == rep(g, p->b))) {
                rewriter::RewriteContext ctx{in_, db_, lookup};
                Literal m = l;
                m.atom = Pred{p->kind, rep(g, p->a), rep(g, p->b)};
                if (auto f = rewriter::simplify_prefix_suffix_contains(m, ctx)) {
                    drop();
                    if (!add_formula(g, *f)) return false;
                    continue;
                }
            }
        }
        ++i;
    }
    return !g.closed;
}

void Prover::rule_intersect_eager(Goal& g, VarId x) {
    if (!cfg_.eager) return;
    auto it = g.langs.find(rep(g, x));
    if (it == g.langs.end() || it->second.size() < 2) return;
    try {
        AutomatonRef acc = it->second[0];
        for (std::size_t i = 1; i < it->second.size(); ++i) acc = db_.intersect(acc, it->second[i]);
        trace(g, Rule::Intersect, in_.name(it->first), 0);
        it->second = {acc};
    } catch (const StateBlowup&) {
    }
}

bool Prover::rule_close(Goal& g, VarId x) {
    if (g.closed) return false;
    x = rep(g, x);
    if (g.strings.count(x)) return true;
    bool exact = true;
    AutomatonRef a = lang_of(g, x, &exact);
    if (db_.is_empty(a).empty) return close(g, in_.name(x));
    if (!exact) {
        for (AutomatonRef b : g.langs[x]) {
            if (db_.is_empty(b).empty) return close(g, in_.name(x));
        }
    }
    lia::Interval iv = g.ints.get(in_.length_var(x));
    if (iv.hi && *iv.hi < 0) return close(g, "|" + in_.name(x) + "| < 0");
    if (iv.hi && *iv.hi <= kWindowCheckLimit) {
        try {
            auto lo = static_cast<std::uint64_t>(std::max<std::int64_t>(0, iv.lo.value_or(0)));
            AutomatonRef w = db_.intersect(a, db_.length_window(lo, static_cast<std::uint64_t>(*iv.hi)));
            if (db_.is_empty(w).empty) return close(g, in_.name(x) + " length window");
        } catch (const StateBlowup&) {
        }
    }
    return true;
}

bool Prover::check_langs(Goal& g, bool& changed) {
    while (!g.dirty.empty() && !g.closed) {
        VarId x = rep(g, *g.dirty.begin());
        g.dirty.erase(g.dirty.begin());
        if (g.strings.count(x) || !g.langs.count(x)) continue;
        rule_intersect_eager(g, x);
        if (!rule_close(g, x)) return false;
        bool exact = true;
        AutomatonRef a = lang_of(g, x, &exact);
        if (!exact) continue;
        if (auto w = db_.single_word(a)) {
            changed = true;
            if (!bind_string(g, x, *w)) return false;
            continue;
        }
        auto b = db_.length_bounds(a);
        VarId n = in_.length_var(x);
        if (g.ints.raise_lo(n, static_cast<std::int64_t>(std::min<std::uint64_t>(b.min, lia::kBoundLimit)))) changed = true;
        if (b.max && g.ints.lower_hi(n, static_cast<std::int64_t>(std::min<std::uint64_t>(*b.max, lia::kBoundLimit)))) {
            changed = true;
        }
        if (!g.ints.consistent()) return close(g, "|" + in_.name(x) + "|");
    }
    return !g.closed;
}

bool Prover::rule_length_abstraction(Goal& g, VarId x) {
    x = rep(g, x);
    if (g.strings.count(x) || !g.langs.count(x)) return true;
    lia::Interval iv = g.ints.get(in_.length_var(x));
    std::int64_t lo = std::max<std::int64_t>(0, iv.lo.value_or(0));
    std::optional<std::uint64_t> hi;  // unsigned: |x| >= 0 once lo is clamped
    if (iv.hi && *iv.hi <= kWindowLimit) hi = static_cast<std::uint64_t>(std::max<std::int64_t>(0, *iv.hi));
    if (lo > kWindowLimit) lo = 0;
    if (lo == 0 && !hi) return true;
    bool exact = true;
    auto b = db_.length_bounds(lang_of(g, x, &exact));
    bool tighter = static_cast<std::uint64_t>(lo) > b.min || (hi && (!b.max || *hi < *b.max));
    if (!tighter) return true;
    std::string key = "len:" + std::to_string(x);
    std::string fp = std::to_string(lo) + ":" + (hi ? std::to_string(*hi) : "inf");
    if (g.applied[key] == fp) return true;
    g.applied[key] = fp;
    trace(g, Rule::LengthAbstraction, in_.name(x) + " " + fp, 0);
    return add_lang(g, x, db_.length_window(static_cast<std::uint64_t>(lo), hi));
}

bool Prover::rule_break_cycles(Goal& g) {
    std::vector<ir::Atom> concats;
    for (const Literal& l : g.atoms) {
        if (const auto* fe = std::get_if<FunEq>(&l.atom); fe && fe->fn == Fn::Concat) concats.push_back(*fe);
    }
    if (concats.empty()) return true;
    ir::DependencyGraph dg = ir::dependency_graph(concats);
    for (const auto& scc : dg.cyclic_sccs()) {
        auto inside = [&](VarId v) { return std::binary_search(scc.begin(), scc.end(), v); };
        for (const ir::Atom& a : concats) {
            const auto& fe = std::get<FunEq>(a);
            if (!inside(fe.out)) continue;
            // along a cycle lengths cannot grow, so the side argument is empty
            for (int k = 0; k < 2; ++k) {
                VarId on = fe.args[k], off = fe.args[1 - k];
                if (!inside(on)) continue;
                auto it = g.strings.find(rep(g, off));
                if (it != g.strings.end() && it->second.empty()) continue;
                trace(g, Rule::BreakCycles, in_.name(off) + "=\"\"", 0);
                if (!bind_string(g, off, Word{})) return false;
            }
        }
    }
    return true;
}

bool Prover::rule_eq_decompose(Goal& g) {
    auto len = [&](VarId x) { return lia::concrete_value(in_.length_var(x), g.ints); };
    std::map<VarId, std::vector<FunEq>> by_out;
    for (const Literal& l : g.atoms) {
        const auto* fe = std::get_if<FunEq>(&l.atom);
        if (!fe || fe->fn != Fn::Concat) continue;
        by_out[fe->out].push_back(*fe);
        // ground result with a known split point
        auto it = g.strings.find(fe->out);
        if (it == g.strings.end()) continue;
        const Word w = it->second;
        auto n1 = len(fe->args[0]);
        auto n2 = len(fe->args[1]);
        if (!n1 && n2) n1 = static_cast<std::int64_t>(w.size()) - *n2;
        if (!n1) continue;
        if (*n1 < 0 || *n1 > static_cast<std::int64_t>(w.size())) return close(g, "split beyond " + to_display(w));
        const FunEq e = *fe;
        trace(g, Rule::EqDecompose, describe(e), 0);
        auto k = static_cast<std::size_t>(*n1);
        if (!bind_string(g, e.args[0], w.substr(0, k)) || !bind_string(g, e.args[1], w.substr(k))) return false;
        return true;
    }
    for (const auto& [out, eqs] : by_out) {
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            for (std::size_t j = i + 1; j < eqs.size(); ++j) {
                const FunEq &a = eqs[i], &b = eqs[j];
                auto la = len(a.args[0]), lb = len(b.args[0]);
                auto ra = len(a.args[1]), rb = len(b.args[1]);
                bool left = a.args[0] == b.args[0] || (la && lb && *la == *lb);
                bool right = a.args[1] == b.args[1] || (ra && rb && *ra == *rb);
                if (!left && !right) continue;
                trace(g, Rule::EqDecompose, describe(a) + " & " + describe(b), 0);
                return merge(g, a.args[0], b.args[0]) && merge(g, a.args[1], b.args[1]);
            }
        }
    }
    // congruence: same function of the same arguments
    std::map<std::tuple<Fn, std::vector<VarId>, std::optional<AutomatonRef>>, VarId> seen;
    for (std::size_t i = 0; i < g.atoms.size(); ++i) {
        const auto* fe = std::get_if<FunEq>(&g.atoms[i].atom);
        if (!fe) continue;
        auto [it, fresh] = seen.emplace(std::make_tuple(fe->fn, fe->args, fe->lang), fe->out);
        if (fresh || it->second == fe->out) continue;
        VarId other = it->second, out = fe->out;
        trace(g, Rule::EqDecompose, describe(*fe), 0);
        g.atoms.erase(g.atoms.begin() + static_cast<std::ptrdiff_t>(i));
        if (in_.sort(out) == VarSort::String) return merge(g, other, out);
        g.lins.push_back(ir::lin_eq({{1, other}, {-1, out}}, 0));
        return true;
    }
    return true;
}

bool Prover::simplify_ors(Goal& g, bool& changed) {
    auto lookup = [this, &g](VarId x) { return value_of(g, x); };
    // definitely false (0), definitely true (1), unknown (-1)
    std::function<int(const Formula&)> judge = [&](const Formula& f) -> int {
        switch (f.kind) {
            case Formula::Kind::True: return 1;
            case Formula::Kind::False: return 0;
            case Formula::Kind::And: {
                int r = 1;
                for (const Formula& c : f.children) {
                    int v = judge(c);
                    if (v == 0) return 0;
                    if (v < 0) r = -1;
                }
                return r;
            }
            case Formula::Kind::Or: {
                int r = 0;
                for (const Formula& c : f.children) {
                    int v = judge(c);
                    if (v == 1) return 1;
                    if (v < 0) r = -1;
                }
                return r;
            }
            case Formula::Kind::Lit: break;
        }
        const Literal& l = f.lit;
        if (auto v = rewriter::eval_literal(l, lookup, db_)) return *v ? 1 : 0;
        if (const auto* lin = std::get_if<Lin>(&l.atom)) {
            lia::Interval r = range_of(*lin, g.ints);
            bool le_true = r.hi && *r.hi <= 0, le_false = r.lo && *r.lo > 0;
            bool eq_true = r.lo && r.hi && *r.lo == 0 && *r.hi == 0;
            bool eq_false = le_false || (r.hi && *r.hi < 0);
            bool t = lin->rel == ir::Rel::Le ? le_true : eq_true;
            bool fl = lin->rel == ir::Rel::Le ? le_false : eq_false;
            if (t) return l.negated ? 0 : 1;
            if (fl) return l.negated ? 1 : 0;
            return -1;
        }
        if (const auto* m = std::get_if<InRe>(&l.atom); m && !l.negated) {
            lia::Interval iv = g.ints.get(in_.length_var(m->x));
            auto b = db_.length_bounds(m->lang);
            if (iv.hi && *iv.hi < static_cast<std::int64_t>(std::min<std::uint64_t>(b.min, lia::kBoundLimit))) return 0;
            if (b.max && iv.lo && *iv.lo > static_cast<std::int64_t>(std::min<std::uint64_t>(*b.max, lia::kBoundLimit))) return 0;
        }
        if (const auto* p = std::get_if<Pred>(&l.atom); p && p->kind == PredKind::StrEq && rep(g, p->a) == rep(g, p->b)) {
            return l.negated ? 0 : 1;
        }
        return -1;
    };

    for (std::size_t i = 0; i < g.ors.size() && !g.closed;) {
        std::vector<Formula> live;
        bool sat = false;
        for (const Formula& d : g.ors[i].children) {
            int v = judge(d);
            if (v == 1) {
                sat = true;
                break;
            }
            if (v < 0) live.push_back(d);
        }
        if (!sat && live.size() == g.ors[i].children.size()) {
            ++i;
            continue;
        }
        changed = true;
        g.ors.erase(g.ors.begin() + static_cast<std::ptrdiff_t>(i));
        if (sat) continue;
        if (live.empty()) return close(g, "disjunction");
        if (live.size() == 1) {
            if (!add_formula(g, live[0])) return false;
        } else {
            g.ors.push_back(Formula::disj(std::move(live)));
        }
    }
    return !g.closed;
}

bool Prover::inprocess(Goal& g) {
    for (int round = 0; !g.closed; ++round) {
        Snapshot before = snapshot(g);
        bool changed = false;
        if (!propagate_ints(g)) return false;
        if (!evaluate_atoms(g, changed)) return false;
        if (!check_langs(g, changed)) return false;
        if (!propagate_ints(g)) return false;
        if (!rule_break_cycles(g)) return false;
        if (!rule_eq_decompose(g)) return false;
        for (const auto& [x, _] : std::map<VarId, std::vector<AutomatonRef>>(g.langs)) {
            if (!rule_length_abstraction(g, x)) return false;
        }
        if (!check_langs(g, changed)) return false;
        if (!simplify_ors(g, changed)) return false;
        if (!changed && snapshot(g) == before) break;
    }
    return !g.closed;
}

}  // namespace strsolve::engine
