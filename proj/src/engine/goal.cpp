#include <algorithm>

#include "strsolve/engine/engine.hpp"
#include "strsolve/error.hpp"
#include "strsolve/rewriter/rewriter.hpp"

namespace strsolve::engine {

using ir::Fn;
using ir::InRe;
using ir::Pred;
using ir::PredKind;
using ir::VarSort;

const char* rule_tag(Rule r) {
    switch (r) {
        case Rule::Close: return "close";
        case Rule::Intersect: return "intersect";
        case Rule::Forward: return "fwd";
        case Rule::Backward: return "bwd";
        case Rule::BreakCycles: return "break-cycles";
        case Rule::EqDecompose: return "eq-decompose";
        case Rule::LengthAbstraction: return "len-abs";
        case Rule::Nielsen: return "nielsen";
        case Rule::StrInt: return "str-int";
        case Rule::IndexOf: return "indexof";
        case Rule::Cut: return "cut";
        case Rule::Subdivide: return "subdivide";
        case Rule::Split: return "split";
        case Rule::Eval: return "eval";
        case Rule::Subst: return "subst";
        case Rule::Verify: return "verify";
    }
    return "?";
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Sat: return "sat";
        case Status::Unsat: return "unsat";
        case Status::Unknown: return "unknown";
    }
    return "?";
}

void Prover::trace(const Goal& g, Rule r, const std::string& target, std::int64_t priority) {
    if (cfg_.trace_level <= 0 || !cfg_.trace_sink) return;
    cfg_.trace_sink("rule=" + std::string(rule_tag(r)) + " target=" + target + " priority=" + std::to_string(priority) +
                    " branch=" + g.id);
}

std::string Prover::describe(const FunEq& eq) const { return ir::to_string(ir::Atom{eq}, in_); }

bool Prover::close(Goal& g, const std::string& why) {
    if (!g.closed) trace(g, Rule::Close, why, 0);
    g.closed = true;
    return false;
}

VarId Prover::rep(const Goal& g, VarId x) const {
    for (auto it = g.alias.find(x); it != g.alias.end(); it = g.alias.find(x)) x = it->second;
    return x;
}

std::optional<Value> Prover::value_of(const Goal& g, VarId x) const {
    if (in_.sort(x) == VarSort::String) {
        auto it = g.strings.find(rep(g, x));
        if (it != g.strings.end()) return Value{it->second};
        return std::nullopt;
    }
    if (auto v = lia::concrete_value(x, g.ints)) return Value{*v};
    return std::nullopt;
}

AutomatonRef Prover::lang_of(Goal& g, VarId x, bool* exact) {
    if (exact) *exact = true;
    x = rep(g, x);
    if (auto it = g.strings.find(x); it != g.strings.end()) return db_.word(it->second);
    auto it = g.langs.find(x);
    if (it == g.langs.end() || it->second.empty()) return db_.universal();
    const auto& v = it->second;
    if (v.size() == 1) return v[0];
    try {
        AutomatonRef acc = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) acc = db_.intersect(acc, v[i]);
        return acc;
    } catch (const StateBlowup&) {
        if (exact) *exact = false;
        return *std::min_element(v.begin(), v.end(),
                                 [&](AutomatonRef a, AutomatonRef b) { return db_.num_states(a) < db_.num_states(b); });
    }
}

bool Prover::bind_string(Goal& g, VarId x, const Word& w) {
    if (g.closed) return false;
    x = rep(g, x);
    if (auto it = g.strings.find(x); it != g.strings.end()) {
        return it->second == w || close(g, in_.name(x) + " bound twice");
    }
    if (auto it = g.langs.find(x); it != g.langs.end()) {
        for (AutomatonRef a : it->second) {
            if (!db_.accepts(a, w)) return close(g, in_.name(x) + " rejects " + to_display(w));
        }
        g.langs.erase(it);
    }
    g.strings[x] = w;
    g.dirty.erase(x);
    return bind_int(g, in_.length_var(x), static_cast<std::int64_t>(w.size()));
}

bool Prover::bind_int(Goal& g, VarId n, std::int64_t v) {
    if (g.closed) return false;
    lia::Interval iv = g.ints.get(n);
    if (!iv.contains(v)) return close(g, in_.name(n) + " outside " + lia::to_string(iv));
    g.ints.set(n, {v, v});
    return true;
}

bool Prover::add_lang(Goal& g, VarId x, AutomatonRef a) {
    if (g.closed) return false;
    x = rep(g, x);
    if (auto it = g.strings.find(x); it != g.strings.end()) {
        return db_.accepts(a, it->second) || close(g, in_.name(x) + " rejects its value");
    }
    if (a == db_.universal()) return true;
    auto& v = g.langs[x];
    if (std::find(v.begin(), v.end(), a) != v.end()) return true;
    v.push_back(a);
    g.dirty.insert(x);
    return true;
}

bool Prover::merge(Goal& g, VarId a, VarId b) {
    if (g.closed) return false;
    a = rep(g, a);
    b = rep(g, b);
    if (a == b) return true;
    bool a_bound = g.strings.count(a) > 0;
    bool b_bound = g.strings.count(b) > 0;
    VarId keep = (a_bound || (!b_bound && a < b)) ? a : b;
    VarId drop = keep == a ? b : a;
    trace(g, Rule::Subst, in_.name(drop) + "->" + in_.name(keep), 0);
    g.alias[drop] = keep;
    std::vector<AutomatonRef> moved;
    if (auto it = g.langs.find(drop); it != g.langs.end()) {
        moved = std::move(it->second);
        g.langs.erase(it);
    }
    std::optional<Word> value;
    if (auto it = g.strings.find(drop); it != g.strings.end()) {
        value = it->second;
        g.strings.erase(it);
    }
    std::unordered_map<VarId, VarId> m{{drop, keep}};
    for (Literal& l : g.atoms) l.atom = ir::rename(l.atom, m);
    std::sort(g.atoms.begin(), g.atoms.end());
    g.atoms.erase(std::unique(g.atoms.begin(), g.atoms.end()), g.atoms.end());
    g.lins.push_back(ir::lin_eq({{1, in_.length_var(keep)}, {-1, in_.length_var(drop)}}, 0));
    for (AutomatonRef r : moved) {
        if (!add_lang(g, keep, r)) return false;
    }
    if (value && !bind_string(g, keep, *value)) return false;
    return true;
}

bool Prover::add_literal(Goal& g, Literal l) {
    if (g.closed) return false;
    std::unordered_map<VarId, VarId> m;
    for (VarId v : ir::vars_of(l.atom)) {
        if (in_.sort(v) == VarSort::String) {
            VarId r = rep(g, v);
            if (r != v) m[v] = r;
        }
    }
    if (!m.empty()) l.atom = ir::rename(l.atom, m);

    if (auto* p = std::get_if<Pred>(&l.atom)) {
        bool eq = p->kind == PredKind::StrEq, diseq = p->kind == PredKind::StrDiseq;
        if ((eq && !l.negated) || (diseq && l.negated)) return merge(g, p->a, p->b);
        if (eq || diseq) l = Literal{Pred{PredKind::StrDiseq, p->a, p->b}, false};
    } else if (auto* m2 = std::get_if<InRe>(&l.atom)) {
        return add_lang(g, m2->x, l.negated ? db_.complement(m2->lang) : m2->lang);
    } else if (auto* lin = std::get_if<Lin>(&l.atom)) {
        if (!l.negated) {
            if (std::find(g.lins.begin(), g.lins.end(), *lin) == g.lins.end()) g.lins.push_back(*lin);
            return true;
        }
        // not (e <= 0)  ==  -e + 1 <= 0
        std::vector<std::pair<std::int64_t, VarId>> neg;
        for (auto [c, v] : lin->terms) neg.emplace_back(-c, v);
        if (lin->rel == ir::Rel::Le) {
            g.lins.push_back(ir::lin_le(neg, -lin->constant + 1));
            return true;
        }
        g.ors.push_back(Formula::disj({Formula::atom(ir::lin_le(lin->terms, lin->constant + 1)),
                                       Formula::atom(ir::lin_le(neg, -lin->constant + 1))}));
        return true;
    } else if (auto* fe = std::get_if<FunEq>(&l.atom); fe && !l.negated) {
        for (Lin& f : rewriter::length_facts(*fe, in_)) {
            if (std::find(g.lins.begin(), g.lins.end(), f) == g.lins.end()) g.lins.push_back(std::move(f));
        }
        if (fe->fn == Fn::Len) return true;  // fully described by its length fact
    }
    if (std::find(g.atoms.begin(), g.atoms.end(), l) == g.atoms.end()) g.atoms.push_back(std::move(l));
    return true;
}

bool Prover::add_formula(Goal& g, const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::True: return !g.closed;
        case Formula::Kind::False: return close(g, "false");
        case Formula::Kind::Lit: return add_literal(g, f.lit);
        case Formula::Kind::And:
            for (const Formula& c : f.children) {
                if (!add_formula(g, c)) return false;
            }
            return true;
        case Formula::Kind::Or: g.ors.push_back(f); return true;
    }
    return true;
}

Goal Prover::make_goal(const Formula& preprocessed) {
    Goal g;
    add_formula(g, preprocessed);
    return g;
}

std::vector<VarId> Prover::goal_vars(const Goal& g) const {
    std::vector<VarId> out;
    for (const Literal& l : g.atoms) {
        auto vs = ir::vars_of(l.atom);
        out.insert(out.end(), vs.begin(), vs.end());
    }
    for (const auto& [x, _] : g.langs) out.push_back(x);
    for (const Lin& l : g.lins) {
        for (auto [c, v] : l.terms) out.push_back(v);
    }
    for (const Formula& f : g.ors) ir::collect_vars(f, out);
    for (VarId& v : out) {
        if (in_.sort(v) == VarSort::String) v = rep(g, v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace strsolve::engine
