#include "strsolve/rewriter/rewriter.hpp"

#include "strsolve/error.hpp"

namespace strsolve::rewriter {

using ir::Fn;
using ir::InRe;
using ir::Pred;
using ir::PredKind;
using ir::VarSort;

std::optional<Word> RewriteContext::concrete_string(VarId x) const {
    if (auto w = in.const_string(x)) return w;
    if (groundings) {
        if (auto v = groundings(x); v && is_string(*v)) return as_string(*v);
    }
    return std::nullopt;
}

std::optional<std::int64_t> RewriteContext::concrete_int(VarId x) const {
    if (auto n = in.const_int(x)) return n;
    if (groundings) {
        if (auto v = groundings(x); v && !is_string(*v)) return as_int(*v);
    }
    return std::nullopt;
}

namespace {

Formula lit(Atom a) { return Formula::atom(std::move(a)); }

Formula member(VarId x, AutomatonRef lang, bool negated, AutomatonDb& db) {
    return lit(InRe{x, negated ? db.complement(lang) : lang});
}

// Chain automaton of w with chosen initial/accepting positions.
AutomatonRef factor_language(AutomatonDb& db, const Word& w, bool all_initial, bool all_accepting) {
    automata::Automaton a(w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) a.add_edge(static_cast<automata::State>(i), w[i], w[i], static_cast<automata::State>(i + 1));
    for (std::size_t i = 0; i <= w.size(); ++i) {
        if (i == 0 || all_initial) a.add_initial(static_cast<automata::State>(i));
        if (i == w.size() || all_accepting) a.set_accepting(static_cast<automata::State>(i));
    }
    return db.intern(a);
}

// Σ terms + c as a small affine helper for building Lin atoms.
struct Aff {
    std::vector<std::pair<std::int64_t, VarId>> t;
    std::int64_t c = 0;
};

Aff var(VarId x) { return {{{1, x}}, 0}; }
Aff cst(std::int64_t c) { return {{}, c}; }
Aff operator+(Aff a, const Aff& b) {
    a.t.insert(a.t.end(), b.t.begin(), b.t.end());
    a.c += b.c;
    return a;
}
Aff operator-(Aff a, const Aff& b) {
    for (auto [k, x] : b.t) a.t.emplace_back(-k, x);
    a.c -= b.c;
    return a;
}
// a <= b
Formula le(const Aff& a, const Aff& b) {
    Aff d = a - b;
    return lit(ir::lin_le(d.t, d.c));
}
Formula eq(const Aff& a, const Aff& b) {
    Aff d = a - b;
    return lit(ir::lin_eq(d.t, d.c));
}

Formula concat(VarId out, VarId a, VarId b) { return lit(FunEq{out, Fn::Concat, {a, b}, std::nullopt}); }

// Shared encoding of r = substr(s, i, n) with n an affine term.
Formula substr_cases(VarId r, VarId s, VarId i, const Aff& n, RewriteContext& ctx) {
    Interner& in = ctx.in;
    const Aff Ls = var(in.length_var(s));
    const Aff Lr = var(in.length_var(r));
    const Aff I = var(i);
    Formula empty_case = Formula::conj({Formula::disj({le(I, cst(-1)), le(n, cst(0)), le(Ls, I)}),
                                        lit(InRe{r, ctx.db.epsilon()})});
    auto in_range = [&](Formula extra, Formula len) {
        VarId p = in.fresh(VarSort::String, "p");
        VarId q = in.fresh(VarSort::String, "q");
        VarId t = in.fresh(VarSort::String, "t");
        return Formula::conj({le(cst(0), I), le(I + cst(1), Ls), le(cst(1), n), std::move(extra), std::move(len),
                              concat(s, p, t), concat(t, r, q), eq(var(in.length_var(p)), I)});
    };
    Formula full = in_range(le(I + n, Ls), eq(Lr, n));
    Formula truncated = in_range(le(Ls + cst(1), I + n), eq(Lr, Ls - I));
    return Formula::disj({std::move(empty_case), std::move(full), std::move(truncated)});
}

}  // namespace

std::optional<Formula> simplify_prefix_suffix_contains(const Literal& l, RewriteContext& ctx) {
    const auto* p = std::get_if<Pred>(&l.atom);
    if (!p || p->kind == PredKind::StrEq || p->kind == PredKind::StrDiseq) {
        throw PreconditionViolation("simplify_prefix_suffix_contains: not a prefixof/suffixof/contains literal");
    }
    const bool neg = l.negated;
    if (p->a == p->b) return neg ? Formula::falsity() : Formula::truth();
    AutomatonDb& db = ctx.db;
    auto a = ctx.concrete_string(p->a);
    auto b = ctx.concrete_string(p->b);
    if (a && b) {
        bool v = false;
        switch (p->kind) {
            case PredKind::PrefixOf: v = b->compare(0, a->size(), *a) == 0 && a->size() <= b->size(); break;
            case PredKind::SuffixOf: v = a->size() <= b->size() && b->compare(b->size() - a->size(), a->size(), *a) == 0; break;
            default: v = a->find(*b) != Word::npos; break;
        }
        return v != neg ? Formula::truth() : Formula::falsity();
    }
    const AutomatonRef sigma = db.universal();
    switch (p->kind) {
        case PredKind::PrefixOf:
            // a is a prefix of b
            if (a) return member(p->b, db.concat(db.word(*a), sigma), neg, db);
            if (b) return member(p->a, factor_language(db, *b, false, true), neg, db);
            break;
        case PredKind::SuffixOf:
            if (a) return member(p->b, db.concat(sigma, db.word(*a)), neg, db);
            if (b) return member(p->a, factor_language(db, *b, true, false), neg, db);
            break;
        default:
            // a contains b
            if (b) return member(p->a, db.concat(sigma, db.concat(db.word(*b), sigma)), neg, db);
            if (a) return member(p->b, factor_language(db, *a, true, true), neg, db);
            break;
    }
    if (neg) return std::nullopt;
    Interner& in = ctx.in;
    VarId u = in.fresh(VarSort::String, "u");
    switch (p->kind) {
        case PredKind::PrefixOf: return concat(p->b, p->a, u);
        case PredKind::SuffixOf: return concat(p->b, u, p->a);
        default: {
            VarId t = in.fresh(VarSort::String, "t");
            VarId v = in.fresh(VarSort::String, "v");
            return Formula::conj({concat(p->a, u, t), concat(t, p->b, v)});
        }
    }
}

Formula rewrite_substr(const FunEq& fe, RewriteContext& ctx) {
    if (fe.fn != Fn::Substr) throw PreconditionViolation("rewrite_substr: not a substr equation");
    return substr_cases(fe.out, fe.args[0], fe.args[1], var(fe.args[2]), ctx);
}

Formula rewrite_at_indexof(const FunEq& fe, RewriteContext& ctx) {
    if (fe.fn == Fn::At) return substr_cases(fe.out, fe.args[0], fe.args[1], cst(1), ctx);
    if (fe.fn != Fn::IndexOf) throw PreconditionViolation("rewrite_at_indexof: not an at/indexof equation");
    Interner& in = ctx.in;
    AutomatonDb& db = ctx.db;
    const VarId k = fe.out, x = fe.args[0], y = fe.args[1], i = fe.args[2];
    const Aff K = var(k), I = var(i), Lx = var(in.length_var(x));
    auto needle = ctx.concrete_string(y);
    auto start = ctx.concrete_int(i);
    const AutomatonRef sigma = db.universal();

    std::vector<Formula> absent{eq(K, cst(-1))};
    if (needle && needle->empty()) {
        absent.push_back(Formula::disj({le(I, cst(-1)), le(Lx + cst(1), I)}));
    } else if (needle && start && *start == 0) {
        absent.push_back(lit(InRe{x, db.complement(db.concat(sigma, db.concat(db.word(*needle), sigma)))}));
    }

    VarId p = in.fresh(VarSort::String, "p");
    VarId q = in.fresh(VarSort::String, "q");
    VarId t = in.fresh(VarSort::String, "t");
    std::vector<Formula> found{le(cst(0), I), le(I, K), concat(x, p, t), concat(t, y, q), eq(var(in.length_var(p)), K)};
    if (needle && !needle->empty() && start && *start == 0) {
        // no earlier occurrence: p·y has y only as a suffix
        VarId u = in.fresh(VarSort::String, "u");
        AutomatonRef early = db.concat(sigma, db.concat(db.word(*needle), db.plus(db.char_range(0, kMaxCodePoint))));
        found.push_back(concat(u, p, y));
        found.push_back(lit(InRe{u, db.complement(early)}));
    }
    return Formula::conj({le(cst(-1), K), le(K, Lx), Formula::disj({Formula::conj(std::move(absent)), Formula::conj(std::move(found))})});
}

std::vector<Lin> length_facts(const FunEq& fe, Interner& in) {
    std::vector<Lin> out;
    auto L = [&](VarId x) { return in.length_var(x); };
    auto conc = [&](VarId x) { return in.const_string(x); };
    switch (fe.fn) {
        case Fn::Concat: out.push_back(ir::lin_eq({{1, L(fe.out)}, {-1, L(fe.args[0])}, {-1, L(fe.args[1])}}, 0)); break;
        case Fn::Reverse: out.push_back(ir::lin_eq({{1, L(fe.out)}, {-1, L(fe.args[0])}}, 0)); break;
        case Fn::Len:
            if (fe.out != L(fe.args[0])) out.push_back(ir::lin_eq({{1, fe.out}, {-1, L(fe.args[0])}}, 0));
            break;
        case Fn::At: out.push_back(ir::lin_le({{1, L(fe.out)}}, -1)); break;
        case Fn::Substr: out.push_back(ir::lin_le({{1, L(fe.out)}, {-1, L(fe.args[0])}}, 0)); break;
        case Fn::IndexOf:
            out.push_back(ir::lin_le({{-1, fe.out}}, -1));
            out.push_back(ir::lin_le({{1, fe.out}, {-1, L(fe.args[0])}}, 0));
            break;
        case Fn::ToInt: out.push_back(ir::lin_le({{-1, fe.out}}, -1)); break;
        case Fn::Replace:
        case Fn::ReplaceAll: {
            auto p = conc(fe.args[1]);
            auto r = conc(fe.args[2]);
            if (!p || !r) break;
            const auto d = static_cast<std::int64_t>(r->size()) - static_cast<std::int64_t>(p->size());
            if (p->empty()) {
                std::int64_t add = fe.fn == Fn::Replace ? static_cast<std::int64_t>(r->size()) : 0;
                out.push_back(ir::lin_eq({{1, L(fe.out)}, {-1, L(fe.args[0])}}, -add));
            } else if (fe.fn == Fn::Replace) {
                // |out| - |s| in {0, d}
                out.push_back(ir::lin_le({{1, L(fe.out)}, {-1, L(fe.args[0])}}, -std::max<std::int64_t>(0, d)));
                out.push_back(ir::lin_le({{-1, L(fe.out)}, {1, L(fe.args[0])}}, std::min<std::int64_t>(0, d)));
            } else {
                VarId occ = in.fresh(VarSort::Int, "occ");
                out.push_back(ir::lin_eq({{1, L(fe.out)}, {-1, L(fe.args[0])}, {-d, occ}}, 0));
                out.push_back(ir::lin_le({{-1, occ}}, 0));
                out.push_back(ir::lin_le({{static_cast<std::int64_t>(p->size()), occ}, {-1, L(fe.args[0])}}, 0));
            }
            break;
        }
        default: break;
    }
    for (VarId x : ir::vars_of(fe)) {
        if (in.sort(x) == VarSort::String) out.push_back(ir::lin_le({{-1, L(x)}}, 0));
    }
    return out;
}

std::vector<Lin> length_abstraction_pass(const std::vector<Atom>& atoms, Interner& in, AutomatonDb& db) {
    std::vector<Lin> out;
    for (const Atom& a : atoms) {
        if (const auto* fe = std::get_if<FunEq>(&a)) {
            auto f = length_facts(*fe, in);
            out.insert(out.end(), f.begin(), f.end());
        } else if (const auto* m = std::get_if<InRe>(&a)) {
            if (db.is_empty(m->lang).empty) {
                out.push_back(ir::lin_le({}, 1));  // 1 <= 0
                continue;
            }
            auto b = db.length_bounds(m->lang);
            VarId l = in.length_var(m->x);
            out.push_back(ir::lin_le({{-1, l}}, static_cast<std::int64_t>(b.min)));
            if (b.max) out.push_back(ir::lin_le({{1, l}}, -static_cast<std::int64_t>(*b.max)));
        }
    }
    return out;
}

namespace {

Formula rewrite_literal(const Literal& l, RewriteContext& ctx) {
    const Formula keep = Formula{Formula::Kind::Lit, l, {}};
    if (const auto* p = std::get_if<Pred>(&l.atom)) {
        if (p->kind == PredKind::StrEq || p->kind == PredKind::StrDiseq) return keep;
        auto r = simplify_prefix_suffix_contains(l, ctx);
        return r ? *r : keep;
    }
    const auto* fe = std::get_if<FunEq>(&l.atom);
    if (!fe || l.negated) return keep;
    switch (fe->fn) {
        case Fn::Substr: return Formula::conj({keep, rewrite_substr(*fe, ctx)});
        case Fn::At:
        case Fn::IndexOf: return Formula::conj({keep, rewrite_at_indexof(*fe, ctx)});
        case Fn::Replace:
        case Fn::ReplaceAll: {
            auto pat = ctx.concrete_string(fe->args[1]);
            if (pat && pat->empty()) {
                if (fe->fn == Fn::ReplaceAll) return lit(Pred{PredKind::StrEq, fe->out, fe->args[0]});
                return concat(fe->out, fe->args[2], fe->args[0]);
            }
            return keep;
        }
        case Fn::ReplaceRe:
            if (ctx.db.accepts(*fe->lang, Word{})) return concat(fe->out, fe->args[1], fe->args[0]);
            return keep;
        case Fn::FromInt: {
            // "" or a decimal numeral without leading zeros
            AutomatonDb& db = ctx.db;
            AutomatonRef digit = db.char_range(U'0', U'9');
            AutomatonRef num = db.concat(db.char_range(U'1', U'9'), db.star(digit));
            AutomatonRef lang = db.unite(db.epsilon(), db.unite(db.word(U"0"), num));
            return Formula::conj({keep, lit(InRe{fe->out, lang})});
        }
        default: return keep;
    }
}

}  // namespace

Formula preprocess(const Formula& f, RewriteContext& ctx) {
    switch (f.kind) {
        case Formula::Kind::True:
        case Formula::Kind::False: return f;
        case Formula::Kind::Lit: return rewrite_literal(f.lit, ctx);
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<Formula> cs;
            for (const Formula& c : f.children) cs.push_back(preprocess(c, ctx));
            return f.kind == Formula::Kind::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
        }
    }
    return f;
}

}  // namespace strsolve::rewriter
