#include "strsolve/ir/normalize.hpp"

#include <algorithm>
#include <functional>

#include "strsolve/error.hpp"
#include "strsolve/regexc/regexc.hpp"

namespace strsolve::ir {

using frontend::Op;
using frontend::Sort;
using frontend::Term;

namespace {

struct LinExpr {
    std::map<VarId, std::int64_t> coeffs;
    std::int64_t constant = 0;

    void add(const LinExpr& o, std::int64_t k) {
        for (auto& [v, c] : o.coeffs) coeffs[v] += k * c;
        constant += k * o.constant;
    }
    std::vector<std::pair<std::int64_t, VarId>> terms() const {
        std::vector<std::pair<std::int64_t, VarId>> out;
        for (auto& [v, c] : coeffs) {
            if (c != 0) out.emplace_back(c, v);
        }
        return out;
    }
};

LinExpr minus(const LinExpr& a, const LinExpr& b) {
    LinExpr out = a;
    out.add(b, -1);
    return out;
}

class Normalizer {
public:
    Normalizer(Interner& in, AutomatonDb& db) : in_(in), db_(db) {}

    Formula run(const std::vector<frontend::TermPtr>& ts) {
        std::vector<Formula> body;
        for (const auto& t : ts) body.push_back(nnf(*t, true));
        std::vector<Formula> all = std::move(defs_);
        for (auto& b : body) all.push_back(std::move(b));
        return Formula::conj(std::move(all));
    }

private:
    Interner& in_;
    AutomatonDb& db_;
    std::vector<Formula> defs_;
    std::set<VarId> emitted_;

    void define(Atom a) { defs_.push_back(Formula::atom(std::move(a))); }

    // ------------------------------------------------------------ Boolean

    Formula nnf(const Term& t, bool pos) {
        switch (t.op) {
            case Op::True: return pos ? Formula::truth() : Formula::falsity();
            case Op::False: return pos ? Formula::falsity() : Formula::truth();
            case Op::Not: return nnf(*t.args[0], !pos);
            case Op::And:
            case Op::Or: {
                std::vector<Formula> cs;
                for (const auto& a : t.args) cs.push_back(nnf(*a, pos));
                bool conj = (t.op == Op::And) == pos;
                return conj ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
            }
            case Op::Implies: {
                // a => b  ==  !a | b
                std::vector<Formula> cs{nnf(*t.args[0], !pos), nnf(*t.args[1], pos)};
                return pos ? Formula::disj(std::move(cs)) : Formula::conj(std::move(cs));
            }
            case Op::Eq: return equality(*t.args[0], *t.args[1], pos);
            case Op::Distinct: {
                std::vector<Formula> cs;
                for (std::size_t i = 0; i < t.args.size(); ++i) {
                    for (std::size_t j = i + 1; j < t.args.size(); ++j) cs.push_back(equality(*t.args[i], *t.args[j], !pos));
                }
                return pos ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
            }
            case Op::Le:
            case Op::Lt:
            case Op::Ge:
            case Op::Gt: return comparison(t, pos);
            case Op::StrPrefixOf:
            case Op::StrSuffixOf:
            case Op::StrContains: {
                PredKind k = t.op == Op::StrPrefixOf   ? PredKind::PrefixOf
                             : t.op == Op::StrSuffixOf ? PredKind::SuffixOf
                                                       : PredKind::Contains;
                return Formula::atom(Pred{k, str_var(*t.args[0]), str_var(*t.args[1])}, !pos);
            }
            case Op::StrInRe: {
                VarId x = str_var(*t.args[0]);
                AutomatonRef lang = regexc::compile_regex(db_, *t.args[1]);
                if (!pos) lang = db_.complement(lang);
                return Formula::atom(InRe{x, lang});
            }
            default: break;
        }
        throw PreconditionViolation("normalize: unexpected Bool term");
    }

    Formula equality(const Term& s, const Term& t, bool pos) {
        if (frontend::term_equal(s, t)) return pos ? Formula::truth() : Formula::falsity();
        if (s.sort == Sort::Bool) {
            // (s & t) | (!s & !t), or its negation (s & !t) | (!s & t)
            std::vector<Formula> a{nnf(s, true), nnf(t, pos)};
            std::vector<Formula> b{nnf(s, false), nnf(t, !pos)};
            return Formula::disj({Formula::conj(std::move(a)), Formula::conj(std::move(b))});
        }
        if (s.sort == Sort::Int) {
            LinExpr d = minus(linear(s), linear(t));
            if (pos) return Formula::atom(lin_eq(d.terms(), d.constant));
            LinExpr e = minus(linear(t), linear(s));
            return Formula::disj({Formula::atom(lin_le(d.terms(), d.constant + 1)),
                                  Formula::atom(lin_le(e.terms(), e.constant + 1))});
        }
        if (s.op == Op::StrLit && t.op == Op::StrLit) return (s.str == t.str) == pos ? Formula::truth() : Formula::falsity();
        if (s.op == Op::StrLit || t.op == Op::StrLit) {
            const Term& lit = s.op == Op::StrLit ? s : t;
            const Term& other = s.op == Op::StrLit ? t : s;
            VarId x = str_var(other);
            AutomatonRef lang = pos ? db_.word(lit.str) : db_.excluding_word(lit.str);
            return Formula::atom(InRe{x, lang});
        }
        if (!pos) return Formula::atom(Pred{PredKind::StrDiseq, str_var(s), str_var(t)});
        if (s.op == Op::Var) return define_into(t, str_var(s));
        if (t.op == Op::Var) return define_into(s, str_var(t));
        VarId v = str_var(s);
        return define_into(t, v);
    }

    Formula comparison(const Term& t, bool pos) {
        const Term& a = *t.args[0];
        const Term& b = *t.args[1];
        // everything becomes  lhs - rhs + k <= 0
        LinExpr e;
        switch (t.op) {
            case Op::Le: e = pos ? minus(linear(a), linear(b)) : minus(linear(b), linear(a)); break;
            case Op::Lt: e = pos ? minus(linear(a), linear(b)) : minus(linear(b), linear(a)); break;
            case Op::Ge: e = pos ? minus(linear(b), linear(a)) : minus(linear(a), linear(b)); break;
            default: e = pos ? minus(linear(b), linear(a)) : minus(linear(a), linear(b)); break;
        }
        // strict when (Lt|Gt, pos) or (Le|Ge, neg)
        bool strict = (t.op == Op::Lt || t.op == Op::Gt) == pos;
        if (strict) e.constant += 1;
        return Formula::atom(lin_le(e.terms(), e.constant));
    }

    // ------------------------------------------------------------ strings

    /// Constrains `out` to equal the application `t` (in place, not hoisted).
    Formula define_into(const Term& t, VarId out) {
        if (t.op == Op::Var || t.op == Op::StrLit) return Formula::atom(Pred{PredKind::StrEq, out, str_var(t)});
        std::vector<Formula> parts;
        for (Atom& a : application(t, out)) parts.push_back(Formula::atom(std::move(a)));
        return Formula::conj(std::move(parts));
    }

    /// Atoms stating out = t for an application t; subterms are hoisted.
    std::vector<Atom> application(const Term& t, VarId out) {
        switch (t.op) {
            case Op::StrConcat: {
                std::vector<VarId> chain;
                for (const auto& a : t.args) chain.push_back(str_var(*a));
                return concat_flatten(out, chain, in_);
            }
            case Op::StrAt: return {FunEq{out, Fn::At, {str_var(*t.args[0]), int_var(*t.args[1])}, std::nullopt}};
            case Op::StrSubstr:
                return {FunEq{out, Fn::Substr, {str_var(*t.args[0]), int_var(*t.args[1]), int_var(*t.args[2])}, std::nullopt}};
            case Op::StrReplace:
            case Op::StrReplaceAll: {
                Fn fn = t.op == Op::StrReplace ? Fn::Replace : Fn::ReplaceAll;
                return {FunEq{out, fn, {str_var(*t.args[0]), str_var(*t.args[1]), str_var(*t.args[2])}, std::nullopt}};
            }
            case Op::StrReplaceRe:
            case Op::StrReplaceReAll: {
                Fn fn = t.op == Op::StrReplaceRe ? Fn::ReplaceRe : Fn::ReplaceReAll;
                AutomatonRef lang = regexc::compile_regex(db_, *t.args[1]);
                return {FunEq{out, fn, {str_var(*t.args[0]), str_var(*t.args[2])}, lang}};
            }
            case Op::StrReverse: return {FunEq{out, Fn::Reverse, {str_var(*t.args[0])}, std::nullopt}};
            case Op::StrFromInt: return {FunEq{out, Fn::FromInt, {int_var(*t.args[0])}, std::nullopt}};
            default: break;
        }
        throw PreconditionViolation("normalize: unexpected String term");
    }

    VarId str_var(const Term& t) {
        if (t.op == Op::Var) return in_.intern(t.name, VarSort::String);
        if (t.op == Op::StrLit) {
            VarId c = in_.const_var(t.str);
            if (emitted_.insert(c).second) define(InRe{c, db_.word(t.str)});
            return c;
        }
        if (t.op == Op::StrConcat && t.args.size() == 1) return str_var(*t.args[0]);
        VarId out = in_.fresh(VarSort::String, "s");
        for (Atom& a : application(t, out)) define(std::move(a));
        return out;
    }

    // ------------------------------------------------------------ integers

    LinExpr linear(const Term& t) {
        LinExpr e;
        switch (t.op) {
            case Op::IntLit: e.constant = t.value; return e;
            case Op::Var: e.coeffs[in_.intern(t.name, VarSort::Int)] = 1; return e;
            case Op::Add:
                for (const auto& a : t.args) e.add(linear(*a), 1);
                return e;
            case Op::Sub:
                e = linear(*t.args[0]);
                for (std::size_t i = 1; i < t.args.size(); ++i) e.add(linear(*t.args[i]), -1);
                return e;
            case Op::Neg: e.add(linear(*t.args[0]), -1); return e;
            case Op::Mul: {
                std::int64_t k = 1;
                const Term* factor = nullptr;
                for (const auto& a : t.args) {
                    if (a->op == Op::IntLit) {
                        k *= a->value;
                    } else {
                        factor = a.get();
                    }
                }
                if (!factor) {
                    e.constant = k;
                } else {
                    e.add(linear(*factor), k);
                }
                return e;
            }
            case Op::StrLen: {
                VarId x = str_var(*t.args[0]);
                VarId l = in_.length_var(x);
                if (emitted_.insert(l).second) define(FunEq{l, Fn::Len, {x}, std::nullopt});
                e.coeffs[l] = 1;
                return e;
            }
            case Op::StrIndexOf: {
                VarId out = in_.fresh(VarSort::Int, "k");
                define(FunEq{out, Fn::IndexOf, {str_var(*t.args[0]), str_var(*t.args[1]), int_var(*t.args[2])}, std::nullopt});
                e.coeffs[out] = 1;
                return e;
            }
            case Op::StrToInt: {
                VarId out = in_.fresh(VarSort::Int, "n");
                define(FunEq{out, Fn::ToInt, {str_var(*t.args[0])}, std::nullopt});
                e.coeffs[out] = 1;
                return e;
            }
            default: break;
        }
        throw PreconditionViolation("normalize: unexpected Int term");
    }

    VarId int_var(const Term& t) {
        if (t.op == Op::IntLit) {
            VarId c = in_.int_const(t.value);
            if (emitted_.insert(c).second) define(lin_eq({{1, c}}, -t.value));
            return c;
        }
        LinExpr e = linear(t);
        auto terms = e.terms();
        if (terms.size() == 1 && terms[0].first == 1 && e.constant == 0) return terms[0].second;
        VarId v = in_.fresh(VarSort::Int, "i");
        terms.emplace_back(-1, v);
        define(lin_eq(std::move(terms), e.constant));
        return v;
    }
};

bool expensive(Fn fn) {
    switch (fn) {
        case Fn::IndexOf:
        case Fn::Substr:
        case Fn::At:
        case Fn::Replace:
        case Fn::ReplaceAll:
        case Fn::ReplaceRe:
        case Fn::ReplaceReAll:
        case Fn::ToInt:
        case Fn::FromInt: return true;
        default: return false;
    }
}

}  // namespace

Formula normalize(const Term& t, Interner& in, AutomatonDb& db) {
    return Normalizer(in, db).run({std::make_shared<const Term>(t)});
}

Formula normalize_all(const std::vector<frontend::TermPtr>& ts, Interner& in, AutomatonDb& db) {
    return Normalizer(in, db).run(ts);
}

Formula cse(const Formula& input, const Interner& in) {
    Formula f = input;
    for (;;) {
        if (f.kind != Formula::Kind::And) return f;
        using Key = std::tuple<Fn, std::vector<VarId>, std::optional<AutomatonRef>>;
        std::map<Key, VarId> seen;
        std::unordered_map<VarId, VarId> ren;
        std::vector<Formula> kept;
        for (auto& c : f.children) {
            if (c.kind == Formula::Kind::Lit && !c.lit.negated) {
                if (const auto* fe = std::get_if<FunEq>(&c.lit.atom); fe && expensive(fe->fn) && in.is_fresh(fe->out)) {
                    Key key{fe->fn, fe->args, fe->lang};
                    auto [it, inserted] = seen.emplace(key, fe->out);
                    if (!inserted) {
                        if (it->second != fe->out && !ren.count(fe->out)) ren[fe->out] = it->second;
                        continue;
                    }
                }
            }
            kept.push_back(c);
        }
        if (ren.empty()) return f;
        f = rename(Formula::conj(std::move(kept)), ren);
    }
}

std::vector<Atom> concat_flatten(VarId out, const std::vector<VarId>& chain, Interner& in) {
    if (chain.empty()) throw PreconditionViolation("concat_flatten on an empty chain");
    if (chain.size() == 1) return {Pred{PredKind::StrEq, out, chain[0]}};
    std::vector<Atom> atoms;
    VarId cur = out;
    for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
        VarId rest = in.fresh(VarSort::String, "t");
        atoms.push_back(FunEq{cur, Fn::Concat, {chain[i], rest}, std::nullopt});
        cur = rest;
    }
    atoms.push_back(FunEq{cur, Fn::Concat, {chain[chain.size() - 2], chain.back()}, std::nullopt});
    return atoms;
}

void DependencyGraph::add_edge(VarId from, VarId to) {
    adj_[from].insert(to);
    adj_[to];
}

bool DependencyGraph::has_edge(VarId from, VarId to) const {
    auto it = adj_.find(from);
    return it != adj_.end() && it->second.count(to);
}

std::vector<std::vector<VarId>> DependencyGraph::sccs() const {
    std::map<VarId, int> index, low;
    std::map<VarId, bool> on_stack;
    std::vector<VarId> stack;
    std::vector<std::vector<VarId>> out;
    int counter = 0;
    std::function<void(VarId)> visit = [&](VarId v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (VarId w : adj_.at(v)) {
            if (!index.count(w)) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<VarId> comp;
            VarId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    };
    for (const auto& [v, _] : adj_) {
        if (!index.count(v)) visit(v);
    }
    return out;
}

std::vector<std::vector<VarId>> DependencyGraph::cyclic_sccs() const {
    std::vector<std::vector<VarId>> out;
    for (auto& c : sccs()) {
        if (c.size() >= 2 || has_edge(c[0], c[0])) out.push_back(std::move(c));
    }
    return out;
}

DependencyGraph dependency_graph(const std::vector<Atom>& atoms) {
    DependencyGraph g;
    for (const Atom& a : atoms) {
        if (const auto* fe = std::get_if<FunEq>(&a)) {
            g.add_node(fe->out);
            for (VarId v : fe->args) g.add_edge(v, fe->out);
        }
    }
    return g;
}

}  // namespace strsolve::ir
