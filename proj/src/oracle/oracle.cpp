#include "strsolve/oracle/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <tuple>

#include "strsolve/error.hpp"
#include "strsolve/regexc/regexc.hpp"

namespace strsolve::oracle {

using frontend::Op;
using frontend::Sort;
using frontend::Term;

// ------------------------------------------------------------ string functions

Word substr(const Word& s, std::int64_t i, std::int64_t n) {
    const auto len = static_cast<std::int64_t>(s.size());
    if (i < 0 || n <= 0 || i >= len) return {};
    std::int64_t end = n > len - i ? len : i + n;
    return s.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(end - i));
}

Word at(const Word& s, std::int64_t i) { return substr(s, i, 1); }

std::int64_t indexof(const Word& s, const Word& t, std::int64_t i) {
    const auto len = static_cast<std::int64_t>(s.size());
    if (i < 0 || i > len) return -1;
    for (std::int64_t k = i; k + static_cast<std::int64_t>(t.size()) <= len; ++k) {
        if (s.compare(static_cast<std::size_t>(k), t.size(), t) == 0) return k;
    }
    return -1;
}

Word replace(const Word& s, const Word& p, const Word& r) {
    if (p.empty()) return r + s;
    std::int64_t k = indexof(s, p, 0);
    if (k < 0) return s;
    Word out = s.substr(0, static_cast<std::size_t>(k));
    out += r;
    out += s.substr(static_cast<std::size_t>(k) + p.size());
    return out;
}

Word replace_all(const Word& s, const Word& p, const Word& r) {
    if (p.empty()) return s;
    Word out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (i + p.size() <= s.size() && s.compare(i, p.size(), p) == 0) {
            out += r;
            i += p.size();
        } else {
            out.push_back(s[i]);
            ++i;
        }
    }
    return out;
}

std::int64_t to_int(const Word& s) {
    if (s.empty()) return -1;
    std::int64_t v = 0;
    for (CodePoint c : s) {
        if (c < U'0' || c > U'9') return -1;
        auto d = static_cast<std::int64_t>(c - U'0');
        if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) {
            v = std::numeric_limits<std::int64_t>::max();
        } else {
            v = v * 10 + d;
        }
    }
    return v;
}

Word from_int(std::int64_t n) {
    if (n < 0) return {};
    std::string digits = std::to_string(n);
    return Word(digits.begin(), digits.end());
}

Word reverse(const Word& s) { return Word(s.rbegin(), s.rend()); }

bool prefixof(const Word& a, const Word& b) { return a.size() <= b.size() && b.compare(0, a.size(), a) == 0; }

bool suffixof(const Word& a, const Word& b) {
    return a.size() <= b.size() && b.compare(b.size() - a.size(), a.size(), a) == 0;
}

bool contains(const Word& a, const Word& b) { return a.find(b) != Word::npos; }

Word replace_re(const Word& s, const Matcher& m, const Word& r) {
    for (std::size_t i = 0; i <= s.size(); ++i) {
        for (std::size_t j = i; j <= s.size(); ++j) {
            if (m(s.substr(i, j - i))) return s.substr(0, i) + r + s.substr(j);
        }
    }
    return s;
}

Word replace_re_all(const Word& s, const Matcher& m, const Word& r) {
    Word out;
    std::size_t pos = 0;
    for (;;) {
        bool found = false;
        for (std::size_t i = pos; i < s.size() && !found; ++i) {
            for (std::size_t j = i + 1; j <= s.size(); ++j) {
                if (m(s.substr(i, j - i))) {
                    out += s.substr(pos, i - pos);
                    out += r;
                    pos = j;
                    found = true;
                    break;
                }
            }
        }
        if (!found) break;
    }
    out += s.substr(pos);
    return out;
}

// ------------------------------------------------------------- regex matcher

namespace {

struct SourceNfa {
    std::size_t init = 0;
    std::vector<std::vector<std::tuple<CodePoint, CodePoint, std::size_t>>> out;
    std::vector<char> accepting;
};

SourceNfa lower_source(const regexc::AutomatonSource& src) {
    SourceNfa nfa;
    std::map<std::string, std::size_t> ids;
    auto id = [&](const std::string& s) {
        auto [it, inserted] = ids.emplace(s, ids.size());
        if (inserted) {
            nfa.out.emplace_back();
            nfa.accepting.push_back(0);
        }
        return it->second;
    };
    nfa.init = id(src.init);
    for (const auto& t : src.transitions) {
        std::size_t from = id(t.src);
        std::size_t to = id(t.dst);
        nfa.out[from].emplace_back(t.lo, t.hi, to);
    }
    for (const auto& a : src.accepting) nfa.accepting[id(a)] = 1;
    return nfa;
}

class RegexMatcher {
public:
    explicit RegexMatcher(const Word& w) : w_(w) {}

    bool match(const Term& re, std::size_t i, std::size_t j) {
        auto key = std::make_tuple(&re, std::uint32_t{0}, std::uint32_t{0}, i, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool r = compute(re, i, j);
        memo_[key] = r;
        return r;
    }

private:
    using Key = std::tuple<const Term*, std::uint32_t, std::uint32_t, std::size_t, std::size_t>;

    const Word& w_;
    std::map<Key, bool> memo_;
    std::map<const Term*, SourceNfa> sources_;

    // args[k..] concatenated match w[i..j)
    bool match_seq(const Term& re, std::size_t k, std::size_t i, std::size_t j) {
        if (k == re.args.size()) return i == j;
        if (k + 1 == re.args.size()) return match(*re.args[k], i, j);
        auto key = std::make_tuple(&re, static_cast<std::uint32_t>(k), std::uint32_t{1}, i, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool r = false;
        for (std::size_t m = i; m <= j && !r; ++m) r = match(*re.args[k], i, m) && match_seq(re, k + 1, m, j);
        memo_[key] = r;
        return r;
    }

    // e^{lo..hi} with every iteration non-empty (empty iterations are absorbed by `nullable`)
    bool match_loop(const Term& e, std::uint32_t lo, std::uint32_t hi, std::size_t i, std::size_t j, const Term& owner) {
        if (i == j) return lo == 0;
        if (hi == 0) return false;
        auto key = std::make_tuple(&owner, lo + 2, hi, i, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool r = false;
        for (std::size_t m = i + 1; m <= j && !r; ++m) {
            std::uint32_t rest = hi == std::numeric_limits<std::uint32_t>::max() ? hi : hi - 1;
            r = match(e, i, m) && match_loop(e, lo == 0 ? 0 : lo - 1, rest, m, j, owner);
        }
        memo_[key] = r;
        return r;
    }

    bool star(const Term& e, std::size_t i, std::size_t j, const Term& owner) {
        return match_loop(e, 0, std::numeric_limits<std::uint32_t>::max(), i, j, owner);
    }

    bool compute(const Term& re, std::size_t i, std::size_t j) {
        switch (re.op) {
            case Op::StrToRe: {
                const Word& lit = re.args[0]->str;
                return j - i == lit.size() && w_.compare(i, lit.size(), lit) == 0;
            }
            case Op::ReNone: return false;
            case Op::ReAll: return true;
            case Op::ReAllChar: return j == i + 1;
            case Op::ReRange: {
                const Word& a = re.args[0]->str;
                const Word& b = re.args[1]->str;
                return j == i + 1 && a.size() == 1 && b.size() == 1 && a[0] <= w_[i] && w_[i] <= b[0];
            }
            case Op::ReConcat: return match_seq(re, 0, i, j);
            case Op::ReUnion:
                for (const auto& a : re.args) {
                    if (match(*a, i, j)) return true;
                }
                return false;
            case Op::ReInter:
                for (const auto& a : re.args) {
                    if (!match(*a, i, j)) return false;
                }
                return true;
            case Op::ReStar: return star(*re.args[0], i, j, re);
            case Op::RePlus: {
                if (i == j) return match(*re.args[0], i, i);
                return star(*re.args[0], i, j, re);
            }
            case Op::ReOpt: return i == j || match(*re.args[0], i, j);
            case Op::ReComp: return !match(*re.args[0], i, j);
            case Op::ReDiff: return match(*re.args[0], i, j) && !match(*re.args[1], i, j);
            case Op::ReLoop: {
                if (re.hi < re.lo) return false;
                const Term& e = *re.args[0];
                std::uint32_t lo = match(e, i, i) ? 0 : re.lo;
                return match_loop(e, lo, re.hi, i, j, re);
            }
            case Op::ReFromAutomaton: {
                auto it = sources_.find(&re);
                if (it == sources_.end()) {
                    it = sources_.emplace(&re, lower_source(regexc::parse_automaton_source(re.str))).first;
                }
                const SourceNfa& nfa = it->second;
                std::set<std::size_t> cur{nfa.init};
                for (std::size_t k = i; k < j && !cur.empty(); ++k) {
                    std::set<std::size_t> next;
                    for (std::size_t s : cur) {
                        for (auto& [lo, hi, to] : nfa.out[s]) {
                            if (lo <= w_[k] && w_[k] <= hi) next.insert(to);
                        }
                    }
                    cur = std::move(next);
                }
                for (std::size_t s : cur) {
                    if (nfa.accepting[s]) return true;
                }
                return false;
            }
            default: break;
        }
        throw PreconditionViolation("regex_match on a non-regex term");
    }
};

}  // namespace

bool regex_match(const Term& re, const Word& w) {
    RegexMatcher m(w);
    return m.match(re, 0, w.size());
}

bool membership(const automata::Automaton& a, const Word& w) {
    std::vector<char> cur(a.num_states(), 0);
    for (automata::State s : a.initial()) cur[s] = 1;
    for (CodePoint c : w) {
        std::vector<char> next(a.num_states(), 0);
        bool any = false;
        for (automata::State s = 0; s < a.num_states(); ++s) {
            if (!cur[s]) continue;
            for (const auto& e : a.edges(s)) {
                if (e.lo <= c && c <= e.hi) {
                    next[e.to] = 1;
                    any = true;
                }
            }
        }
        if (!any) return false;
        cur = std::move(next);
    }
    for (automata::State s = 0; s < a.num_states(); ++s) {
        if (cur[s] && a.is_accepting(s)) return true;
    }
    return false;
}

// ----------------------------------------------------------- term evaluation

Value eval_term(const Term& t, const Env& env) {
    auto str = [&](std::size_t k) { return as_string(eval_term(*t.args[k], env)); };
    auto num = [&](std::size_t k) { return as_int(eval_term(*t.args[k], env)); };
    switch (t.op) {
        case Op::IntLit: return t.value;
        case Op::StrLit: return t.str;
        case Op::Var: {
            auto it = env.find(t.name);
            if (it == env.end()) throw PreconditionViolation("unbound variable '" + t.name + "'");
            return it->second;
        }
        case Op::Add: {
            std::int64_t v = 0;
            for (std::size_t k = 0; k < t.args.size(); ++k) v += num(k);
            return v;
        }
        case Op::Sub: {
            std::int64_t v = num(0);
            for (std::size_t k = 1; k < t.args.size(); ++k) v -= num(k);
            return v;
        }
        case Op::Neg: return -num(0);
        case Op::Mul: {
            std::int64_t v = 1;
            for (std::size_t k = 0; k < t.args.size(); ++k) v *= num(k);
            return v;
        }
        case Op::StrConcat: {
            Word w;
            for (std::size_t k = 0; k < t.args.size(); ++k) w += str(k);
            return w;
        }
        case Op::StrLen: return static_cast<std::int64_t>(str(0).size());
        case Op::StrAt: return at(str(0), num(1));
        case Op::StrSubstr: return substr(str(0), num(1), num(2));
        case Op::StrIndexOf: return indexof(str(0), str(1), num(2));
        case Op::StrReplace: return replace(str(0), str(1), str(2));
        case Op::StrReplaceAll: return replace_all(str(0), str(1), str(2));
        case Op::StrReplaceRe:
        case Op::StrReplaceReAll: {
            const Term& re = *t.args[1];
            Matcher m = [&re](const Word& w) { return regex_match(re, w); };
            return t.op == Op::StrReplaceRe ? replace_re(str(0), m, str(2)) : replace_re_all(str(0), m, str(2));
        }
        case Op::StrReverse: return reverse(str(0));
        case Op::StrToInt: return to_int(str(0));
        case Op::StrFromInt: return from_int(num(0));
        default: break;
    }
    throw PreconditionViolation("eval_term on a non-value term");
}

bool eval_bool(const Term& t, const Env& env) {
    switch (t.op) {
        case Op::True: return true;
        case Op::False: return false;
        case Op::Not: return !eval_bool(*t.args[0], env);
        case Op::And:
            for (const auto& a : t.args) {
                if (!eval_bool(*a, env)) return false;
            }
            return true;
        case Op::Or:
            for (const auto& a : t.args) {
                if (eval_bool(*a, env)) return true;
            }
            return false;
        case Op::Implies: return !eval_bool(*t.args[0], env) || eval_bool(*t.args[1], env);
        case Op::Eq:
            if (t.args[0]->sort == Sort::Bool) return eval_bool(*t.args[0], env) == eval_bool(*t.args[1], env);
            return eval_term(*t.args[0], env) == eval_term(*t.args[1], env);
        case Op::Distinct: {
            for (std::size_t i = 0; i < t.args.size(); ++i) {
                for (std::size_t j = i + 1; j < t.args.size(); ++j) {
                    bool eq = t.args[i]->sort == Sort::Bool
                                  ? eval_bool(*t.args[i], env) == eval_bool(*t.args[j], env)
                                  : eval_term(*t.args[i], env) == eval_term(*t.args[j], env);
                    if (eq) return false;
                }
            }
            return true;
        }
        case Op::Le: return as_int(eval_term(*t.args[0], env)) <= as_int(eval_term(*t.args[1], env));
        case Op::Lt: return as_int(eval_term(*t.args[0], env)) < as_int(eval_term(*t.args[1], env));
        case Op::Ge: return as_int(eval_term(*t.args[0], env)) >= as_int(eval_term(*t.args[1], env));
        case Op::Gt: return as_int(eval_term(*t.args[0], env)) > as_int(eval_term(*t.args[1], env));
        case Op::StrPrefixOf: return prefixof(as_string(eval_term(*t.args[0], env)), as_string(eval_term(*t.args[1], env)));
        case Op::StrSuffixOf: return suffixof(as_string(eval_term(*t.args[0], env)), as_string(eval_term(*t.args[1], env)));
        case Op::StrContains: return contains(as_string(eval_term(*t.args[0], env)), as_string(eval_term(*t.args[1], env)));
        case Op::StrInRe: return regex_match(*t.args[1], as_string(eval_term(*t.args[0], env)));
        default: break;
    }
    throw PreconditionViolation("eval_bool on a non-Bool term");
}

// ------------------------------------------------------------- IR evaluation

namespace {

const Value& lookup(const Valuation& v, ir::VarId x) {
    auto it = v.find(x);
    if (it == v.end()) throw PreconditionViolation("valuation does not bind variable " + std::to_string(x));
    return it->second;
}

}  // namespace

Value eval_fun(const ir::FunEq& fe, const Valuation& v, const automata::AutomatonDb& db) {
    auto s = [&](std::size_t k) -> const Word& { return as_string(lookup(v, fe.args[k])); };
    auto n = [&](std::size_t k) { return as_int(lookup(v, fe.args[k])); };
    switch (fe.fn) {
        case ir::Fn::Concat: return s(0) + s(1);
        case ir::Fn::Replace: return replace(s(0), s(1), s(2));
        case ir::Fn::ReplaceAll: return replace_all(s(0), s(1), s(2));
        case ir::Fn::ReplaceRe:
        case ir::Fn::ReplaceReAll: {
            auto a = db.get(*fe.lang);
            Matcher m = [a](const Word& w) { return membership(*a, w); };
            return fe.fn == ir::Fn::ReplaceRe ? replace_re(s(0), m, s(1)) : replace_re_all(s(0), m, s(1));
        }
        case ir::Fn::Reverse: return reverse(s(0));
        case ir::Fn::At: return at(s(0), n(1));
        case ir::Fn::Substr: return substr(s(0), n(1), n(2));
        case ir::Fn::IndexOf: return indexof(s(0), s(1), n(2));
        case ir::Fn::ToInt: return to_int(s(0));
        case ir::Fn::FromInt: return from_int(n(0));
        case ir::Fn::Len: return static_cast<std::int64_t>(s(0).size());
    }
    throw PreconditionViolation("eval_fun: unknown function");
}

bool eval_atom(const ir::Atom& a, const Valuation& v, const automata::AutomatonDb& db) {
    if (const auto* p = std::get_if<ir::Pred>(&a)) {
        const Value& x = lookup(v, p->a);
        const Value& y = lookup(v, p->b);
        switch (p->kind) {
            case ir::PredKind::PrefixOf: return prefixof(as_string(x), as_string(y));
            case ir::PredKind::SuffixOf: return suffixof(as_string(x), as_string(y));
            case ir::PredKind::Contains: return contains(as_string(x), as_string(y));
            case ir::PredKind::StrEq: return x == y;
            case ir::PredKind::StrDiseq: return x != y;
        }
    }
    if (const auto* fe = std::get_if<ir::FunEq>(&a)) return lookup(v, fe->out) == eval_fun(*fe, v, db);
    if (const auto* r = std::get_if<ir::InRe>(&a)) return membership(*db.get(r->lang), as_string(lookup(v, r->x)));
    const auto& l = std::get<ir::Lin>(a);
    __int128 sum = l.constant;
    for (auto& [c, x] : l.terms) sum += static_cast<__int128>(c) * as_int(lookup(v, x));
    return l.rel == ir::Rel::Eq ? sum == 0 : sum <= 0;
}

bool eval_literal(const ir::Literal& l, const Valuation& v, const automata::AutomatonDb& db) {
    return eval_atom(l.atom, v, db) != l.negated;
}

bool eval_formula(const ir::Formula& f, const Valuation& v, const automata::AutomatonDb& db) {
    switch (f.kind) {
        case ir::Formula::Kind::True: return true;
        case ir::Formula::Kind::False: return false;
        case ir::Formula::Kind::Lit: return eval_literal(f.lit, v, db);
        case ir::Formula::Kind::And:
            for (const auto& c : f.children) {
                if (!eval_formula(c, v, db)) return false;
            }
            return true;
        case ir::Formula::Kind::Or:
            for (const auto& c : f.children) {
                if (eval_formula(c, v, db)) return true;
            }
            return false;
    }
    return false;
}

// ---------------------------------------------------------------- enumeration

std::vector<Word> all_words(const Word& alphabet, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (CodePoint c : alphabet) out.push_back(out[i] + c);
        }
        begin = end;
    }
    return out;
}

namespace {

// A definition computes one variable from others.
struct Definition {
    ir::VarId out;
    std::vector<ir::VarId> deps;
    std::function<Value(const Valuation&)> compute;
};

}  // namespace

EnumResult enumerate_verdict(const ir::Formula& f, const ir::Interner& in, const automata::AutomatonDb& db,
                             const Bounds& bounds) {
    if (bounds.alphabet.size() > 4 || bounds.max_len > 5 || bounds.int_lo < -8 || bounds.int_hi > 8) {
        throw PreconditionViolation("enumeration bounds exceed the oracle limits");
    }
    std::vector<ir::VarId> vars;
    ir::collect_vars(f, vars);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::set<ir::VarId> var_set(vars.begin(), vars.end());

    // length variables need their string variable in scope
    for (ir::VarId x : std::vector<ir::VarId>(vars)) {
        if (auto s = in.length_of(x); s && !var_set.count(*s)) {
            vars.push_back(*s);
            var_set.insert(*s);
        }
    }

    std::map<ir::VarId, Definition> defs;
    for (ir::VarId x : vars) {
        if (auto w = in.const_string(x)) {
            defs[x] = Definition{x, {}, [w = *w](const Valuation&) { return Value{w}; }};
        } else if (auto n = in.const_int(x)) {
            defs[x] = Definition{x, {}, [n = *n](const Valuation&) { return Value{n}; }};
        } else if (auto s = in.length_of(x)) {
            defs[x] = Definition{x, {*s}, [s = *s](const Valuation& v) {
                                     return Value{static_cast<std::int64_t>(as_string(v.at(s)).size())};
                                 }};
        }
    }
    for (const ir::Formula* c : ir::top_conjuncts(f)) {
        if (c->kind != ir::Formula::Kind::Lit || c->lit.negated) continue;
        if (const auto* fe = std::get_if<ir::FunEq>(&c->lit.atom)) {
            if (!in.is_fresh(fe->out) || defs.count(fe->out)) continue;
            if (std::find(fe->args.begin(), fe->args.end(), fe->out) != fe->args.end()) continue;
            ir::FunEq copy = *fe;
            defs[fe->out] = Definition{fe->out, fe->args, [copy, &db](const Valuation& v) { return eval_fun(copy, v, db); }};
        } else if (const auto* l = std::get_if<ir::Lin>(&c->lit.atom); l && l->rel == ir::Rel::Eq) {
            for (auto& [coef, x] : l->terms) {
                if ((coef != 1 && coef != -1) || !in.is_fresh(x) || defs.count(x)) continue;
                std::vector<ir::VarId> deps;
                for (auto& [c2, y] : l->terms) {
                    if (y != x) deps.push_back(y);
                }
                ir::Lin lin = *l;
                std::int64_t k = coef;
                ir::VarId target = x;
                // coef*x + rest = 0  =>  x = -rest/coef
                defs[x] = Definition{x, deps, [lin, k, target](const Valuation& v) {
                                         std::int64_t rest = lin.constant;
                                         for (auto& [c3, y] : lin.terms) {
                                             if (y != target) rest += c3 * as_int(v.at(y));
                                         }
                                         return Value{-rest * k};
                                     }};
                break;
            }
        }
    }
    // drop definitions that are cyclic
    std::map<ir::VarId, int> state;
    std::function<bool(ir::VarId)> acyclic = [&](ir::VarId x) -> bool {
        auto d = defs.find(x);
        if (d == defs.end()) return true;
        if (state[x] == 1) return false;
        if (state[x] == 2) return true;
        state[x] = 1;
        bool ok = true;
        for (ir::VarId y : d->second.deps) ok = ok && acyclic(y);
        state[x] = 2;
        return ok;
    };
    for (ir::VarId x : vars) {
        if (!acyclic(x)) {
            defs.erase(x);
            state.clear();
        }
    }

    std::vector<ir::VarId> free;
    for (ir::VarId x : vars) {
        if (!defs.count(x)) free.push_back(x);
    }
    std::stable_sort(free.begin(), free.end(),
                     [&](ir::VarId a, ir::VarId b) { return in.sort(a) == ir::VarSort::String && in.sort(b) == ir::VarSort::Int; });
    std::map<ir::VarId, std::size_t> level;
    for (std::size_t i = 0; i < free.size(); ++i) level[free[i]] = i + 1;
    std::function<std::size_t(ir::VarId)> level_of = [&](ir::VarId x) -> std::size_t {
        auto it = level.find(x);
        if (it != level.end()) return it->second;
        std::size_t lv = 0;
        for (ir::VarId y : defs.at(x).deps) lv = std::max(lv, level_of(y));
        level[x] = lv;
        return lv;
    };
    // definitions in dependency order, bucketed by level
    std::vector<std::vector<ir::VarId>> def_at(free.size() + 1);
    std::set<ir::VarId> placed;
    std::function<void(ir::VarId)> place = [&](ir::VarId x) {
        if (!defs.count(x) || placed.count(x)) return;
        for (ir::VarId y : defs.at(x).deps) place(y);
        placed.insert(x);
        def_at[level_of(x)].push_back(x);
    };
    for (auto& [x, d] : defs) place(x);

    std::vector<std::vector<const ir::Formula*>> checks(free.size() + 1);
    for (const ir::Formula* c : ir::top_conjuncts(f)) {
        std::vector<ir::VarId> cv;
        ir::collect_vars(*c, cv);
        std::size_t lv = 0;
        for (ir::VarId x : cv) lv = std::max(lv, level_of(x));
        checks[lv].push_back(c);
    }
    if (f.kind == ir::Formula::Kind::False) return {};

    const std::vector<Word> words = all_words(bounds.alphabet, bounds.max_len);
    Valuation val;
    std::uint64_t steps = 0;
    std::function<bool(std::size_t)> run_level = [&](std::size_t lv) -> bool {
        for (ir::VarId x : def_at[lv]) val[x] = defs.at(x).compute(val);
        for (const ir::Formula* c : checks[lv]) {
            if (++steps > bounds.budget) throw BudgetExceeded();
            if (!eval_formula(*c, val, db)) return false;
        }
        if (lv == free.size()) return true;
        ir::VarId x = free[lv];
        if (in.sort(x) == ir::VarSort::String) {
            for (const Word& w : words) {
                val[x] = w;
                if (run_level(lv + 1)) return true;
            }
        } else {
            for (std::int64_t n = bounds.int_lo; n <= bounds.int_hi; ++n) {
                val[x] = n;
                if (run_level(lv + 1)) return true;
            }
        }
        return false;
    };
    EnumResult out;
    out.sat = run_level(0);
    if (out.sat) out.witness = val;
    return out;
}

namespace {

void term_vars(const Term& t, std::set<std::string>& out) {
    if (t.op == Op::Var) out.insert(t.name);
    for (const auto& a : t.args) term_vars(*a, out);
}

}  // namespace

ScriptEnumResult enumerate_script_verdict(const std::vector<frontend::TermPtr>& assertions,
                                          const std::vector<std::pair<std::string, Sort>>& vars, const Bounds& bounds) {
    std::map<std::string, std::size_t> level;
    for (std::size_t i = 0; i < vars.size(); ++i) level[vars[i].first] = i + 1;
    std::vector<std::vector<const Term*>> checks(vars.size() + 1);
    for (const auto& a : assertions) {
        std::set<std::string> names;
        term_vars(*a, names);
        std::size_t lv = 0;
        for (const auto& n : names) lv = std::max(lv, level.at(n));
        checks[lv].push_back(a.get());
    }
    const std::vector<Word> words = all_words(bounds.alphabet, bounds.max_len);
    Env env;
    std::uint64_t steps = 0;
    std::function<bool(std::size_t)> run_level = [&](std::size_t lv) -> bool {
        for (const Term* c : checks[lv]) {
            if (++steps > bounds.budget) throw BudgetExceeded();
            if (!eval_bool(*c, env)) return false;
        }
        if (lv == vars.size()) return true;
        const auto& [name, sort] = vars[lv];
        if (sort == Sort::String) {
            for (const Word& w : words) {
                env[name] = w;
                if (run_level(lv + 1)) return true;
            }
        } else {
            for (std::int64_t n = bounds.int_lo; n <= bounds.int_hi; ++n) {
                env[name] = n;
                if (run_level(lv + 1)) return true;
            }
        }
        env.erase(name);
        return false;
    };
    ScriptEnumResult out;
    out.sat = run_level(0);
    if (out.sat) out.witness = env;
    return out;
}

}  // namespace strsolve::oracle
