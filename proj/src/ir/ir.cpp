#include "strsolve/ir/ir.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "strsolve/error.hpp"
#include "strsolve/frontend/printer.hpp"

namespace strsolve::ir {

// ------------------------------------------------------------------ Interner

VarId Interner::add(std::string name, VarSort sort, bool fresh) {
    auto id = static_cast<VarId>(vars_.size());
    by_name_.emplace(name, id);
    vars_.push_back(VarInfo{std::move(name), sort, fresh});
    return id;
}

VarId Interner::intern(const std::string& name, VarSort sort) {
    {
        std::shared_lock lock(mu_);
        auto it = by_name_.find(name);
        if (it != by_name_.end()) {
            if (vars_[it->second].sort != sort) throw PreconditionViolation("variable '" + name + "' used at two sorts");
            return it->second;
        }
    }
    std::unique_lock lock(mu_);
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    return add(name, sort, !name.empty() && name[0] == '@');
}

VarId Interner::fresh(VarSort sort, const std::string& hint) {
    std::unique_lock lock(mu_);
    return add("@" + hint + std::to_string(counter_++), sort, true);
}

VarId Interner::length_var(VarId x) {
    {
        std::shared_lock lock(mu_);
        auto it = length_.find(x);
        if (it != length_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto it = length_.find(x);
    if (it != length_.end()) return it->second;
    VarId l = add("@len(" + vars_[x].name + ")", VarSort::Int, true);
    length_.emplace(x, l);
    length_rev_.emplace(l, x);
    return l;
}

std::optional<VarId> Interner::length_of(VarId len) const {
    std::shared_lock lock(mu_);
    auto it = length_rev_.find(len);
    if (it == length_rev_.end()) return std::nullopt;
    return it->second;
}

VarId Interner::const_var(const Word& w) {
    {
        std::shared_lock lock(mu_);
        auto it = str_consts_.find(w);
        if (it != str_consts_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto it = str_consts_.find(w);
    if (it != str_consts_.end()) return it->second;
    VarId x = add("@c" + std::to_string(counter_++), VarSort::String, true);
    str_consts_.emplace(w, x);
    str_value_.emplace(x, w);
    return x;
}

VarId Interner::int_const(std::int64_t v) {
    {
        std::shared_lock lock(mu_);
        auto it = int_consts_.find(v);
        if (it != int_consts_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto it = int_consts_.find(v);
    if (it != int_consts_.end()) return it->second;
    VarId x = add("@n" + std::to_string(counter_++), VarSort::Int, true);
    int_consts_.emplace(v, x);
    int_value_.emplace(x, v);
    return x;
}

std::optional<Word> Interner::const_string(VarId x) const {
    std::shared_lock lock(mu_);
    auto it = str_value_.find(x);
    if (it == str_value_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::int64_t> Interner::const_int(VarId x) const {
    std::shared_lock lock(mu_);
    auto it = int_value_.find(x);
    if (it == int_value_.end()) return std::nullopt;
    return it->second;
}

std::optional<VarId> Interner::lookup(const std::string& name) const {
    std::shared_lock lock(mu_);
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

VarInfo Interner::info(VarId x) const {
    std::shared_lock lock(mu_);
    if (x >= vars_.size()) throw PreconditionViolation("unknown variable id " + std::to_string(x));
    return vars_[x];
}

std::size_t Interner::size() const {
    std::shared_lock lock(mu_);
    return vars_.size();
}

// ------------------------------------------------------------------- atoms

std::size_t arity(Fn fn) {
    switch (fn) {
        case Fn::Concat: return 2;
        case Fn::Replace:
        case Fn::ReplaceAll: return 3;
        case Fn::ReplaceRe:
        case Fn::ReplaceReAll: return 2;
        case Fn::Reverse: return 1;
        case Fn::At: return 2;
        case Fn::Substr:
        case Fn::IndexOf: return 3;
        case Fn::ToInt:
        case Fn::FromInt:
        case Fn::Len: return 1;
    }
    return 0;
}

const char* fn_name(Fn fn) {
    switch (fn) {
        case Fn::Concat: return "str.++";
        case Fn::Replace: return "str.replace";
        case Fn::ReplaceAll: return "str.replace_all";
        case Fn::ReplaceRe: return "str.replace_re";
        case Fn::ReplaceReAll: return "str.replace_re_all";
        case Fn::Reverse: return "str.reverse";
        case Fn::At: return "str.at";
        case Fn::Substr: return "str.substr";
        case Fn::IndexOf: return "str.indexof";
        case Fn::ToInt: return "str.to_int";
        case Fn::FromInt: return "str.from_int";
        case Fn::Len: return "str.len";
    }
    return "?";
}

Formula Formula::conj(std::vector<Formula> cs) {
    Formula out{Kind::And, {}, {}};
    for (auto& c : cs) {
        if (c.kind == Kind::True) continue;
        if (c.kind == Kind::False) return falsity();
        if (c.kind == Kind::And) {
            for (auto& g : c.children) out.children.push_back(std::move(g));
        } else {
            out.children.push_back(std::move(c));
        }
    }
    if (out.children.empty()) return truth();
    if (out.children.size() == 1) return std::move(out.children[0]);
    return out;
}

Formula Formula::disj(std::vector<Formula> cs) {
    Formula out{Kind::Or, {}, {}};
    for (auto& c : cs) {
        if (c.kind == Kind::False) continue;
        if (c.kind == Kind::True) return truth();
        if (c.kind == Kind::Or) {
            for (auto& g : c.children) out.children.push_back(std::move(g));
        } else {
            out.children.push_back(std::move(c));
        }
    }
    if (out.children.empty()) return falsity();
    if (out.children.size() == 1) return std::move(out.children[0]);
    return out;
}

namespace {

Lin canonical_lin(std::vector<std::pair<std::int64_t, VarId>> terms, std::int64_t constant, Rel rel) {
    std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.second < b.second; });
    Lin out;
    for (auto& [c, v] : terms) {
        if (!out.terms.empty() && out.terms.back().second == v) {
            out.terms.back().first += c;
        } else {
            out.terms.emplace_back(c, v);
        }
    }
    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(), [](auto& t) { return t.first == 0; }),
                    out.terms.end());
    out.constant = constant;
    out.rel = rel;
    return out;
}

}  // namespace

Lin lin_eq(std::vector<std::pair<std::int64_t, VarId>> terms, std::int64_t constant) {
    return canonical_lin(std::move(terms), constant, Rel::Eq);
}

Lin lin_le(std::vector<std::pair<std::int64_t, VarId>> terms, std::int64_t constant) {
    return canonical_lin(std::move(terms), constant, Rel::Le);
}

std::vector<VarId> vars_of(const Atom& a) {
    return std::visit(
        [](const auto& x) -> std::vector<VarId> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Pred>) {
                return {x.a, x.b};
            } else if constexpr (std::is_same_v<T, FunEq>) {
                std::vector<VarId> out{x.out};
                out.insert(out.end(), x.args.begin(), x.args.end());
                return out;
            } else if constexpr (std::is_same_v<T, InRe>) {
                return {x.x};
            } else {
                std::vector<VarId> out;
                for (auto& [c, v] : x.terms) out.push_back(v);
                return out;
            }
        },
        a);
}

void collect_vars(const Formula& f, std::vector<VarId>& out) {
    if (f.kind == Formula::Kind::Lit) {
        auto vs = vars_of(f.lit.atom);
        out.insert(out.end(), vs.begin(), vs.end());
    }
    for (const auto& c : f.children) collect_vars(c, out);
}

Atom rename(const Atom& a, const std::unordered_map<VarId, VarId>& m) {
    auto r = [&](VarId v) {
        auto it = m.find(v);
        return it == m.end() ? v : it->second;
    };
    return std::visit(
        [&](const auto& x) -> Atom {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Pred>) {
                return Pred{x.kind, r(x.a), r(x.b)};
            } else if constexpr (std::is_same_v<T, FunEq>) {
                FunEq out = x;
                out.out = r(x.out);
                for (auto& v : out.args) v = r(v);
                return out;
            } else if constexpr (std::is_same_v<T, InRe>) {
                return InRe{r(x.x), x.lang};
            } else {
                auto terms = x.terms;
                for (auto& t : terms) t.second = r(t.second);
                return canonical_lin(std::move(terms), x.constant, x.rel);
            }
        },
        a);
}

Formula rename(const Formula& f, const std::unordered_map<VarId, VarId>& m) {
    Formula out = f;
    if (f.kind == Formula::Kind::Lit) out.lit.atom = rename(f.lit.atom, m);
    for (auto& c : out.children) c = rename(c, m);
    return out;
}

std::vector<const Formula*> top_conjuncts(const Formula& f) {
    if (f.kind == Formula::Kind::And) {
        std::vector<const Formula*> out;
        for (const auto& c : f.children) out.push_back(&c);
        return out;
    }
    if (f.kind == Formula::Kind::True) return {};
    return {&f};
}

std::string to_string(const Atom& a, const Interner& in) {
    std::ostringstream os;
    auto n = [&](VarId v) { return in.name(v); };
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Pred>) {
                static const char* names[] = {"str.prefixof", "str.suffixof", "str.contains", "=", "distinct"};
                os << "(" << names[static_cast<int>(x.kind)] << " " << n(x.a) << " " << n(x.b) << ")";
            } else if constexpr (std::is_same_v<T, FunEq>) {
                os << "(= " << n(x.out) << " (" << fn_name(x.fn);
                if (x.fn == Fn::ReplaceRe || x.fn == Fn::ReplaceReAll) {
                    os << " " << n(x.args[0]) << " <A" << x.lang->id << "> " << n(x.args[1]);
                } else {
                    for (VarId v : x.args) os << " " << n(v);
                }
                os << "))";
            } else if constexpr (std::is_same_v<T, InRe>) {
                os << "(str.in_re " << n(x.x) << " <A" << x.lang.id << ">)";
            } else {
                os << "(" << (x.rel == Rel::Eq ? "=" : "<=") << " (+";
                for (auto& [c, v] : x.terms) os << " (* " << frontend::print_int(c) << " " << n(v) << ")";
                os << " " << frontend::print_int(x.constant) << ") 0)";
            }
        },
        a);
    return os.str();
}

std::string to_string(const Literal& l, const Interner& in) {
    return l.negated ? "(not " + to_string(l.atom, in) + ")" : to_string(l.atom, in);
}

std::string to_string(const Formula& f, const Interner& in) {
    switch (f.kind) {
        case Formula::Kind::True: return "true";
        case Formula::Kind::False: return "false";
        case Formula::Kind::Lit: return to_string(f.lit, in);
        default: break;
    }
    std::string out = f.kind == Formula::Kind::And ? "(and" : "(or";
    for (const auto& c : f.children) out += " " + to_string(c, in);
    return out + ")";
}

}  // namespace strsolve::ir
