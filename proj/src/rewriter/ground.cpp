#include <limits>

#include "strsolve/rewriter/rewriter.hpp"

namespace strsolve::rewriter {

namespace ground {

Word substr(const Word& s, std::int64_t i, std::int64_t n) {
    const auto len = static_cast<std::int64_t>(s.size());
    if (i < 0 || n <= 0 || i >= len) return {};
    return s.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(std::min(n, len - i)));
}

std::int64_t indexof(const Word& s, const Word& t, std::int64_t i) {
    const auto len = static_cast<std::int64_t>(s.size());
    if (i < 0 || i > len) return -1;
    auto pos = s.find(t, static_cast<std::size_t>(i));
    return pos == Word::npos ? -1 : static_cast<std::int64_t>(pos);
}

Word replace(const Word& s, const Word& p, const Word& r) {
    if (p.empty()) return r + s;
    auto pos = s.find(p);
    if (pos == Word::npos) return s;
    Word out = s;
    out.replace(pos, p.size(), r);
    return out;
}

Word replace_all(const Word& s, const Word& p, const Word& r) {
    if (p.empty()) return s;
    Word out;
    std::size_t from = 0;
    for (auto pos = s.find(p); pos != Word::npos; pos = s.find(p, from)) {
        out.append(s, from, pos - from);
        out += r;
        from = pos + p.size();
    }
    out.append(s, from);
    return out;
}

std::int64_t to_int(const Word& s) {
    if (s.empty()) return -1;
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    std::int64_t v = 0;
    for (CodePoint c : s) {
        if (c < U'0' || c > U'9') return -1;
        const int d = static_cast<int>(c - U'0');
        v = v > (kMax - d) / 10 ? kMax : v * 10 + d;
    }
    return v;
}

Word from_int(std::int64_t n) {
    if (n < 0) return {};
    std::string d = std::to_string(n);
    return Word(d.begin(), d.end());
}

Word replace_re(const Word& s, const std::function<bool(const Word&)>& in_lang, const Word& r, bool all) {
    Word out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::optional<std::size_t> end;
        for (std::size_t j = all ? i + 1 : i; j <= s.size(); ++j) {
            if (in_lang(s.substr(i, j - i))) {
                end = j;
                break;
            }
        }
        if (!end) {
            if (i < s.size()) out.push_back(s[i]);
            ++i;
            continue;
        }
        out += r;
        if (!all) {
            out.append(s, *end);
            return out;
        }
        i = *end;
    }
    return out;
}

}  // namespace ground

std::optional<Value> eval_fun(const FunEq& fe, const Lookup& v, AutomatonDb& db) {
    std::vector<Value> a;
    for (VarId x : fe.args) {
        auto val = v(x);
        if (!val) return std::nullopt;
        a.push_back(std::move(*val));
    }
    auto S = [&](std::size_t k) -> const Word& { return as_string(a[k]); };
    auto I = [&](std::size_t k) { return as_int(a[k]); };
    switch (fe.fn) {
        case ir::Fn::Concat: return S(0) + S(1);
        case ir::Fn::Replace: return ground::replace(S(0), S(1), S(2));
        case ir::Fn::ReplaceAll: return ground::replace_all(S(0), S(1), S(2));
        case ir::Fn::ReplaceRe:
        case ir::Fn::ReplaceReAll: {
            auto in_lang = [&](const Word& w) { return db.accepts(*fe.lang, w); };
            return ground::replace_re(S(0), in_lang, S(1), fe.fn == ir::Fn::ReplaceReAll);
        }
        case ir::Fn::Reverse: return Word(S(0).rbegin(), S(0).rend());
        case ir::Fn::At: return ground::substr(S(0), I(1), 1);
        case ir::Fn::Substr: return ground::substr(S(0), I(1), I(2));
        case ir::Fn::IndexOf: return ground::indexof(S(0), S(1), I(2));
        case ir::Fn::ToInt: return ground::to_int(S(0));
        case ir::Fn::FromInt: return ground::from_int(I(0));
        case ir::Fn::Len: return static_cast<std::int64_t>(S(0).size());
    }
    return std::nullopt;
}

std::optional<bool> eval_literal(const Literal& l, const Lookup& v, AutomatonDb& db) {
    std::optional<bool> res;
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ir::Pred>) {
                auto x = v(a.a), y = v(a.b);
                if (!x || !y) return;
                const Word& s = as_string(*x);
                const Word& t = as_string(*y);
                switch (a.kind) {
                    case ir::PredKind::PrefixOf: res = t.compare(0, s.size(), s) == 0 && s.size() <= t.size(); break;
                    case ir::PredKind::SuffixOf:
                        res = s.size() <= t.size() && t.compare(t.size() - s.size(), s.size(), s) == 0;
                        break;
                    case ir::PredKind::Contains: res = s.find(t) != Word::npos; break;
                    case ir::PredKind::StrEq: res = s == t; break;
                    case ir::PredKind::StrDiseq: res = s != t; break;
                }
            } else if constexpr (std::is_same_v<T, ir::FunEq>) {
                auto out = v(a.out);
                if (!out) return;
                auto val = eval_fun(a, v, db);
                if (val) res = *val == *out;
            } else if constexpr (std::is_same_v<T, ir::InRe>) {
                auto x = v(a.x);
                if (x) res = db.accepts(a.lang, as_string(*x));
            } else {
                __int128 sum = a.constant;
                for (const auto& [c, x] : a.terms) {
                    auto val = v(x);
                    if (!val) return;
                    sum += __int128{c} * as_int(*val);
                }
                res = a.rel == ir::Rel::Eq ? sum == 0 : sum <= 0;
            }
        },
        l.atom);
    if (res && l.negated) res = !*res;
    return res;
}

}  // namespace strsolve::rewriter
