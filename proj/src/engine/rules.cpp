#include <algorithm>

#include "strsolve/engine/engine.hpp"
#include "strsolve/error.hpp"

namespace strsolve::engine {

using ir::Fn;
using ir::VarSort;

namespace {

// Largest finite pattern language turned into a replacement transducer.
constexpr std::size_t kMaxPatternWords = 64;
constexpr std::size_t kMaxPatternLength = 16;

std::string word_key(const Word& w) { return utf8_encode(w) + '\x1f'; }

}  // namespace

Prover::Replacer Prover::replacer_for(const Goal& g, const FunEq& eq) {
    Replacer r;
    auto str = [&](VarId x) -> std::optional<Word> {
        auto it = g.strings.find(rep(g, x));
        if (it == g.strings.end()) return std::nullopt;
        return it->second;
    };
    std::string key = std::to_string(static_cast<int>(eq.fn)) + ":";
    std::optional<Word> repl;
    switch (eq.fn) {
        case Fn::Replace:
        case Fn::ReplaceAll: {
            auto p = str(eq.args[1]);
            repl = str(eq.args[2]);
            if (!p || !repl) return r;
            r.exact = true;
            if (p->empty()) {
                if (eq.fn == Fn::ReplaceAll) r.identity = true; else r.prefix = *repl;
                return r;
            }
            key += word_key(*p) + word_key(*repl);
            auto it = transducers_.find(key);
            if (it == transducers_.end()) {
                it = transducers_
                         .emplace(key, eq.fn == Fn::ReplaceAll ? xform::build_replace_all(*p, *repl)
                                                               : xform::build_replace_first(*p, *repl))
                         .first;
            }
            r.t = &it->second;
            return r;
        }
        case Fn::ReplaceRe:
        case Fn::ReplaceReAll: {
            repl = str(eq.args[1]);
            if (!repl) return r;
            const bool all = eq.fn == Fn::ReplaceReAll;
            auto a = db_.get(*eq.lang);
            if (!all && automata::accepts(*a, Word{})) {
                r.exact = true;
                r.prefix = *repl;
                return r;
            }
            auto words = automata::finite_words(*a, kMaxPatternWords);
            if (!words) return r;
            std::vector<Word> pats;
            for (Word& w : *words) {
                if (w.size() > kMaxPatternLength) return r;
                if (!w.empty()) pats.push_back(std::move(w));
            }
            r.exact = true;
            if (pats.empty()) {
                r.identity = true;
                return r;
            }
            key += std::to_string(eq.lang->id) + ":" + word_key(*repl);
            auto it = transducers_.find(key);
            if (it == transducers_.end()) it = transducers_.emplace(key, xform::build_replace_set(pats, *repl, all)).first;
            r.t = &it->second;
            return r;
        }
        default: return r;
    }
}

bool Prover::rule_rcp_forward(Goal& g, const FunEq& eq) {
    AutomatonRef post;
    switch (eq.fn) {
        case Fn::Concat: post = db_.concat(lang_of(g, eq.args[0]), lang_of(g, eq.args[1])); break;
        case Fn::Reverse: post = db_.reverse(lang_of(g, eq.args[0])); break;
        default: {
            Replacer r = replacer_for(g, eq);
            if (!r.exact) {
                g.tainted = true;
                return true;
            }
            AutomatonRef s = lang_of(g, eq.args[0]);
            if (r.identity) post = s;
            else if (r.prefix) post = db_.concat(db_.word(*r.prefix), s);
            else post = xform::post_image(db_, *r.t, s);
        }
    }
    AutomatonRef cur = lang_of(g, eq.out);
    if (db_.subset_of(cur, post) == true) return true;
    return add_lang(g, eq.out, post);
}

std::vector<Goal> Prover::rule_rcp_backward(Goal g, const FunEq& eq) {
    AutomatonRef out = lang_of(g, eq.out);
    switch (eq.fn) {
        case Fn::Concat: {
            const VarId a = eq.args[0], b = eq.args[1];
            auto sa = value_of(g, a), sb = value_of(g, b);
            if (sa || sb) {
                bool ok = sa ? add_lang(g, b, db_.left_quotient(as_string(*sa), out))
                             : add_lang(g, a, db_.right_quotient(out, as_string(*sb)));
                if (!ok) return {};
                return {std::move(g)};
            }
            lia::Interval la = g.ints.get(in_.length_var(a)), lb = g.ints.get(in_.length_var(b));
            auto fits = [&](AutomatonRef x, const lia::Interval& iv) {
                auto bd = db_.length_bounds(x);
                if (iv.hi && static_cast<std::int64_t>(std::min<std::uint64_t>(bd.min, lia::kBoundLimit)) > *iv.hi) return false;
                if (bd.max && iv.lo && static_cast<std::int64_t>(std::min<std::uint64_t>(*bd.max, lia::kBoundLimit)) < *iv.lo) {
                    return false;
                }
                return true;
            };
            std::vector<Goal> kids;
            for (auto [p, s] : db_.split_at_states(out)) {
                if (!fits(p, la) || !fits(s, lb)) continue;
                Goal c = g;
                if (add_lang(c, a, p) && add_lang(c, b, s)) kids.push_back(std::move(c));
            }
            return kids;
        }
        case Fn::Reverse:
            if (!add_lang(g, eq.args[0], db_.reverse(out))) return {};
            return {std::move(g)};
        default: {
            Replacer r = replacer_for(g, eq);
            if (!r.exact) {
                g.tainted = true;
                return {std::move(g)};
            }
            AutomatonRef pre;
            if (r.identity) pre = out;
            else if (r.prefix) pre = db_.left_quotient(*r.prefix, out);
            else pre = xform::pre_image(db_, *r.t, out);
            if (!add_lang(g, eq.args[0], pre)) return {};
            return {std::move(g)};
        }
    }
}

std::vector<Goal> Prover::rule_nielsen(Goal g, const FunEq& a, const FunEq& b) {
    const VarId x1 = a.args[0], x2 = a.args[1], y1 = b.args[0], y2 = b.args[1];
    auto L = [&](VarId v) { return in_.length_var(v); };
    g.atoms.erase(std::remove(g.atoms.begin(), g.atoms.end(), Literal{b, false}), g.atoms.end());
    std::vector<Goal> kids;
    for (int k = 0; k < 2; ++k) {
        Goal c = g;
        VarId w = in_.fresh(VarSort::String, "w");
        bool ok = true;
        if (k == 0) {
            // y1 is a prefix of x1
            ok = add_literal(c, {ir::lin_le({{1, L(y1)}, {-1, L(x1)}}, 0), false}) &&
                 add_literal(c, {FunEq{x1, Fn::Concat, {y1, w}, std::nullopt}, false}) &&
                 add_literal(c, {FunEq{y2, Fn::Concat, {w, x2}, std::nullopt}, false});
        } else {
            ok = add_literal(c, {ir::lin_le({{1, L(x1)}, {-1, L(y1)}}, 1), false}) &&
                 add_literal(c, {FunEq{y1, Fn::Concat, {x1, w}, std::nullopt}, false}) &&
                 add_literal(c, {FunEq{x2, Fn::Concat, {w, y2}, std::nullopt}, false});
        }
        if (ok) kids.push_back(std::move(c));
    }
    return kids;
}

std::vector<Goal> Prover::rule_cut(Goal g, VarId x) {
    x = rep(g, x);
    AutomatonRef a = lang_of(g, x);
    lia::Interval iv = g.ints.get(in_.length_var(x));
    auto lo = static_cast<std::uint64_t>(std::max<std::int64_t>(0, iv.lo.value_or(0)));
    std::optional<std::uint64_t> hi;
    if (iv.hi) hi = static_cast<std::uint64_t>(std::max<std::int64_t>(0, *iv.hi));
    if (iv.hi && *iv.hi < 0) return {};
    AutomatonRef window = db_.intersect(a, db_.length_window(lo, hi));
    auto res = db_.is_empty(window);
    if (res.empty) {
        close(g, in_.name(x));
        return {};
    }
    const Word w = *res.witness;
    Goal bound = g;
    std::vector<Goal> kids;
    if (bind_string(bound, x, w)) kids.push_back(std::move(bound));
    if (add_lang(g, x, db_.excluding_word(w))) kids.push_back(std::move(g));
    return kids;
}

std::vector<Goal> Prover::rule_subdivide(Goal g, VarId n, Rule) {
    auto [lo, hi] = lia::subdivide(n, g.ints);
    Goal other = g;
    g.ints = std::move(lo);
    other.ints = std::move(hi);
    return {std::move(g), std::move(other)};
}

}  // namespace strsolve::engine
