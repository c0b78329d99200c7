#pragma once

// Random instance generators shared by the property tests and the acceptance runner.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "strsolve/frontend/parser.hpp"
#include "strsolve/frontend/term.hpp"
#include "strsolve/unicode.hpp"

namespace strsolve::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::string random_word(Rng& rng, const std::string& alpha, int max_len) {
    std::string w;
    int n = pick(rng, 0, max_len);
    for (int i = 0; i < n; ++i) w += alpha[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(alpha.size()) - 1))];
    return w;
}

inline std::string lit(const std::string& w) { return "\"" + w + "\""; }

inline std::string int_lit(std::int64_t v) { return v < 0 ? "(- " + std::to_string(-v) + ")" : std::to_string(v); }

/// RegLan term text over `alpha` of nesting depth at most `depth`.
inline std::string random_regex(Rng& rng, int depth, const std::string& alpha = "abc", bool allow_comp = true) {
    if (depth <= 0 || coin(rng, 0.3)) {
        switch (pick(rng, 0, 9)) {
            case 0: return "re.allchar";
            case 1: {
                char a = alpha[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(alpha.size()) - 1))];
                char b = alpha[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(alpha.size()) - 1))];
                if (a > b) std::swap(a, b);
                return "(re.range " + lit(std::string(1, a)) + " " + lit(std::string(1, b)) + ")";
            }
            case 2:
                if (coin(rng, 0.3)) return coin(rng) ? "re.none" : "re.all";
                [[fallthrough]];
            default: return "(str.to_re " + lit(random_word(rng, alpha, 2)) + ")";
        }
    }
    auto sub = [&] { return random_regex(rng, depth - 1, alpha, allow_comp); };
    switch (pick(rng, 0, allow_comp ? 7 : 6)) {
        case 0: return "(re.++ " + sub() + " " + sub() + ")";
        case 1: return "(re.union " + sub() + " " + sub() + ")";
        case 2: return "(re.inter " + sub() + " " + sub() + ")";
        case 3: return "(re.* " + sub() + ")";
        case 4: return "(re.+ " + sub() + ")";
        case 5: return "(re.opt " + sub() + ")";
        case 6: return "(re.++ " + sub() + " " + sub() + ")";
        default: return "(re.comp " + sub() + ")";
    }
}

/// Parses a RegLan term given as text.
inline frontend::TermPtr parse_regex(const std::string& re) {
    auto s = frontend::parse_script("(assert (str.in_re \"\" " + re + "))");
    return s.commands.at(0).term->args.at(1);
}

/// A self-contained script whose variables are all boxed by explicit
/// assertions, so that the bounded oracle verdict is exact.
struct Instance {
    std::string text;
    std::vector<std::pair<std::string, frontend::Sort>> vars;
    std::string alphabet;
    int max_len = 0;
};

class InstanceGen {
public:
    InstanceGen(Rng& rng, std::string alpha) : rng_(rng), alpha_(std::move(alpha)) {}

    Instance make() {
        Instance inst;
        inst.alphabet = alpha_;
        int nstr = pick(rng_, 1, 4);
        nints_ = coin(rng_, 0.4) ? 1 : 0;
        max_len_ = nstr <= 2 ? 4 : nstr == 3 ? 3 : 2;
        if (nints_ && nstr >= 3) max_len_ = 2;
        inst.max_len = max_len_;
        strs_.clear();
        for (int i = 0; i < nstr; ++i) strs_.push_back("x" + std::to_string(i));
        std::string t = "(set-logic QF_SLIA)\n";
        std::string box = "((_ re.loop 0 " + std::to_string(max_len_) + ") (re.union";
        for (char c : alpha_) box += " (str.to_re " + lit(std::string(1, c)) + ")";
        box += "))";
        for (auto& x : strs_) {
            t += "(declare-fun " + x + " () String)\n";
            inst.vars.emplace_back(x, frontend::Sort::String);
        }
        if (nints_) {
            t += "(declare-fun n () Int)\n";
            inst.vars.emplace_back("n", frontend::Sort::Int);
        }
        for (auto& x : strs_) t += "(assert (str.in_re " + x + " " + box + "))\n";
        if (nints_) t += "(assert (<= (- 8) n))\n(assert (<= n 8))\n";
        int natoms = pick(rng_, 1, 6);
        for (int i = 0; i < natoms; ++i) t += "(assert " + atom(2) + ")\n";
        t += "(check-sat)\n";
        inst.text = t;
        return inst;
    }

private:
    std::string svar() { return strs_[static_cast<std::size_t>(pick(rng_, 0, static_cast<int>(strs_.size()) - 1))]; }
    std::string sconst() { return lit(random_word(rng_, alpha_, 2)); }
    std::string small_int() { return int_lit(pick(rng_, -2, 4)); }

    std::string sterm(int depth) {
        if (depth <= 0 || coin(rng_, 0.45)) return coin(rng_, 0.8) ? svar() : sconst();
        switch (pick(rng_, 0, 8)) {
            case 0:
            case 1: return "(str.++ " + sterm(depth - 1) + " " + sterm(depth - 1) + ")";
            case 2: return "(str.substr " + sterm(depth - 1) + " " + iterm(depth - 1) + " " + iterm(depth - 1) + ")";
            case 3: return "(str.at " + sterm(depth - 1) + " " + iterm(depth - 1) + ")";
            case 4: return "(str.replace " + sterm(depth - 1) + " " + sconst() + " " + sconst() + ")";
            case 5: return "(str.replace_all " + sterm(depth - 1) + " " + sconst() + " " + sconst() + ")";
            case 6: return "(str.reverse " + sterm(depth - 1) + ")";
            case 7: return "(str.from_int " + iterm(depth - 1) + ")";
            default: return "(str.++ " + svar() + " " + sconst() + ")";
        }
    }

    std::string iterm(int depth) {
        if (depth <= 0 || coin(rng_, 0.5)) {
            if (nints_ && coin(rng_, 0.5)) return "n";
            return coin(rng_) ? small_int() : "(str.len " + svar() + ")";
        }
        switch (pick(rng_, 0, 4)) {
            case 0: return "(str.len " + sterm(depth - 1) + ")";
            case 1: return "(str.indexof " + sterm(depth - 1) + " " + sterm(depth - 1) + " " + iterm(depth - 1) + ")";
            case 2: return "(str.to_int " + sterm(depth - 1) + ")";
            case 3: return "(+ " + iterm(depth - 1) + " " + small_int() + ")";
            default: return "(- " + iterm(depth - 1) + " " + iterm(depth - 1) + ")";
        }
    }

    std::string atom(int depth) {
        switch (pick(rng_, 0, 12)) {
            case 0:
            case 1: return "(= " + svar() + " " + sterm(depth) + ")";
            case 2: return "(not (= " + sterm(depth - 1) + " " + sterm(depth - 1) + "))";
            case 3: return "(str.in_re " + svar() + " " + random_regex(rng_, 3, alpha_, false) + ")";
            case 4: return "(not (str.in_re " + svar() + " " + random_regex(rng_, 2, alpha_, false) + "))";
            case 5: return "(str.prefixof " + sterm(depth - 1) + " " + sterm(depth - 1) + ")";
            case 6: return "(not (str.suffixof " + sterm(depth - 1) + " " + sterm(depth - 1) + "))";
            case 7: {
                std::string c = "(str.contains " + sterm(depth - 1) + " " + sterm(depth - 1) + ")";
                return coin(rng_) ? c : "(not " + c + ")";
            }
            case 8: return "(<= " + iterm(depth) + " " + iterm(depth - 1) + ")";
            case 9: return "(= " + iterm(depth) + " " + iterm(depth - 1) + ")";
            case 10: return "(or " + atom(0) + " " + atom(0) + ")";
            case 11: return "(= (str.++ " + svar() + " " + svar() + ") (str.++ " + svar() + " " + svar() + "))";
            default: return "(not " + atom(0) + ")";
        }
    }

    Rng& rng_;
    std::string alpha_;
    std::vector<std::string> strs_;
    int nints_ = 0;
    int max_len_ = 4;
};

/// Straight-line script: inputs x0 (and x1), each further variable defined
/// once from earlier ones by concat, reverse or a constant replace_all, and a
/// few regular constraints.
inline std::string straight_line(Rng& rng, const std::string& alpha = "abc") {
    int n = pick(rng, 3, 6);
    int inputs = pick(rng, 1, 2);
    std::string t = "(set-logic QF_S)\n";
    for (int i = 0; i < n; ++i) t += "(declare-fun x" + std::to_string(i) + " () String)\n";
    auto earlier = [&](int i) {
        if (coin(rng, 0.2)) return lit(random_word(rng, alpha, 2));
        return "x" + std::to_string(pick(rng, 0, i - 1));
    };
    for (int i = inputs; i < n; ++i) {
        std::string def;
        switch (pick(rng, 0, 3)) {
            case 0:
            case 1: def = "(str.++ " + earlier(i) + " " + earlier(i) + ")"; break;
            case 2: def = "(str.reverse x" + std::to_string(pick(rng, 0, i - 1)) + ")"; break;
            default: {
                std::string p = random_word(rng, alpha, 2);
                if (p.empty()) p = "a";
                def = "(str.replace_all x" + std::to_string(pick(rng, 0, i - 1)) + " " + lit(p) + " " +
                      lit(random_word(rng, alpha, 2)) + ")";
            }
        }
        t += "(assert (= x" + std::to_string(i) + " " + def + "))\n";
    }
    int nre = pick(rng, 1, 3);
    for (int k = 0; k < nre; ++k) {
        t += "(assert (str.in_re x" + std::to_string(pick(rng, 0, n - 1)) + " " + random_regex(rng, 3, alpha, false) + "))\n";
    }
    t += "(check-sat)\n";
    return t;
}

inline Word W(const std::string& s) { return utf8_decode(s); }

}  // namespace strsolve::testing
