// Acceptance checks; one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "gen.hpp"
#include "strsolve/engine/engine.hpp"
#include "strsolve/frontend/runner.hpp"
#include "strsolve/ir/normalize.hpp"
#include "strsolve/oracle/oracle.hpp"
#include "strsolve/regexc/regexc.hpp"
#include "strsolve/xform/transducer.hpp"

using namespace strsolve;
using strsolve::testing::W;
namespace t = strsolve::testing;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::vector<frontend::TermPtr> assertions(const frontend::Script& s) {
    std::vector<frontend::TermPtr> r;
    for (auto& c : s.commands) {
        if (c.kind == frontend::CommandKind::Assert) r.push_back(c.term);
    }
    return r;
}

struct Solved {
    ir::Interner in;
    automata::AutomatonDb db;
    ir::Formula f;
    engine::Verdict v;
    std::vector<std::string> trace;
};

void load(Solved& s, const std::string& text) {
    s.f = ir::normalize_all(assertions(frontend::parse_script(text)), s.in, s.db);
}

void solve_text(Solved& s, const std::string& text, engine::SolverConfig cfg) {
    load(s, text);
    cfg.trace_level = std::max(cfg.trace_level, 1);
    cfg.trace_sink = [&s](const std::string& l) { s.trace.push_back(l); };
    s.v = engine::solve(s.f, s.in, s.db, cfg);
}

engine::SolverConfig flags(bool f, bool b, bool n) {
    engine::SolverConfig c;
    c.forward = f;
    c.backward = b;
    c.nielsen = n;
    return c;
}

int count_rule(const std::vector<std::string>& lines, const std::string& tag) {
    int n = 0;
    for (auto& l : lines) n += l.rfind("rule=" + tag + " ", 0) == 0 ? 1 : 0;
    return n;
}

const std::string kABA = "(re.++ (re.* (str.to_re \"a\")) (str.to_re \"b\") (re.* (str.to_re \"a\")))";
const std::string kACA = "(re.++ (re.* (str.to_re \"a\")) (str.to_re \"c\") (re.* (str.to_re \"a\")))";
const std::string kCommutation =
    "(declare-fun x () String)(declare-fun y () String)(declare-fun z () String)"
    "(assert (= z (str.++ x y)))(assert (= z (str.++ y x)))"
    "(assert (str.in_re x " + kABA + "))(assert (str.in_re y " + kACA + "))";

const std::string kQuadratic =
    "(declare-fun x () String)(assert (= (str.++ x \"a\") (str.++ \"b\" x)))(assert (<= (str.len x) 100))";

// ---------------------------------------------------------------- 1

bool criterion1(std::string& detail) {
    Solved s;
    auto t0 = Clock::now();
    solve_text(s, kCommutation, flags(true, true, false));
    auto ms = ms_since(t0);
    int fwd = count_rule(s.trace, "fwd"), close = count_rule(s.trace, "close");
    detail = std::string(engine::status_name(s.v.status)) + " in " + std::to_string(ms) + " ms, fwd=" + std::to_string(fwd) +
             " close=" + std::to_string(close);
    return s.v.status == engine::Status::Unsat && ms < 1000 && fwd == 2 && close >= 1;
}

// ---------------------------------------------------------------- 2

bool criterion2(std::string& detail) {
    Solved s;
    auto cfg = flags(true, true, false);
    cfg.max_models = 10;
    solve_text(s, "(declare-fun x () String)(declare-fun y () String)(declare-fun z () String)"
                  "(assert (= x (str.++ y z)))(assert (= x \"ab\"))",
               cfg);
    ir::VarId y = *s.in.lookup("y"), z = *s.in.lookup("z");
    std::set<std::pair<Word, Word>> got;
    for (auto& m : s.v.models) got.emplace(as_string(m.at(y)), as_string(m.at(z)));
    std::set<std::pair<Word, Word>> expect{{W("ab"), W("")}, {W("a"), W("b")}, {W(""), W("ab")}};
    detail = std::to_string(s.v.models.size()) + " models, " + std::to_string(got.size()) + " distinct pairs";
    return s.v.status == engine::Status::Sat && got == expect && s.v.models.size() == 3;
}

// ---------------------------------------------------------------- 3

bool criterion3(std::string& detail) {
    const std::string script = R"((set-logic QF_SLIA)
(declare-fun x () String)
(declare-fun y () String)
(declare-fun z () String)
(declare-fun k () Int)
(assert (= (str.len x) (+ k 1)))
(assert (= x (str.++ y z)))
(assert (str.in_re x (re.+ (re.union (str.to_re "a") (str.to_re "b")))))
(check-sat)
(get-model)
)";
    auto parsed = frontend::parse_script(script);
    frontend::RunOptions o;
    o.config.time_cap_ms = 10000;
    std::vector<frontend::CheckResult> results;
    auto responses = frontend::run_script(parsed, o, &results);
    if (responses.size() != 2 || responses[0].text != "sat" || !results[0].model) {
        detail = "no sat model";
        return false;
    }
    // re-check every atom of the normal form under the printed model; the
    // variables normalization introduced are recomputed from their definitions
    const auto& values = results[0].model->values;
    ir::Interner in;
    automata::AutomatonDb db;
    ir::Formula f = ir::normalize_all(assertions(parsed), in, db);
    oracle::Valuation v;
    for (auto& [name, val] : values) v[*in.lookup(name)] = val;
    std::vector<ir::VarId> vars;
    ir::collect_vars(f, vars);
    for (ir::VarId x : vars) {
        if (v.count(x)) continue;
        if (auto w = in.const_string(x)) v[x] = *w;
        else if (auto n = in.const_int(x)) v[x] = *n;
    }
    for (bool grew = true; grew;) {
        grew = false;
        for (const ir::Formula* c : ir::top_conjuncts(f)) {
            if (c->kind != ir::Formula::Kind::Lit || c->lit.negated) continue;
            auto* fe = std::get_if<ir::FunEq>(&c->lit.atom);
            if (!fe || v.count(fe->out)) continue;
            bool ready = true;
            for (ir::VarId a : fe->args) ready = ready && v.count(a);
            if (!ready) continue;
            v[fe->out] = oracle::eval_fun(*fe, v, db);
            grew = true;
        }
        for (ir::VarId x : vars) {
            if (v.count(x)) continue;
            if (auto s = in.length_of(x); s && v.count(*s)) {
                v[x] = static_cast<std::int64_t>(as_string(v[*s]).size());
                grew = true;
            }
        }
    }
    bool ok = true;
    int atoms = 0, failed = 0;
    std::string why;
    for (const ir::Formula* c : ir::top_conjuncts(f)) {
        if (c->kind != ir::Formula::Kind::Lit) continue;
        ++atoms;
        bool holds = false;
        try {
            holds = oracle::eval_atom(c->lit.atom, v, db) != c->lit.negated;
        } catch (const std::exception& e) {
            why = std::string(", atom not evaluable: ") + e.what();
        }
        failed += holds ? 0 : 1;
    }
    ok = failed == 0;
    for (auto& a : assertions(parsed)) ok = ok && oracle::eval_bool(*a, values);
    Word x = as_string(values.at("x"));
    detail = "x=\"" + to_display(x) + "\" k=" + std::to_string(as_int(values.at("k"))) + ", " + std::to_string(atoms) +
             " atoms checked, " + std::to_string(failed) + " failed" + why;
    return ok && atoms > 0;
}

// ---------------------------------------------------------------- 4

bool criterion4(std::string& detail) {
    t::Rng rng(2024);
    t::InstanceGen gen(rng, "abc");
    int disagree = 0, unknown = 0, skipped = 0, n = 0;
    std::string first_bad;
    auto t0 = Clock::now();
    for (int i = 0; i < 1000; ++i) {
        auto inst = gen.make();
        auto script = frontend::parse_script(inst.text);
        auto asserts = assertions(script);
        oracle::Bounds b;
        b.alphabet = W(inst.alphabet);
        b.max_len = static_cast<std::size_t>(inst.max_len);
        bool expect;
        try {
            expect = oracle::enumerate_script_verdict(asserts, inst.vars, b).sat;
        } catch (const BudgetExceeded&) {
            ++skipped;
            continue;
        }
        ++n;
        frontend::RunOptions o;
        o.config.time_cap_ms = 2000;
        std::vector<frontend::CheckResult> res;
        try {
            frontend::run_script(script, o, &res);
        } catch (const Error& e) {
            ++disagree;
            if (first_bad.empty()) first_bad = inst.text + "  [" + e.what() + "]";
            continue;
        }
        auto st = res.at(0).verdict.status;
        if (st == engine::Status::Unknown) {
            ++unknown;
            continue;
        }
        bool sat = st == engine::Status::Sat;
        bool model_ok = true;
        if (sat) {
            for (auto& a : asserts) model_ok = model_ok && oracle::eval_bool(*a, res[0].model->values);
        }
        if (sat != expect || !model_ok) {
            ++disagree;
            if (first_bad.empty()) first_bad = inst.text;
        }
    }
    auto secs = ms_since(t0) / 1000;
    detail = std::to_string(n) + " compared, " + std::to_string(disagree) + " disagreements, " + std::to_string(unknown) +
             " unknown, " + std::to_string(skipped) + " over oracle budget, " + std::to_string(secs) + " s";
    if (!first_bad.empty()) detail += "\n    first disagreement: " + first_bad;
    return disagree == 0 && unknown * 10 <= n && skipped == 0 && secs <= 600;
}

// ---------------------------------------------------------------- 5

bool criterion5(std::string& detail) {
    t::Rng rng(5);
    int unknown = 0, sat = 0, unsat = 0, bad_model = 0;
    std::string first_bad;
    for (int i = 0; i < 200; ++i) {
        std::string text = t::straight_line(rng);
        auto script = frontend::parse_script(text);
        frontend::RunOptions o;
        std::vector<frontend::CheckResult> res;
        frontend::run_script(script, o, &res);
        switch (res.at(0).verdict.status) {
            case engine::Status::Unknown:
                ++unknown;
                if (first_bad.empty()) first_bad = text + "  [" + res[0].verdict.reason + "]";
                break;
            case engine::Status::Unsat:
                ++unsat;
                break;
            case engine::Status::Sat: {
                ++sat;
                bool ok = true;
                for (auto& a : assertions(script)) ok = ok && oracle::eval_bool(*a, res[0].model->values);
                if (!ok) {
                    ++bad_model;
                    if (first_bad.empty()) first_bad = text;
                }
                break;
            }
        }
    }
    detail = std::to_string(sat) + " sat, " + std::to_string(unsat) + " unsat, " + std::to_string(unknown) +
             " unknown, " + std::to_string(bad_model) + " bad models";
    if (!first_bad.empty()) detail += "\n    first failure: " + first_bad;
    return unknown == 0 && bad_model == 0;
}

// ---------------------------------------------------------------- 6

bool criterion6(std::string& detail) {
    t::Rng rng(6);
    const Word alpha = W("abc");
    auto words = oracle::all_words(alpha, 5);
    long long checks = 0, mismatches = 0;
    int pairs = 0;
    std::string first_bad;
    auto check = [&](bool got, bool want, const std::string& what) {
        ++checks;
        if (got == want) return;
        ++mismatches;
        if (first_bad.empty()) first_bad = what;
    };
    while (pairs < 500) {
        std::string s1 = t::random_regex(rng, 3), s2 = t::random_regex(rng, 3);
        auto r1 = t::parse_regex(s1), r2 = t::parse_regex(s2);
        automata::AutomatonDb db;
        automata::AutomatonRef a1, a2;
        try {
            a1 = regexc::compile_regex(db, *r1);
            a2 = regexc::compile_regex(db, *r2);
        } catch (const StateBlowup&) {
            continue;
        }
        ++pairs;
        std::string tag = s1 + " / " + s2;
        auto in1 = [&](const Word& w) { return oracle::regex_match(*r1, w); };
        auto in2 = [&](const Word& w) { return oracle::regex_match(*r2, w); };

        auto inter = db.intersect(a1, a2);
        auto uni = db.unite(a1, a2);
        auto cat = db.concat(a1, a2);
        auto rev = db.reverse(a1);
        std::optional<automata::AutomatonRef> comp;
        try {
            comp = db.complement(a1);
        } catch (const StateBlowup&) {
        }
        Word p = W(t::random_word(rng, "abc", 2));
        if (p.empty()) p = W("a");
        Word r = W(t::random_word(rng, "abc", 3));
        while (r.size() < p.size()) r.push_back(U'c');
        auto tr = t::coin(rng) ? xform::build_replace_all(p, r) : xform::build_replace_first(p, r);
        auto pre = xform::pre_image(db, tr, a2);
        auto post = xform::post_image(db, tr, a1);

        std::set<Word> images;  // |tr(u)| >= |u|, so every preimage of a short word is short
        for (const Word& u : words) {
            if (in1(u)) images.insert(tr.apply(u));
        }
        for (const Word& w : words) {
            bool m1 = in1(w), m2 = in2(w);
            check(db.accepts(a1, w), m1, "compile " + tag);
            check(db.accepts(inter, w), m1 && m2, "intersect " + tag);
            check(db.accepts(uni, w), m1 || m2, "union " + tag);
            bool split = false;
            for (std::size_t i = 0; i <= w.size() && !split; ++i) split = in1(w.substr(0, i)) && in2(w.substr(i));
            check(db.accepts(cat, w), split, "concat " + tag);
            check(db.accepts(rev, w), in1(Word(w.rbegin(), w.rend())), "reverse " + tag);
            if (comp) check(db.accepts(*comp, w), !m1, "complement " + tag);
            check(db.accepts(pre, w), in2(tr.apply(w)), "pre-image " + tag);
            check(db.accepts(post, w), images.count(w) > 0, "post-image " + tag);
        }
    }
    detail = std::to_string(pairs) + " pairs, " + std::to_string(checks) + " checks, " + std::to_string(mismatches) +
             " mismatches";
    if (!first_bad.empty()) detail += "\n    first mismatch: " + first_bad;
    return mismatches == 0;
}

// ---------------------------------------------------------------- 7

bool criterion7(std::string& detail) {
    struct Case {
        std::string expr;
        bool is_int;
        Value expect;
    };
    t::Rng rng(7);
    std::vector<Case> cases{
        {"(str.substr \"abcde\" 1 2)", false, W("bc")},
        {"(str.substr \"abc\" (- 1) 5)", false, W("")},
        {"(str.substr \"ab\" 1 5)", false, W("b")},
        {"(str.indexof \"abc\" \"z\" 0)", true, std::int64_t{-1}},
        {"(str.indexof \"abc\" \"a\" 1)", true, std::int64_t{-1}},
        {"(str.indexof \"abc\" \"\" 4)", true, std::int64_t{-1}},
    };
    while (cases.size() < 300) {
        std::string ss = t::random_word(rng, "ab1", 5), ps = t::random_word(rng, "ab1", 2), rs = t::random_word(rng, "ab", 2);
        Word s = W(ss), p = W(ps), r = W(rs);
        std::int64_t i = t::pick(rng, -2, 6), n = t::pick(rng, -2, 6);
        switch (t::pick(rng, 0, 6)) {
            case 0:
                cases.push_back({"(str.substr " + t::lit(ss) + " " + t::int_lit(i) + " " + t::int_lit(n) + ")", false,
                                 oracle::substr(s, i, n)});
                break;
            case 1:
                cases.push_back({"(str.at " + t::lit(ss) + " " + t::int_lit(i) + ")", false, oracle::at(s, i)});
                break;
            case 2:
                cases.push_back({"(str.indexof " + t::lit(ss) + " " + t::lit(ps) + " " + t::int_lit(i) + ")", true,
                                 oracle::indexof(s, p, i)});
                break;
            case 3:
                cases.push_back({"(str.replace " + t::lit(ss) + " " + t::lit(ps) + " " + t::lit(rs) + ")", false,
                                 oracle::replace(s, p, r)});
                break;
            case 4:
                cases.push_back({"(str.replace_all " + t::lit(ss) + " " + t::lit(ps) + " " + t::lit(rs) + ")", false,
                                 oracle::replace_all(s, p, r)});
                break;
            case 5:
                cases.push_back({"(str.to_int " + t::lit(ss) + ")", true, oracle::to_int(s)});
                break;
            default:
                cases.push_back({"(str.from_int " + t::int_lit(n * 37) + ")", false, oracle::from_int(n * 37)});
        }
    }
    int bad = 0;
    std::string first_bad;
    for (auto& c : cases) {
        std::string text = std::string("(declare-fun r () ") + (c.is_int ? "Int" : "String") + ")(assert (= r " + c.expr +
                           "))(check-sat)";
        frontend::RunOptions o;
        o.config.time_cap_ms = 5000;
        std::vector<frontend::CheckResult> res;
        bool ok = false;
        try {
            frontend::run_script(frontend::parse_script(text), o, &res);
            ok = res.at(0).model && res[0].model->values.at("r") == c.expect;
        } catch (const Error&) {
        }
        if (!ok) {
            ++bad;
            if (first_bad.empty()) first_bad = c.expr;
        }
    }
    detail = std::to_string(cases.size()) + " instances, " + std::to_string(bad) + " mismatches";
    if (!first_bad.empty()) detail += "\n    first mismatch: " + first_bad;
    return bad == 0;
}

// ---------------------------------------------------------------- 8

bool criterion8(std::string& detail) {
    auto with_cap = [](engine::SolverConfig c, std::uint64_t ms) {
        c.time_cap_ms = ms;
        return c;
    };
    Solved plain, nielsen, port_q, port_c;
    solve_text(plain, kQuadratic, with_cap(flags(true, true, false), 5000));
    solve_text(nielsen, kQuadratic, with_cap(flags(false, true, true), 5000));
    load(port_q, kQuadratic);
    port_q.v = engine::portfolio(port_q.f, port_q.in, port_q.db, with_cap(flags(true, true, false), 10000));
    load(port_c, kCommutation);
    port_c.v = engine::portfolio(port_c.f, port_c.in, port_c.db, with_cap(flags(true, true, false), 10000));
    detail = std::string("+F+B-N ") + engine::status_name(plain.v.status) + ", -F+B+N " +
             engine::status_name(nielsen.v.status) + ", portfolio " + engine::status_name(port_q.v.status) + "/" +
             engine::status_name(port_c.v.status);
    return plain.v.status == engine::Status::Unknown && nielsen.v.status == engine::Status::Unsat &&
           port_q.v.status == engine::Status::Unsat && port_c.v.status == engine::Status::Unsat;
}

}  // namespace

// Optional arguments select criteria by number.
int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    std::vector<std::pair<const char*, std::function<bool(std::string&)>>> criteria{
        {"1 commutation unsat by propagation", criterion1}, {"2 backward branching", criterion2},
        {"3 example script end to end", criterion3},       {"4 differential soundness", criterion4},
        {"5 straight-line completeness", criterion5},       {"6 automata vs oracle matcher", criterion6},
        {"7 ground function semantics", criterion7},        {"8 flag behavior and portfolio", criterion8},
    };
    int failed = 0, index = 0;
    for (auto& [name, fn] : criteria) {
        ++index;
        if (!only.empty() && !only.count(index)) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << name << ": " << detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
