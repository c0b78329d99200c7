#include <gtest/gtest.h>

#include <algorithm>

#include "gen.hpp"
#include "strsolve/ir/normalize.hpp"
#include "strsolve/oracle/oracle.hpp"

using namespace strsolve;
using namespace strsolve::ir;
using strsolve::testing::W;

namespace {

struct Normalized {
    Interner in;
    AutomatonDb db;
    frontend::Script script;
    Formula f;

    explicit Normalized(const std::string& text) : script(frontend::parse_script(text)) {
        std::vector<frontend::TermPtr> asserts;
        for (auto& c : script.commands) {
            if (c.kind == frontend::CommandKind::Assert) asserts.push_back(c.term);
        }
        f = normalize_all(asserts, in, db);
    }

    VarId var(const std::string& name) const { return *in.lookup(name); }

    std::vector<Literal> literals() const {
        std::vector<Literal> out;
        for (const Formula* c : top_conjuncts(f)) {
            if (c->kind == Formula::Kind::Lit) out.push_back(c->lit);
        }
        return out;
    }

    std::vector<FunEq> funeqs(Fn fn) const {
        std::vector<FunEq> out;
        for (auto& l : literals()) {
            if (auto* fe = std::get_if<FunEq>(&l.atom); fe && fe->fn == fn) out.push_back(*fe);
        }
        return out;
    }
};

}  // namespace

TEST(Normalize, CommutationInstance) {
    Normalized n(
        "(declare-fun x () String)(declare-fun y () String)"
        "(assert (and (= (str.++ x y) (str.++ y x)) (str.in_re x (re.++ (re.* (str.to_re \"a\")) (str.to_re \"b\") (re.* (str.to_re \"a\"))))"
        " (str.in_re y (re.++ (re.* (str.to_re \"a\")) (str.to_re \"c\") (re.* (str.to_re \"a\"))))))");
    auto cats = n.funeqs(Fn::Concat);
    ASSERT_EQ(cats.size(), 2u);
    VarId x = n.var("x"), y = n.var("y");
    EXPECT_EQ(cats[0].out, cats[1].out);
    EXPECT_TRUE(n.in.is_fresh(cats[0].out));
    std::vector<std::vector<VarId>> args{cats[0].args, cats[1].args};
    std::sort(args.begin(), args.end());
    std::vector<std::vector<VarId>> expect{{x, y}, {y, x}};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(args, expect);
    int inre = 0;
    for (auto& l : n.literals()) inre += std::holds_alternative<InRe>(l.atom) ? 1 : 0;
    EXPECT_EQ(inre, 2);
}

TEST(Normalize, Reflexivity) {
    Normalized n("(declare-fun x () String)(assert (= x x))");
    EXPECT_EQ(n.f.kind, Formula::Kind::True);
}

TEST(Normalize, NegatedMembershipIsComplement) {
    Normalized n("(declare-fun x () String)(assert (not (str.in_re x (re.* (str.to_re \"ab\")))))");
    auto lits = n.literals();
    ASSERT_EQ(lits.size(), 1u);
    const auto& m = std::get<InRe>(lits[0].atom);
    EXPECT_FALSE(lits[0].negated);
    auto re = strsolve::testing::parse_regex("(re.* (str.to_re \"ab\"))");
    for (const Word& w : oracle::all_words(W("ab"), 4)) {
        EXPECT_EQ(oracle::membership(*n.db.get(m.lang), w), !oracle::regex_match(*re, w));
    }
}

TEST(Normalize, NegationNormalForm) {
    Normalized n(
        "(declare-fun x () String)(declare-fun k () Int)"
        "(assert (not (and (str.prefixof \"a\" x) (or (<= k 2) (not (str.contains x \"b\"))))))");
    std::function<void(const Formula&)> walk = [&](const Formula& f) {
        EXPECT_TRUE(f.kind == Formula::Kind::Lit || f.kind == Formula::Kind::And || f.kind == Formula::Kind::Or ||
                    f.kind == Formula::Kind::True || f.kind == Formula::Kind::False);
        if (f.kind == Formula::Kind::Lit) EXPECT_TRUE(f.children.empty());
        for (auto& c : f.children) walk(c);
    };
    walk(n.f);
}

TEST(Interner, InjectiveAndFreshNamespace) {
    Interner in;
    VarId a = in.intern("x", VarSort::String);
    EXPECT_EQ(in.intern("x", VarSort::String), a);
    EXPECT_NE(in.intern("y", VarSort::String), a);
    EXPECT_THROW(in.intern("x", VarSort::Int), PreconditionViolation);
    for (int i = 0; i < 20; ++i) {
        VarId f = in.fresh(VarSort::String);
        EXPECT_TRUE(in.is_fresh(f));
        EXPECT_EQ(in.name(f)[0], '@');
    }
    VarId l = in.length_var(a);
    EXPECT_EQ(in.length_var(a), l);
    EXPECT_EQ(in.length_of(l), std::optional<VarId>(a));
    EXPECT_EQ(in.const_var(W("ab")), in.const_var(W("ab")));
    EXPECT_EQ(in.const_string(in.const_var(W("ab"))), std::optional<Word>(W("ab")));
    EXPECT_EQ(in.const_int(in.int_const(-4)), std::optional<std::int64_t>(-4));
}

TEST(Cse, MergesRepeatedIndexOf) {
    Normalized n(
        "(declare-fun x () String)(declare-fun y () String)(declare-fun i () Int)"
        "(assert (<= 0 (str.indexof x y i)))(assert (<= (str.indexof x y i) 3))");
    ASSERT_EQ(n.funeqs(Fn::IndexOf).size(), 2u);
    Formula g = cse(n.f, n.in);
    int count = 0;
    VarId k = 0;
    std::vector<VarId> lin_vars;
    for (const Formula* c : top_conjuncts(g)) {
        if (c->kind != Formula::Kind::Lit) continue;
        if (auto* fe = std::get_if<FunEq>(&c->lit.atom); fe && fe->fn == Fn::IndexOf) {
            ++count;
            k = fe->out;
        }
        if (auto* l = std::get_if<Lin>(&c->lit.atom)) {
            for (auto& [coef, v] : l->terms) {
                if (n.in.sort(v) == VarSort::Int && n.in.is_fresh(v) && !n.in.const_int(v)) lin_vars.push_back(v);
            }
        }
    }
    EXPECT_EQ(count, 1);
    for (VarId v : lin_vars) EXPECT_EQ(v, k);
}

TEST(Cse, UnchangedWithoutRepeats) {
    Normalized n("(declare-fun x () String)(assert (= (str.substr x 0 2) \"ab\"))");
    EXPECT_EQ(cse(n.f, n.in), n.f);
}

TEST(Cse, NestedRepeatsUnderDifferentParents) {
    Normalized n(
        "(declare-fun x () String)"
        "(assert (= (str.++ (str.substr x 0 2) \"a\") (str.++ \"b\" (str.substr x 0 2))))");
    ASSERT_EQ(n.funeqs(Fn::Substr).size(), 2u);
    Formula g = cse(n.f, n.in);
    int count = 0;
    for (const Formula* c : top_conjuncts(g)) {
        if (c->kind == Formula::Kind::Lit) {
            if (auto* fe = std::get_if<FunEq>(&c->lit.atom); fe && fe->fn == Fn::Substr) ++count;
        }
    }
    EXPECT_EQ(count, 1);
}

TEST(ConcatFlatten, RightNested) {
    Interner in;
    VarId w = in.intern("w", VarSort::String), x = in.intern("x", VarSort::String), y = in.intern("y", VarSort::String),
          z = in.intern("z", VarSort::String);
    auto atoms = concat_flatten(w, {x, y, z}, in);
    ASSERT_EQ(atoms.size(), 2u);
    const auto& a = std::get<FunEq>(atoms[0]);
    const auto& b = std::get<FunEq>(atoms[1]);
    EXPECT_EQ(a.out, w);
    EXPECT_EQ(a.args[0], x);
    VarId t1 = a.args[1];
    EXPECT_TRUE(in.is_fresh(t1));
    EXPECT_EQ(b.out, t1);
    EXPECT_EQ(b.args, (std::vector<VarId>{y, z}));
    auto one = concat_flatten(w, {x}, in);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(std::get<Pred>(one[0]).kind, PredKind::StrEq);
}

TEST(ConcatFlatten, ConstantLifted) {
    Normalized n("(declare-fun w () String)(declare-fun x () String)(assert (= w (str.++ \"ab\" x)))");
    auto cats = n.funeqs(Fn::Concat);
    ASSERT_EQ(cats.size(), 1u);
    VarId c = cats[0].args[0];
    EXPECT_EQ(n.in.const_string(c), std::optional<Word>(W("ab")));
    bool found = false;
    for (auto& l : n.literals()) {
        if (auto* m = std::get_if<InRe>(&l.atom); m && m->x == c) found = m->lang == n.db.word(W("ab"));
    }
    EXPECT_TRUE(found);
}

TEST(DependencyGraph, Examples) {
    Interner in;
    VarId x = in.intern("x", VarSort::String), y = in.intern("y", VarSort::String), z = in.intern("z", VarSort::String),
          a = in.intern("a", VarSort::String);
    auto g = dependency_graph({FunEq{x, Fn::Concat, {y, z}, std::nullopt}, FunEq{y, Fn::Concat, {a, x}, std::nullopt}});
    auto cyc = g.cyclic_sccs();
    ASSERT_EQ(cyc.size(), 1u);
    EXPECT_EQ(cyc[0], (std::vector<VarId>{x, y}));
    EXPECT_TRUE(g.has_edge(y, x));

    auto line = dependency_graph({FunEq{x, Fn::Concat, {y, z}, std::nullopt}, FunEq{a, Fn::Reverse, {x}, std::nullopt}});
    EXPECT_TRUE(line.cyclic_sccs().empty());
    for (auto& s : line.sccs()) EXPECT_EQ(s.size(), 1u);

    auto self = dependency_graph({FunEq{x, Fn::Concat, {x, y}, std::nullopt}});
    ASSERT_EQ(self.cyclic_sccs().size(), 1u);
    EXPECT_EQ(self.cyclic_sccs()[0], (std::vector<VarId>{x}));
}

// Normalization preserves satisfiability: the term-level oracle on the input
// and the normal-form oracle agree on random small formulas.
TEST(Properties, NormalizePreservesVerdict) {
    strsolve::testing::Rng rng(31);
    strsolve::testing::InstanceGen gen(rng, "ab");
    int compared = 0;
    for (int i = 0; i < 150; ++i) {
        auto inst = gen.make();
        if (inst.vars.size() > 3) continue;
        auto script = frontend::parse_script(inst.text);
        std::vector<frontend::TermPtr> asserts;
        for (auto& c : script.commands) {
            if (c.kind == frontend::CommandKind::Assert) asserts.push_back(c.term);
        }
        oracle::Bounds b;
        b.alphabet = W("ab");
        b.max_len = 3;
        bool expect = oracle::enumerate_script_verdict(asserts, inst.vars, b).sat;
        Interner in;
        AutomatonDb db;
        Formula f = normalize_all(asserts, in, db);
        // fresh outputs are computed from their definitions, so the same box applies
        try {
            bool got = oracle::enumerate_verdict(f, in, db, b).sat;
            EXPECT_EQ(got, expect) << inst.text << "\nnormal form: " << to_string(f, in);
            ++compared;
        } catch (const BudgetExceeded&) {
        }
    }
    EXPECT_GT(compared, 50);
}
