#include <gtest/gtest.h>

#include "gen.hpp"
#include "strsolve/oracle/oracle.hpp"
#include "strsolve/regexc/regexc.hpp"

using namespace strsolve;
using strsolve::testing::W;

namespace {

automata::AutomatonRef compile(automata::AutomatonDb& db, const std::string& text) {
    return regexc::compile_regex(db, *strsolve::testing::parse_regex(text));
}

const char* kPaperLiteral =
    "automaton value_0 { init s0; s0 -> s1 [0, 100]; s1 ->s1[0,65535]; accepting s1; };";

}  // namespace

TEST(CompileRegex, NonEmptyAB) {
    automata::AutomatonDb db;
    auto a = compile(db, "(re.+ (re.union (str.to_re \"a\") (str.to_re \"b\")))");
    EXPECT_TRUE(db.accepts(a, W("a")));
    EXPECT_TRUE(db.accepts(a, W("ba")));
    EXPECT_TRUE(db.accepts(a, W("abb")));
    EXPECT_FALSE(db.accepts(a, W("")));
    EXPECT_FALSE(db.accepts(a, W("c")));
}

TEST(CompileRegex, NoneIsEmpty) {
    automata::AutomatonDb db;
    EXPECT_EQ(compile(db, "re.none"), db.empty());
    EXPECT_EQ(compile(db, "re.all"), db.universal());
}

TEST(CompileRegex, InterWithComplementOfEpsilon) {
    automata::AutomatonDb db;
    auto a = compile(db, "(re.inter (re.* (str.to_re \"a\")) (re.comp (str.to_re \"\")))");
    for (const Word& w : oracle::all_words(W("ab"), 3)) {
        bool aplus = !w.empty() && w.find_first_not_of(U'a') == Word::npos;
        EXPECT_EQ(db.accepts(a, w), aplus) << to_display(w);
    }
}

TEST(CompileRegex, LoopAndDiff) {
    automata::AutomatonDb db;
    auto a = compile(db, "((_ re.loop 2 3) (str.to_re \"a\"))");
    EXPECT_FALSE(db.accepts(a, W("a")));
    EXPECT_TRUE(db.accepts(a, W("aa")));
    EXPECT_TRUE(db.accepts(a, W("aaa")));
    EXPECT_FALSE(db.accepts(a, W("aaaa")));
    auto d = compile(db, "(re.diff (re.* re.allchar) (str.to_re \"x\"))");
    EXPECT_FALSE(db.accepts(d, W("x")));
    EXPECT_TRUE(db.accepts(d, W("xx")));
    EXPECT_THROW(compile(db, "((_ re.loop 0 1001) (str.to_re \"a\"))"), RepetitionLimit);
}

TEST(CompileRegex, ToReOfVariableRejected) {
    EXPECT_THROW(frontend::parse_script("(declare-fun x () String)(assert (str.in_re \"\" (str.to_re x)))"),
                 NonConstantRegex);
    // terms built without the parser are checked again by the compiler
    automata::AutomatonDb db;
    auto s = frontend::parse_script("(declare-fun x () String)(assert (str.in_re \"\" (str.to_re \"a\")))");
    frontend::Term re = *s.commands[1].term->args[1];
    frontend::Term var;
    var.op = frontend::Op::Var;
    var.name = "x";
    var.sort = frontend::Sort::String;
    re.args[0] = std::make_shared<frontend::Term>(var);
    EXPECT_THROW(regexc::compile_regex(db, re), NonConstantRegex);
}

TEST(AutomatonLiteral, PaperExample) {
    automata::AutomatonDb db;
    auto a = regexc::parse_automaton_literal(db, W(kPaperLiteral));
    EXPECT_TRUE(db.accepts(a, Word{100}));
    EXPECT_TRUE(db.accepts(a, Word{0, 65535, 7}));
    EXPECT_FALSE(db.accepts(a, Word{101}));
    EXPECT_FALSE(db.accepts(a, Word{}));
    EXPECT_FALSE(db.accepts(a, Word{5, 65536}));
}

TEST(AutomatonLiteral, InitAccepting) {
    automata::AutomatonDb db;
    auto a = regexc::parse_automaton_literal(db, W("automaton e { init s0; accepting s0; }"));
    EXPECT_EQ(a, db.epsilon());
}

TEST(AutomatonLiteral, Errors) {
    automata::AutomatonDb db;
    EXPECT_THROW(regexc::parse_automaton_literal(db, W("automaton e { s0 -> s0 [1, 2]; accepting s0; }")), FormatError);
    EXPECT_THROW(regexc::parse_automaton_literal(db, W("automaton e { init s0; s0 -> s0 [5, 2]; accepting s0; }")),
                 RangeError);
    EXPECT_THROW(regexc::parse_automaton_literal(db, W("automaton e { init s0; s0 -> s0 [0, 196608]; accepting s0; }")),
                 RangeError);
    EXPECT_THROW(regexc::parse_automaton_literal(db, W("automaton e { init s0 accepting s0; }")), FormatError);
}

TEST(AutomatonLiteral, StatementsInAnyOrder) {
    automata::AutomatonDb db;
    auto a = regexc::parse_automaton_literal(db, W("automaton o { accepting q; p -> q [97, 97]; init p; }"));
    EXPECT_EQ(a, db.word(W("a")));
}

TEST(AutomatonLiteral, ThroughTheParser) {
    automata::AutomatonDb db;
    auto t = strsolve::testing::parse_regex(std::string("(re.from_automaton \"") + kPaperLiteral + "\")");
    auto a = regexc::compile_regex(db, *t);
    EXPECT_TRUE(db.accepts(a, W("d")));
    EXPECT_TRUE(oracle::regex_match(*t, W("d")));
    EXPECT_FALSE(oracle::regex_match(*t, Word{101}));
}

TEST(Singleton, Examples) {
    automata::AutomatonDb db;
    EXPECT_EQ(regexc::singleton(db, Word{}), db.epsilon());
    EXPECT_EQ(db.num_states(regexc::singleton(db, W("ab"))), 3u);
}

TEST(Singleton, DisjointIffDifferent) {
    strsolve::testing::Rng rng(9);
    automata::AutomatonDb db;
    for (int i = 0; i < 200; ++i) {
        Word w = W(strsolve::testing::random_word(rng, "ab", 4));
        Word v = W(strsolve::testing::random_word(rng, "ab", 4));
        auto e = db.is_empty(db.intersect(regexc::singleton(db, w), regexc::singleton(db, v)));
        EXPECT_EQ(e.empty, w != v);
    }
}

TEST(Properties, AgreesWithOracleMatcher) {
    strsolve::testing::Rng rng(21);
    automata::AutomatonDb db;
    auto words = oracle::all_words(W("abc"), 5);
    for (int i = 0; i < 200; ++i) {
        std::string text = strsolve::testing::random_regex(rng, 4);
        auto t = strsolve::testing::parse_regex(text);
        auto a = regexc::compile_regex(db, *t);
        for (const Word& w : words) ASSERT_EQ(db.accepts(a, w), oracle::regex_match(*t, w)) << text << " on " << to_display(w);
    }
}

TEST(Properties, PlusAndOptIdentities) {
    strsolve::testing::Rng rng(22);
    automata::AutomatonDb db;
    for (int i = 0; i < 40; ++i) {
        std::string e = strsolve::testing::random_regex(rng, 3);
        auto plus = compile(db, "(re.+ " + e + ")");
        auto plus2 = compile(db, "(re.++ " + e + " (re.* " + e + "))");
        auto opt = compile(db, "(re.opt " + e + ")");
        auto opt2 = compile(db, "(re.union " + e + " (str.to_re \"\"))");
        for (auto [x, y] : {std::pair{plus, plus2}, std::pair{opt, opt2}}) {
            EXPECT_TRUE(db.is_empty(db.intersect(x, db.complement(y))).empty);
            EXPECT_TRUE(db.is_empty(db.intersect(y, db.complement(x))).empty);
        }
    }
}
