#include <gtest/gtest.h>

#include <set>

#include "gen.hpp"
#include "strsolve/oracle/oracle.hpp"
#include "strsolve/regexc/regexc.hpp"
#include "strsolve/xform/transducer.hpp"

using namespace strsolve;
using namespace strsolve::xform;
using strsolve::testing::W;

TEST(ReplaceAll, Examples) {
    EXPECT_EQ(build_replace_all(W("&"), W("&amp;")).apply(W("a&b&")), W("a&amp;b&amp;"));
    EXPECT_EQ(build_replace_all(W("x"), W("y")).apply(W("abc")), W("abc"));
    EXPECT_EQ(build_replace_all(W("aa"), W("b")).apply(W("aaa")), W("ba"));
}

TEST(ReplaceFirst, Examples) {
    EXPECT_EQ(build_replace_first(W("a"), W("b")).apply(W("aa")), W("ba"));
    EXPECT_EQ(build_replace_first(W("ab"), W("")).apply(W("xabab")), W("xab"));
    EXPECT_EQ(build_replace_first(W("q"), W("r")).apply(W("abc")), W("abc"));
}

TEST(Transducer, Preconditions) {
    EXPECT_THROW(build_replace_all(Word{}, W("a")), PreconditionViolation);
    Transducer t;
    auto s = t.add_state();
    EXPECT_THROW(t.add_edge(s, 3, 2, {}, s), RangeError);
    EXPECT_THROW(t.add_edge(s, 0, 5, {OutSym{true, 0}, OutSym{true, 0}}, s), PreconditionViolation);
}

TEST(Transducer, ApplyAgreesWithOracle) {
    strsolve::testing::Rng rng(3);
    auto words = oracle::all_words(W("abc"), 6);
    for (int i = 0; i < 60; ++i) {
        Word p = W(strsolve::testing::random_word(rng, "abc", 3));
        if (p.empty()) p = W("b");
        Word r = W(strsolve::testing::random_word(rng, "abc", 3));
        auto all = build_replace_all(p, r);
        auto first = build_replace_first(p, r);
        for (const Word& w : words) {
            ASSERT_EQ(all.apply(w), oracle::replace_all(w, p, r));
            ASSERT_EQ(first.apply(w), oracle::replace(w, p, r));
        }
    }
}

TEST(ReplaceSet, AgreesWithOracle) {
    strsolve::testing::Rng rng(4);
    auto words = oracle::all_words(W("abc"), 5);
    for (int i = 0; i < 40; ++i) {
        std::set<Word> pats;
        int n = strsolve::testing::pick(rng, 1, 3);
        while (static_cast<int>(pats.size()) < n) {
            Word p = W(strsolve::testing::random_word(rng, "abc", 3));
            if (!p.empty()) pats.insert(p);
        }
        std::vector<Word> pv(pats.begin(), pats.end());
        Word r = W(strsolve::testing::random_word(rng, "abc", 2));
        oracle::Matcher m = [&](const Word& w) { return pats.count(w) > 0; };
        auto once = build_replace_set(pv, r, false);
        auto all = build_replace_set(pv, r, true);
        for (const Word& w : words) {
            ASSERT_EQ(once.apply(w), oracle::replace_re(w, m, r));
            ASSERT_EQ(all.apply(w), oracle::replace_re_all(w, m, r));
        }
    }
}

TEST(PreImage, HtmlEscape) {
    automata::AutomatonDb db;
    auto t = build_replace_all(W("&"), W("&amp;"));
    auto out = db.word(W("&amp;"));
    auto pre = pre_image(db, t, out);
    const Word alpha = W("&amp;");
    for (const Word& w : oracle::all_words(alpha, 5)) {
        EXPECT_EQ(db.accepts(pre, w), t.apply(w) == W("&amp;")) << to_display(w);
    }
    EXPECT_TRUE(db.accepts(pre, W("&")));
}

TEST(PreImage, IdentityAndEmpty) {
    automata::AutomatonDb db;
    auto a = regexc::compile_regex(db, *strsolve::testing::parse_regex("(re.+ (str.to_re \"ab\"))"));
    EXPECT_EQ(pre_image(db, identity(), a), a);
    EXPECT_EQ(pre_image(db, build_replace_all(W("a"), W("b")), db.empty()), db.empty());
}

TEST(PostImage, Examples) {
    automata::AutomatonDb db;
    auto t = build_replace_all(W("a"), W("bb"));
    auto inp = db.unite(db.word(W("a")), db.word(W("aa")));
    auto post = post_image(db, t, inp);
    auto same = [&](automata::AutomatonRef x, automata::AutomatonRef y) {
        return db.subset_of(x, y) == std::optional<bool>(true) && db.subset_of(y, x) == std::optional<bool>(true);
    };
    EXPECT_TRUE(same(post, db.unite(db.word(W("bb")), db.word(W("bbbb")))));
    EXPECT_TRUE(db.is_empty(post_image(db, t, db.empty())).empty);
    auto a = regexc::compile_regex(db, *strsolve::testing::parse_regex("(re.* (re.range \"a\" \"c\"))"));
    EXPECT_TRUE(same(post_image(db, identity(), a), a));
}

TEST(Properties, PreImageExact) {
    strsolve::testing::Rng rng(5);
    automata::AutomatonDb db;
    auto words = oracle::all_words(W("abc"), 5);
    for (int i = 0; i < 40; ++i) {
        Word p = W(strsolve::testing::random_word(rng, "abc", 2));
        if (p.empty()) p = W("a");
        Word r = W(strsolve::testing::random_word(rng, "abc", 2));
        bool all = strsolve::testing::coin(rng);
        auto t = all ? build_replace_all(p, r) : build_replace_first(p, r);
        auto out = regexc::compile_regex(db, *strsolve::testing::parse_regex(strsolve::testing::random_regex(rng, 3)));
        auto pre = pre_image(db, t, out);
        for (const Word& w : words) ASSERT_EQ(db.accepts(pre, w), oracle::membership(*db.get(out), t.apply(w)));
    }
}

TEST(Properties, PostImageExact) {
    strsolve::testing::Rng rng(6);
    automata::AutomatonDb db;
    auto words = oracle::all_words(W("abc"), 4);
    for (int i = 0; i < 40; ++i) {
        Word p = W(strsolve::testing::random_word(rng, "abc", 2));
        if (p.empty()) p = W("c");
        Word r = W(strsolve::testing::random_word(rng, "abc", 2));
        while (r.size() < p.size()) r += U'a';
        auto t = build_replace_all(p, r);
        auto inp = regexc::compile_regex(db, *strsolve::testing::parse_regex(strsolve::testing::random_regex(rng, 3)));
        auto post = post_image(db, t, inp);
        std::set<Word> images;
        for (const Word& w : words) {
            if (oracle::membership(*db.get(inp), w)) {
                Word o = t.apply(w);
                ASSERT_TRUE(db.accepts(post, o));
                images.insert(o);
            }
        }
        // |r| >= |p| makes outputs no shorter than inputs, so the images of
        // inputs up to length 4 cover every output up to length 4.
        for (const Word& o : words) ASSERT_EQ(db.accepts(post, o), images.count(o) > 0) << to_display(o);
    }
}
