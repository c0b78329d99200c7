#include "strsolve/regexc/regexc.hpp"

#include <map>

#include "strsolve/error.hpp"

namespace strsolve::regexc {

using frontend::Op;
using frontend::Term;

namespace {

class SourceParser {
public:
    explicit SourceParser(const Word& text) : text_(text) {}

    AutomatonSource parse() {
        AutomatonSource out;
        keyword("automaton");
        out.name = ident();
        expect('{');
        bool have_init = false;
        bool have_accepting = false;
        for (;;) {
            skip();
            if (peek() == '}') {
                ++i_;
                break;
            }
            std::size_t start = i_;
            std::string first = ident();
            if (first == "init") {
                if (have_init) fail("duplicate init declaration", start);
                have_init = true;
                out.init = ident();
                expect(';');
            } else if (first == "accepting") {
                if (have_accepting) fail("duplicate accepting declaration", start);
                have_accepting = true;
                out.accepting.push_back(ident());
                skip();
                while (peek() == ',') {
                    ++i_;
                    out.accepting.push_back(ident());
                    skip();
                }
                expect(';');
            } else {
                expect('-');
                if (i_ >= text_.size() || text_[i_] != '>') fail("expected '->'", i_);
                ++i_;
                std::string dst = ident();
                expect('[');
                std::size_t lo_at = i_;
                std::uint64_t lo = number();
                expect(',');
                std::uint64_t hi = number();
                expect(']');
                expect(';');
                if (hi < lo || hi > kMaxCodePoint) {
                    throw RangeError("transition interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                     "] at offset " + std::to_string(lo_at) + " is invalid");
                }
                out.transitions.push_back(
                    AutomatonSource::Transition{first, dst, static_cast<CodePoint>(lo), static_cast<CodePoint>(hi)});
            }
        }
        skip();
        if (peek() == ';') ++i_;
        skip();
        if (i_ != text_.size()) fail("trailing characters after automaton", i_);
        if (!have_init) fail("missing init declaration", i_);
        if (!have_accepting) fail("missing accepting declaration", i_);
        return out;
    }

private:
    [[noreturn]] static void fail(const std::string& msg, std::size_t at) { throw FormatError(msg, at); }

    CodePoint peek() const { return i_ < text_.size() ? text_[i_] : 0; }

    void skip() {
        while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\n' || text_[i_] == '\r')) ++i_;
    }

    static bool ident_char(CodePoint c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    }

    std::string ident() {
        skip();
        std::size_t start = i_;
        std::string out;
        while (i_ < text_.size() && ident_char(text_[i_])) out.push_back(static_cast<char>(text_[i_++]));
        if (out.empty()) fail("expected an identifier", start);
        return out;
    }

    void keyword(const std::string& kw) {
        std::size_t start = i_;
        if (ident() != kw) fail("expected '" + kw + "'", start);
    }

    void expect(char c) {
        skip();
        if (peek() != static_cast<CodePoint>(c)) fail(std::string("expected '") + c + "'", i_);
        ++i_;
    }

    std::uint64_t number() {
        skip();
        std::size_t start = i_;
        std::uint64_t v = 0;
        while (i_ < text_.size() && text_[i_] >= '0' && text_[i_] <= '9') {
            v = v * 10 + (text_[i_] - '0');
            if (v > 0xFFFFFFFFull) throw RangeError("interval endpoint out of range at offset " + std::to_string(start));
            ++i_;
        }
        if (i_ == start) fail("expected a number", start);
        return v;
    }

    const Word& text_;
    std::size_t i_ = 0;
};

AutomatonRef loop(AutomatonDb& db, AutomatonRef e, std::uint32_t lo, std::uint32_t hi) {
    if (hi < lo) return db.empty();
    if (hi > kLoopUnfoldCap) {
        throw RepetitionLimit("bounded repetition " + std::to_string(hi) + " exceeds the unfold cap of " +
                              std::to_string(kLoopUnfoldCap));
    }
    AutomatonRef out = db.epsilon();
    for (std::uint32_t i = 0; i < lo; ++i) out = db.concat(out, e);
    AutomatonRef opt = db.unite(e, db.epsilon());
    for (std::uint32_t i = lo; i < hi; ++i) out = db.concat(out, opt);
    return out;
}

}  // namespace

AutomatonSource parse_automaton_source(const Word& text) { return SourceParser(text).parse(); }

automata::Automaton to_automaton(const AutomatonSource& src) {
    std::map<std::string, automata::State> ids;
    automata::Automaton a;
    auto id = [&](const std::string& s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        automata::State st = a.add_state();
        ids.emplace(s, st);
        return st;
    };
    a.add_initial(id(src.init));
    for (const auto& t : src.transitions) {
        automata::State from = id(t.src);
        a.add_edge(from, t.lo, t.hi, id(t.dst));
    }
    for (const auto& s : src.accepting) a.set_accepting(id(s));
    return a;
}

AutomatonRef parse_automaton_literal(AutomatonDb& db, const Word& text) {
    return db.intern(to_automaton(parse_automaton_source(text)));
}

AutomatonRef singleton(AutomatonDb& db, const Word& w) { return db.word(w); }

AutomatonRef compile_regex(AutomatonDb& db, const Term& t) {
    auto arg = [&](std::size_t i) { return compile_regex(db, *t.args[i]); };
    switch (t.op) {
        case Op::StrToRe:
            if (t.args[0]->op != Op::StrLit) throw NonConstantRegex("str.to_re applied to a non-literal string");
            return db.word(t.args[0]->str);
        case Op::ReNone: return db.empty();
        case Op::ReAll: return db.universal();
        case Op::ReAllChar: return db.char_range(0, kMaxCodePoint);
        case Op::ReConcat: {
            AutomatonRef out = arg(0);
            for (std::size_t i = 1; i < t.args.size(); ++i) out = db.concat(out, arg(i));
            return out;
        }
        case Op::ReUnion: {
            AutomatonRef out = arg(0);
            for (std::size_t i = 1; i < t.args.size(); ++i) out = db.unite(out, arg(i));
            return out;
        }
        case Op::ReInter: {
            AutomatonRef out = arg(0);
            for (std::size_t i = 1; i < t.args.size(); ++i) out = db.intersect(out, arg(i));
            return out;
        }
        case Op::ReStar: return db.star(arg(0));
        case Op::RePlus: return db.plus(arg(0));
        case Op::ReOpt: return db.unite(arg(0), db.epsilon());
        case Op::ReRange: {
            const Word& a = t.args[0]->str;
            const Word& b = t.args[1]->str;
            // SMT-LIB: empty unless both bounds are single characters in order
            if (a.size() != 1 || b.size() != 1 || a[0] > b[0]) return db.empty();
            return db.char_range(a[0], b[0]);
        }
        case Op::ReComp: return db.complement(arg(0));
        case Op::ReDiff: return db.intersect(arg(0), db.complement(arg(1)));
        case Op::ReLoop: return loop(db, arg(0), t.lo, t.hi);
        case Op::ReFromAutomaton: return parse_automaton_literal(db, t.str);
        default: break;
    }
    throw PreconditionViolation("compile_regex on a non-regex term");
}

}  // namespace strsolve::regexc
