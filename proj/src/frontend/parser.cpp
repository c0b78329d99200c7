#include "strsolve/frontend/parser.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

namespace strsolve::frontend {

namespace {

// ------------------------------------------------------------ s-expressions

enum class TokKind { LParen, RParen, Symbol, Keyword, Numeral, String, End };

struct Token {
    TokKind kind;
    std::string text;  ///< symbol/keyword/numeral text, or the raw string body
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space();
        SourcePos pos{line_, col_};
        if (i_ >= src_.size()) return Token{TokKind::End, {}, pos};
        char c = src_[i_];
        if (c == '(') {
            advance();
            return Token{TokKind::LParen, "(", pos};
        }
        if (c == ')') {
            advance();
            return Token{TokKind::RParen, ")", pos};
        }
        if (c == '"') return string_token(pos);
        if (c == '\'') throw SyntaxError("single-quoted strings are not supported; use \"...\"", pos);
        if (c == '|') {
            advance();
            std::string text;
            while (i_ < src_.size() && src_[i_] != '|') text.push_back(advance());
            if (i_ >= src_.size()) throw SyntaxError("unterminated quoted symbol", pos);
            advance();
            return Token{TokKind::Symbol, text, pos};
        }
        std::string text;
        while (i_ < src_.size() && !is_delim(src_[i_])) text.push_back(advance());
        if (text.empty()) throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
        if (text[0] == ':') return Token{TokKind::Keyword, text, pos};
        if (std::isdigit(static_cast<unsigned char>(text[0]))) {
            for (char d : text) {
                if (!std::isdigit(static_cast<unsigned char>(d))) throw SyntaxError("malformed numeral '" + text + "'", pos);
            }
            return Token{TokKind::Numeral, text, pos};
        }
        return Token{TokKind::Symbol, text, pos};
    }

private:
    static bool is_delim(char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' || c == ';' || c == '|';
    }

    char advance() {
        char c = src_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == ';') {
                while (i_ < src_.size() && src_[i_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token string_token(SourcePos pos) {
        advance();
        std::string body;
        for (;;) {
            if (i_ >= src_.size()) throw SyntaxError("unterminated string literal", pos);
            char c = advance();
            if (c == '"') {
                if (i_ < src_.size() && src_[i_] == '"') {
                    advance();
                    body.push_back('"');
                    continue;
                }
                break;
            }
            body.push_back(c);
        }
        return Token{TokKind::String, body, pos};
    }

    std::string_view src_;
    std::size_t i_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

struct SExpr {
    Token tok;  ///< LParen for lists
    std::vector<SExpr> items;

    bool is_list() const { return tok.kind == TokKind::LParen; }
    bool is_symbol(std::string_view s) const { return tok.kind == TokKind::Symbol && tok.text == s; }
};

SExpr read_sexpr(Lexer& lex, Token first) {
    if (first.kind == TokKind::RParen) throw SyntaxError("unexpected ')'", first.pos);
    if (first.kind == TokKind::End) throw SyntaxError("unexpected end of input", first.pos);
    SExpr e{first, {}};
    if (first.kind != TokKind::LParen) return e;
    for (;;) {
        Token t = lex.next();
        if (t.kind == TokKind::RParen) return e;
        if (t.kind == TokKind::End) throw SyntaxError("missing ')'", first.pos);
        e.items.push_back(read_sexpr(lex, std::move(t)));
    }
}

// -------------------------------------------------------------------- terms

struct Signature {
    std::vector<Sort> args;
    bool variadic = false;  ///< args[0] repeated, at least `min_args`
    std::size_t min_args = 0;
};

const std::unordered_map<std::string, std::pair<Op, Signature>>& fixed_ops() {
    using S = Sort;
    static const std::unordered_map<std::string, std::pair<Op, Signature>> table = {
        {"not", {Op::Not, {{S::Bool}}}},
        {"=>", {Op::Implies, {{S::Bool, S::Bool}}}},
        {"and", {Op::And, {{S::Bool}, true, 0}}},
        {"or", {Op::Or, {{S::Bool}, true, 0}}},
        {"+", {Op::Add, {{S::Int}, true, 1}}},
        {"str.++", {Op::StrConcat, {{S::String}, true, 1}}},
        {"str.len", {Op::StrLen, {{S::String}}}},
        {"str.at", {Op::StrAt, {{S::String, S::Int}}}},
        {"str.substr", {Op::StrSubstr, {{S::String, S::Int, S::Int}}}},
        {"str.indexof", {Op::StrIndexOf, {{S::String, S::String, S::Int}}}},
        {"str.prefixof", {Op::StrPrefixOf, {{S::String, S::String}}}},
        {"str.suffixof", {Op::StrSuffixOf, {{S::String, S::String}}}},
        {"str.contains", {Op::StrContains, {{S::String, S::String}}}},
        {"str.replace", {Op::StrReplace, {{S::String, S::String, S::String}}}},
        {"str.replace_all", {Op::StrReplaceAll, {{S::String, S::String, S::String}}}},
        {"str.replaceall", {Op::StrReplaceAll, {{S::String, S::String, S::String}}}},
        {"str.replace_re", {Op::StrReplaceRe, {{S::String, S::RegLan, S::String}}}},
        {"str.replace_re_all", {Op::StrReplaceReAll, {{S::String, S::RegLan, S::String}}}},
        {"str.reverse", {Op::StrReverse, {{S::String}}}},
        {"str.to_int", {Op::StrToInt, {{S::String}}}},
        {"str.to.int", {Op::StrToInt, {{S::String}}}},
        {"str.from_int", {Op::StrFromInt, {{S::Int}}}},
        {"int.to.str", {Op::StrFromInt, {{S::Int}}}},
        {"str.in_re", {Op::StrInRe, {{S::String, S::RegLan}}}},
        {"str.in.re", {Op::StrInRe, {{S::String, S::RegLan}}}},
        {"re.++", {Op::ReConcat, {{S::RegLan}, true, 1}}},
        {"re.union", {Op::ReUnion, {{S::RegLan}, true, 1}}},
        {"re.inter", {Op::ReInter, {{S::RegLan}, true, 1}}},
        {"re.*", {Op::ReStar, {{S::RegLan}}}},
        {"re.+", {Op::RePlus, {{S::RegLan}}}},
        {"re.opt", {Op::ReOpt, {{S::RegLan}}}},
        {"re.comp", {Op::ReComp, {{S::RegLan}}}},
        {"re.diff", {Op::ReDiff, {{S::RegLan, S::RegLan}}}},
    };
    return table;
}

class TermBuilder {
public:
    std::map<std::string, Sort> declared;

    TermPtr build(const SExpr& e) {
        if (!e.is_list()) return build_atom(e);
        if (e.items.empty()) throw SyntaxError("empty application", e.tok.pos);
        const SExpr& head = e.items[0];
        if (head.is_list()) return build_indexed(e);
        if (head.tok.kind != TokKind::Symbol) throw SyntaxError("expected an operator", head.tok.pos);
        const std::string& f = head.tok.text;
        const SourcePos pos = head.tok.pos;
        std::vector<SExpr> rest(e.items.begin() + 1, e.items.end());

        if (f == "let") return build_let(e);
        if (f == "re.from_automaton") {
            if (rest.size() != 1 || rest[0].tok.kind != TokKind::String) {
                throw SortError("re.from_automaton expects one string literal", pos);
            }
            return at(mk_from_automaton(decode_string_literal(rest[0].tok.text, rest[0].tok.pos)), pos);
        }
        if (f == "str.to_re" || f == "str.to.re") {
            auto args = build_args(rest);
            check_arity(f, args, 1, pos);
            check_sort(args[0], Sort::String, pos);
            if (args[0]->op != Op::StrLit) throw NonConstantRegex("str.to_re applied to a non-literal string");
            return at(mk_app(Op::StrToRe, std::move(args)), pos);
        }
        if (f == "re.range") {
            auto args = build_args(rest);
            check_arity(f, args, 2, pos);
            for (auto& a : args) {
                check_sort(a, Sort::String, pos);
                if (a->op != Op::StrLit) throw SortError("re.range expects string literals", pos);
            }
            return at(mk_app(Op::ReRange, std::move(args)), pos);
        }

        auto args = build_args(rest);
        if (f == "=" || f == "distinct") return build_eq(f, std::move(args), pos);
        if (f == "<=" || f == "<" || f == ">=" || f == ">") return build_cmp(f, std::move(args), pos);
        if (f == "-") {
            if (args.empty()) throw SortError("'-' expects at least one argument", pos);
            for (auto& a : args) check_sort(a, Sort::Int, pos);
            if (args.size() == 1) {
                if (args[0]->op == Op::IntLit) return at(mk_int(-args[0]->value), pos);
                return at(mk_app(Op::Neg, std::move(args)), pos);
            }
            return at(mk_app(Op::Sub, std::move(args)), pos);
        }
        if (f == "*") {
            if (args.size() < 2) throw SortError("'*' expects at least two arguments", pos);
            int nonconst = 0;
            for (auto& a : args) {
                check_sort(a, Sort::Int, pos);
                if (a->op != Op::IntLit) ++nonconst;
            }
            if (nonconst > 1) throw SortError("nonlinear multiplication is not supported", pos);
            return at(mk_app(Op::Mul, std::move(args)), pos);
        }
        auto it = fixed_ops().find(f);
        if (it == fixed_ops().end()) throw UnknownSymbol("unknown function symbol '" + f + "'", pos);
        const auto& [op, sig] = it->second;
        if (sig.variadic) {
            if (args.size() < sig.min_args) throw SortError("too few arguments for '" + f + "'", pos);
            for (auto& a : args) check_sort(a, sig.args[0], pos);
            if (op == Op::And && args.empty()) return mk_true();
            if (op == Op::Or && args.empty()) return mk_false();
        } else {
            check_arity(f, args, sig.args.size(), pos);
            for (std::size_t i = 0; i < args.size(); ++i) check_sort(args[i], sig.args[i], pos);
        }
        return at(mk_app(op, std::move(args)), pos);
    }

private:
    std::vector<std::map<std::string, TermPtr>> scopes_;

    static TermPtr at(TermPtr t, SourcePos pos) {
        auto copy = std::make_shared<Term>(*t);
        copy->pos = pos;
        return copy;
    }

    static void check_arity(const std::string& f, const std::vector<TermPtr>& args, std::size_t n, SourcePos pos) {
        if (args.size() != n) {
            throw SortError("'" + f + "' expects " + std::to_string(n) + " argument(s), got " + std::to_string(args.size()), pos);
        }
    }

    static void check_sort(const TermPtr& t, Sort s, SourcePos pos) {
        if (t->sort != s) {
            throw SortError("expected " + std::string(sort_name(s)) + ", got " + std::string(sort_name(t->sort)),
                            t->pos.line ? t->pos : pos);
        }
    }

    std::vector<TermPtr> build_args(const std::vector<SExpr>& es) {
        std::vector<TermPtr> out;
        out.reserve(es.size());
        for (const auto& e : es) out.push_back(build(e));
        return out;
    }

    TermPtr build_atom(const SExpr& e) {
        const Token& t = e.tok;
        switch (t.kind) {
            case TokKind::Numeral: {
                std::int64_t v = 0;
                for (char d : t.text) {
                    if (v > (std::numeric_limits<std::int64_t>::max() - (d - '0')) / 10) {
                        throw SortError("integer literal out of range", t.pos);
                    }
                    v = v * 10 + (d - '0');
                }
                return at(mk_int(v), t.pos);
            }
            case TokKind::String: return at(mk_str(decode_string_literal(t.text, t.pos)), t.pos);
            case TokKind::Keyword: throw SyntaxError("unexpected keyword " + t.text, t.pos);
            case TokKind::Symbol: break;
            default: throw SyntaxError("unexpected token", t.pos);
        }
        const std::string& s = t.text;
        if (s == "true") return mk_true();
        if (s == "false") return mk_false();
        if (s == "re.none" || s == "re.nostr") return at(mk_app(Op::ReNone, {}), t.pos);
        if (s == "re.all") return at(mk_app(Op::ReAll, {}), t.pos);
        if (s == "re.allchar") return at(mk_app(Op::ReAllChar, {}), t.pos);
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto found = it->find(s);
            if (found != it->end()) return found->second;
        }
        auto d = declared.find(s);
        if (d == declared.end()) throw UnknownSymbol("undeclared identifier '" + s + "'", t.pos);
        return at(mk_var(s, d->second), t.pos);
    }

    TermPtr build_let(const SExpr& e) {
        const SourcePos pos = e.tok.pos;
        if (e.items.size() != 3 || !e.items[1].is_list()) throw SyntaxError("malformed let", pos);
        std::map<std::string, TermPtr> scope;
        for (const SExpr& b : e.items[1].items) {
            if (!b.is_list() || b.items.size() != 2 || b.items[0].tok.kind != TokKind::Symbol) {
                throw SyntaxError("malformed let binding", b.tok.pos);
            }
            scope[b.items[0].tok.text] = build(b.items[1]);
        }
        scopes_.push_back(std::move(scope));
        TermPtr body = build(e.items[2]);
        scopes_.pop_back();
        return body;
    }

    TermPtr build_indexed(const SExpr& e) {
        const SExpr& head = e.items[0];
        const SourcePos pos = head.tok.pos;
        if (head.items.size() < 2 || !head.items[0].is_symbol("_")) throw SyntaxError("malformed indexed operator", pos);
        const std::string& f = head.items[1].tok.text;
        std::vector<std::uint64_t> idx;
        for (std::size_t i = 2; i < head.items.size(); ++i) {
            if (head.items[i].tok.kind != TokKind::Numeral) throw SyntaxError("expected a numeral index", head.items[i].tok.pos);
            const std::string& text = head.items[i].tok.text;
            if (text.size() > 9) throw RepetitionLimit("repetition bound " + text + " is too large");
            idx.push_back(std::stoull(text));
        }
        std::vector<SExpr> rest(e.items.begin() + 1, e.items.end());
        auto args = build_args(rest);
        check_arity(f, args, 1, pos);
        check_sort(args[0], Sort::RegLan, pos);
        if (f == "re.loop" && idx.size() == 2) {
            return at(mk_loop(args[0], static_cast<std::uint32_t>(idx[0]), static_cast<std::uint32_t>(idx[1])), pos);
        }
        if (f == "re.^" && idx.size() == 1) {
            return at(mk_loop(args[0], static_cast<std::uint32_t>(idx[0]), static_cast<std::uint32_t>(idx[0])), pos);
        }
        throw UnknownSymbol("unknown indexed operator '" + f + "'", pos);
    }

    TermPtr build_eq(const std::string& f, std::vector<TermPtr> args, SourcePos pos) {
        if (args.size() < 2) throw SortError("'" + f + "' expects at least two arguments", pos);
        for (auto& a : args) {
            if (a->sort != args[0]->sort) throw SortError("'" + f + "' on arguments of different sorts", pos);
        }
        if (args[0]->sort == Sort::RegLan) throw SortError("equality of regular expressions is not supported", pos);
        if (f == "distinct") return at(mk_app(Op::Distinct, std::move(args)), pos);
        if (args.size() == 2) return at(mk_app(Op::Eq, std::move(args)), pos);
        std::vector<TermPtr> conj;
        for (std::size_t i = 0; i + 1 < args.size(); ++i) conj.push_back(at(mk_app(Op::Eq, {args[i], args[i + 1]}), pos));
        return at(mk_app(Op::And, std::move(conj)), pos);
    }

    TermPtr build_cmp(const std::string& f, std::vector<TermPtr> args, SourcePos pos) {
        if (args.size() < 2) throw SortError("'" + f + "' expects at least two arguments", pos);
        for (auto& a : args) check_sort(a, Sort::Int, pos);
        Op op = f == "<=" ? Op::Le : f == "<" ? Op::Lt : f == ">=" ? Op::Ge : Op::Gt;
        if (args.size() == 2) return at(mk_app(op, std::move(args)), pos);
        std::vector<TermPtr> conj;
        for (std::size_t i = 0; i + 1 < args.size(); ++i) conj.push_back(at(mk_app(op, {args[i], args[i + 1]}), pos));
        return at(mk_app(Op::And, std::move(conj)), pos);
    }
};

Sort parse_sort(const SExpr& e) {
    if (e.is_symbol("String")) return Sort::String;
    if (e.is_symbol("Int")) return Sort::Int;
    if (e.is_symbol("Bool")) throw SortError("Boolean constants are not supported", e.tok.pos);
    throw SortError("unsupported sort", e.tok.pos);
}

std::string sexpr_text(const SExpr& e) {
    if (!e.is_list()) {
        if (e.tok.kind == TokKind::String) {
            std::string out = "\"";
            for (char c : e.tok.text) out += c == '"' ? std::string("\"\"") : std::string(1, c);
            return out + "\"";
        }
        return e.tok.text;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += ' ';
        out += sexpr_text(e.items[i]);
    }
    return out + ")";
}

}  // namespace

Word decode_string_literal(std::string_view body, SourcePos pos) {
    Word raw = utf8_decode(body);
    Word out;
    auto hex = [](CodePoint c) -> int {
        if (c >= '0' && c <= '9') return static_cast<int>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<int>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<int>(c - 'A' + 10);
        return -1;
    };
    std::size_t i = 0;
    while (i < raw.size()) {
        if (raw[i] == U'\\' && i + 1 < raw.size() && raw[i + 1] == U'u') {
            // \u{d} .. \u{ddddd}
            if (i + 2 < raw.size() && raw[i + 2] == U'{') {
                std::size_t j = i + 3;
                std::uint32_t v = 0;
                std::size_t digits = 0;
                while (j < raw.size() && hex(raw[j]) >= 0 && digits < 5) {
                    v = v * 16 + static_cast<std::uint32_t>(hex(raw[j]));
                    ++j;
                    ++digits;
                }
                if (digits > 0 && j < raw.size() && raw[j] == U'}') {
                    if (v > kMaxCodePoint) throw SortError("code point outside [0, 0x2FFFF] in string literal", pos);
                    out.push_back(v);
                    i = j + 1;
                    continue;
                }
            } else if (i + 6 <= raw.size()) {
                // \udddd
                std::uint32_t v = 0;
                bool ok = true;
                for (std::size_t k = 2; k < 6; ++k) {
                    int h = hex(raw[i + k]);
                    if (h < 0) {
                        ok = false;
                        break;
                    }
                    v = v * 16 + static_cast<std::uint32_t>(h);
                }
                if (ok) {
                    out.push_back(v);
                    i += 6;
                    continue;
                }
            }
        }
        if (raw[i] > kMaxCodePoint) throw SortError("code point outside [0, 0x2FFFF] in string literal", pos);
        out.push_back(raw[i]);
        ++i;
    }
    return out;
}

Script parse_script(std::string_view text) {
    Lexer lex(text);
    TermBuilder builder;
    Script script;
    for (;;) {
        Token t = lex.next();
        if (t.kind == TokKind::End) break;
        if (t.kind != TokKind::LParen) throw SyntaxError("expected '(' to start a command", t.pos);
        SExpr cmd = read_sexpr(lex, t);
        if (cmd.items.empty() || cmd.items[0].tok.kind != TokKind::Symbol) {
            throw SyntaxError("expected a command name", cmd.tok.pos);
        }
        const std::string& name = cmd.items[0].tok.text;
        const SourcePos pos = cmd.items[0].tok.pos;
        Command c{CommandKind::Exit, {}, {}, Sort::Bool, nullptr, pos};
        auto need = [&](std::size_t n) {
            if (cmd.items.size() != n) throw SyntaxError("malformed " + name + " command", pos);
        };
        if (name == "set-logic") {
            need(2);
            c.kind = CommandKind::SetLogic;
            c.name = cmd.items[1].tok.text;
        } else if (name == "set-option" || name == "set-info") {
            if (cmd.items.size() < 2 || cmd.items[1].tok.kind != TokKind::Keyword) {
                throw SyntaxError("expected a keyword after " + name, pos);
            }
            c.kind = name == "set-option" ? CommandKind::SetOption : CommandKind::SetInfo;
            c.name = cmd.items[1].tok.text;
            for (std::size_t i = 2; i < cmd.items.size(); ++i) {
                if (i > 2) c.value += ' ';
                c.value += sexpr_text(cmd.items[i]);
            }
        } else if (name == "declare-fun" || name == "declare-const") {
            const bool fun = name == "declare-fun";
            need(fun ? 4 : 3);
            const SExpr& id = cmd.items[1];
            if (id.tok.kind != TokKind::Symbol) throw SyntaxError("expected a symbol to declare", id.tok.pos);
            if (fun && (!cmd.items[2].is_list() || !cmd.items[2].items.empty())) {
                throw SortError("only nullary functions can be declared", cmd.items[2].tok.pos);
            }
            if (builder.declared.count(id.tok.text)) throw SyntaxError("duplicate declaration of '" + id.tok.text + "'", id.tok.pos);
            c.kind = CommandKind::DeclareFun;
            c.name = id.tok.text;
            c.sort = parse_sort(cmd.items.back());
            builder.declared[c.name] = c.sort;
        } else if (name == "assert") {
            need(2);
            c.kind = CommandKind::Assert;
            c.term = builder.build(cmd.items[1]);
            if (c.term->sort != Sort::Bool) throw SortError("assert expects a Bool term", cmd.items[1].tok.pos);
        } else if (name == "check-sat") {
            need(1);
            c.kind = CommandKind::CheckSat;
        } else if (name == "get-model") {
            need(1);
            c.kind = CommandKind::GetModel;
        } else if (name == "exit") {
            need(1);
            c.kind = CommandKind::Exit;
        } else {
            throw UnknownSymbol("unsupported command '" + name + "'", pos);
        }
        script.commands.push_back(std::move(c));
    }
    return script;
}

}  // namespace strsolve::frontend
