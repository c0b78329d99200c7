#include "strsolve/frontend/term.hpp"

namespace strsolve::frontend {

std::string_view sort_name(Sort s) {
    switch (s) {
        case Sort::Bool: return "Bool";
        case Sort::String: return "String";
        case Sort::Int: return "Int";
        case Sort::RegLan: return "RegLan";
    }
    return "?";
}

std::string_view op_name(Op op) {
    switch (op) {
        case Op::True: return "true";
        case Op::False: return "false";
        case Op::IntLit: return "<int>";
        case Op::StrLit: return "<string>";
        case Op::Var: return "<var>";
        case Op::Not: return "not";
        case Op::And: return "and";
        case Op::Or: return "or";
        case Op::Implies: return "=>";
        case Op::Eq: return "=";
        case Op::Distinct: return "distinct";
        case Op::Le: return "<=";
        case Op::Lt: return "<";
        case Op::Ge: return ">=";
        case Op::Gt: return ">";
        case Op::Add: return "+";
        case Op::Sub: return "-";
        case Op::Neg: return "-";
        case Op::Mul: return "*";
        case Op::StrConcat: return "str.++";
        case Op::StrLen: return "str.len";
        case Op::StrAt: return "str.at";
        case Op::StrSubstr: return "str.substr";
        case Op::StrIndexOf: return "str.indexof";
        case Op::StrPrefixOf: return "str.prefixof";
        case Op::StrSuffixOf: return "str.suffixof";
        case Op::StrContains: return "str.contains";
        case Op::StrReplace: return "str.replace";
        case Op::StrReplaceAll: return "str.replace_all";
        case Op::StrReplaceRe: return "str.replace_re";
        case Op::StrReplaceReAll: return "str.replace_re_all";
        case Op::StrReverse: return "str.reverse";
        case Op::StrToInt: return "str.to_int";
        case Op::StrFromInt: return "str.from_int";
        case Op::StrInRe: return "str.in_re";
        case Op::StrToRe: return "str.to_re";
        case Op::ReNone: return "re.none";
        case Op::ReAll: return "re.all";
        case Op::ReAllChar: return "re.allchar";
        case Op::ReConcat: return "re.++";
        case Op::ReUnion: return "re.union";
        case Op::ReInter: return "re.inter";
        case Op::ReStar: return "re.*";
        case Op::RePlus: return "re.+";
        case Op::ReOpt: return "re.opt";
        case Op::ReRange: return "re.range";
        case Op::ReComp: return "re.comp";
        case Op::ReDiff: return "re.diff";
        case Op::ReLoop: return "re.loop";
        case Op::ReFromAutomaton: return "re.from_automaton";
    }
    return "?";
}

namespace {

Sort result_sort(Op op) {
    switch (op) {
        case Op::True:
        case Op::False:
        case Op::Not:
        case Op::And:
        case Op::Or:
        case Op::Implies:
        case Op::Eq:
        case Op::Distinct:
        case Op::Le:
        case Op::Lt:
        case Op::Ge:
        case Op::Gt:
        case Op::StrPrefixOf:
        case Op::StrSuffixOf:
        case Op::StrContains:
        case Op::StrInRe:
            return Sort::Bool;
        case Op::IntLit:
        case Op::Add:
        case Op::Sub:
        case Op::Neg:
        case Op::Mul:
        case Op::StrLen:
        case Op::StrIndexOf:
        case Op::StrToInt:
            return Sort::Int;
        case Op::StrLit:
        case Op::StrConcat:
        case Op::StrAt:
        case Op::StrSubstr:
        case Op::StrReplace:
        case Op::StrReplaceAll:
        case Op::StrReplaceRe:
        case Op::StrReplaceReAll:
        case Op::StrReverse:
        case Op::StrFromInt:
            return Sort::String;
        case Op::Var:
            return Sort::String;
        default:
            return Sort::RegLan;
    }
}

}  // namespace

TermPtr mk_true() {
    static const TermPtr t = std::make_shared<const Term>(Term{Op::True, Sort::Bool, {}, {}, {}, 0, 0, 0, {}});
    return t;
}

TermPtr mk_false() {
    static const TermPtr t = std::make_shared<const Term>(Term{Op::False, Sort::Bool, {}, {}, {}, 0, 0, 0, {}});
    return t;
}

TermPtr mk_bool(bool b) { return b ? mk_true() : mk_false(); }

TermPtr mk_int(std::int64_t v) {
    Term t{Op::IntLit, Sort::Int, {}, {}, {}, v, 0, 0, {}};
    return std::make_shared<const Term>(std::move(t));
}

TermPtr mk_str(Word w) {
    Term t{Op::StrLit, Sort::String, {}, {}, std::move(w), 0, 0, 0, {}};
    return std::make_shared<const Term>(std::move(t));
}

TermPtr mk_var(std::string name, Sort sort) {
    Term t{Op::Var, sort, {}, std::move(name), {}, 0, 0, 0, {}};
    return std::make_shared<const Term>(std::move(t));
}

TermPtr mk_app(Op op, std::vector<TermPtr> args) {
    Term t{op, result_sort(op), std::move(args), {}, {}, 0, 0, 0, {}};
    return std::make_shared<const Term>(std::move(t));
}

TermPtr mk_loop(TermPtr re, std::uint32_t lo, std::uint32_t hi) {
    Term t{Op::ReLoop, Sort::RegLan, {std::move(re)}, {}, {}, 0, lo, hi, {}};
    return std::make_shared<const Term>(std::move(t));
}

TermPtr mk_from_automaton(Word text) {
    Term t{Op::ReFromAutomaton, Sort::RegLan, {}, {}, std::move(text), 0, 0, 0, {}};
    return std::make_shared<const Term>(std::move(t));
}

bool term_equal(const Term& a, const Term& b) {
    if (a.op != b.op || a.sort != b.sort || a.name != b.name || a.str != b.str || a.value != b.value ||
        a.lo != b.lo || a.hi != b.hi || a.args.size() != b.args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!term_equal(*a.args[i], *b.args[i])) return false;
    }
    return true;
}

bool command_equal(const Command& a, const Command& b) {
    if (a.kind != b.kind || a.name != b.name || a.value != b.value) return false;
    if (a.kind == CommandKind::DeclareFun && a.sort != b.sort) return false;
    if (a.kind == CommandKind::Assert) return term_equal(*a.term, *b.term);
    return true;
}

bool script_equal(const Script& a, const Script& b) {
    if (a.commands.size() != b.commands.size()) return false;
    for (std::size_t i = 0; i < a.commands.size(); ++i) {
        if (!command_equal(a.commands[i], b.commands[i])) return false;
    }
    return true;
}

}  // namespace strsolve::frontend
