#include "strsolve/frontend/printer.hpp"

#include <cctype>

namespace strsolve::frontend {

namespace {

bool simple_symbol(const std::string& s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c))) continue;
        if (std::string_view("~!@$%^&*_-+=<>.?/").find(c) == std::string_view::npos) return false;
    }
    return true;
}

std::string print_symbol(const std::string& s) { return simple_symbol(s) ? s : "|" + s + "|"; }

}  // namespace

std::string print_int(std::int64_t v) {
    if (v >= 0) return std::to_string(v);
    auto mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
    return "(- " + std::to_string(mag) + ")";
}

std::string print_term(const Term& t) {
    switch (t.op) {
        case Op::True: return "true";
        case Op::False: return "false";
        case Op::IntLit: return print_int(t.value);
        case Op::StrLit: return to_smtlib_literal(t.str);
        case Op::Var: return print_symbol(t.name);
        case Op::ReNone:
        case Op::ReAll:
        case Op::ReAllChar: return std::string(op_name(t.op));
        case Op::ReLoop:
            return "((_ re.loop " + std::to_string(t.lo) + " " + std::to_string(t.hi) + ") " + print_term(*t.args[0]) + ")";
        case Op::ReFromAutomaton: return "(re.from_automaton " + to_smtlib_literal(t.str) + ")";
        default: break;
    }
    std::string out = "(";
    out += op_name(t.op);
    for (const auto& a : t.args) {
        out += ' ';
        out += print_term(*a);
    }
    return out + ")";
}

std::string print_command(const Command& c) {
    switch (c.kind) {
        case CommandKind::SetLogic: return "(set-logic " + c.name + ")";
        case CommandKind::SetOption: return "(set-option " + c.name + (c.value.empty() ? "" : " " + c.value) + ")";
        case CommandKind::SetInfo: return "(set-info " + c.name + (c.value.empty() ? "" : " " + c.value) + ")";
        case CommandKind::DeclareFun:
            return "(declare-fun " + print_symbol(c.name) + " () " + std::string(sort_name(c.sort)) + ")";
        case CommandKind::Assert: return "(assert " + print_term(*c.term) + ")";
        case CommandKind::CheckSat: return "(check-sat)";
        case CommandKind::GetModel: return "(get-model)";
        case CommandKind::Exit: return "(exit)";
    }
    return "";
}

std::string print_script(const Script& s) {
    std::string out;
    for (const auto& c : s.commands) out += print_command(c) + "\n";
    return out;
}

}  // namespace strsolve::frontend
