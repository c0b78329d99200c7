#include "strsolve/cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "strsolve/frontend/parser.hpp"
#include "strsolve/frontend/runner.hpp"

namespace strsolve::cli {

namespace {

const std::regex kToken("^([+-](F|B|N|eager))+$");
const std::regex kPiece("([+-])(F|B|N|eager)");

bool on_off(const std::string& v, const std::string& flag) {
    if (v == "on") return true;
    if (v == "off") return false;
    throw UsageError("--" + flag + " expects on or off, got " + v);
}

}  // namespace

CliOptions parse_args(const std::vector<std::string>& args, const char* trace_env) {
    CliOptions o;
    auto& c = o.config;
    if (trace_env && *trace_env) {
        try {
            c.trace_level = std::stoi(trace_env);
        } catch (const std::exception&) {
            throw UsageError(std::string("STRSOLVE_TRACE must be an integer, got ") + trace_env);
        }
    }

    // The paper-style tokens look like short options to CLI11, so they are taken out first.
    std::vector<std::string> rest;
    for (const std::string& a : args) {
        if (!std::regex_match(a, kToken)) {
            rest.push_back(a);
            continue;
        }
        for (std::sregex_iterator it(a.begin(), a.end(), kPiece), end; it != end; ++it) {
            bool v = (*it)[1] == "+";
            const std::string which = (*it)[2];
            if (which == "F") c.forward = v;
            else if (which == "B") c.backward = v;
            else if (which == "N") c.nielsen = v;
            else c.eager = v;
        }
    }

    CLI::App app{"strsolve: string constraint solver"};
    app.set_help_flag();
    std::string forward, backward, nielsen, eager;
    std::optional<std::uint64_t> step_cap, time_cap, state_cap;
    std::optional<int> trace;
    std::string input;
    app.add_option("--forward", forward);
    app.add_option("--backward", backward);
    app.add_option("--nielsen", nielsen);
    app.add_option("--eager", eager);
    app.add_option("--step-cap", step_cap);
    app.add_option("--time-cap", time_cap, "milliseconds");
    app.add_option("--state-cap", state_cap);
    bool trace_flag = false;
    app.add_flag("--trace", trace_flag);
    app.add_option("--trace-level", trace);
    app.add_option("--max-models", c.max_models);
    app.add_flag("--portfolio", o.portfolio);
    app.add_flag("--dump-normal-form", o.dump_normal_form);
    app.add_flag("--dump-automata", o.dump_automata);
    app.add_flag("-h,--help", o.help);
    app.add_option("input", input);
    std::vector<std::string> reversed(rest.rbegin(), rest.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    if (!forward.empty()) c.forward = on_off(forward, "forward");
    if (!backward.empty()) c.backward = on_off(backward, "backward");
    if (!nielsen.empty()) c.nielsen = on_off(nielsen, "nielsen");
    if (!eager.empty()) c.eager = on_off(eager, "eager");
    if (step_cap) c.step_cap = *step_cap;
    if (time_cap) c.time_cap_ms = *time_cap;
    if (state_cap) c.state_cap = static_cast<std::size_t>(*state_cap);
    if (trace_flag) c.trace_level = std::max(c.trace_level, 1);
    if (trace) c.trace_level = *trace;
    if (!input.empty()) o.input = input;
    try {
        c.validate();
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
    if (o.portfolio && c.time_cap_ms == 0) throw UsageError("--portfolio needs --time-cap");
    return o;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const char* trace_env) {
    CliOptions o;
    try {
        o = parse_args(args, trace_env);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }
    if (o.help) {
        out << "usage: strsolve [+F|-F][+B|-B][+N|-N][+eager|-eager] [--step-cap N] [--time-cap MS]\n"
               "                [--state-cap N] [--trace] [--trace-level N] [--portfolio] [--max-models N]\n"
               "                [--dump-normal-form] [--dump-automata] [file.smt2]\n";
        return 0;
    }
    std::string text;
    if (o.input) {
        std::ifstream f(*o.input, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << *o.input << "\n";
            return 1;
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    frontend::RunOptions ro;
    ro.config = o.config;
    ro.config.trace_sink = [&err](const std::string& line) { err << line << "\n"; };
    ro.portfolio = o.portfolio;
    ro.dump_normal_form = o.dump_normal_form;
    ro.dump_automata = o.dump_automata;
    ro.diagnostics = [&err](const std::string& msg) { err << msg << "\n"; };
    std::vector<frontend::CheckResult> results;
    try {
        auto script = frontend::parse_script(text);
        for (const auto& r : frontend::run_script(script, ro, &results)) {
            out << r.text;
            if (r.kind == frontend::Response::Kind::Status) out << "\n";
        }
    } catch (const Error& e) {
        out.flush();
        err << "error: " << e.what() << "\n";
        return 1;
    }
    for (const auto& r : results) {
        if (r.verdict.status == engine::Status::Unknown) return 2;
    }
    return 0;
}

}  // namespace strsolve::cli
