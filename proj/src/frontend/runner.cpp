#include "strsolve/frontend/runner.hpp"

#include <set>

#include "strsolve/error.hpp"
#include "strsolve/frontend/printer.hpp"
#include "strsolve/ir/normalize.hpp"

namespace strsolve::frontend {

namespace {

const std::set<std::string> kKnownOptions{":produce-models", ":print-success"};

void collect_langs(const ir::Formula& f, std::set<automata::AutomatonRef>& out) {
    if (f.kind == ir::Formula::Kind::Lit) {
        if (const auto* m = std::get_if<ir::InRe>(&f.lit.atom)) out.insert(m->lang);
        if (const auto* fe = std::get_if<ir::FunEq>(&f.lit.atom); fe && fe->lang) out.insert(*fe->lang);
    }
    for (const auto& c : f.children) collect_langs(c, out);
}

Value default_value(Sort s) { return s == Sort::String ? Value{Word{}} : Value{std::int64_t{0}}; }

}  // namespace

std::string print_model(const Model& m) {
    std::string out;
    for (const auto& [name, sort] : m.decls) {
        auto it = m.values.find(name);
        Value v = it != m.values.end() ? it->second : default_value(sort);
        out += "(define-fun " + name + " () " + std::string(sort_name(sort)) + " ";
        out += is_string(v) ? to_smtlib_literal(as_string(v)) : print_int(as_int(v));
        out += ")\n";
    }
    return out;
}

std::vector<Response> run_script(const Script& s, const RunOptions& opts, std::vector<CheckResult>* results) {
    auto diag = [&](const std::string& msg) {
        if (opts.diagnostics) opts.diagnostics(msg);
    };
    std::vector<Response> out;
    std::vector<std::pair<std::string, Sort>> decls;
    std::vector<TermPtr> asserts;
    std::optional<Model> last_model;

    for (const Command& c : s.commands) {
        switch (c.kind) {
            case CommandKind::SetLogic:
            case CommandKind::SetInfo: break;
            case CommandKind::SetOption:
                if (!kKnownOptions.count(c.name)) diag("warning: ignoring unsupported option " + c.name);
                break;
            case CommandKind::DeclareFun: decls.emplace_back(c.name, c.sort); break;
            case CommandKind::Assert: asserts.push_back(c.term); break;
            case CommandKind::GetModel:
                if (!last_model) throw ModelUnavailable();
                out.push_back({Response::Kind::Model, print_model(*last_model)});
                break;
            case CommandKind::Exit: return out;
            case CommandKind::CheckSat: {
                ir::Interner in;
                automata::AutomatonDb db(opts.config.state_cap);
                ir::Formula f = ir::normalize_all(asserts, in, db);
                if (opts.dump_normal_form) diag("normal form: " + ir::to_string(f, in));
                if (opts.dump_automata) {
                    std::set<automata::AutomatonRef> refs;
                    collect_langs(f, refs);
                    for (auto r : refs) diag(automata::to_dot(*db.get(r), "A" + std::to_string(r.id)));
                }
                CheckResult res;
                res.verdict = opts.portfolio ? engine::portfolio(f, in, db, opts.config) : engine::solve(f, in, db, opts.config);
                last_model.reset();
                if (res.verdict.status == engine::Status::Sat) {
                    Model m;
                    m.decls = decls;
                    for (const auto& [name, sort] : decls) m.values[name] = default_value(sort);
                    for (const auto& [v, val] : res.verdict.model) m.values[in.name(v)] = val;
                    bool ok = true;
                    try {
                        for (const TermPtr& t : asserts) ok = ok && oracle::eval_bool(*t, m.values);
                    } catch (const PreconditionViolation&) {
                        ok = false;
                    }
                    if (ok) {
                        last_model = m;
                        res.model = std::move(m);
                    } else {
                        res.verdict.status = engine::Status::Unknown;
                        res.verdict.reason = "model failed verification";
                        diag("warning: discarded a model that failed verification");
                    }
                }
                if (res.verdict.status == engine::Status::Unknown && !res.verdict.reason.empty()) {
                    diag("unknown: " + res.verdict.reason);
                }
                out.push_back({Response::Kind::Status, engine::status_name(res.verdict.status)});
                if (results) results->push_back(std::move(res));
                break;
            }
        }
    }
    return out;
}

}  // namespace strsolve::frontend
