#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strsolve/engine/engine.hpp"
#include "strsolve/frontend/term.hpp"
#include "strsolve/oracle/oracle.hpp"

namespace strsolve::frontend {

/// Values of the declared constants, in declaration order.
struct Model {
    std::vector<std::pair<std::string, Sort>> decls;
    oracle::Env values;
};

struct RunOptions {
    engine::SolverConfig config;
    bool portfolio = false;
    bool dump_normal_form = false;
    bool dump_automata = false;
    /// Receives warnings and dumps, one message per call.
    std::function<void(const std::string&)> diagnostics;
};

struct Response {
    enum class Kind { Status, Model } kind;
    std::string text;
};

/// Result of the last check-sat, kept for tests and the CLI.
struct CheckResult {
    engine::Verdict verdict;
    std::optional<Model> model;
};

/// Executes the commands in order; check-sat solves the conjunction of all
/// asserts so far. A sat verdict whose model fails term-level re-evaluation
/// is reported as unknown. Throws ModelUnavailable for get-model without a
/// preceding sat.
std::vector<Response> run_script(const Script& s, const RunOptions& opts, std::vector<CheckResult>* results = nullptr);

/// `(define-fun name () Sort value)` lines, one per declared constant.
std::string print_model(const Model& m);

}  // namespace strsolve::frontend
