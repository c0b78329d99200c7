#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "strsolve/automata/ops.hpp"

namespace strsolve::engine {

/// Weights of the rule-priority score (see priority_of).
struct Weights {
    std::int64_t ground = 1000;
    std::int64_t universal_backward = 300;
    std::int64_t inexact_forward = 300;
    std::int64_t size = 1;
    std::int64_t age = 10;

    bool operator==(const Weights&) const = default;
};

struct SolverConfig {
    bool forward = true;   ///< +F
    bool backward = true;  ///< +B
    bool nielsen = false;  ///< +N
    bool eager = true;     ///< eager intersection of automata per variable
    std::uint64_t step_cap = 100'000;
    std::uint64_t time_cap_ms = 0;  ///< 0: no time limit
    std::size_t state_cap = automata::kDefaultStateCap;
    int trace_level = 0;
    Weights weights;
    /// Number of distinct models to collect before stopping (1: stop at the first).
    std::size_t max_models = 1;
    /// Receives trace lines (without newline) when trace_level > 0.
    std::function<void(const std::string&)> trace_sink;

    /// Throws ConfigError when both propagation directions are disabled.
    void validate() const;
    /// The flag tokens, e.g. "+F+B-N".
    std::string flags() const;
    /// First trace line: flags and all numeric settings.
    std::string header() const;
};

}  // namespace strsolve::engine
