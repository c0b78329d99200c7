#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "strsolve/engine/config.hpp"
#include "strsolve/error.hpp"

namespace strsolve::cli {

class UsageError : public Error {
public:
    using Error::Error;
};

struct CliOptions {
    engine::SolverConfig config;
    bool portfolio = false;
    bool dump_normal_form = false;
    bool dump_automata = false;
    std::optional<std::string> input;  ///< nullopt: read stdin
    bool help = false;
};

/// Parses the arguments after the program name. Accepts the flag tokens
/// `+F`/`-F`, `+B`/`-B`, `+N`/`-N`, `+eager`/`-eager`, also glued together
/// (`+F+B-N`). `trace_env` is the value of STRSOLVE_TRACE, if set.
/// Throws UsageError.
CliOptions parse_args(const std::vector<std::string>& args, const char* trace_env = nullptr);

/// Full driver; returns the process exit code (0 sat/unsat, 2 unknown, 1 error).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const char* trace_env = nullptr);

}  // namespace strsolve::cli
