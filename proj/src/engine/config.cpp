#include "strsolve/engine/config.hpp"

#include "strsolve/error.hpp"

namespace strsolve::engine {

void SolverConfig::validate() const {
    if (!forward && !backward) throw ConfigError("at least one of forward (+F) and backward (+B) propagation must be enabled");
    if (state_cap == 0) throw ConfigError("state cap must be positive");
}

std::string SolverConfig::flags() const {
    std::string s;
    s += forward ? "+F" : "-F";
    s += backward ? "+B" : "-B";
    s += nielsen ? "+N" : "-N";
    return s;
}

std::string SolverConfig::header() const {
    std::string s = "config " + flags();
    s += eager ? " eager=on" : " eager=off";
    s += " step-cap=" + std::to_string(step_cap);
    s += " time-cap-ms=" + std::to_string(time_cap_ms);
    s += " state-cap=" + std::to_string(state_cap);
    s += " weights=" + std::to_string(weights.ground) + "," + std::to_string(weights.universal_backward) + "," +
         std::to_string(weights.inexact_forward) + "," + std::to_string(weights.size) + "," + std::to_string(weights.age);
    return s;
}

}  // namespace strsolve::engine
