#pragma once

#include <stdexcept>
#include <string>

namespace fnls {

// Adaptive stepping could not meet the tolerance at the minimum step size.
struct StepFailure : std::runtime_error {
    explicit StepFailure(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling against the L2 cutoff made no progress.
struct CutoffStarvation : std::runtime_error {
    explicit CutoffStarvation(const std::string& what) : std::runtime_error(what) {}
};

// A quadruple off the resonant set produced a numerically vanishing phase.
// This would contradict the phase lower bound, so it signals an enumeration bug.
struct DegenerateQuadruple : std::runtime_error {
    explicit DegenerateQuadruple(const std::string& what) : std::runtime_error(what) {}
};

// Invalid experiment configuration; carries the offending key.
struct ConfigError : std::runtime_error {
    std::string key;
    ConfigError(std::string key_, const std::string& what)
        : std::runtime_error(what), key(std::move(key_)) {}
};

}  // namespace fnls
