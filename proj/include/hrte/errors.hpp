#pragma once

#include <stdexcept>
#include <string>

namespace hrte {

// Bad user input: config files, checkpoint headers, out-of-range parameters.
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The time stepper lost the solution (mass drift, non-finite values).
// The CLI maps this to exit code 3.
class IntegratorBreakdown : public std::runtime_error {
public:
    IntegratorBreakdown(const std::string& what, long step, double t)
        : std::runtime_error(what), step(step), t(t) {}
    long step;
    double t;
};

} // namespace hrte
