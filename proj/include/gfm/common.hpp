#pragma once

#include <stdexcept>
#include <string>

namespace gfm {

/// Newton iteration on the closed-loop equilibrium failed (non-convergence
/// or singular Jacobian). Carries the last residual norm seen.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual, int iterations)
        : std::runtime_error(what), residual_(residual), iterations_(iterations) {}
    double residual() const { return residual_; }
    int iterations() const { return iterations_; }

private:
    double residual_;
    int iterations_;
};

/// A state left the admissible region during time-domain integration.
class BlowupError : public std::runtime_error {
public:
    BlowupError(const std::string& what, double time)
        : std::runtime_error(what), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

/// Synthesis was started from a gain vector that already evaluates to a penalty.
class InfeasibleStartError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configuration file or CSV could not be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gfm
