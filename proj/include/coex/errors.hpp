#ifndef COEX_ERRORS_HPP
#define COEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coex {

// Bad or inconsistent user-supplied configuration (JSON files, CLI flags).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Model input outside the mathematical domain (e.g. a probability of 1
// where the formulas divide by 1-p).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Numerical solver failed to converge.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant of the analytical model was violated (indicates a
// bug or a numerically hostile input, not a user mistake).
class ModelConsistencyError : public std::logic_error {
public:
    explicit ModelConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

// compare found model/simulation deviations above tolerance. Not an error
// in the program; mapped to its own exit code.
class ToleranceFailure : public std::runtime_error {
public:
    explicit ToleranceFailure(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace coex

#endif
