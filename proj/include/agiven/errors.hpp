#pragma once

#include <stdexcept>
#include <string>

namespace agiven {

// Invalid or inconsistent input (config fields, domain violations). CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Model cannot be evaluated: queue unstable or problem infeasible. CLI exit code 2.
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(const std::string& msg, double load)
        : std::runtime_error(msg + " (load " + std::to_string(load) + ")"), load_(load) {}
    double load() const { return load_; }

private:
    double load_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace agiven
