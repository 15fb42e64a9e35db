// Error types shared across the library; the CLI maps them to exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace fracperc {

// Invalid parameters, malformed configuration, domain violations. Exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Rejection sampling exhausted its attempt budget. Exit code 3.
class ConditioningError : public std::runtime_error {
 public:
  ConditioningError(const std::string& what, double extinction_prob, int attempts)
      : std::runtime_error(what), extinction_prob(extinction_prob), attempts(attempts) {}

  double extinction_prob;
  int attempts;
};

// A configured resource cap (cell count, grid size) would be exceeded. Exit code 4.
class ResourceCapError : public std::runtime_error {
 public:
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracperc
