#pragma once

#include <stdexcept>
#include <string>

namespace besovcap {

/// Invalid argument, configuration value, or contract violation by the caller.
class parameter_error : public std::invalid_argument {
public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A scale cannot be represented on the requested lattice (e.g. mollifier
/// radius below three cells).
class resolution_error : public parameter_error {
public:
  explicit resolution_error(const std::string& what) : parameter_error(what) {}
};

/// Internal numerical failure: non-finite values, or a scan that the
/// underlying estimate guarantees must succeed came up empty.
class numerical_fault : public std::runtime_error {
public:
  explicit numerical_fault(const std::string& what) : std::runtime_error(what) {}
};

} // namespace besovcap
