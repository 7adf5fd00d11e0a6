#pragma once

#include <stdexcept>
#include <string>

namespace fucik {

// Input outside an operation's domain (CLI exit status 2).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Non-convergence, step underflow, radius collapse (CLI exit status 3).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class RadiusCollapseError : public NumericalError {
 public:
  explicit RadiusCollapseError(const std::string& what) : NumericalError(what) {}
};

}  // namespace fucik
