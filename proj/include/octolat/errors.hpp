#pragma once

#include <stdexcept>
#include <string>

namespace octolat {

// Error taxonomy. Every failure mode callers are expected to handle gets its
// own type so tests and the CLI can react to the condition, not to a message.

struct ZeroInput : std::runtime_error {
  explicit ZeroInput(const std::string& what) : std::runtime_error(what) {}
};

// Complexified octonions contain zero divisors; inversion refuses them.
struct ZeroDivisor : std::runtime_error {
  explicit ZeroDivisor(const std::string& what) : std::runtime_error(what) {}
};

struct TopologyMismatch : std::runtime_error {
  explicit TopologyMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SupportViolation : std::runtime_error {
  explicit SupportViolation(const std::string& what) : std::runtime_error(what) {}
};

// Raised by oracles when asked to run beyond their cost guard. Oracles never
// subsample silently.
struct SizeGuard : std::runtime_error {
  explicit SizeGuard(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct SingularFrequency : std::runtime_error {
  explicit SingularFrequency(const std::string& what) : std::runtime_error(what) {}
};

struct MissingFundamentalSolution : std::runtime_error {
  explicit MissingFundamentalSolution(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedInput : std::runtime_error {
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

struct SizeCapExceeded : std::runtime_error {
  explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace octolat
