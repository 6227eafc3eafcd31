#pragma once

#include <stdexcept>
#include <string>

namespace sqalab {

/// Invalid configuration value. Message names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// An example could not be constructed from the given inputs
/// (passage too short, empty distractor pool, span truncated away, ...).
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor shape mismatch or overlength sequence.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Non-finite value where a finite one is required.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the operation's domain (e.g. empty WER reference).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// A required input artifact (corpus, checkpoint, manifest) is missing.
class MissingInputError : public std::runtime_error {
 public:
  explicit MissingInputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sqalab
