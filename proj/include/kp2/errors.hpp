#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kp2 {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Array/grid shape mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Numeric-domain violation (xi = 0 in a singular symbol, non-finite
// multiplier value, excluded mode carrying data, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A frequency point handed to a kernel that is not in the kernel's region.
class RegionError : public Error {
 public:
  using Error::Error;
};

// Exponent set outside the admissible range.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration (unknown keys, bad values, unreadable files).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Numerical-instability abort (blow-up guard).
class InstabilityError : public Error {
 public:
  using Error::Error;
};

// Checkpoint/report file I/O failure.
class IoError : public Error {
 public:
  using Error::Error;
};

// Picard iteration failed to contract. Carries the observed d_{n+1}/d_n
// history so the caller can react (typically by shrinking T).
class ContractionError : public Error {
 public:
  ContractionError(const std::string& what, std::vector<double> ratios)
      : Error(what), ratio_history(std::move(ratios)) {}

  std::vector<double> ratio_history;
};

}  // namespace kp2
