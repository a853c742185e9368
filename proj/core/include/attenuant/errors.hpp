#pragma once

#include <stdexcept>
#include <string>

namespace attenuant {

/// A requested computation would exceed its truncation budget (tail mass
/// escaping the Fock cutoff).
class truncation_error : public std::runtime_error {
 public:
  explicit truncation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two independent routes to the same quantity disagree, or a certificate
/// that must hold numerically fails. This is the "falsified claim" signal.
class consistency_error : public std::runtime_error {
 public:
  explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace attenuant
