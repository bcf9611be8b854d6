#pragma once

#include <stdexcept>
#include <string>

namespace despoly {

/// An enumeration was requested beyond the configured size guardrails.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A series-numerator extraction produced a nonzero coefficient past the
/// expected degree, i.e. the rational function was not a polynomial of the
/// claimed degree (wrong pole order or wrong series values).
struct GuardCheckFailed : std::runtime_error {
  explicit GuardCheckFailed(const std::string& what) : std::runtime_error(what) {}
};

/// A specialization or recurrence step that must yield integer coefficients
/// produced a proper fraction.
struct NonIntegerCoefficient : std::runtime_error {
  explicit NonIntegerCoefficient(const std::string& what) : std::runtime_error(what) {}
};

/// Polynomial division left a nonzero remainder where exactness was required.
struct InexactDivision : std::runtime_error {
  explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace despoly
