#pragma once

#include <stdexcept>

namespace dgrep {

/// Malformed input: shapes that do not line up, unknown labels, dangling
/// references. Raised before any axiom is checked.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation declined because it would exceed an enumeration limit or
/// falls outside the supported cases.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dgrep
