#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgrep {

using Scalar = mpq_class;
using Integer = mpz_class;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact ground ring: the integers, the rationals, or Z/n for n >= 2.
///
/// Elements are carried as `mpq_class` values and kept in a canonical form:
/// integers for Z, reduced fractions for Q, and representatives in [0, n) for
/// Z/n. Every arithmetic helper returns a canonical value.
class Ring {
 public:
  enum class Kind { integers, rationals, modular };

  static Ring integers() { return Ring(Kind::integers, 0); }
  static Ring rationals() { return Ring(Kind::rationals, 0); }
  static Ring modular(long modulus);

  /// Accepts "Z", "Q" and "Z/n".
  static Ring parse(std::string_view text);

  Kind kind() const { return kind_; }
  long modulus() const { return modulus_; }
  std::string name() const;

  bool is_field() const;
  bool is_finite() const { return kind_ == Kind::modular; }

  /// Canonical representative of `value`; throws RingError when `value` has
  /// no image in the ring (a fraction over Z, or a denominator that is not a
  /// unit mod n).
  Scalar reduce(const Scalar& value) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }

  bool is_unit(const Scalar& a) const;
  /// Throws RingError for non-units.
  Scalar inverse(const Scalar& a) const;

  /// (-1)^exponent as a ring element.
  Scalar sign(long exponent) const { return reduce(Scalar(exponent % 2 == 0 ? 1 : -1)); }

  bool operator==(const Ring& other) const = default;

 private:
  Ring(Kind kind, long modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  long modulus_;
};

/// Parses "3", "-2", "1/2" into an exact rational (no ring reduction).
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& value);

}  // namespace dgrep
