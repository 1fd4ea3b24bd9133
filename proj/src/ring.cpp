#include "dgrep/ring.hpp"

#include <charconv>

namespace dgrep {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::modular(long modulus) {
  if (modulus < 2) throw RingError("modulus must be at least 2, got " + std::to_string(modulus));
  return Ring(Kind::modular, modulus);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.starts_with("Z/")) {
    long n = 0;
    auto rest = text.substr(2);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || ptr != rest.data() + rest.size())
      throw RingError("bad modulus in ring '" + std::string(text) + "'");
    return modular(n);
  }
  throw RingError("unknown ring '" + std::string(text) + "' (expected Z, Q or Z/n)");
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::modular: return "Z/" + std::to_string(modulus_);
  }
  return "?";
}

bool Ring::is_field() const {
  return kind_ == Kind::rationals || (kind_ == Kind::modular && is_prime(modulus_));
}

Scalar Ring::reduce(const Scalar& value) const {
  switch (kind_) {
    case Kind::rationals: return value;
    case Kind::integers:
      if (value.get_den() != 1) throw RingError("non-integral value " + format_scalar(value) + " over Z");
      return value;
    case Kind::modular: {
      Integer n = modulus_;
      Integer num = value.get_num() % n;
      if (num < 0) num += n;
      Integer den = value.get_den() % n;
      if (den != 1) {
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0)
          throw RingError("denominator of " + format_scalar(value) + " is not a unit in " + name());
        num = (num * inv) % n;
      }
      return Scalar(num);
    }
  }
  return value;
}

bool Ring::is_unit(const Scalar& a) const {
  Scalar r = reduce(a);
  switch (kind_) {
    case Kind::rationals: return r != 0;
    case Kind::integers: return r == 1 || r == -1;
    case Kind::modular: {
      Integer g;
      Integer num = r.get_num();
      Integer n = modulus_;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Scalar Ring::inverse(const Scalar& a) const {
  if (!is_unit(a)) throw RingError("division by non-unit " + format_scalar(reduce(a)) + " in " + name());
  Scalar r = reduce(a);
  if (kind_ == Kind::modular) {
    Integer inv;
    Integer n = modulus_;
    Integer num = r.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    return Scalar(inv);
  }
  return Scalar(1) / r;
}

Scalar parse_scalar(std::string_view text) {
  Scalar value;
  if (value.set_str(std::string(text), 10) != 0) throw RingError("malformed scalar '" + std::string(text) + "'");
  if (value.get_den() == 0) throw RingError("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(); }

}  // namespace dgrep
