#include "steenrod/ring.hpp"

#include <stdexcept>

namespace steenrod {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::prime_field(int p) {
  if (!is_prime(p))
    throw std::invalid_argument("prime field requested with non-prime characteristic " +
                                std::to_string(p));
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::parse(std::string_view spelling) {
  if (spelling == "z") return integers();
  if (spelling == "q") return rationals();
  if (spelling.size() > 1 && spelling.front() == 'f') {
    int p = 0;
    for (char c : spelling.substr(1)) {
      if (c < '0' || c > '9') throw std::invalid_argument("unknown ring: " + std::string(spelling));
      p = p * 10 + (c - '0');
      if (p > 1000000) throw std::invalid_argument("characteristic too large");
    }
    return prime_field(p);
  }
  throw std::invalid_argument("unknown ring: " + std::string(spelling));
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "z";
    case RingKind::Rationals: return "q";
    case RingKind::PrimeField: return "f" + std::to_string(p_);
  }
  return "?";
}

namespace {

Integer mod_positive(const Integer& a, int p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return r;
}

// Inverse of a unit modulo p by the extended Euclidean algorithm.
Integer inverse_mod(const Integer& a, int p) {
  Integer old_r = mod_positive(a, p), r = p;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("element not invertible modulo p");
  return mod_positive(old_s, p);
}

}  // namespace

Rational Ring::normalize(const Rational& x) const {
  switch (kind_) {
    case RingKind::Rationals:
      return x;
    case RingKind::Integers:
      if (denominator(x) != 1)
        throw std::domain_error("non-integral coefficient over Z");
      return x;
    case RingKind::PrimeField: {
      Integer den = denominator(x);
      if (den % p_ == 0) throw std::domain_error("denominator divisible by the characteristic");
      Integer num = mod_positive(numerator(x), p_);
      if (den == 1) return Rational(num);
      return Rational(mod_positive(num * inverse_mod(den, p_), p_));
    }
  }
  return x;
}

bool Ring::is_unit(const Rational& x) const {
  Rational y = normalize(x);
  if (y == 0) return false;
  if (kind_ == RingKind::Integers) return y == 1 || y == -1;
  return true;
}

Rational Ring::inverse(const Rational& x) const {
  Rational y = normalize(x);
  if (!is_unit(y)) throw std::domain_error("inverse of a non-unit");
  switch (kind_) {
    case RingKind::Integers: return y;
    case RingKind::Rationals: return Rational(1) / y;
    case RingKind::PrimeField: return Rational(inverse_mod(numerator(y), p_));
  }
  return y;
}

Rational Ring::quotient(const Rational& a, const Rational& b) const {
  if (is_zero(b)) throw std::domain_error("division by zero");
  if (kind_ == RingKind::Integers) {
    Integer na = numerator(a), nb = numerator(b);
    Integer q = na / nb;
    // cpp_int truncates toward zero; adjust to floor.
    if ((na % nb != 0) && ((na < 0) != (nb < 0))) q -= 1;
    return Rational(q);
  }
  return normalize(a * inverse(b));
}

Rational Ring::pivot_size(const Rational& x) const {
  Rational y = normalize(x);
  if (kind_ == RingKind::PrimeField) return y == 0 ? 0 : 1;
  return y < 0 ? Rational(-y) : y;
}

}  // namespace steenrod
