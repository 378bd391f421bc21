#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace steenrod {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class RingKind { Integers, PrimeField, Rationals };

/// Coefficient domain: the integers, a prime field F_p, or the rationals.
/// Values of every ring are carried as exact rationals and brought to a
/// canonical representative by normalize(): integers must have denominator
/// one, F_p values live in [0, p), rationals are reduced with positive
/// denominator.
class Ring {
 public:
  Ring() = default;

  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static Ring prime_field(int p);

  /// Parses the CLI spelling: z, q, f2, f3, f5, fN (N prime).
  static Ring parse(std::string_view spelling);

  RingKind kind() const { return kind_; }
  int characteristic() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  std::string name() const;

  Rational normalize(const Rational& x) const;
  bool is_zero(const Rational& x) const { return normalize(x) == 0; }
  bool is_unit(const Rational& x) const;
  /// Multiplicative inverse; throws std::domain_error for non-units.
  Rational inverse(const Rational& x) const;

  /// Euclidean quotient: for fields a/b, for the integers floor(a/b).
  Rational quotient(const Rational& a, const Rational& b) const;
  /// Size used for pivot choice: |x| over Z and Q, zero/one over F_p.
  Rational pivot_size(const Rational& x) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(RingKind kind, int p) : kind_(kind), p_(p) {}

  RingKind kind_ = RingKind::Integers;
  int p_ = 0;
};

bool is_prime(int n);

}  // namespace steenrod
