#pragma once

#include "steenrod/basis.hpp"
#include "steenrod/ring.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace steenrod {

/// Homogeneous formal linear combination of basis elements with
/// coefficients in a ring. Terms are kept sorted and zero coefficients are
/// never stored, so equality is structural.
template <class B>
class Chain {
 public:
  using Map = std::map<B, Rational>;
  using const_iterator = typename Map::const_iterator;

  Chain() = default;
  explicit Chain(Ring ring) : ring_(ring) {}

  static Chain of(const B& b, const Rational& c = 1, Ring ring = Ring::integers()) {
    Chain out(ring);
    out.add_term(b, c);
    return out;
  }

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  /// Common degree of the terms; empty for the zero chain.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return basis_degree(terms_.begin()->first);
  }

  Rational coefficient(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const B& b, const Rational& c) {
    Rational value = ring_.normalize(c);
    if (value == 0) return;
    if (!terms_.empty() && basis_degree(b) != basis_degree(terms_.begin()->first))
      throw std::invalid_argument("inhomogeneous chain: degree " +
                                  std::to_string(basis_degree(b)) + " added to degree " +
                                  std::to_string(basis_degree(terms_.begin()->first)));
    auto [it, inserted] = terms_.try_emplace(b, value);
    if (!inserted) {
      it->second = ring_.normalize(it->second + value);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Chain& operator+=(const Chain& other) {
    check_ring(other);
    for (const auto& [b, c] : other.terms_) add_term(b, c);
    return *this;
  }
  Chain& operator-=(const Chain& other) {
    check_ring(other);
    for (const auto& [b, c] : other.terms_) add_term(b, -c);
    return *this;
  }
  Chain& operator*=(const Rational& s) {
    Rational v = ring_.normalize(s);
    if (v == 0) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = ring_.normalize(it->second * v);
      if (it->second == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rational& s, Chain a) { return a *= s; }
  friend Chain operator-(Chain a) { return a *= -1; }

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Reinterprets the coefficients in another ring.
  Chain in_ring(Ring ring) const {
    Chain out(ring);
    for (const auto& [b, c] : terms_) out.add_term(b, c);
    return out;
  }

  /// Applies a basis-level linear map and sums the results.
  template <class F>
  auto map_linear(F&& f) const -> decltype(f(std::declval<const B&>())) {
    using Out = decltype(f(std::declval<const B&>()));
    Out out(ring_);
    for (const auto& [b, c] : terms_) {
      Out image = f(b);
      out += (c * image).in_ring(ring_);
    }
    return out;
  }

 private:
  void check_ring(const Chain& other) const {
    if (!(other.ring_ == ring_)) throw std::invalid_argument("chains over different rings");
  }

  Ring ring_ = Ring::integers();
  Map terms_;
};

/// Canonical text: one signed term per line in basis order, e.g.
/// "+1 [0,1]⊗[1,2]". The zero chain prints as "0".
template <class B>
std::string format_chain(const Chain<B>& c) {
  if (c.is_zero()) return "0\n";
  std::ostringstream out;
  for (const auto& [b, coef] : c) {
    if (coef > 0) out << '+';
    out << coef << ' ' << to_string(b) << '\n';
  }
  return out.str();
}

/// Single-line rendering, e.g. "[0,1]⊗[1,2] - 2 [0]⊗[0,1,2]".
template <class B>
std::string inline_chain(const Chain<B>& c) {
  if (c.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, coef] : c) {
    Rational mag = coef < 0 ? Rational(-coef) : coef;
    if (first)
      out << (coef < 0 ? "-" : "");
    else
      out << (coef < 0 ? " - " : " + ");
    if (mag != 1) out << mag << ' ';
    out << to_string(b);
    first = false;
  }
  return out.str();
}

/// a⊗b, flattening tensor factors of a and b.
template <class B>
Chain<Tensor<B>> tensor(const Chain<B>& a, const Chain<B>& b) {
  Chain<Tensor<B>> out(a.ring());
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_term(Tensor<B>{{x, y}}, cx * cy);
  return out;
}

template <class B>
Chain<Tensor<B>> tensor(const Chain<Tensor<B>>& a, const Chain<B>& b) {
  Chain<Tensor<B>> out(a.ring());
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      Tensor<B> t = x;
      t.factors.push_back(y);
      out.add_term(t, cx * cy);
    }
  return out;
}

/// Embeds a chain as a one-factor tensor.
template <class B>
Chain<Tensor<B>> as_tensor(const Chain<B>& a) {
  Chain<Tensor<B>> out(a.ring());
  for (const auto& [x, c] : a) out.add_term(Tensor<B>{{x}}, c);
  return out;
}

inline int koszul_sign(long long a, long long b) { return ((a * b) % 2 == 0) ? 1 : -1; }

}  // namespace steenrod
