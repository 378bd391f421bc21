#pragma once

#include "steenrod/chain.hpp"
#include "steenrod/dold_kan.hpp"
#include "steenrod/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace steenrod {

/// Polynomial in commuting indeterminates b_0, b_1, …; a monomial is its
/// sorted list of indeterminate indices (with repeats).
class Polynomial {
 public:
  using Monomial = std::vector<int>;

  explicit Polynomial(Ring ring = Ring::rationals()) : ring_(ring) {}
  static Polynomial constant(const Rational& c, Ring ring);
  static Polynomial variable(int i, Ring ring);

  const Ring& ring() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Ring ring_;
  std::map<Monomial, Rational> terms_;
};

std::string to_string(const Polynomial& p);

/// (1, c, c⊗c, …, c^{⊗(t−1)}); component 0 is the unit on the empty tensor.
template <class B>
struct TruncatedDiagonalVector {
  int t = 0;
  std::vector<Chain<Tensor<B>>> components;
};

template <class B>
TruncatedDiagonalVector<B> truncated_diagonal(const Chain<B>& c, int t) {
  TruncatedDiagonalVector<B> out;
  out.t = t;
  Chain<Tensor<B>> power(c.ring());
  power.add_term(Tensor<B>{}, 1);
  for (int i = 0; i < t; ++i) {
    out.components.push_back(power);
    Chain<Tensor<B>> next(c.ring());
    for (const auto& [x, cx] : power)
      for (const auto& [y, cy] : c) {
        Tensor<B> z = x;
        z.factors.push_back(y);
        next.add_term(z, cx * cy);
      }
    power = std::move(next);
  }
  return out;
}

/// Indeterminate numbering for the basis elements met so far.
template <class B>
class VariableIndex {
 public:
  int operator()(const B& b) { return index_.try_emplace(b, static_cast<int>(index_.size())).first->second; }

 private:
  std::map<B, int> index_;
};

/// Image of a tensor chain in the symmetric algebra: sort the factors and
/// multiply them as monomials.
template <class B>
Polynomial symmetrize(const Chain<Tensor<B>>& c, VariableIndex<B>& vars, Ring field) {
  Polynomial out(field);
  for (const auto& [t, coef] : c) {
    Polynomial::Monomial m;
    for (const auto& f : t.factors) m.push_back(vars(f));
    std::sort(m.begin(), m.end());
    out.add_term(m, coef);
  }
  return out;
}

/// Field used for independence questions: ℤ is replaced by ℚ.
inline Ring fraction_field(Ring ring) { return ring.is_field() ? ring : Ring::rationals(); }

/// Rank of the columns p_i = Σ_j g(c_i^{⊗j}) over the field.
std::size_t polynomial_rank(const std::vector<Polynomial>& ps, Ring field);

/// Whether e(c_1), …, e(c_t), truncated at tensor power t−1 and pushed to
/// the symmetric algebra, are linearly independent over the fraction field
/// of `ring`. Throws std::invalid_argument for an empty, zero, duplicate or
/// inhomogeneous input.
template <class B>
bool vandermonde_independence(const std::vector<Chain<B>>& cs, Ring ring) {
  if (cs.empty()) throw std::invalid_argument("vandermonde_independence: no chains given");
  const Ring field = fraction_field(ring);
  std::vector<Chain<B>> normalized;
  std::set<std::map<B, Rational>> seen;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Chain<B> c = cs[i].in_ring(field);
    if (c.is_zero()) throw std::invalid_argument("vandermonde_independence: chain " + std::to_string(i) + " is zero");
    if (!normalized.empty() && *c.degree() != *normalized.front().degree())
      throw std::invalid_argument("vandermonde_independence: chains of different degrees");
    if (!seen.insert(c.terms()).second)
      throw std::invalid_argument("vandermonde_independence: chain " + std::to_string(i) + " repeats an earlier one");
    normalized.push_back(std::move(c));
  }
  const int t = static_cast<int>(normalized.size());
  VariableIndex<B> vars;
  std::vector<Polynomial> ps;
  for (const auto& c : normalized) {
    Polynomial p(field);
    for (const auto& component : truncated_diagonal(c, t).components) p += symmetrize(component, vars, field);
    ps.push_back(std::move(p));
  }
  return polynomial_rank(ps, field) == static_cast<std::size_t>(t);
}

/// f(c) = Σ coef·b as a linear form.
template <class B>
Polynomial linear_form(const Chain<B>& c, VariableIndex<B>& vars, Ring field) {
  Polynomial out(field);
  for (const auto& [b, coef] : c) out.add_term({vars(b)}, coef);
  return out;
}

/// det of M with M[j][i] = f_i^j, by permutation expansion.
Polynomial vandermonde_determinant(const std::vector<Polynomial>& fs);
/// Π_{i<j} (f_j − f_i).
Polynomial vandermonde_product(const std::vector<Polynomial>& fs);

/// Injectivity witness on R̃X: `draws` sets of `t` distinct random vector
/// simplices of dimension `dim` (coefficients in −2..2) are pushed through
/// γ_X and tested with vandermonde_independence. Returns the number of
/// draws that failed.
int injectivity_witness(const FreeSpace& rx, int dim, int t, int draws, unsigned seed);

}  // namespace steenrod
