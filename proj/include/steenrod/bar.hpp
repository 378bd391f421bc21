#pragma once

#include "steenrod/chain_complex.hpp"

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace steenrod {

/// Basis element g·e_n of the normalized bar resolution RS₂, g ∈ {1, T}.
struct BarElement {
  bool twist = false;
  int level = 0;
  auto operator<=>(const BarElement&) const = default;
};

inline int degree(const BarElement& b) { return b.level; }
std::string to_string(const BarElement& b);

inline BarElement e(int n) { return {false, n}; }
inline BarElement te(int n) { return {true, n}; }

/// ∂e_0 = 0, ∂e_1 = T·e_0 − e_0, ∂e_k = e_{k−1} + (−1)^k T·e_{k−1} (k ≥ 2),
/// extended T-equivariantly.
Chain<BarElement> bar_boundary(const BarElement& b);
Chain<BarElement> bar_boundary(const Chain<BarElement>& c);

/// T·(g·e_n) = (Tg)·e_n.
BarElement twist(const BarElement& b);

/// RS₂ in degrees 0..max_level.
ChainComplex<BarElement> bar_complex(int max_level);

/// Bijection of {0,...,n-1}; images[i] is the new position of element i.
/// Printed one-based.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless the images form a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// From one-based images, as printed.
  static Permutation one_based(const std::vector<int>& images);
  /// The transposition swapping two zero-based elements.
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  /// (this∘other)(i) = this(other(i)).
  Permutation after(const Permutation& other) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

std::string to_string(const Permutation& p);

/// T_{α₁,…,α_n}(σ)∘(θ₁⊕⋯⊕θ_n): each block is permuted internally by its θ,
/// then the blocks are rearranged by σ.
Permutation block_compose(const Permutation& sigma, const std::vector<Permutation>& thetas);

/// σ ∘_i τ (one-based slot i): τ substituted into the i-th input of σ.
Permutation partial_compose(const Permutation& sigma, int i, const Permutation& tau);

/// Moves tensor factor j to position p(j), with the Koszul sign of the
/// graded transpositions involved.
template <class B>
Chain<Tensor<B>> permute_factors(const Permutation& p, const Chain<Tensor<B>>& c) {
  Chain<Tensor<B>> out(c.ring());
  for (const auto& [t, coef] : c) {
    if (static_cast<int>(t.factors.size()) != p.size())
      throw std::invalid_argument("permutation size does not match the tensor arity");
    long long exponent = 0;
    for (int i = 0; i < p.size(); ++i)
      for (int j = i + 1; j < p.size(); ++j)
        if (p(i) > p(j)) exponent += static_cast<long long>(degree(t.factors[i])) * degree(t.factors[j]);
    Tensor<B> u{std::vector<B>(t.factors.size())};
    for (int i = 0; i < p.size(); ++i) u.factors[p(i)] = t.factors[i];
    out.add_term(u, koszul_sign(exponent, 1) * coef);
  }
  return out;
}

/// S₂ acting on C⊗C: T(a⊗b) = (−1)^{deg a·deg b} b⊗a.
template <class B>
Chain<Tensor<B>> twist_act(bool twist, const Chain<Tensor<B>>& c) {
  if (!twist) return c;
  return permute_factors(Permutation({1, 0}), c);
}

/// A coproduct C → C⊗C of some degree, e.g. ξ(e_n⊗−).
template <class B>
struct Diagonal {
  std::string name;
  int degree = 0;
  std::function<Chain<Tensor<B>>(const B&)> map;
};

/// Applies 1⊗⋯⊗Δ⊗⋯⊗1 with Δ in the one-based slot, with the Koszul sign
/// (−1)^{deg Δ · (degrees of the preceding factors)}.
template <class B>
Chain<Tensor<B>> insert_coproduct(const Diagonal<B>& delta, int slot, const Chain<Tensor<B>>& c) {
  Chain<Tensor<B>> out(c.ring());
  for (const auto& [t, coef] : c) {
    const int k = static_cast<int>(t.factors.size());
    if (slot < 1 || slot > k)
      throw std::out_of_range("coproduct slot " + std::to_string(slot) + " outside a " + std::to_string(k) +
                              "-fold tensor");
    long long preceding = 0;
    for (int j = 0; j < slot - 1; ++j) preceding += degree(t.factors[j]);
    const int sign = koszul_sign(delta.degree, preceding);
    for (const auto& [pair, w] : delta.map(t.factors[slot - 1])) {
      Tensor<B> u;
      u.factors.insert(u.factors.end(), t.factors.begin(), t.factors.begin() + (slot - 1));
      u.factors.insert(u.factors.end(), pair.factors.begin(), pair.factors.end());
      u.factors.insert(u.factors.end(), t.factors.begin() + slot, t.factors.end());
      out.add_term(u, sign * coef * w);
    }
  }
  return out;
}

/// Composite coproduct of an operadic composite: start from base(x), then
/// insert each recipe diagonal into its slot in order.
template <class B>
Chain<Tensor<B>> iterated_coproduct(const std::vector<std::pair<int, Diagonal<B>>>& recipe, const Diagonal<B>& base,
                                    const Chain<B>& x) {
  Chain<Tensor<B>> acc(x.ring());
  for (const auto& [b, coef] : x) acc += (coef * base.map(b)).in_ring(x.ring());
  for (const auto& [slot, delta] : recipe) acc = insert_coproduct(delta, slot, acc);
  return acc;
}

}  // namespace steenrod
