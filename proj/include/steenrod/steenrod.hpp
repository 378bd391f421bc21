#pragma once

#include "steenrod/bar.hpp"
#include "steenrod/homology.hpp"
#include "steenrod/simplicial.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace steenrod {

using DiagonalChain = Chain<Tensor<Simplex>>;

/// (−1)^{k(k−1)/2}, the sign in ξ(e_k⊗σ) = η_k·σ⊗σ.
int eta(int k);

/// φ_k([i₀,…,i_t]) = (−1)^{t+1}[i₀,…,i_t,k], or 0 when i_t = k.
Chain<Simplex> phi(int k, const Simplex& face);
/// ι_k∘ε: a vertex goes to [k], higher simplices to 0.
Chain<Simplex> iota_epsilon(int k, const Simplex& face);
/// Φ = φ_k⊗1 + ι_k∘ε⊗φ_k with Koszul signs.
DiagonalChain big_phi(int k, const DiagonalChain& c);

/// Σ_i [v₀,…,v_i]⊗[v_i,…,v_k].
DiagonalChain aw_diagonal(const Simplex& s);

/// Replaces vertex j by vertices[j] in every factor.
DiagonalChain relabel(const DiagonalChain& c, const std::vector<int>& vertices);

/// Memo of ξ(e_n⊗Δ^k), keyed by (n, k). Entries are write-once; lookups and
/// inserts may run concurrently, and two threads computing the same entry
/// must produce the same chain.
class DiagonalTable {
 public:
  using Entry = std::shared_ptr<const DiagonalChain>;

  Entry find(int n, int k) const;
  /// Stores the entry unless present; returns the stored value. Throws
  /// std::logic_error if a different chain is already stored.
  Entry insert(int n, int k, DiagonalChain c);
  std::vector<std::tuple<int, int, Entry>> entries() const;
  std::size_t size() const;
  std::size_t computed() const { return computed_; }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, Entry> entries_;
  std::atomic<std::size_t> computed_{0};
};

/// ξ(b⊗Δ^k) by the recursion ξ(e_n⊗Δ^k) = Φξ(∂e_n⊗Δ^k) + (−1)^n Φξ(e_n⊗∂Δ^k),
/// with ξ(e_0⊗−) the Alexander-Whitney diagonal, ξ(T·A⊗−) = T·ξ(A⊗−) and
/// ξ(e_n⊗Δ^k) = 0 for n > k.
DiagonalChain xi_standard(const BarElement& b, int k, DiagonalTable& table);

/// ξ(b⊗σ) for a weakly increasing vertex list, by naturality from Δ^k.
/// Throws std::invalid_argument for lists that are not weakly increasing.
DiagonalChain xi_simplex(const BarElement& b, const Simplex& s, DiagonalTable& table);
DiagonalChain xi_simplex(const BarElement& b, const Chain<Simplex>& c, DiagonalTable& table);

/// The same recursion run directly on a strictly increasing vertex list,
/// coning to its last vertex and recursing on its faces, with no table and
/// no relabeling. Used to test naturality.
DiagonalChain xi_direct(int n, const Simplex& s);

/// Pushes a diagonal on Δ^k forward along a simplex x: Δ^k → X, each face
/// [i₀,…,i_t] becoming x∘[i₀,…,i_t]. `apply` returns nullopt for faces that
/// vanish in the target (e.g. basepoint cells).
template <class B, class Apply>
Chain<Tensor<B>> push_diagonal(const DiagonalChain& d, Apply apply, Ring ring = Ring::integers()) {
  Chain<Tensor<B>> out(ring);
  for (const auto& [t, coef] : d) {
    std::optional<B> a = apply(t.factors[0].vertices);
    if (!a) continue;
    std::optional<B> b = apply(t.factors[1].vertices);
    if (!b) continue;
    out.add_term(make_tensor(*a, *b), coef);
  }
  return out;
}

/// ξ(b⊗x) for a cell of a simplicial set.
Chain<Tensor<CellId>> xi_space(const BarElement& b, CellId x, const SimplicialSet& space, DiagonalTable& table,
                               Ring ring = Ring::integers());
Chain<Tensor<CellId>> xi_space(const BarElement& b, const Chain<CellId>& c, const SimplicialSet& space,
                               DiagonalTable& table);

/// Drops every term with a degenerate factor.
DiagonalChain normalize_diagonal(const DiagonalChain& c);
/// Drops every term with a degenerate (or, if pointed, basepoint) factor.
Chain<Tensor<CellId>> normalize_diagonal(const Chain<Tensor<CellId>>& c, const SimplicialSet& space,
                                         bool pointed = false);

/// Failures of ∂ξ(A⊗Δ^k) = ξ(∂A⊗Δ^k) + (−1)^{dim A} ξ(A⊗∂Δ^k) for
/// A ∈ {e_n, T·e_n}, n ≤ max_level, k ≤ max_k.
std::vector<std::pair<BarElement, int>> chain_map_violations(int max_level, int max_k, DiagonalTable& table);

/// Both sides of ∂F + F∂ = ((1,2,3) − 1)(1⊗Δ)Δ with F = (1⊗Δ)Δ₂ on a simplex,
/// Δ = ξ(e₀⊗−), Δ₂ = ξ(e₁⊗−) and (1,2,3) the Koszul-signed rotation
/// a⊗b⊗c ↦ c⊗a⊗b.
std::pair<DiagonalChain, DiagonalChain> prime3_sides(const Simplex& s, DiagonalTable& table);
/// Whether the identity holds on every face of Δ^k.
bool check_prime3(int k, DiagonalTable& table);

/// A cochain on the normalized chains of a simplicial set.
struct Cochain {
  Ring ring = Ring::prime_field(2);
  int degree = 0;
  std::map<CellId, Rational> values;

  Rational operator()(CellId c) const;
  bool is_zero() const;
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Cochain with the given coordinates on the degree-p basis of `chains`.
Cochain cochain_from_vector(const ChainComplex<CellId>& chains, int degree, const Vector& v);
Vector cochain_to_vector(const ChainComplex<CellId>& chains, const Cochain& u);
/// (δu)(σ) = u(∂σ).
Cochain coboundary(const ChainComplex<CellId>& chains, const Cochain& u);

/// (u⌣_i v)(σ) = Σ (−1)^{pq} u(a)v(b) over the terms a⊗b of the normalized
/// ξ(e_i⊗σ), for nondegenerate σ of dimension p+q−i.
Cochain cup_i(const Cochain& u, const Cochain& v, int i, const SimplicialSet& space, DiagonalTable& table);

/// Sq^i u = u⌣_{p−i}u over F₂; zero for i > p. Throws std::invalid_argument
/// unless u is an F₂ cocycle.
Cochain steenrod_square(int i, const Cochain& u, const SimplicialSet& space, DiagonalTable& table);

/// Matrix of Sq^i: H^p → H^{p+i} over F₂ in the cohomology bases computed
/// from the normalized chains (columns: images of the H^p generators).
Matrix square_matrix(int i, int p, const SimplicialSet& space, DiagonalTable& table);

}  // namespace steenrod
