#pragma once

#include "steenrod/chain_complex.hpp"
#include "steenrod/linalg.hpp"
#include "steenrod/simplicial.hpp"
#include "steenrod/steenrod.hpp"

#include <compare>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

namespace steenrod {

/// Levelwise free simplicial module up to a truncation. faces[m][i] is the
/// matrix of d_i: A_m → A_{m−1} (columns index the basis of A_m) and
/// degeneracies[m][j] the matrix of s_j: A_m → A_{m+1}, for m+1 ≤ truncation.
struct SimplicialAbelianGroup {
  Ring ring = Ring::integers();
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Matrix>> faces;
  std::vector<std::vector<Matrix>> degeneracies;
  std::vector<std::vector<std::string>> labels;

  int truncation() const { return static_cast<int>(ranks.size()) - 1; }
  std::size_t rank(int m) const { return (m < 0 || m > truncation()) ? 0 : ranks[m]; }
  /// Failing identities, described in words; empty when all hold.
  std::vector<std::string> identity_violations() const;
};

/// Chain complex with basis {CellId{n, j}} given by boundary matrices
/// boundaries[n]: C_n → C_{n−1} (boundaries[0] is ignored).
ChainComplex<CellId> complex_from_matrices(Ring ring, const std::vector<std::size_t>& ranks,
                                           const std::vector<Matrix>& boundaries);

/// Degree n = A_n with the alternating-sum boundary.
ChainComplex<CellId> moore_complex(const SimplicialAbelianGroup& a);

/// NA_n = ⋂_{i<n} ker d_i with ∂ = (−1)^n d_n; inclusion[n] has the chosen
/// kernel basis as columns.
struct NormalizedComplex {
  ChainComplex<CellId> complex;
  std::vector<Matrix> inclusion;
};
NormalizedComplex normalized_of_sab(const SimplicialAbelianGroup& a);

/// Summand index of Γ(C)_m: the formal degeneracy η: m ↠ n applied to basis
/// element `index` of C_n.
struct GammaBasis {
  Surjection eta;
  int index = 0;
  auto operator<=>(const GammaBasis&) const = default;
};

struct GammaObject {
  SimplicialAbelianGroup group;
  std::vector<std::vector<GammaBasis>> basis;
};

/// Γ(C)_m = ⊕_{m↠n} C_n for m ≤ truncation. A face sends (η, c) to (ε, μ*c)
/// where ηδ^i = με; μ* is the identity for μ = id, (−1)^n ∂ for μ = δ^n, and
/// zero otherwise.
GammaObject gamma(const ChainComplex<CellId>& c, int truncation);
/// Γ̃C = Γ(C⁺): the degree-0 part is dropped first.
GammaObject reduced_gamma(const ChainComplex<CellId>& c, int truncation);

/// NΓC ≅ C through c ↦ (id, c), checked degreewise up to the truncation.
bool normalized_gamma_is_identity(const ChainComplex<CellId>& c, int truncation);

/// ΓNA ≅ A through (η, a) ↦ A(η)a: levelwise invertible and compatible with
/// every face and degeneracy.
bool gamma_normalized_is_identity(const SimplicialAbelianGroup& a);

/// ℛX, or R̃X = ℛX/ℛ∗ when pointed (cells of the basepoint's
/// sub-simplicial set dropped). Pointed requires a basepoint.
SimplicialAbelianGroup free_simplicial_abelian(const SimplicialSet& x, Ring ring, bool pointed);

/// A simplex of R̃X: a nonzero vector in level `dim`, on the cells of X
/// outside the basepoint. The zero vector is the basepoint and is never a basis element.
struct VectorSimplex {
  int dim = 0;
  std::vector<std::pair<int, Rational>> terms;  // (cell index, coefficient), sorted
  friend bool operator==(const VectorSimplex&, const VectorSimplex&) = default;
  friend bool operator<(const VectorSimplex& a, const VectorSimplex& b) {
    return std::tie(a.dim, a.terms) < std::tie(b.dim, b.terms);
  }
  friend bool operator>(const VectorSimplex& a, const VectorSimplex& b) { return b < a; }
};
inline int degree(const VectorSimplex& v) { return v.dim; }
std::string to_string(const VectorSimplex& v);

/// R̃X viewed as a simplicial set whose simplices are vectors; simplicial
/// operators act linearly through X. X must carry a basepoint.
class FreeSpace {
 public:
  FreeSpace(const SimplicialSet& x, Ring ring);

  const SimplicialSet& base() const { return x_; }
  const Ring& ring() const { return ring_; }
  /// Normal form of a chain of X as a vector simplex; nullopt for zero.
  std::optional<VectorSimplex> vector_of(const Chain<CellId>& c) const;
  Chain<CellId> chain_of(const VectorSimplex& v) const;
  /// v∘θ; nullopt when the result is the basepoint.
  std::optional<VectorSimplex> apply(const VectorSimplex& v, const MonotoneMap& theta) const;
  /// v = s_i d_i v for some i.
  bool is_degenerate(const VectorSimplex& v) const;

  /// ∂[v] = Σ(−1)^i [d_i v].
  Chain<VectorSimplex> boundary(const VectorSimplex& v) const;
  /// ξ(b⊗[v]) by naturality.
  Chain<Tensor<VectorSimplex>> xi(const BarElement& b, const VectorSimplex& v, DiagonalTable& table) const;

 private:
  SimplicialSet x_;
  Ring ring_;
};

/// h: σ ↦ [1·σ] on cells (basepoint cells go to zero).
Chain<VectorSimplex> hurewicz(const FreeSpace& rx, CellId sigma);
/// γ_X: [v] ↦ v, extended linearly.
Chain<CellId> gamma_x(const FreeSpace& rx, const Chain<VectorSimplex>& c);

/// The Hurewicz chain map N(X)⊗ℛ → N(R̃X)⊗ℛ with source and target
/// boundaries attached, so its Hom-differential can be taken. Requires a
/// degeneracy-free X.
GradedMap<CellId, VectorSimplex> hurewicz_chain_map(const FreeSpace& rx);
/// γ_X as a graded map C(R̃X)⊗ℛ → C(X)⊗ℛ.
GradedMap<VectorSimplex, CellId> gamma_x_map(const FreeSpace& rx);

/// Cells σ of X (up to max_dim) where (h⊗h)ξ_X(σ) ≠ ξ_{R̃X}(hσ), normalized
/// or not.
std::vector<CellId> hurewicz_morphism_violations(const FreeSpace& rx, int max_dim, int max_level,
                                                 DiagonalTable& table, bool normalized);

}  // namespace steenrod
