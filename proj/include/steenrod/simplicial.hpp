#pragma once

#include "steenrod/basis.hpp"
#include "steenrod/chain_complex.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace steenrod {

/// Monotone map [t] -> [m], stored as its image list.
using MonotoneMap = std::vector<int>;

/// Order-preserving surjection [m] ->> [n], stored canonically as the
/// strictly decreasing degeneracy word s_{i1}...s_{ij}, i1 > ... > ij.
class Surjection {
 public:
  Surjection() = default;
  /// Throws std::invalid_argument unless the word is strictly decreasing
  /// with entries in [0, source_dim).
  Surjection(int source_dim, std::vector<int> word);

  static Surjection identity(int n) { return Surjection(n, {}); }
  /// From a monotone surjective image list.
  static Surjection from_images(const MonotoneMap& images);
  /// All surjections [m] ->> [n] in word order.
  static std::vector<Surjection> all(int m, int n);

  int source_dim() const { return source_dim_; }
  int target_dim() const { return source_dim_ - static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  bool is_identity() const { return word_.empty(); }
  MonotoneMap images() const;

  /// this ∘ other, where other: [k] ->> [source_dim].
  Surjection after(const Surjection& other) const;

  auto operator<=>(const Surjection&) const = default;

 private:
  int source_dim_ = 0;
  std::vector<int> word_;
};

std::string to_string(const Surjection& s);

/// Coface δ^i: [n-1] -> [n] skipping i.
MonotoneMap coface(int n, int i);
/// Codegeneracy σ^i: [n+1] -> [n] hitting i twice.
MonotoneMap codegeneracy(int n, int i);

/// Delta-complex (semi-simplicial set) truncated at some dimension:
/// faces[n][j] lists the n+1 faces of the j-th n-cell.
struct DeltaComplex {
  std::string name;
  std::vector<std::vector<std::vector<int>>> faces;  // faces[0][j] is empty
  /// Optional vertex lists for printing, same shape as faces.
  std::vector<std::vector<Simplex>> labels;

  int top_dim() const { return static_cast<int>(faces.size()) - 1; }
  std::size_t count(int n) const {
    return (n < 0 || n > top_dim()) ? 0 : faces[n].size();
  }
  std::string label(int n, int j) const;

  /// Cells violating d_i d_j = d_{j-1} d_i (i < j), as (dim, index).
  std::vector<CellId> face_identity_violations() const;
};

/// Delta-complex whose n-cells are the sorted (n+1)-vertex lists of the
/// ordered simplicial complex generated by the given facets.
DeltaComplex delta_from_facets(std::string name, const std::vector<std::vector<int>>& facets);
DeltaComplex standard_simplex_complex(int k);

/// A cell of a simplicial set in Eilenberg-Zilber normal form: the
/// degeneracy `surj` applied to nondegenerate cell `base` of dimension
/// surj.target_dim().
struct Cell {
  int base = 0;
  Surjection surj;
  int dim() const { return surj.source_dim(); }
  int base_dim() const { return surj.target_dim(); }
  auto operator<=>(const Cell&) const = default;
};

/// Finite presentation of a simplicial set up to a truncation dimension:
/// nondegenerate cells with faces in normal form. Every cell up to the
/// truncation is materialized as (nondegenerate cell, canonical surjection).
class SimplicialSet {
 public:
  SimplicialSet() = default;
  /// nondeg_faces[n][j][i] is the i-th face of nondegenerate n-cell j.
  /// Throws std::invalid_argument on malformed references or on a
  /// violated simplicial identity (the message names the cell).
  SimplicialSet(std::string name, std::vector<std::vector<std::vector<Cell>>> nondeg_faces, int truncation,
                std::optional<int> basepoint = std::nullopt,
                std::vector<std::vector<Simplex>> nondeg_labels = {});

  const std::string& name() const { return name_; }
  int truncation() const { return truncation_; }
  std::optional<int> basepoint() const { return basepoint_; }

  std::size_t count(int m) const { return (m < 0 || m > truncation_) ? 0 : cells_[m].size(); }
  std::size_t nondegenerate_count(int n) const {
    return (n < 0 || n >= static_cast<int>(nondeg_faces_.size())) ? 0 : nondeg_faces_[n].size();
  }
  const std::vector<std::vector<std::vector<Cell>>>& nondegenerate_faces() const { return nondeg_faces_; }

  const Cell& cell(CellId id) const { return cells_.at(id.dim).at(id.index); }
  CellId id(const Cell& c) const;
  CellId nondegenerate(int n, int j) const { return id(Cell{j, Surjection::identity(n)}); }
  std::vector<CellId> cells(int m) const;
  std::vector<CellId> nondegenerate_cells(int m) const;
  bool is_degenerate(CellId id) const { return !cell(id).surj.is_identity(); }
  /// Cells in the sub-simplicial set generated by the basepoint.
  bool is_basepoint_cell(CellId id) const;

  /// x∘θ for a monotone θ: [t] -> [dim x].
  Cell apply(const Cell& x, const MonotoneMap& theta) const;
  CellId apply(CellId x, const MonotoneMap& theta) const { return id(apply(cell(x), theta)); }
  CellId face(CellId x, int i) const;
  CellId degeneracy(CellId x, int i) const;

  /// Vertex-list label when the presentation carries labels, else a
  /// structural name.
  std::string label(CellId id) const;
  bool has_labels() const { return !labels_.empty(); }
  /// Vertex list of a cell (with repeats for degenerate cells) when the
  /// presentation carries labels.
  std::optional<Simplex> vertex_list(CellId id) const;

  /// d_i d_j = d_{j-1} d_i, s_i s_j = s_{j+1} s_i (i <= j) and the mixed
  /// identities, checked on every cell up to the truncation.
  std::vector<CellId> simplicial_identity_violations() const;

 private:
  Cell restrict_to_face(int base, int n, const MonotoneMap& mono) const;

  std::string name_;
  int truncation_ = 0;
  std::optional<int> basepoint_;
  std::vector<std::vector<std::vector<Cell>>> nondeg_faces_;
  std::vector<std::vector<Simplex>> labels_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::map<Cell, int>> index_;
};

/// 𝔣: every cell up to the truncation becomes a nondegenerate cell.
DeltaComplex forget_degeneracies(const SimplicialSet& x);

/// 𝔡: m-cells are (n-cell of y, surjection m ->> n), m <= truncation.
SimplicialSet freely_add_degeneracies(const DeltaComplex& y, int truncation,
                                      std::optional<int> basepoint = std::nullopt);

/// Core(X): nondegenerate cells closed under all iterated faces.
struct CoreComplex {
  DeltaComplex delta;
  std::vector<std::vector<CellId>> inclusion;  // core cell -> cell of X
};
CoreComplex core_with_inclusion(const SimplicialSet& x);
DeltaComplex core(const SimplicialSet& x);

/// Whether the canonical map 𝔡(Core X) -> X is bijective in every degree
/// up to the truncation.
bool is_degeneracy_free(const SimplicialSet& x);

ChainComplex<CellId> unnormalized_chains(const SimplicialSet& x, Ring ring = Ring::integers());
ChainComplex<CellId> normalized_chains(const SimplicialSet& x, Ring ring = Ring::integers());
/// Unnormalized chains modulo the basepoint sub-simplicial set.
ChainComplex<CellId> pointed_unnormalized_chains(const SimplicialSet& x, Ring ring = Ring::integers());
/// Normalized chains modulo the basepoint.
ChainComplex<CellId> pointed_normalized_chains(const SimplicialSet& x, Ring ring = Ring::integers());
/// Normalized chains N(Y) of a delta-complex.
ChainComplex<CellId> delta_chains(const DeltaComplex& y, Ring ring = Ring::integers());

/// Alternating-sum boundary on vertex lists, faces kept even when
/// degenerate.
Chain<Simplex> simplex_boundary(const Simplex& s);
/// Same, dropping degenerate faces (normalized chains).
Chain<Simplex> normalized_simplex_boundary(const Simplex& s);

}  // namespace steenrod
