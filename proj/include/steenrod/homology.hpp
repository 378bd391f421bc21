#pragma once

#include "steenrod/chain_complex.hpp"
#include "steenrod/linalg.hpp"

#include <string>
#include <vector>

namespace steenrod {

/// ker(out) / im(in) for composable maps in: A -> B, out: B -> C.
/// Over Z: free rank plus torsion coefficients; over a field: dimension.
struct HomologyGroup {
  Ring ring;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // coefficients > 1, in divisibility order
  /// Generator representatives (torsion generators first, then free), as
  /// coordinate vectors in the middle module.
  std::vector<Vector> generators;
  /// Maps a cycle to its coordinates in the generators. Row i of the
  /// matrix gives coordinate i; torsion coordinates are meaningful modulo
  /// the corresponding torsion coefficient.
  Matrix coordinate_map;

  std::size_t dimension() const { return free_rank + torsion.size(); }
  /// Coordinates of a cycle in the generators.
  Vector coordinates(const Vector& cycle) const;
  /// Zero in homology (a boundary).
  bool is_trivial_class(const Vector& cycle) const;
  std::string describe() const;
};

HomologyGroup subquotient(const Matrix& in, const Matrix& out);

/// H_n of a finite complex; requires n <= truncation - 1 so both
/// boundaries touching degree n are known.
template <class B>
HomologyGroup homology(const ChainComplex<B>& c, int n) {
  if (n < 0 || n > c.truncation() - 1)
    throw std::out_of_range("homology degree " + std::to_string(n) + " outside the truncated range");
  return subquotient(c.boundary_matrix(n + 1), c.boundary_matrix(n));
}

/// H^n of the dual cochain complex Hom(C, ring); same range restriction.
template <class B>
HomologyGroup cohomology(const ChainComplex<B>& c, int n) {
  if (n < 0 || n > c.truncation() - 1)
    throw std::out_of_range("cohomology degree " + std::to_string(n) + " outside the truncated range");
  return subquotient(c.boundary_matrix(n).transpose(), c.boundary_matrix(n + 1).transpose());
}

}  // namespace steenrod
