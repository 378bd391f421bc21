#include "steenrod/homology.hpp"

#include <sstream>
#include <stdexcept>

namespace steenrod {

HomologyGroup subquotient(const Matrix& in, const Matrix& out) {
  const Ring& ring = out.ring();
  const std::size_t middle = out.cols();
  if (in.rows() != middle) throw std::invalid_argument("subquotient: maps are not composable");

  // Cycles: the trailing columns of V in U*out*V = D.
  SmithDecomposition s_out = smith_normal_form(out.rows() == 0 ? Matrix(0, middle, ring) : out);
  const std::size_t r = s_out.rank;
  Matrix cycles = s_out.V.column_range(r, middle);
  Matrix to_cycle_coords = s_out.V_inv.row_range(r, middle);

  // Boundaries expressed in cycle coordinates.
  Matrix bounds = to_cycle_coords * in.in_ring(ring);
  SmithDecomposition s_b = smith_normal_form(bounds);

  HomologyGroup h{ring, 0, {}, {}, Matrix(0, 0, ring)};
  const std::size_t z = middle - r;
  // New cycle basis: cycles * U_b^{-1}; coordinates: U_b * to_cycle_coords.
  Matrix basis = cycles * s_b.U_inv;
  Matrix coords = s_b.U * to_cycle_coords;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < z; ++i) {
    if (i < s_b.rank) {
      Rational d = s_b.D(i, i);
      if (ring.is_unit(d)) continue;
      h.torsion.push_back(numerator(d < 0 ? Rational(-d) : d));
    } else {
      ++h.free_rank;
    }
    kept.push_back(i);
  }
  h.coordinate_map = Matrix(kept.size(), middle, ring);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    h.generators.push_back(basis.column(kept[k]));
    for (std::size_t j = 0; j < middle; ++j) h.coordinate_map.set(k, j, coords(kept[k], j));
  }
  return h;
}

Vector HomologyGroup::coordinates(const Vector& cycle) const {
  Vector c = coordinate_map.apply(cycle);
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    Integer t = numerator(c[i]) % torsion[i];
    if (t < 0) t += torsion[i];
    c[i] = Rational(t);
  }
  return c;
}

bool HomologyGroup::is_trivial_class(const Vector& cycle) const {
  for (const auto& x : coordinates(cycle))
    if (x != 0) return false;
  return true;
}

std::string HomologyGroup::describe() const {
  std::ostringstream out;
  if (ring.is_field()) {
    out << ring.name() << "^" << dimension();
    return out.str();
  }
  if (free_rank == 0 && torsion.empty()) return "0";
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

}  // namespace steenrod
