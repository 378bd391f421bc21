#include "steenrod/basis.hpp"

#include <stdexcept>

namespace steenrod {

bool Simplex::is_degenerate() const {
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1]) return true;
  return false;
}

bool Simplex::is_weakly_increasing() const {
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] < vertices[i - 1]) return false;
  return true;
}

bool Simplex::is_strictly_increasing() const {
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] <= vertices[i - 1]) return false;
  return true;
}

Simplex Simplex::face(int i) const {
  if (i < 0 || i >= static_cast<int>(vertices.size()) || vertices.size() < 2)
    throw std::out_of_range("face index out of range");
  std::vector<int> v;
  v.reserve(vertices.size() - 1);
  for (int j = 0; j < static_cast<int>(vertices.size()); ++j)
    if (j != i) v.push_back(vertices[j]);
  return Simplex(std::move(v));
}

Simplex standard_simplex(int k) {
  std::vector<int> v(k + 1);
  for (int i = 0; i <= k; ++i) v[i] = i;
  return Simplex(std::move(v));
}

std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.vertices[i]);
  }
  return out + "]";
}

std::string to_string(const CellId& c) {
  return "c" + std::to_string(c.dim) + "_" + std::to_string(c.index);
}

}  // namespace steenrod
