#pragma once

#include <compare>
#include <string>
#include <vector>

namespace steenrod {

/// Ordered vertex list. Repeated adjacent vertices encode degeneracy:
/// D_i[0,...,n] = [0,...,i,i,...,n].
struct Simplex {
  std::vector<int> vertices;

  Simplex() = default;
  Simplex(std::initializer_list<int> v) : vertices(v) {}
  explicit Simplex(std::vector<int> v) : vertices(std::move(v)) {}

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  bool is_degenerate() const;
  bool is_weakly_increasing() const;
  bool is_strictly_increasing() const;
  /// The i-th face: delete the i-th vertex.
  Simplex face(int i) const;

  auto operator<=>(const Simplex&) const = default;
};

/// The standard simplex [0,...,k].
Simplex standard_simplex(int k);

/// A cell of a finite simplicial set or delta-complex, addressed by
/// dimension and position in that dimension's cell list.
struct CellId {
  int dim = 0;
  int index = 0;
  auto operator<=>(const CellId&) const = default;
};

/// Basis element of an n-fold tensor power.
template <class B>
struct Tensor {
  std::vector<B> factors;
  auto operator<=>(const Tensor&) const = default;
};

inline int degree(const Simplex& s) { return s.dimension(); }
inline int degree(const CellId& c) { return c.dim; }
inline int degree(int) { return 0; }

template <class B>
int degree(const Tensor<B>& t) {
  int d = 0;
  for (const auto& f : t.factors) d += degree(f);
  return d;
}

/// Degree of any basis element, found by argument-dependent lookup so
/// types declared later participate.
template <class B>
int basis_degree(const B& b) {
  return degree(b);
}

std::string to_string(const Simplex& s);
std::string to_string(const CellId& c);

template <class B>
std::string to_string(const Tensor<B>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i) out += "⊗";
    out += to_string(t.factors[i]);
  }
  return out;
}

template <class B>
Tensor<B> make_tensor(B a, B b) {
  return Tensor<B>{{std::move(a), std::move(b)}};
}

}  // namespace steenrod
