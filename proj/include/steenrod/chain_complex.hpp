#pragma once

#include "steenrod/chain.hpp"
#include "steenrod/linalg.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace steenrod {

template <class B>
using BoundaryFn = std::function<Chain<B>(const B&)>;

/// Finite chain complex: an ordered basis in each degree 0..truncation and
/// a boundary on basis elements.
template <class B>
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(Ring ring, std::vector<std::vector<B>> basis, BoundaryFn<B> boundary)
      : ring_(ring), basis_(std::move(basis)), boundary_(std::move(boundary)) {
    index_.resize(basis_.size());
    for (std::size_t n = 0; n < basis_.size(); ++n)
      for (std::size_t i = 0; i < basis_[n].size(); ++i) index_[n].emplace(basis_[n][i], i);
  }

  const Ring& ring() const { return ring_; }
  int truncation() const { return static_cast<int>(basis_.size()) - 1; }
  std::size_t rank(int n) const {
    return (n < 0 || n > truncation()) ? 0 : basis_[n].size();
  }
  const std::vector<B>& basis(int n) const { return basis_.at(n); }
  const BoundaryFn<B>& boundary_fn() const { return boundary_; }

  Chain<B> boundary(const B& b) const { return boundary_(b).in_ring(ring_); }
  Chain<B> boundary(const Chain<B>& c) const {
    Chain<B> out(ring_);
    for (const auto& [b, coef] : c) out += coef * boundary(b);
    return out;
  }

  std::optional<std::size_t> index_of(int n, const B& b) const {
    if (n < 0 || n > truncation()) return std::nullopt;
    auto it = index_[n].find(b);
    if (it == index_[n].end()) return std::nullopt;
    return it->second;
  }

  /// Matrix of the boundary C_n -> C_{n-1} in the stored bases.
  Matrix boundary_matrix(int n) const {
    Matrix m(rank(n - 1), rank(n), ring_);
    if (n <= 0 || n > truncation()) return m;
    for (std::size_t j = 0; j < basis_[n].size(); ++j)
      for (const auto& [b, c] : boundary(basis_[n][j])) {
        auto i = index_of(n - 1, b);
        if (!i) throw std::logic_error("boundary leaves the stored basis: " + to_string(b));
        m.set(*i, j, c);
      }
    return m;
  }

  Vector to_vector(int n, const Chain<B>& c) const {
    Vector v(rank(n), Rational(0));
    for (const auto& [b, coef] : c) {
      auto i = index_of(n, b);
      if (!i) throw std::invalid_argument("basis element not in degree " + std::to_string(n));
      v[*i] = ring_.normalize(coef);
    }
    return v;
  }

  Chain<B> from_vector(int n, const Vector& v) const {
    Chain<B> c(ring_);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) c.add_term(basis_[n][i], v[i]);
    return c;
  }

  /// Basis elements whose boundary has nonzero boundary; empty when d^2 = 0
  /// everywhere up to the truncation.
  std::vector<B> d_squared_violations() const {
    std::vector<B> bad;
    for (int n = 2; n <= truncation(); ++n)
      for (const auto& b : basis_[n])
        if (!boundary(boundary(b)).is_zero()) bad.push_back(b);
    return bad;
  }

  ChainComplex in_ring(Ring ring) const { return ChainComplex(ring, basis_, boundary_); }

 private:
  Ring ring_ = Ring::integers();
  std::vector<std::vector<B>> basis_;
  BoundaryFn<B> boundary_;
  std::vector<std::map<B, std::size_t>> index_;
};

/// A map of graded modules raising degree by `degree`, carrying the
/// boundaries of its source and target so its Hom-differential is defined.
template <class S, class T>
struct GradedMap {
  int degree = 0;
  std::function<Chain<T>(const S&)> action;
  BoundaryFn<S> source_boundary;
  BoundaryFn<T> target_boundary;

  Chain<T> operator()(const S& b) const {
    Chain<T> out = action(b);
    if (!out.is_zero() && *out.degree() != basis_degree(b) + degree)
      throw std::logic_error("graded map changed degree by the wrong amount");
    return out;
  }

  Chain<T> operator()(const Chain<S>& c) const {
    Chain<T> out(c.ring());
    for (const auto& [b, coef] : c) out += (coef * (*this)(b)).in_ring(c.ring());
    return out;
  }
};

template <class B>
GradedMap<B, B> identity_map(BoundaryFn<B> boundary) {
  return {0, [](const B& b) { return Chain<B>::of(b); }, boundary, boundary};
}

/// g∘f with degree deg f + deg g.
template <class A, class B, class C>
GradedMap<A, C> compose(const GradedMap<B, C>& g, const GradedMap<A, B>& f) {
  return {f.degree + g.degree, [f, g](const A& a) { return g(f(a)); }, f.source_boundary,
          g.target_boundary};
}

/// ∂f = f∘∂_A − (−1)^{deg f} ∂_B∘f.
template <class S, class T>
GradedMap<S, T> hom_differential(const GradedMap<S, T>& f) {
  GradedMap<S, T> out;
  out.degree = f.degree - 1;
  out.source_boundary = f.source_boundary;
  out.target_boundary = f.target_boundary;
  out.action = [f](const S& a) {
    Chain<T> first = f(f.source_boundary(a));
    Chain<T> fa = f(a);
    Chain<T> second(fa.ring());
    for (const auto& [b, c] : fa) second += (c * f.target_boundary(b)).in_ring(fa.ring());
    if (f.degree % 2 == 0)
      return first - second;
    return first + second;
  };
  return out;
}

/// Boundary on an n-fold tensor with the Leibniz/Koszul rule.
template <class B>
Chain<Tensor<B>> tensor_boundary(const Tensor<B>& t, const BoundaryFn<B>& d, Ring ring = Ring::integers()) {
  Chain<Tensor<B>> out(ring);
  int preceding = 0;
  for (std::size_t pos = 0; pos < t.factors.size(); ++pos) {
    const int sign = preceding % 2 == 0 ? 1 : -1;
    for (const auto& [f, c] : d(t.factors[pos])) {
      Tensor<B> u = t;
      u.factors[pos] = f;
      out.add_term(u, sign * c);
    }
    preceding += degree(t.factors[pos]);
  }
  return out;
}

template <class B>
Chain<Tensor<B>> tensor_boundary(const Chain<Tensor<B>>& c, const BoundaryFn<B>& d) {
  Chain<Tensor<B>> out(c.ring());
  for (const auto& [t, coef] : c) out += coef * tensor_boundary(t, d, c.ring());
  return out;
}

template <class B>
BoundaryFn<Tensor<B>> tensor_boundary_fn(BoundaryFn<B> d) {
  return [d](const Tensor<B>& t) { return tensor_boundary(t, d); };
}

/// (f_1⊗...⊗f_n)(a_1⊗...⊗a_n) = (−1)^{Σ_{i<j} deg f_j · deg a_i} f_1(a_1)⊗...⊗f_n(a_n).
template <class B>
Chain<Tensor<B>> tensor_maps_apply(const std::vector<GradedMap<B, B>>& maps, const Chain<Tensor<B>>& x) {
  Chain<Tensor<B>> out(x.ring());
  for (const auto& [t, coef] : x) {
    if (t.factors.size() != maps.size())
      throw std::invalid_argument("tensor arity does not match the number of maps");
    long long exponent = 0;
    int preceding = 0;
    for (std::size_t j = 0; j < maps.size(); ++j) {
      exponent += static_cast<long long>(maps[j].degree) * preceding;
      preceding += degree(t.factors[j]);
    }
    Chain<Tensor<B>> acc = Chain<Tensor<B>>::of(Tensor<B>{}, koszul_sign(exponent, 1) * coef, x.ring());
    for (std::size_t j = 0; j < maps.size(); ++j) acc = tensor(acc, maps[j](t.factors[j]).in_ring(x.ring()));
    out += acc;
  }
  return out;
}

/// (f⊗g)(x) with the Koszul sign (−1)^{deg g · deg a} on each a⊗b.
template <class B>
Chain<Tensor<B>> tensor_map_apply(const GradedMap<B, B>& f, const GradedMap<B, B>& g, const Chain<Tensor<B>>& x) {
  return tensor_maps_apply<B>({f, g}, x);
}

template <class B>
bool maps_agree(const GradedMap<B, B>& f, const GradedMap<B, B>& g, const std::vector<B>& on) {
  for (const auto& b : on)
    if (!(f(b) == g(b))) return false;
  return true;
}

}  // namespace steenrod
