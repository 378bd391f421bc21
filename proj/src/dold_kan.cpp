#include "steenrod/dold_kan.hpp"

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace steenrod {

namespace {

std::string identity_name(const std::string& lhs, const std::string& rhs, int level) {
  return lhs + " = " + rhs + " fails on level " + std::to_string(level);
}

// Columns x with k * x = m, or nullopt if some column has no solution.
std::optional<Matrix> solve_columns(const Matrix& k, const Matrix& m) {
  Matrix out(k.cols(), m.cols(), k.ring());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto x = solve(k, m.column(j));
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < x->size(); ++i) out.set(i, j, (*x)[i]);
  }
  return out;
}

Matrix alternating_sum(const std::vector<Matrix>& faces, std::size_t rows, std::size_t cols, Ring ring) {
  Matrix out(rows, cols, ring);
  for (std::size_t i = 0; i < faces.size(); ++i) out = i % 2 == 0 ? out + faces[i] : out - faces[i];
  return out;
}

// g = f∘θ factored as μ∘ε with ε surjective and μ injective.
std::pair<MonotoneMap, MonotoneMap> epi_mono(const MonotoneMap& g) {
  MonotoneMap mu, eps(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (mu.empty() || mu.back() != g[j]) mu.push_back(g[j]);
    eps[j] = static_cast<int>(mu.size()) - 1;
  }
  return {eps, mu};
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& theta) {
  MonotoneMap g(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) g[j] = f.at(theta[j]);
  return g;
}

}  // namespace

std::vector<std::string> SimplicialAbelianGroup::identity_violations() const {
  std::vector<std::string> bad;
  const int top = truncation();
  for (int m = 2; m <= top; ++m)
    for (int j = 1; j <= m; ++j)
      for (int i = 0; i < j; ++i)
        if (!(faces[m - 1][i] * faces[m][j] == faces[m - 1][j - 1] * faces[m][i]))
          bad.push_back(identity_name("d" + std::to_string(i) + " d" + std::to_string(j),
                                      "d" + std::to_string(j - 1) + " d" + std::to_string(i), m));
  for (int m = 0; m + 2 <= top; ++m)
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i <= j; ++i)
        if (!(degeneracies[m + 1][i] * degeneracies[m][j] == degeneracies[m + 1][j + 1] * degeneracies[m][i]))
          bad.push_back(identity_name("s" + std::to_string(i) + " s" + std::to_string(j),
                                      "s" + std::to_string(j + 1) + " s" + std::to_string(i), m));
  for (int m = 0; m + 1 <= top; ++m)
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i <= m + 1; ++i) {
        const Matrix lhs = faces[m + 1][i] * degeneracies[m][j];
        Matrix rhs;
        if (i < j)
          rhs = degeneracies[m - 1][j - 1] * faces[m][i];
        else if (i == j || i == j + 1)
          rhs = Matrix::identity(ranks[m], ring);
        else
          rhs = degeneracies[m - 1][j] * faces[m][i - 1];
        if (!(lhs == rhs))
          bad.push_back(identity_name("d" + std::to_string(i) + " s" + std::to_string(j), "mixed identity", m));
      }
  return bad;
}

ChainComplex<CellId> complex_from_matrices(Ring ring, const std::vector<std::size_t>& ranks,
                                           const std::vector<Matrix>& boundaries) {
  std::vector<std::vector<CellId>> basis(ranks.size());
  for (std::size_t n = 0; n < ranks.size(); ++n)
    for (std::size_t j = 0; j < ranks[n]; ++j) basis[n].push_back({static_cast<int>(n), static_cast<int>(j)});
  auto mats = std::make_shared<const std::vector<Matrix>>(boundaries);
  BoundaryFn<CellId> d = [mats, ring](const CellId& c) {
    Chain<CellId> out(ring);
    if (c.dim == 0 || c.dim >= static_cast<int>(mats->size())) return out;
    const Matrix& m = (*mats)[c.dim];
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Rational& x = m(i, c.index);
      if (x != 0) out.add_term({c.dim - 1, static_cast<int>(i)}, x);
    }
    return out;
  };
  return ChainComplex<CellId>(ring, std::move(basis), std::move(d));
}

ChainComplex<CellId> moore_complex(const SimplicialAbelianGroup& a) {
  std::vector<Matrix> boundaries(a.ranks.size(), Matrix(0, 0, a.ring));
  for (int m = 1; m <= a.truncation(); ++m)
    boundaries[m] = alternating_sum(a.faces[m], a.ranks[m - 1], a.ranks[m], a.ring);
  return complex_from_matrices(a.ring, a.ranks, boundaries);
}

NormalizedComplex normalized_of_sab(const SimplicialAbelianGroup& a) {
  const int top = a.truncation();
  NormalizedComplex out;
  out.inclusion.resize(top + 1);
  std::vector<std::size_t> ranks(top + 1);
  std::vector<Matrix> boundaries(top + 1, Matrix(0, 0, a.ring));
  for (int n = 0; n <= top; ++n) {
    if (n == 0) {
      out.inclusion[0] = Matrix::identity(a.ranks[0], a.ring);
    } else {
      Matrix stacked(0, a.ranks[n], a.ring);
      for (int i = 0; i < n; ++i) stacked = stacked.vstack(a.faces[n][i]);
      out.inclusion[n] = kernel_basis(stacked);
    }
    ranks[n] = out.inclusion[n].cols();
    if (n >= 1) {
      Matrix image = a.faces[n][n] * out.inclusion[n];
      if (n % 2 == 1) for (std::size_t c = 0; c < image.cols(); ++c) image.scale_col(c, -1);
      auto coords = solve_columns(out.inclusion[n - 1], image);
      if (!coords) throw std::logic_error("d_n does not map the normalized complex into itself");
      boundaries[n] = *coords;
    }
  }
  out.complex = complex_from_matrices(a.ring, ranks, boundaries);
  return out;
}

GammaObject gamma(const ChainComplex<CellId>& c, int truncation) {
  const Ring ring = c.ring();
  GammaObject out;
  SimplicialAbelianGroup& a = out.group;
  a.ring = ring;
  out.basis.resize(truncation + 1);
  std::vector<std::map<GammaBasis, int>> index(truncation + 1);
  for (int m = 0; m <= truncation; ++m) {
    for (int n = 0; n <= std::min(m, c.truncation()); ++n)
      for (const auto& eta : Surjection::all(m, n))
        for (int j = 0; j < static_cast<int>(c.rank(n)); ++j) out.basis[m].push_back({eta, j});
    for (int k = 0; k < static_cast<int>(out.basis[m].size()); ++k) index[m].emplace(out.basis[m][k], k);
    a.ranks.push_back(out.basis[m].size());
    std::vector<std::string> names;
    for (const auto& g : out.basis[m])
      names.push_back(to_string(g.eta) + "(c" + std::to_string(g.eta.target_dim()) + "_" + std::to_string(g.index) +
                      ")");
    a.labels.push_back(std::move(names));
  }
  std::vector<Matrix> boundary(c.truncation() + 1, Matrix(0, 0, ring));
  for (int n = 1; n <= c.truncation(); ++n) boundary[n] = c.boundary_matrix(n);

  a.faces.resize(truncation + 1);
  a.degeneracies.resize(truncation + 1);
  for (int m = 0; m <= truncation; ++m) {
    for (int i = 0; m >= 1 && i <= m; ++i) {
      Matrix d(a.ranks[m - 1], a.ranks[m], ring);
      for (int k = 0; k < static_cast<int>(out.basis[m].size()); ++k) {
        const GammaBasis& g = out.basis[m][k];
        const int n = g.eta.target_dim();
        auto [eps, mu] = epi_mono(compose(g.eta.images(), coface(m, i)));
        const int r = static_cast<int>(mu.size()) - 1;
        const Surjection e = Surjection::from_images(eps);
        if (r == n) {
          d.set(index[m - 1].at({e, g.index}), k, 1);
        } else if (r == n - 1 && mu.back() == n - 1) {
          const Rational sign = n % 2 == 0 ? 1 : -1;
          for (std::size_t row = 0; row < boundary[n].rows(); ++row) {
            const Rational& x = boundary[n](row, g.index);
            if (x != 0) d.add(index[m - 1].at({e, static_cast<int>(row)}), k, sign * x);
          }
        }
      }
      a.faces[m].push_back(std::move(d));
    }
    for (int j = 0; m + 1 <= truncation && j <= m; ++j) {
      Matrix s(out.basis[m + 1].size(), a.ranks[m], ring);
      for (int k = 0; k < static_cast<int>(out.basis[m].size()); ++k) {
        const GammaBasis& g = out.basis[m][k];
        const Surjection eta = Surjection::from_images(compose(g.eta.images(), codegeneracy(m, j)));
        s.set(index[m + 1].at({eta, g.index}), k, 1);
      }
      a.degeneracies[m].push_back(std::move(s));
    }
  }
  return out;
}

GammaObject reduced_gamma(const ChainComplex<CellId>& c, int truncation) {
  std::vector<std::size_t> ranks;
  std::vector<Matrix> boundaries;
  for (int n = 0; n <= c.truncation(); ++n) {
    ranks.push_back(n == 0 ? 0 : c.rank(n));
    if (n == 0)
      boundaries.emplace_back(0, 0, c.ring());
    else if (n == 1)
      boundaries.emplace_back(0, c.rank(1), c.ring());
    else
      boundaries.push_back(c.boundary_matrix(n));
  }
  return gamma(complex_from_matrices(c.ring(), ranks, boundaries), truncation);
}

bool normalized_gamma_is_identity(const ChainComplex<CellId>& c, int truncation) {
  const GammaObject g = gamma(c, truncation);
  if (!g.group.identity_violations().empty()) return false;
  const NormalizedComplex nc = normalized_of_sab(g.group);
  const Ring ring = c.ring();
  std::vector<Matrix> embed(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    const std::size_t rank_c = c.rank(n);
    if (nc.complex.rank(n) != rank_c) return false;
    // c ↦ (id, c)
    embed[n] = Matrix(g.group.ranks[n], rank_c, ring);
    for (std::size_t k = 0; k < g.basis[n].size(); ++k)
      if (g.basis[n][k].eta.is_identity()) embed[n].set(k, g.basis[n][k].index, 1);
    auto coords = solve_columns(nc.inclusion[n], embed[n]);
    if (!coords || !is_invertible(*coords)) return false;
    if (n >= 1) {
      Matrix lhs = g.group.faces[n][n] * embed[n];
      if (n % 2 == 1) for (std::size_t c = 0; c < lhs.cols(); ++c) lhs.scale_col(c, -1);
      if (!(lhs == embed[n - 1] * c.boundary_matrix(n))) return false;
    }
  }
  return true;
}

bool gamma_normalized_is_identity(const SimplicialAbelianGroup& a) {
  const NormalizedComplex nc = normalized_of_sab(a);
  const int top = a.truncation();
  const GammaObject g = gamma(nc.complex, top);
  std::vector<Matrix> phi(top + 1);
  for (int m = 0; m <= top; ++m) {
    phi[m] = Matrix(a.ranks[m], g.group.ranks[m], a.ring);
    for (std::size_t k = 0; k < g.basis[m].size(); ++k) {
      const GammaBasis& b = g.basis[m][k];
      int level = b.eta.target_dim();
      Vector v = nc.inclusion[level].column(b.index);
      const auto& word = b.eta.word();
      for (auto it = word.rbegin(); it != word.rend(); ++it) v = a.degeneracies[level++][*it].apply(v);
      for (std::size_t r = 0; r < v.size(); ++r) phi[m].set(r, k, v[r]);
    }
    if (!is_invertible(phi[m])) return false;
  }
  for (int m = 1; m <= top; ++m)
    for (int i = 0; i <= m; ++i)
      if (!(phi[m - 1] * g.group.faces[m][i] == a.faces[m][i] * phi[m])) return false;
  for (int m = 0; m + 1 <= top; ++m)
    for (int j = 0; j <= m; ++j)
      if (!(phi[m + 1] * g.group.degeneracies[m][j] == a.degeneracies[m][j] * phi[m])) return false;
  return true;
}

SimplicialAbelianGroup free_simplicial_abelian(const SimplicialSet& x, Ring ring, bool pointed) {
  if (pointed && !x.basepoint())
    throw std::invalid_argument(x.name() + ": the pointed free simplicial module needs a basepoint");
  auto dropped = [&](CellId c) { return pointed && x.is_basepoint_cell(c); };
  SimplicialAbelianGroup a;
  a.ring = ring;
  const int top = x.truncation();
  std::vector<std::vector<int>> position(top + 1);
  for (int m = 0; m <= top; ++m) {
    position[m].assign(x.count(m), -1);
    std::vector<std::string> names;
    for (CellId c : x.cells(m))
      if (!dropped(c)) {
        position[m][c.index] = static_cast<int>(names.size());
        names.push_back(x.label(c));
      }
    a.ranks.push_back(names.size());
    a.labels.push_back(std::move(names));
  }
  a.faces.resize(top + 1);
  a.degeneracies.resize(top + 1);
  for (int m = 0; m <= top; ++m) {
    for (int i = 0; m >= 1 && i <= m; ++i) {
      Matrix d(a.ranks[m - 1], a.ranks[m], ring);
      for (CellId c : x.cells(m))
        if (position[m][c.index] >= 0) {
          const int target = position[m - 1][x.face(c, i).index];
          if (target >= 0) d.add(target, position[m][c.index], 1);
        }
      a.faces[m].push_back(std::move(d));
    }
    for (int j = 0; m + 1 <= top && j <= m; ++j) {
      Matrix s(a.ranks[m + 1], a.ranks[m], ring);
      for (CellId c : x.cells(m))
        if (position[m][c.index] >= 0) {
          const int target = position[m + 1][x.degeneracy(c, j).index];
          if (target >= 0) s.add(target, position[m][c.index], 1);
        }
      a.degeneracies[m].push_back(std::move(s));
    }
  }
  return a;
}

std::string to_string(const VectorSimplex& v) {
  std::ostringstream out;
  out << "<";
  bool first = true;
  for (const auto& [i, c] : v.terms) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1) out << mag << " ";
    out << to_string(CellId{v.dim, i});
    first = false;
  }
  return out.str() + ">";
}

FreeSpace::FreeSpace(const SimplicialSet& x, Ring ring) : x_(x), ring_(ring) {
  if (!x.basepoint()) throw std::invalid_argument(x.name() + ": the pointed free simplicial module needs a basepoint");
}

std::optional<VectorSimplex> FreeSpace::vector_of(const Chain<CellId>& c) const {
  VectorSimplex v;
  bool have_dim = false;
  for (const auto& [cell, coef] : c) {
    if (x_.is_basepoint_cell(cell)) continue;
    const Rational value = ring_.normalize(coef);
    if (value == 0) continue;
    v.dim = cell.dim;
    have_dim = true;
    v.terms.emplace_back(cell.index, value);
  }
  if (!have_dim) return std::nullopt;
  return v;
}

Chain<CellId> FreeSpace::chain_of(const VectorSimplex& v) const {
  Chain<CellId> out(ring_);
  for (const auto& [i, c] : v.terms) out.add_term({v.dim, i}, c);
  return out;
}

std::optional<VectorSimplex> FreeSpace::apply(const VectorSimplex& v, const MonotoneMap& theta) const {
  Chain<CellId> image(ring_);
  for (const auto& [i, c] : v.terms) image.add_term(x_.apply(CellId{v.dim, i}, theta), c);
  return vector_of(image);
}

bool FreeSpace::is_degenerate(const VectorSimplex& v) const {
  for (int i = 0; i < v.dim; ++i) {
    auto face = apply(v, coface(v.dim, i));
    if (!face) continue;
    auto back = apply(*face, codegeneracy(v.dim - 1, i));
    if (back && *back == v) return true;
  }
  return false;
}

Chain<VectorSimplex> FreeSpace::boundary(const VectorSimplex& v) const {
  Chain<VectorSimplex> out(ring_);
  for (int i = 0; v.dim > 0 && i <= v.dim; ++i)
    if (auto f = apply(v, coface(v.dim, i))) out.add_term(*f, i % 2 == 0 ? 1 : -1);
  return out;
}

Chain<Tensor<VectorSimplex>> FreeSpace::xi(const BarElement& b, const VectorSimplex& v, DiagonalTable& table) const {
  return push_diagonal<VectorSimplex>(
      xi_standard(b, v.dim, table), [&](const MonotoneMap& face) { return apply(v, face); }, ring_);
}

Chain<VectorSimplex> hurewicz(const FreeSpace& rx, CellId sigma) {
  Chain<VectorSimplex> out(rx.ring());
  if (auto v = rx.vector_of(Chain<CellId>::of(sigma, 1, rx.ring()))) out.add_term(*v, 1);
  return out;
}

Chain<CellId> gamma_x(const FreeSpace& rx, const Chain<VectorSimplex>& c) {
  Chain<CellId> out(rx.ring());
  for (const auto& [v, coef] : c) out += coef * rx.chain_of(v);
  return out;
}

GradedMap<CellId, VectorSimplex> hurewicz_chain_map(const FreeSpace& rx) {
  const SimplicialSet& x = rx.base();
  if (!is_degeneracy_free(x)) throw std::invalid_argument(x.name() + ": the Hurewicz chain map needs a degeneracy-free space");
  const Ring ring = rx.ring();
  auto space = std::make_shared<const FreeSpace>(rx);
  GradedMap<CellId, VectorSimplex> h;
  h.degree = 0;
  h.action = [space](const CellId& c) {
    if (space->base().is_degenerate(c)) return Chain<VectorSimplex>(space->ring());
    return hurewicz(*space, c);
  };
  h.source_boundary = [space, ring](const CellId& c) {
    Chain<CellId> out(ring);
    for (int i = 0; c.dim > 0 && i <= c.dim; ++i) {
      CellId f = space->base().face(c, i);
      if (!space->base().is_degenerate(f) && !space->base().is_basepoint_cell(f)) out.add_term(f, i % 2 == 0 ? 1 : -1);
    }
    return out;
  };
  h.target_boundary = [space, ring](const VectorSimplex& v) {
    Chain<VectorSimplex> out(ring);
    for (const auto& [f, c] : space->boundary(v))
      if (!space->is_degenerate(f)) out.add_term(f, c);
    return out;
  };
  return h;
}

GradedMap<VectorSimplex, CellId> gamma_x_map(const FreeSpace& rx) {
  const Ring ring = rx.ring();
  auto space = std::make_shared<const FreeSpace>(rx);
  GradedMap<VectorSimplex, CellId> g;
  g.degree = 0;
  g.action = [space](const VectorSimplex& v) { return space->chain_of(v); };
  g.source_boundary = [space](const VectorSimplex& v) { return space->boundary(v); };
  g.target_boundary = [space, ring](const CellId& c) {
    Chain<CellId> out(ring);
    for (int i = 0; c.dim > 0 && i <= c.dim; ++i) {
      CellId f = space->base().face(c, i);
      if (!space->base().is_basepoint_cell(f)) out.add_term(f, i % 2 == 0 ? 1 : -1);
    }
    return out;
  };
  return g;
}

std::vector<CellId> hurewicz_morphism_violations(const FreeSpace& rx, int max_dim, int max_level,
                                                 DiagonalTable& table, bool normalized) {
  const SimplicialSet& x = rx.base();
  std::vector<CellId> bad;
  for (int m = 1; m <= std::min(max_dim, x.truncation()); ++m)
    for (CellId c : x.cells(m)) {
      if (x.is_basepoint_cell(c)) continue;
      if (normalized && x.is_degenerate(c)) continue;
      const VectorSimplex v = *rx.vector_of(Chain<CellId>::of(c, 1, rx.ring()));
      for (int n = 0; n <= max_level; ++n) {
        Chain<Tensor<VectorSimplex>> lhs(rx.ring());
        for (const auto& [t, coef] : xi_space(e(n), c, x, table, rx.ring())) {
          if (normalized && (x.is_degenerate(t.factors[0]) || x.is_degenerate(t.factors[1]))) continue;
          auto a = rx.vector_of(Chain<CellId>::of(t.factors[0], 1, rx.ring()));
          auto b = rx.vector_of(Chain<CellId>::of(t.factors[1], 1, rx.ring()));
          if (a && b) lhs.add_term(make_tensor(*a, *b), coef);
        }
        Chain<Tensor<VectorSimplex>> rhs(rx.ring());
        for (const auto& [t, coef] : rx.xi(e(n), v, table)) {
          if (normalized && (rx.is_degenerate(t.factors[0]) || rx.is_degenerate(t.factors[1]))) continue;
          rhs.add_term(t, coef);
        }
        if (!(lhs == rhs)) {
          bad.push_back(c);
          break;
        }
      }
    }
  return bad;
}

}  // namespace steenrod
