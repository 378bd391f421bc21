#include "steenrod/steenrod.hpp"

#include <mutex>
#include <stdexcept>

namespace steenrod {

namespace {

// φ coning to the vertex `top`, for strictly increasing faces below it.
Chain<Simplex> phi_to(int top, const Simplex& face) {
  Chain<Simplex> out;
  if (face.vertices.back() == top) return out;
  Simplex coned = face;
  coned.vertices.push_back(top);
  const int t = face.dimension();
  out.add_term(coned, t % 2 == 0 ? -1 : 1);
  return out;
}

DiagonalChain big_phi_to(int top, const DiagonalChain& c) {
  DiagonalChain out(c.ring());
  for (const auto& [t, coef] : c) {
    const Simplex& a = t.factors[0];
    const Simplex& b = t.factors[1];
    for (const auto& [fa, w] : phi_to(top, a)) out.add_term(make_tensor(fa, b), coef * w);
    // ι∘ε is nonzero only on vertices, so its Koszul sign is +1
    if (a.dimension() == 0)
      for (const auto& [fb, w] : phi_to(top, b)) out.add_term(make_tensor(Simplex{top}, fb), coef * w);
  }
  return out;
}

DiagonalChain diagonal_boundary(const DiagonalChain& c) {
  return tensor_boundary<Simplex>(c, [](const Simplex& s) { return simplex_boundary(s); });
}

// ξ(g⊗−) for the terms g of a bar chain, combined linearly.
template <class Eval>
DiagonalChain along_bar_chain(const Chain<BarElement>& chain, Eval eval) {
  DiagonalChain out;
  for (const auto& [g, c] : chain) out += c * eval(g);
  return out;
}

void require_face_of(int k, const Simplex& face) {
  if (face.vertices.empty() || !face.is_strictly_increasing() || face.vertices.front() < 0 ||
      face.vertices.back() > k)
    throw std::invalid_argument("not a face of the " + std::to_string(k) + "-simplex: " + to_string(face));
}

}  // namespace

int eta(int k) { return ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1; }

Chain<Simplex> phi(int k, const Simplex& face) {
  require_face_of(k, face);
  return phi_to(k, face);
}

Chain<Simplex> iota_epsilon(int k, const Simplex& face) {
  require_face_of(k, face);
  return face.dimension() == 0 ? Chain<Simplex>::of(Simplex{k}) : Chain<Simplex>();
}

DiagonalChain big_phi(int k, const DiagonalChain& c) {
  for (const auto& [t, coef] : c) {
    require_face_of(k, t.factors.at(0));
    require_face_of(k, t.factors.at(1));
  }
  return big_phi_to(k, c);
}

DiagonalChain aw_diagonal(const Simplex& s) {
  DiagonalChain out;
  const auto& v = s.vertices;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.add_term(make_tensor(Simplex(std::vector<int>(v.begin(), v.begin() + i + 1)),
                             Simplex(std::vector<int>(v.begin() + i, v.end()))),
                 1);
  return out;
}

DiagonalChain relabel(const DiagonalChain& c, const std::vector<int>& vertices) {
  DiagonalChain out(c.ring());
  for (const auto& [t, coef] : c) {
    Tensor<Simplex> u = t;
    for (auto& f : u.factors)
      for (int& x : f.vertices) x = vertices.at(x);
    out.add_term(u, coef);
  }
  return out;
}

DiagonalTable::Entry DiagonalTable::find(int n, int k) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find({n, k});
  return it == entries_.end() ? nullptr : it->second;
}

DiagonalTable::Entry DiagonalTable::insert(int n, int k, DiagonalChain c) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace({n, k}, nullptr);
  if (inserted) {
    it->second = std::make_shared<const DiagonalChain>(std::move(c));
    ++computed_;
  } else if (!(*it->second == c)) {
    throw std::logic_error("conflicting diagonal entries for e" + std::to_string(n) + " on the " +
                           std::to_string(k) + "-simplex");
  }
  return it->second;
}

std::vector<std::tuple<int, int, DiagonalTable::Entry>> DiagonalTable::entries() const {
  std::shared_lock lock(mutex_);
  std::vector<std::tuple<int, int, Entry>> out;
  for (const auto& [key, value] : entries_) out.emplace_back(key.first, key.second, value);
  return out;
}

std::size_t DiagonalTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

DiagonalChain xi_standard(const BarElement& b, int k, DiagonalTable& table) {
  if (k < 0 || b.level < 0) throw std::invalid_argument("negative simplex dimension or bar level");
  if (b.twist) return twist_act(true, xi_standard(e(b.level), k, table));
  const int n = b.level;
  if (n > k) return DiagonalChain();
  if (auto hit = table.find(n, k)) return *hit;
  if (n == 0) return *table.insert(0, k, aw_diagonal(standard_simplex(k)));

  const DiagonalChain along_bar =
      along_bar_chain(bar_boundary(b), [&](const BarElement& g) { return xi_standard(g, k, table); });
  const DiagonalChain lower = xi_standard(b, k - 1, table);
  DiagonalChain along_faces;
  const Simplex top = standard_simplex(k);
  for (int i = 0; i <= k; ++i) {
    const DiagonalChain face = relabel(lower, top.face(i).vertices);
    along_faces += Rational(i % 2 == 0 ? 1 : -1) * face;
  }
  DiagonalChain result = big_phi_to(k, along_bar) + Rational(n % 2 == 0 ? 1 : -1) * big_phi_to(k, along_faces);
  return *table.insert(n, k, std::move(result));
}

DiagonalChain xi_simplex(const BarElement& b, const Simplex& s, DiagonalTable& table) {
  if (s.vertices.empty() || !s.is_weakly_increasing())
    throw std::invalid_argument("vertex list is not weakly increasing: " + to_string(s));
  return relabel(xi_standard(b, s.dimension(), table), s.vertices);
}

DiagonalChain xi_simplex(const BarElement& b, const Chain<Simplex>& c, DiagonalTable& table) {
  DiagonalChain out(c.ring());
  for (const auto& [s, coef] : c) out += (coef * xi_simplex(b, s, table)).in_ring(c.ring());
  return out;
}

DiagonalChain xi_direct(int n, const Simplex& s) {
  std::map<std::pair<int, Simplex>, DiagonalChain> memo;
  std::function<DiagonalChain(int, const Simplex&)> go = [&](int level, const Simplex& x) -> DiagonalChain {
    if (level > x.dimension()) return DiagonalChain();
    if (level == 0) return aw_diagonal(x);
    auto key = std::make_pair(level, x);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const DiagonalChain along_bar = along_bar_chain(bar_boundary(e(level)), [&](const BarElement& g) {
      return twist_act(g.twist, go(g.level, x));
    });
    DiagonalChain along_faces;
    for (int i = 0; i <= x.dimension(); ++i) along_faces += Rational(i % 2 == 0 ? 1 : -1) * go(level, x.face(i));
    const int top = x.vertices.back();
    DiagonalChain r =
        big_phi_to(top, along_bar) + Rational(level % 2 == 0 ? 1 : -1) * big_phi_to(top, along_faces);
    memo.emplace(key, r);
    return r;
  };
  if (s.vertices.empty() || !s.is_strictly_increasing())
    throw std::invalid_argument("vertex list is not strictly increasing: " + to_string(s));
  return go(n, s);
}

Chain<Tensor<CellId>> xi_space(const BarElement& b, CellId x, const SimplicialSet& space, DiagonalTable& table,
                               Ring ring) {
  const DiagonalChain d = xi_standard(b, x.dim, table);
  return push_diagonal<CellId>(
      d, [&](const std::vector<int>& face) -> std::optional<CellId> { return space.apply(x, face); }, ring);
}

Chain<Tensor<CellId>> xi_space(const BarElement& b, const Chain<CellId>& c, const SimplicialSet& space,
                               DiagonalTable& table) {
  Chain<Tensor<CellId>> out(c.ring());
  for (const auto& [x, coef] : c) out += coef * xi_space(b, x, space, table, c.ring());
  return out;
}

DiagonalChain normalize_diagonal(const DiagonalChain& c) {
  DiagonalChain out(c.ring());
  for (const auto& [t, coef] : c)
    if (!t.factors[0].is_degenerate() && !t.factors[1].is_degenerate()) out.add_term(t, coef);
  return out;
}

Chain<Tensor<CellId>> normalize_diagonal(const Chain<Tensor<CellId>>& c, const SimplicialSet& space, bool pointed) {
  Chain<Tensor<CellId>> out(c.ring());
  for (const auto& [t, coef] : c) {
    bool keep = true;
    for (CellId f : t.factors) keep = keep && !space.is_degenerate(f) && !(pointed && space.is_basepoint_cell(f));
    if (keep) out.add_term(t, coef);
  }
  return out;
}

std::vector<std::pair<BarElement, int>> chain_map_violations(int max_level, int max_k, DiagonalTable& table) {
  std::vector<std::pair<BarElement, int>> bad;
  for (int n = 0; n <= max_level; ++n)
    for (const BarElement& a : {e(n), te(n)})
      for (int k = 0; k <= max_k; ++k) {
        const DiagonalChain lhs = diagonal_boundary(xi_standard(a, k, table));
        DiagonalChain rhs = along_bar_chain(bar_boundary(a), [&](const BarElement& g) {
          return xi_standard(g, k, table);
        });
        const Simplex top = standard_simplex(k);
        DiagonalChain faces;
        for (const auto& [f, c] : simplex_boundary(top)) faces += c * xi_simplex(a, f, table);
        rhs += Rational(n % 2 == 0 ? 1 : -1) * faces;
        if (!(lhs == rhs)) bad.emplace_back(a, k);
      }
  return bad;
}

std::pair<DiagonalChain, DiagonalChain> prime3_sides(const Simplex& s, DiagonalTable& table) {
  const Diagonal<Simplex> aw{"AW", 0, [](const Simplex& x) { return aw_diagonal(x); }};
  auto f = [&](const Simplex& x) { return insert_coproduct(aw, 2, xi_simplex(e(1), x, table)); };
  DiagonalChain lhs = diagonal_boundary(f(s));
  for (const auto& [face, c] : simplex_boundary(s)) lhs += c * f(face);
  const DiagonalChain g = insert_coproduct(aw, 2, aw_diagonal(s));
  DiagonalChain rhs = permute_factors(Permutation({1, 2, 0}), g) - g;
  return {lhs, rhs};
}

bool check_prime3(int k, DiagonalTable& table) {
  const int size = k + 1;
  for (unsigned mask = 1; mask < (1u << size); ++mask) {
    std::vector<int> v;
    for (int i = 0; i < size; ++i)
      if (mask & (1u << i)) v.push_back(i);
    auto [lhs, rhs] = prime3_sides(Simplex(v), table);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Rational Cochain::operator()(CellId c) const {
  auto it = values.find(c);
  return it == values.end() ? Rational(0) : it->second;
}

bool Cochain::is_zero() const { return values.empty(); }

Cochain cochain_from_vector(const ChainComplex<CellId>& chains, int degree, const Vector& v) {
  Cochain u{chains.ring(), degree, {}};
  if (v.size() != chains.rank(degree)) throw std::invalid_argument("cochain vector has the wrong length");
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational x = chains.ring().normalize(v[i]);
    if (x != 0) u.values.emplace(chains.basis(degree)[i], x);
  }
  return u;
}

Vector cochain_to_vector(const ChainComplex<CellId>& chains, const Cochain& u) {
  Vector v(chains.rank(u.degree), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = u(chains.basis(u.degree)[i]);
  return v;
}

Cochain coboundary(const ChainComplex<CellId>& chains, const Cochain& u) {
  Cochain out{u.ring, u.degree + 1, {}};
  if (u.degree + 1 > chains.truncation()) return out;
  for (CellId s : chains.basis(u.degree + 1)) {
    Rational value = 0;
    for (const auto& [f, c] : chains.boundary(s)) value += c * u(f);
    value = u.ring.normalize(value);
    if (value != 0) out.values.emplace(s, value);
  }
  return out;
}

Cochain cup_i(const Cochain& u, const Cochain& v, int i, const SimplicialSet& space, DiagonalTable& table) {
  if (i < 0) throw std::invalid_argument("cup-i index must be nonnegative");
  if (!(u.ring == v.ring)) throw std::invalid_argument("cochains over different rings");
  const int p = u.degree, q = v.degree, d = p + q - i;
  if (d < 0) throw std::invalid_argument("cup-i product of negative degree");
  if (d > space.truncation()) throw std::out_of_range("cup-i product above the truncation");
  Cochain out{u.ring, d, {}};
  const int sign = koszul_sign(p, q);
  for (CellId s : space.nondegenerate_cells(d)) {
    Rational value = 0;
    for (const auto& [t, coef] : normalize_diagonal(xi_space(e(i), s, space, table), space)) {
      if (t.factors[0].dim != p) continue;
      value += coef * u(t.factors[0]) * v(t.factors[1]);
    }
    value = u.ring.normalize(sign * value);
    if (value != 0) out.values.emplace(s, value);
  }
  return out;
}

Cochain steenrod_square(int i, const Cochain& u, const SimplicialSet& space, DiagonalTable& table) {
  if (!(u.ring == Ring::prime_field(2))) throw std::invalid_argument("Steenrod squares need F2 coefficients");
  if (i < 0) throw std::invalid_argument("negative Steenrod square");
  const auto chains = normalized_chains(space, u.ring);
  if (!coboundary(chains, u).is_zero()) throw std::invalid_argument("Steenrod square of a non-cocycle");
  if (i > u.degree) return Cochain{u.ring, u.degree + i, {}};
  return cup_i(u, u, u.degree - i, space, table);
}

Matrix square_matrix(int i, int p, const SimplicialSet& space, DiagonalTable& table) {
  const Ring f2 = Ring::prime_field(2);
  const auto chains = normalized_chains(space, f2);
  const HomologyGroup source = cohomology(chains, p);
  const HomologyGroup target = cohomology(chains, p + i);
  Matrix m(target.dimension(), source.dimension(), f2);
  for (std::size_t j = 0; j < source.generators.size(); ++j) {
    const Cochain u = cochain_from_vector(chains, p, source.generators[j]);
    const Vector image = cochain_to_vector(chains, steenrod_square(i, u, space, table));
    const Vector coords = target.coordinates(image);
    for (std::size_t r = 0; r < coords.size(); ++r) m.set(r, j, coords[r]);
  }
  return m;
}

}  // namespace steenrod
