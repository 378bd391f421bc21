#include "steenrod/witness.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace steenrod {

Polynomial Polynomial::constant(const Rational& c, Ring ring) {
  Polynomial p(ring);
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(int i, Ring ring) {
  Polynomial p(ring);
  p.add_term({i}, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  const Rational value = ring_.normalize(c);
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, value);
  if (!inserted) {
    it->second = ring_.normalize(it->second + value);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m;
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(m, ca * cb);
    }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const Rational mag = c < 0 ? Rational(-c) : c;
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (mag != 1 || m.empty()) out << mag;
    for (std::size_t i = 0; i < m.size(); ++i) out << (i == 0 && mag == 1 ? "" : "*") << "b" << m[i];
    first = false;
  }
  return out.str();
}

std::size_t polynomial_rank(const std::vector<Polynomial>& ps, Ring field) {
  std::map<Polynomial::Monomial, std::size_t> rows;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms()) rows.try_emplace(m, rows.size());
  Matrix a(rows.size(), ps.size(), field);
  for (std::size_t j = 0; j < ps.size(); ++j)
    for (const auto& [m, c] : ps[j].terms()) a.set(rows.at(m), j, c);
  return rank(a);
}

Polynomial vandermonde_determinant(const std::vector<Polynomial>& fs) {
  const Ring ring = fs.empty() ? Ring::rationals() : fs.front().ring();
  const std::size_t t = fs.size();
  // powers[i][j] = f_i^j
  std::vector<std::vector<Polynomial>> powers(t);
  for (std::size_t i = 0; i < t; ++i) {
    powers[i].push_back(Polynomial::constant(1, ring));
    for (std::size_t j = 1; j < t; ++j) powers[i].push_back(powers[i].back() * fs[i]);
  }
  std::vector<std::size_t> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(ring);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = a + 1; b < t; ++b)
        if (perm[a] > perm[b]) ++inversions;
    // row j, column perm[j]
    Polynomial term = Polynomial::constant(inversions % 2 == 0 ? 1 : -1, ring);
    for (std::size_t j = 0; j < t; ++j) term = term * powers[perm[j]][j];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Polynomial vandermonde_product(const std::vector<Polynomial>& fs) {
  const Ring ring = fs.empty() ? Ring::rationals() : fs.front().ring();
  Polynomial out = Polynomial::constant(1, ring);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) out = out * (fs[j] - fs[i]);
  return out;
}

int injectivity_witness(const FreeSpace& rx, int dim, int t, int draws, unsigned seed) {
  const SimplicialSet& x = rx.base();
  std::vector<CellId> cells;
  for (CellId c : x.nondegenerate_cells(dim))
    if (!x.is_basepoint_cell(c)) cells.push_back(c);
  if (cells.empty()) throw std::invalid_argument(x.name() + ": no cells of dimension " + std::to_string(dim));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  int failures = 0;
  for (int draw = 0; draw < draws; ++draw) {
    std::vector<VectorSimplex> vs;
    for (int guard = 0; static_cast<int>(vs.size()) < t && guard < 1000; ++guard) {
      Chain<CellId> c(rx.ring());
      for (CellId cell : cells) c.add_term(cell, coef(rng));
      auto v = rx.vector_of(c);
      if (v && std::find(vs.begin(), vs.end(), *v) == vs.end()) vs.push_back(*v);
    }
    std::vector<Chain<CellId>> images;
    for (const auto& v : vs) images.push_back(gamma_x(rx, Chain<VectorSimplex>::of(v, 1, rx.ring())));
    if (!vandermonde_independence(images, rx.ring())) ++failures;
  }
  return failures;
}

}  // namespace steenrod
