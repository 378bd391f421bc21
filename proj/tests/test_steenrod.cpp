#include <doctest.h>

#include "steenrod/homology.hpp"
#include "steenrod/steenrod.hpp"

#include <random>
#include <thread>

using namespace steenrod;

namespace {

Chain<Tensor<Simplex>> pair(const Simplex& a, const Simplex& b, int c = 1) {
  return Chain<Tensor<Simplex>>::of(make_tensor(a, b), c);
}

std::vector<Simplex> faces_of(int k) {
  std::vector<Simplex> out;
  for (unsigned mask = 1; mask < (1u << (k + 1)); ++mask) {
    std::vector<int> v;
    for (int i = 0; i <= k; ++i)
      if (mask & (1u << i)) v.push_back(i);
    out.push_back(Simplex(v));
  }
  return out;
}

SimplicialSet rp2(int truncation) {
  return freely_add_degeneracies(delta_from_facets("rp2", {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                           {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}}),
                                 truncation);
}

// Every cell of a labelled simplicial set, found by its vertex list.
std::map<Simplex, CellId> by_vertices(const SimplicialSet& x) {
  std::map<Simplex, CellId> out;
  for (int m = 0; m <= x.truncation(); ++m)
    for (CellId c : x.cells(m)) out.emplace(*x.vertex_list(c), c);
  return out;
}

}  // namespace

TEST_CASE("contracting cochain") {
  CHECK(phi(2, {0, 1}) == Chain<Simplex>::of({0, 1, 2}));
  CHECK(phi(2, {0, 2}).is_zero());
  CHECK(phi(2, {0}) == -Chain<Simplex>::of({0, 2}));
  CHECK_THROWS(phi(2, {0, 3}));
  CHECK_THROWS(phi(2, {1, 0}));

  for (int k = 0; k <= 4; ++k) {
    BoundaryFn<Simplex> d = [](const Simplex& s) { return simplex_boundary(s); };
    GradedMap<Simplex, Simplex> f{1, [k](const Simplex& s) { return phi(k, s); }, d, d};
    auto df = hom_differential(f);
    for (const auto& s : faces_of(k)) {
      // ∂φ + φ∂ = 1 − ι∘ε
      CHECK(df(s) == Chain<Simplex>::of(s) - iota_epsilon(k, s));
      for (const auto& [t, c] : phi(k, s)) CHECK(phi(k, t).is_zero());
    }
  }
}

TEST_CASE("homotopy on the tensor square") {
  CHECK(big_phi(2, pair({2}, {0, 1, 2})).is_zero());
  CHECK(big_phi(2, pair({0, 1}, {1, 2})) == pair({0, 1, 2}, {1, 2}));
  CHECK(big_phi(2, pair({0}, {1})) == pair({0, 2}, {1}, -1) + pair({2}, {1, 2}, -1));
  for (int k = 0; k <= 4; ++k)
    for (const auto& a : faces_of(k))
      for (const auto& b : faces_of(k)) CHECK(big_phi(k, big_phi(k, pair(a, b))).is_zero());
}

TEST_CASE("Alexander-Whitney diagonal") {
  CHECK(aw_diagonal({0}) == pair({0}, {0}));
  CHECK(aw_diagonal({0, 1}) == pair({0}, {0, 1}) + pair({0, 1}, {1}));
  CHECK(aw_diagonal({0, 1, 2}) == pair({0, 1, 2}, {2}) + pair({0, 1}, {1, 2}) + pair({0}, {0, 1, 2}));
  DiagonalTable table;
  CHECK(xi_standard(e(0), 2, table) == aw_diagonal({0, 1, 2}));
  CHECK(xi_simplex(e(0), Simplex{0, 0, 3}, table) == aw_diagonal({0, 0, 3}));
}

TEST_CASE("cup-1 diagonal on the 2-simplex") {
  DiagonalTable table;
  CHECK(xi_standard(e(1), 2, table) ==
        pair({0, 1, 2}, {1, 2}, -1) + pair({0, 2}, {0, 1, 2}) + pair({0, 1, 2}, {0, 1}, -1));
  CHECK(xi_standard(e(1), 1, table) == pair({0, 1}, {0, 1}));
  CHECK(format_chain(xi_standard(e(1), 2, table)) == "-1 [0,1,2]⊗[0,1]\n-1 [0,1,2]⊗[1,2]\n+1 [0,2]⊗[0,1,2]\n");
}

TEST_CASE("top diagonal and vanishing") {
  DiagonalTable table;
  for (int k = 0; k <= 6; ++k) {
    const Simplex s = standard_simplex(k);
    CHECK(xi_standard(e(k), k, table) == pair(s, s, eta(k)));
    CHECK(xi_standard(te(k), k, table) == pair(s, s, eta(k) * koszul_sign(k, k)));
    for (int i = k + 1; i <= 7; ++i) CHECK(xi_standard(e(i), k, table).is_zero());
  }
  const std::vector<int> signs = {1, 1, -1, -1, 1, 1, -1, -1};
  for (int k = 0; k < 8; ++k) CHECK(eta(k) == signs[k]);
  // term counts are binomial
  CHECK(xi_standard(e(2), 5, table).size() == 20);
}

TEST_CASE("chain-map and equivariance properties") {
  DiagonalTable table;
  CHECK(chain_map_violations(5, 5, table).empty());
  for (int k = 0; k <= 5; ++k)
    for (int n = 0; n <= 5; ++n)
      CHECK(xi_standard(te(n), k, table) == twist_act(true, xi_standard(e(n), k, table)));
}

TEST_CASE("naturality against the direct recursion on faces") {
  DiagonalTable table;
  for (const auto& f : faces_of(5))
    for (int n = 0; n <= 5; ++n) CHECK(xi_direct(n, f) == xi_simplex(e(n), f, table));
  CHECK_THROWS(xi_simplex(e(1), Simplex{1, 0}, table));
}

TEST_CASE("degenerate simplices by naturality") {
  DiagonalTable table;
  auto d0 = xi_simplex(e(1), Simplex{0, 0, 1}, table);
  CHECK(d0 == pair({0, 0, 1}, {0, 1}, -1) + pair({0, 1}, {0, 0, 1}) + pair({0, 0, 1}, {0, 0}, -1));
  CHECK(normalize_diagonal(d0).is_zero());
  auto d1 = xi_simplex(e(1), Simplex{0, 1, 1}, table);
  CHECK(d1 == pair({0, 1, 1}, {1, 1}, -1) + pair({0, 1}, {0, 1, 1}) + pair({0, 1, 1}, {0, 1}, -1));
  CHECK(normalize_diagonal(xi_simplex(e(0), Simplex{0, 1, 2}, table)) == aw_diagonal({0, 1, 2}));
  CHECK(normalize_diagonal(Chain<Tensor<Simplex>>()).is_zero());
}

TEST_CASE("simplicial maps are coalgebra morphisms") {
  DiagonalTable table;
  auto x = freely_add_degeneracies(standard_simplex_complex(3), 4);
  auto y = freely_add_degeneracies(standard_simplex_complex(1), 4);
  auto target = by_vertices(y);
  const std::vector<int> f = {0, 0, 1, 1};
  auto map_cell = [&](CellId c) {
    Simplex s = *x.vertex_list(c);
    for (int& v : s.vertices) v = f[v];
    return target.at(s);
  };
  for (int m = 0; m <= 4; ++m)
    for (CellId c : x.cells(m))
      for (int n = 0; n <= 3; ++n) {
        Chain<Tensor<CellId>> pushed;
        for (const auto& [t, coef] : xi_space(e(n), c, x, table))
          pushed.add_term(make_tensor(map_cell(t.factors[0]), map_cell(t.factors[1])), coef);
        CHECK(pushed == xi_space(e(n), map_cell(c), y, table));
      }
}

TEST_CASE("prime 3 identity") {
  DiagonalTable table;
  for (int k = 0; k <= 4; ++k) CHECK(check_prime3(k, table));
  auto [lhs, rhs] = prime3_sides(standard_simplex(2), table);
  CHECK_FALSE(rhs.is_zero());
}

TEST_CASE("cup products on the 2-simplex") {
  DiagonalTable table;
  auto x = freely_add_degeneracies(standard_simplex_complex(2), 3);
  auto cells = by_vertices(x);
  for (Ring ring : {Ring::prime_field(2), Ring::integers()}) {
    Cochain u{ring, 1, {{cells.at({0, 1}), 1}}};
    Cochain v{ring, 1, {{cells.at({1, 2}), 1}}};
    Cochain w = cup_i(u, v, 0, x, table);
    const Rational expected = ring.is_field() ? 1 : -1;  // Koszul evaluation sign (−1)^{pq}
    CHECK(w(cells.at({0, 1, 2})) == expected);
    CHECK(w.values.size() == 1);
  }
  // u⌣_p u on the dual of a p-simplex is ±1 on it
  for (int p = 0; p <= 2; ++p) {
    auto top = x.nondegenerate_cells(p).back();
    Cochain u{Ring::integers(), p, {{top, 1}}};
    Cochain sq = cup_i(u, u, p, x, table);
    CHECK(sq(top) == eta(p) * koszul_sign(p, p));
  }
  CHECK_THROWS(cup_i(Cochain{Ring::integers(), 1, {}}, Cochain{Ring::integers(), 1, {}}, -1, x, table));
}

TEST_CASE("cup-0 is the classical cup product") {
  DiagonalTable table;
  auto x = rp2(3);
  auto chains = normalized_chains(x, Ring::prime_field(2));
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 10; ++trial)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; p + q <= 2; ++q) {
        Vector a(chains.rank(p)), b(chains.rank(q));
        for (auto& t : a) t = bit(rng);
        for (auto& t : b) t = bit(rng);
        auto u = cochain_from_vector(chains, p, a), v = cochain_from_vector(chains, q, b);
        auto w = cup_i(u, v, 0, x, table);
        for (CellId s : x.nondegenerate_cells(p + q)) {
          Simplex vs = *x.vertex_list(s);
          // front p-face and back q-face, looked up among the cells
          Rational expected = 0;
          for (CellId fa : chains.basis(p))
            for (CellId fb : chains.basis(q)) {
              Simplex sa = *x.vertex_list(fa), sb = *x.vertex_list(fb);
              if (std::vector<int>(vs.vertices.begin(), vs.vertices.begin() + p + 1) == sa.vertices &&
                  std::vector<int>(vs.vertices.begin() + p, vs.vertices.end()) == sb.vertices)
                expected += u(fa) * v(fb);
            }
          CHECK(w(s) == Ring::prime_field(2).normalize(expected));
        }
      }
}

TEST_CASE("coboundary formula for cup-i mod 2") {
  DiagonalTable table;
  const Ring f2 = Ring::prime_field(2);
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int k = 2; k <= 4; ++k) {
    auto x = freely_add_degeneracies(standard_simplex_complex(k), k);
    auto chains = normalized_chains(x, f2);
    for (int trial = 0; trial < 5; ++trial)
      for (int p = 0; p <= k; ++p)
        for (int q = 0; q <= k; ++q)
          for (int i = 0; i + 1 <= std::min(p, q) + 1; ++i) {
            const int d = p + q - i;  // degree of δ(u⌣_{i+1}v) and u⌣_i v
            if (d > k || d < 1 || p + 1 > k || q + 1 > k) continue;
            Vector a(chains.rank(p)), b(chains.rank(q));
            for (auto& t : a) t = bit(rng);
            for (auto& t : b) t = bit(rng);
            auto u = cochain_from_vector(chains, p, a), v = cochain_from_vector(chains, q, b);
            auto lhs = cochain_to_vector(chains, coboundary(chains, cup_i(u, v, i + 1, x, table)));
            Vector rhs(chains.rank(d), 0);
            for (const Cochain& c : {cup_i(u, v, i, x, table), cup_i(v, u, i, x, table),
                                     cup_i(coboundary(chains, u), v, i + 1, x, table),
                                     cup_i(u, coboundary(chains, v), i + 1, x, table)}) {
              auto cv = cochain_to_vector(chains, c);
              for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j] = f2.normalize(rhs[j] + cv[j]);
            }
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("Steenrod squares on RP2") {
  DiagonalTable table;
  auto x = rp2(3);
  Matrix sq1 = square_matrix(1, 1, x, table);
  REQUIRE(sq1.rows() == 1);
  REQUIRE(sq1.cols() == 1);
  CHECK(sq1(0, 0) == 1);
  for (int p = 0; p <= 2; ++p) {
    Matrix sq0 = square_matrix(0, p, x, table);
    CHECK(sq0 == Matrix::identity(sq0.rows(), Ring::prime_field(2)));
  }
  CHECK(square_matrix(2, 0, x, table).is_zero());
  auto chains = normalized_chains(x, Ring::prime_field(2));
  Cochain not_cocycle{Ring::prime_field(2), 1, {{chains.basis(1)[0], 1}}};
  CHECK_THROWS(steenrod_square(1, not_cocycle, x, table));
  CHECK_THROWS(steenrod_square(1, Cochain{Ring::integers(), 1, {}}, x, table));
}

TEST_CASE("concurrent evaluation fills the table once") {
  DiagonalTable shared;
  std::vector<std::thread> threads;
  std::vector<DiagonalChain> results(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] { results[t] = xi_standard(e(3), 6, shared); });
  for (auto& th : threads) th.join();
  DiagonalTable serial;
  for (const auto& r : results) CHECK(r == xi_standard(e(3), 6, serial));
  CHECK(shared.size() == serial.size());
  CHECK_THROWS_AS(shared.insert(3, 6, DiagonalChain()), std::logic_error);
}
