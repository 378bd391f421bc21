#include <doctest.h>

#include "steenrod/bar.hpp"
#include "steenrod/simplicial.hpp"
#include "steenrod/steenrod.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace steenrod;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

Chain<Tensor<Simplex>> pair(const Simplex& a, const Simplex& b, int c = 1) {
  return Chain<Tensor<Simplex>>::of(make_tensor(a, b), c);
}

}  // namespace

TEST_CASE("bar boundary") {
  CHECK(bar_boundary(e(0)).is_zero());
  CHECK(bar_boundary(e(1)) == Chain<BarElement>::of(te(0)) - Chain<BarElement>::of(e(0)));
  CHECK(bar_boundary(e(2)) == Chain<BarElement>::of(e(1)) + Chain<BarElement>::of(te(1)));
  CHECK(bar_boundary(e(3)) == Chain<BarElement>::of(e(2)) - Chain<BarElement>::of(te(2)));
  CHECK(bar_boundary(te(2)) == Chain<BarElement>::of(te(1)) + Chain<BarElement>::of(e(1)));
  CHECK(bar_boundary(bar_boundary(e(2))).is_zero());
  CHECK(bar_complex(10).d_squared_violations().empty());
  CHECK(to_string(te(3)) == "Te3");
}

TEST_CASE("twist action with Koszul sign") {
  auto a = pair({0, 1}, {0});
  CHECK(twist_act(false, a) == a);
  CHECK(twist_act(true, a) == pair({0}, {0, 1}));
  CHECK(twist_act(true, pair({0, 1}, {1, 2})) == pair({1, 2}, {0, 1}, -1));
  std::mt19937 rng(2);
  DiagonalTable table;
  for (int k = 0; k <= 4; ++k)
    for (int n = 0; n <= k; ++n) {
      auto x = xi_standard(e(n), k, table);
      CHECK(twist_act(true, twist_act(true, x)) == x);
    }
}

TEST_CASE("block composition") {
  CHECK(block_compose(Permutation::identity(3), {Permutation::identity(2), Permutation::identity(1),
                                                 Permutation::identity(3)})
            .is_identity());
  const Permutation swap({1, 0});
  CHECK(block_compose(swap, {Permutation::identity(1), Permutation::identity(1)}) == swap);
  CHECK(block_compose(swap, {Permutation::identity(1), Permutation::identity(2)}) ==
        Permutation::one_based({3, 1, 2}));
  CHECK(to_string(Permutation::one_based({3, 1, 2})) == "[3,1,2]");
  CHECK_THROWS(Permutation({0, 0}));
  CHECK_THROWS(block_compose(swap, {Permutation::identity(1)}));
}

TEST_CASE("operad composition laws for block permutations") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> size(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation sigma = random_permutation(size(rng), rng);
    const Permutation tau = random_permutation(size(rng), rng);
    const Permutation rho = random_permutation(size(rng), rng);
    std::uniform_int_distribution<int> si(1, sigma.size()), ti(1, tau.size());
    const int i = si(rng), j = ti(rng);
    // sequential associativity
    CHECK(partial_compose(partial_compose(sigma, i, tau), i + j - 1, rho) ==
          partial_compose(sigma, i, partial_compose(tau, j, rho)));
    // parallel associativity
    if (sigma.size() >= 2) {
      std::uniform_int_distribution<int> pick(1, sigma.size() - 1);
      const int a = pick(rng);
      std::uniform_int_distribution<int> later(a + 1, sigma.size());
      const int b = later(rng);
      CHECK(partial_compose(partial_compose(sigma, a, tau), b + tau.size() - 1, rho) ==
            partial_compose(partial_compose(sigma, b, rho), a, tau));
    }
    // total composition is associative
    std::vector<Permutation> taus, rhos_flat;
    std::vector<std::vector<Permutation>> rhos;
    for (int k = 0; k < sigma.size(); ++k) {
      taus.push_back(random_permutation(size(rng), rng));
      rhos.emplace_back();
      for (int l = 0; l < taus.back().size(); ++l) {
        rhos.back().push_back(random_permutation(size(rng), rng));
        rhos_flat.push_back(rhos.back().back());
      }
    }
    std::vector<Permutation> inner;
    for (int k = 0; k < sigma.size(); ++k) inner.push_back(block_compose(taus[k], rhos[k]));
    CHECK(block_compose(block_compose(sigma, taus), rhos_flat) == block_compose(sigma, inner));
  }
}

TEST_CASE("iterated coproducts of the Alexander-Whitney diagonal") {
  const Diagonal<Simplex> aw{"AW", 0, [](const Simplex& s) { return aw_diagonal(s); }};
  for (int k = 0; k <= 5; ++k) {
    auto x = Chain<Simplex>::of(standard_simplex(k));
    auto left = iterated_coproduct<Simplex>({{1, aw}}, aw, x);
    auto right = iterated_coproduct<Simplex>({{2, aw}}, aw, x);
    CHECK(left == right);
    // left-iterated coproduct is Σ_{i≤j} [0..i]⊗[i..j]⊗[j..k]
    Chain<Tensor<Simplex>> expected;
    for (int i = 0; i <= k; ++i)
      for (int j = i; j <= k; ++j) {
        std::vector<int> a, b, c;
        for (int v = 0; v <= i; ++v) a.push_back(v);
        for (int v = i; v <= j; ++v) b.push_back(v);
        for (int v = j; v <= k; ++v) c.push_back(v);
        expected.add_term(Tensor<Simplex>{{Simplex(a), Simplex(b), Simplex(c)}}, 1);
      }
    CHECK(left == expected);
  }
  CHECK_THROWS_AS(iterated_coproduct<Simplex>({{3, aw}}, aw, Chain<Simplex>::of({0, 1})), std::out_of_range);
}

TEST_CASE("iterated top coproducts give powers of eta") {
  DiagonalTable table;
  for (int m = 0; m <= 4; ++m) {
    const Diagonal<Simplex> top{"e" + std::to_string(m), m,
                                [&, m](const Simplex& s) { return xi_simplex(e(m), s, table); }};
    const Simplex sigma = standard_simplex(m);
    auto z3 = iterated_coproduct<Simplex>({{1, top}}, top, Chain<Simplex>::of(sigma));
    CHECK(z3 == Chain<Tensor<Simplex>>::of(Tensor<Simplex>{{sigma, sigma, sigma}}, eta(m) * eta(m)));
    auto z4 = iterated_coproduct<Simplex>({{1, top}, {1, top}}, top, Chain<Simplex>::of(sigma));
    CHECK(z4 == Chain<Tensor<Simplex>>::of(Tensor<Simplex>{{sigma, sigma, sigma, sigma}}, eta(m)));
  }
}
