#include <doctest.h>

#include "steenrod/homology.hpp"
#include "steenrod/simplicial.hpp"

using namespace steenrod;

namespace {

Cell nd(int base, int dim) { return Cell{base, Surjection::identity(dim)}; }

// Δ²/∂Δ²: one vertex, one 2-cell whose faces are all the degenerate edge.
SimplicialSet collapsed_sphere(int truncation) {
  Cell s0v{0, Surjection(1, {0})};
  return SimplicialSet("s2_collapsed", {{{}}, {}, {{s0v, s0v, s0v}}}, truncation, 0);
}

}  // namespace

TEST_CASE("surjections in canonical form") {
  CHECK(Surjection::all(2, 1).size() == 2);
  CHECK(Surjection::all(3, 1).size() == 3);
  CHECK(Surjection::all(4, 4).size() == 1);
  Surjection s(3, {2, 0});
  CHECK(s.images() == MonotoneMap{0, 0, 1, 1});
  CHECK(Surjection::from_images({0, 0, 1, 1}) == s);
  CHECK_THROWS(Surjection(3, {0, 2}));
  CHECK_THROWS(Surjection::from_images({0, 2}));
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= m; ++n)
      for (const auto& f : Surjection::all(m, n)) {
        CHECK(f.target_dim() == n);
        CHECK(Surjection::from_images(f.images()) == f);
      }
}

TEST_CASE("simplex conventions") {
  CHECK(Simplex{0, 0, 1}.is_degenerate());
  CHECK_FALSE(Simplex{0, 1, 2}.is_degenerate());
  CHECK(simplex_boundary(Simplex{0, 1, 2}) ==
        Chain<Simplex>::of({1, 2}) - Chain<Simplex>::of({0, 2}) + Chain<Simplex>::of({0, 1}));
}

TEST_CASE("freely adding degeneracies counts cells") {
  auto point = delta_from_facets("point", {{0}});
  auto dp = freely_add_degeneracies(point, 5);
  for (int n = 0; n <= 5; ++n) CHECK(dp.count(n) == 1);
  auto fp = forget_degeneracies(dp);
  for (int n = 0; n <= 5; ++n) CHECK(fp.count(n) == 1);

  auto interval = standard_simplex_complex(1);
  auto di = freely_add_degeneracies(interval, 4);
  CHECK(di.count(0) == 2);
  CHECK(di.count(1) == 3);
  CHECK(di.count(2) == 4);
  CHECK(forget_degeneracies(di).count(2) == 4);
  auto u = unnormalized_chains(di);
  auto n = normalized_chains(di);
  for (int m = 0; m <= 4; ++m) CHECK(u.rank(m) == static_cast<std::size_t>(m + 2));
  CHECK(n.rank(0) == 2);
  CHECK(n.rank(1) == 1);
  CHECK(n.rank(2) == 0);
  CHECK(n.rank(3) == 0);
}

TEST_CASE("simplicial identities and chain complexes on the corpus shapes") {
  std::vector<DeltaComplex> shapes = {
      standard_simplex_complex(3),
      delta_from_facets("circle", {{0, 1}, {1, 2}, {0, 2}}),
      delta_from_facets("torus", {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2},
                                  {0, 2, 3}, {1, 3, 4}, {2, 4, 5}, {3, 5, 6}, {4, 6, 0}, {5, 0, 1}, {6, 1, 2}}),
  };
  for (const auto& y : shapes) {
    CHECK(y.face_identity_violations().empty());
    auto x = freely_add_degeneracies(y, 4);
    CHECK(x.simplicial_identity_violations().empty());
    CHECK(is_degeneracy_free(x));
    auto c = core(x);
    REQUIRE(c.top_dim() == std::min(4, y.top_dim()));
    for (int m = 0; m <= c.top_dim(); ++m) {
      CHECK(c.count(m) == y.count(m));
      CHECK(c.faces[m] == y.faces[m]);
    }
    auto u = unnormalized_chains(x);
    auto nn = normalized_chains(x);
    CHECK(u.d_squared_violations().empty());
    CHECK(nn.d_squared_violations().empty());
    for (int m = 0; m <= 4; ++m) {
      CHECK(u.rank(m) == x.count(m));
      CHECK(nn.rank(m) == x.nondegenerate_count(m));
    }
    // N(𝔣X) = C(X) and N(𝔡Y) = N(Y)
    auto fx = delta_chains(forget_degeneracies(x));
    for (int m = 0; m <= 4; ++m) {
      CHECK(fx.rank(m) == u.rank(m));
      if (m >= 1) CHECK(fx.boundary_matrix(m) == u.boundary_matrix(m));
    }
    auto ny = delta_chains(y);
    for (int m = 0; m <= std::min(4, y.top_dim()); ++m) {
      CHECK(ny.rank(m) == nn.rank(m));
      if (m >= 1) CHECK(ny.boundary_matrix(m) == nn.boundary_matrix(m));
    }
  }
}

TEST_CASE("torus homology") {
  auto torus = delta_from_facets("torus", {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2},
                                           {0, 2, 3}, {1, 3, 4}, {2, 4, 5}, {3, 5, 6}, {4, 6, 0}, {5, 0, 1}, {6, 1, 2}});
  auto c = delta_chains(torus);
  CHECK(homology(c, 0).describe() == "Z");
  CHECK(homology(c, 1).describe() == "Z^2");
  CHECK(homology(c, 2).describe() == "Z");
}

TEST_CASE("core keeps degenerate faces of nondegenerate cells") {
  auto x = collapsed_sphere(3);
  CHECK(x.simplicial_identity_violations().empty());
  auto cc = core_with_inclusion(x);
  CHECK(cc.delta.count(0) == 1);
  CHECK(cc.delta.count(1) == 1);
  CHECK(cc.delta.count(2) == 1);
  CHECK(x.is_degenerate(cc.inclusion[1][0]));
  CHECK_FALSE(is_degeneracy_free(x));
  // the 2-cell is a cycle: H_2 = Z
  auto n = normalized_chains(x);
  CHECK(homology(n, 2).describe() == "Z");
}

TEST_CASE("point and standard simplex are degeneracy-free") {
  auto pt = SimplicialSet("point", {{{}}}, 4);
  CHECK(is_degeneracy_free(pt));
  CHECK(core(pt).count(0) == 1);
  CHECK(core(pt).count(1) == 0);
}

TEST_CASE("invalid presentations are rejected naming the cell") {
  // a 2-cell whose faces do not match up
  std::vector<std::vector<std::vector<Cell>>> faces = {
      {{}, {}, {}}, {{nd(1, 0), nd(0, 0)}, {nd(2, 0), nd(1, 0)}}, {{nd(0, 1), nd(0, 1), nd(1, 1)}}};
  try {
    SimplicialSet("bad", faces, 2);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("cell 0 of dimension 2") != std::string::npos);
  }
}

TEST_CASE("applying monotone maps to cells") {
  auto x = freely_add_degeneracies(standard_simplex_complex(2), 4);
  CellId top = x.nondegenerate(2, 0);
  CellId s1 = x.degeneracy(top, 1);
  CHECK(x.vertex_list(s1)->vertices == std::vector<int>{0, 1, 1, 2});
  CHECK(x.face(s1, 1) == top);
  CHECK(x.face(s1, 2) == top);
  CHECK(x.vertex_list(x.face(s1, 0))->vertices == std::vector<int>{1, 1, 2});
  CHECK(x.vertex_list(x.apply(top, {0, 0, 2, 2}))->vertices == std::vector<int>{0, 0, 2, 2});
}
