#include <doctest.h>

#include "steenrod/io.hpp"
#include "steenrod/suite.hpp"
#include "steenrod/witness.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

using namespace steenrod;

namespace {

const std::filesystem::path corpus_dir = STEENROD_CORPUS_DIR;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

std::string load_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

// Independent oracle: the evaluation matrix [f_i(x)^j] at a random rational
// point is nonsingular, which forces independence.
bool independent_at_random_point(const std::vector<Chain<Simplex>>& cs, std::mt19937& rng) {
  std::uniform_int_distribution<int> value(-50, 50);
  std::map<Simplex, Rational> point;
  const int t = static_cast<int>(cs.size());
  Matrix m(t, t, Ring::rationals());
  for (int i = 0; i < t; ++i) {
    Rational f = 0;
    for (const auto& [b, c] : cs[i]) {
      auto it = point.try_emplace(b, value(rng)).first;
      f += c * it->second;
    }
    Rational power = 1;
    for (int j = 0; j < t; ++j, power *= f) m.set(j, i, power);
  }
  return determinant(m) != 0;
}

}  // namespace

TEST_CASE("corpus documents load and round-trip textually") {
  const auto corpus = load_corpus(corpus_dir);
  CHECK(corpus.size() >= 12);
  for (const auto& s : corpus) {
    CAPTURE(s.name);
    CHECK(serialize_document(s.doc) == read_file(corpus_dir / (s.name + ".json")));
    CHECK(parse_document(serialize_document(s.doc)).faces == s.doc.faces);
  }
}

TEST_CASE("corpus shapes") {
  auto rp4 = load_document(corpus_dir / "rp4_5.json");
  const std::vector<std::size_t> counts = {5, 20, 40, 40, 16};
  for (int n = 0; n <= 4; ++n) CHECK(rp4.faces[n].size() == counts[n]);
  auto circle = to_simplicial_set(load_document(corpus_dir / "circle_3.json"), 3);
  CHECK(is_degeneracy_free(circle));
  CHECK(circle.count(1) == 3 + 3);
  auto collapsed = to_simplicial_set(load_document(corpus_dir / "sphere2_collapsed.json"));
  CHECK_FALSE(is_degeneracy_free(collapsed));
  CHECK(collapsed.truncation() == 4);
  auto torus = to_simplicial_set(load_document(corpus_dir / "torus_7.json"), 2);
  CHECK(torus.truncation() == 2);
}

TEST_CASE("invalid documents name the failing cell") {
  const std::string good = read_file(corpus_dir / "boundary_simplex_3.json");
  CHECK(load_error(good).empty());
  CHECK(load_error(replace_once(good, "[5,2,1]", "[5,1,2]")) ==
        "boundary_simplex_3: cell 2 of dimension 2: face identities fail");
  CHECK(load_error(replace_once(good, "[5,2,1]", "[9,2,1]")).find("cell 2 of dimension 2: face 0 refers to missing 1-cell 9") !=
        std::string::npos);
  CHECK(load_error(replace_once(good, "[5,2,1]", "[5,2]")).find("cell 2 of dimension 2: expected 3 faces") !=
        std::string::npos);
  CHECK(load_error(replace_once(good, "\"delta\"", "\"cubical\"")).find("unknown kind") != std::string::npos);
  CHECK(load_error("{\"cells\": [[[]]]").find("<input>") != std::string::npos);
  CHECK_FALSE(load_error(replace_once(good, "\"basepoint\": 0", "\"basepoint\": 7")).empty());

  const std::string collapsed = read_file(corpus_dir / "sphere2_collapsed.json");
  CHECK(load_error(replace_once(collapsed, "\"degeneracy\":[0]}", "\"degeneracy\":[3]}")).find("cell 0 of dimension 2") !=
        std::string::npos);
  CHECK_FALSE(load_error(replace_once(collapsed, "{\"cell\":0,\"degeneracy\":[0]}", "0")).empty());
  CHECK_THROWS_AS(load_document(corpus_dir / "missing.json"), InputError);
}

TEST_CASE("diagonal cache round trip is bit-identical") {
  DiagonalTable table;
  for (int k = 0; k <= 4; ++k)
    for (int n = 0; n <= k; ++n) xi_standard(e(n), k, table);
  const std::string text = serialize_table(table);
  CHECK(text.rfind("{\"entries\":[", 0) == 0);
  CHECK(text.find("\"schema\":1") != std::string::npos);
  DiagonalTable back;
  REQUIRE(deserialize_table(text, back));
  CHECK(serialize_table(back) == text);
  CHECK(back.size() == table.size());
  for (const auto& [n, k, c] : table.entries()) CHECK(*back.find(n, k) == *c);

  DiagonalTable stale;
  CHECK_FALSE(deserialize_table(R"({"schema":0,"entries":[{"level":0,"k":0,"terms":[["1",[0],[0]]]}]})", stale));
  CHECK(stale.size() == 0);
  CHECK_THROWS_AS(deserialize_table("{\"schema\":1,\"entries\":[{\"level\":0}]}", stale), InputError);
  CHECK_THROWS_AS(deserialize_table("not json", stale), InputError);

  const auto dir = std::filesystem::temp_directory_path() / "steenrod-cache-test";
  std::filesystem::remove_all(dir);
  DiagonalTable empty;
  CHECK_FALSE(load_cache(dir, empty));
  save_cache(dir, table);
  DiagonalTable loaded;
  REQUIRE(load_cache(dir, loaded));
  CHECK(serialize_table(loaded) == text);
  CHECK(read_file(cache_file(dir)) == text);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  const char* saved = std::getenv("STEENROD_CACHE");
  const std::string saved_value = saved ? saved : "";
  setenv("STEENROD_CACHE", "/tmp/from-env", 1);
  CHECK(resolve_cache_dir(std::string("/tmp/requested")) == "/tmp/from-env");
  unsetenv("STEENROD_CACHE");
  CHECK(resolve_cache_dir(std::string("/tmp/requested")) == "/tmp/requested");
  CHECK_FALSE(resolve_cache_dir(std::nullopt).empty());
  if (saved) setenv("STEENROD_CACHE", saved_value.c_str(), 1);
}

TEST_CASE("truncated diagonal vectors") {
  Chain<Simplex> c = Chain<Simplex>::of({0, 1}) + 2 * Chain<Simplex>::of({1, 2});
  auto v = truncated_diagonal(c, 4);
  REQUIRE(v.components.size() == 4);
  CHECK(v.components[0].size() == 1);
  CHECK(v.components[0].coefficient(Tensor<Simplex>{}) == 1);
  for (int i = 1; i < 4; ++i) {
    CHECK(*v.components[i].degree() == i);
    CHECK(v.components[i].size() == static_cast<std::size_t>(1 << i));
  }
  CHECK(v.components[2] == tensor(c, c));
  CHECK(v.components[3] == tensor(tensor(c, c), c));
}

TEST_CASE("Vandermonde independence") {
  const Ring q = Ring::rationals();
  auto a = Chain<Simplex>::of({0, 1}, 1, q), b = Chain<Simplex>::of({1, 2}, 1, q);
  CHECK(vandermonde_independence<Simplex>({a}, q));
  CHECK(vandermonde_independence<Simplex>({a, b}, q));
  CHECK(vandermonde_independence<Simplex>({a, a + b, 2 * a}, q));

  CHECK_THROWS_AS(vandermonde_independence<Simplex>({a, a}, q), std::invalid_argument);
  CHECK_THROWS_AS(vandermonde_independence<Simplex>({a, Chain<Simplex>(q)}, q), std::invalid_argument);
  CHECK_THROWS_AS(vandermonde_independence<Simplex>({}, q), std::invalid_argument);
  CHECK_THROWS_AS(vandermonde_independence<Simplex>({a, Chain<Simplex>::of({0, 1, 2}, 1, q)}, q), std::invalid_argument);
  // 5a = 0 over F5
  CHECK_THROWS_AS(vandermonde_independence<Simplex>({a, 5 * b}, Ring::prime_field(5)), std::invalid_argument);
  // a and 6a coincide over F5
  CHECK_THROWS_AS(vandermonde_independence<Simplex>({a, 6 * a}, Ring::prime_field(5)), std::invalid_argument);

  std::mt19937 rng(5);
  std::vector<Simplex> edges;
  for (int i = 0; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) edges.push_back({i, j});
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Chain<Simplex>> cs;
    while (cs.size() < 4) {
      Chain<Simplex> c(q);
      for (int k = 0; k < 2; ++k) c.add_term(edges[pick(rng)], coef(rng));
      if (!c.is_zero() && std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
    }
    CHECK(independent_at_random_point(cs, rng));
    CHECK(vandermonde_independence(cs, q));
  }
}

TEST_CASE("Vandermonde determinant factorization") {
  const Ring q = Ring::rationals();
  std::vector<Polynomial> x = {Polynomial::variable(0, q), Polynomial::variable(1, q), Polynomial::variable(2, q)};
  const Polynomial det = vandermonde_determinant(x);
  CHECK(det == vandermonde_product(x));
  // (x1 − x0)(x2 − x0)(x2 − x1) = −(x0 − x1)(x0 − x2)(x1 − x2)
  const Polynomial ascending = (x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2]);
  CHECK(det == Polynomial::constant(-1, q) * ascending);
  CHECK(det.terms().size() == 6);
  std::vector<Polynomial> two = {x[0], x[1]};
  CHECK(vandermonde_determinant(two) == x[1] - x[0]);
  std::vector<Polynomial> repeated = {x[0], x[1], x[0]};
  CHECK(vandermonde_determinant(repeated).is_zero());
  CHECK(to_string(x[0] * x[0] - Polynomial::constant(2, q) * x[1]) == "b0*b0 - 2*b1");
}

TEST_CASE("injectivity witness on reduced spaces") {
  for (const char* name : {"torus_1", "klein_1", "rp2_1"}) {
    auto x = to_simplicial_set(load_document(corpus_dir / (std::string(name) + ".json")), 3);
    FreeSpace rx(x, Ring::integers());
    CHECK(injectivity_witness(rx, 1, 4, 10, 1) == 0);
    CHECK(injectivity_witness(rx, 2, 3, 10, 2) == 0);
  }
}

TEST_CASE("suite selection") {
  DiagonalTable table;
  const auto corpus = load_corpus(corpus_dir);
  SuiteConfig config;
  config.only = "prop-c4";
  config.max_k = 6;
  auto checks = build_checks(config, corpus, table);
  REQUIRE(checks.size() == 7);
  for (int k = 0; k <= 6; ++k) CHECK(checks[k].name == "prop-c4/eta-" + std::to_string(k));
  auto report = run_checks(checks, 2);
  CHECK(report.all_passed());
  CHECK(report.to_text().find("7 passed, 0 failed") != std::string::npos);
  CHECK(report.to_json().find("\"passed\": true") != std::string::npos);

  config.only = "prop-c";
  CHECK(build_checks(config, corpus, table).empty());
  config.only.reset();
  auto all = build_checks(config, corpus, table);
  std::set<std::string> names;
  for (const auto& c : all) names.insert(c.name);
  CHECK(names.size() == all.size());
  CHECK(names.count("sq1/rp2_6/H1") == 1);
  CHECK(names.count("sq2/rp4_5/H2") == 0);  // slow tier
  config.slow = true;
  CHECK(build_checks(config, corpus, table).size() > all.size());
}

TEST_CASE("failing checks are reported, not thrown") {
  std::vector<SuiteCheck> checks = {{"ok", [] { return CheckResult{"ok", true, "", 0}; }},
                                    {"boom", []() -> CheckResult { throw std::runtime_error("bad"); }}};
  auto report = run_checks(checks, 4);
  REQUIRE(report.results.size() == 2);
  CHECK(report.results[0].passed);
  CHECK_FALSE(report.results[1].passed);
  CHECK(report.results[1].detail == "exception: bad");
  CHECK(report.failures() == 1);
}

TEST_CASE("diagonal text on the 2-simplex") {
  DiagonalTable table;
  auto x = to_simplicial_set(load_document(corpus_dir / "simplex_2.json"));
  const CellId top = x.nondegenerate(2, 0);
  CHECK(diagonal_text(x, top, 0, table) == "+1 [0]⊗[0,1,2]\n+1 [0,1]⊗[1,2]\n+1 [0,1,2]⊗[2]\n");
  CHECK(diagonal_text(x, top, 1, table) == "-1 [0,1,2]⊗[0,1]\n-1 [0,1,2]⊗[1,2]\n+1 [0,2]⊗[0,1,2]\n");
  CHECK(diagonal_text(x, top, 1, table, Ring::prime_field(2)) ==
        "+1 [0,1,2]⊗[0,1]\n+1 [0,1,2]⊗[1,2]\n+1 [0,2]⊗[0,1,2]\n");
  CHECK(diagonal_text(x, top, 3, table) == "0\n");
}

TEST_CASE("classical cup agrees with cup-0 mod 2 on the corpus") {
  DiagonalTable table;
  const Ring f2 = Ring::prime_field(2);
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> bit(0, 1);
  for (const char* name : {"torus_7", "klein_9", "rp2_1"}) {
    auto x = to_simplicial_set(load_document(corpus_dir / (std::string(name) + ".json")), 3);
    auto chains = normalized_chains(x, f2);
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; p + q <= 2; ++q) {
        Vector a(chains.rank(p)), b(chains.rank(q));
        for (auto& t : a) t = bit(rng);
        for (auto& t : b) t = bit(rng);
        auto u = cochain_from_vector(chains, p, a), v = cochain_from_vector(chains, q, b);
        CHECK(cup_i(u, v, 0, x, table) == classical_cup(u, v, x));
      }
  }
}
