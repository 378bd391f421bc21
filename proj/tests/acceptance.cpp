// Prints one PASS/FAIL line per acceptance criterion.
#include "steenrod/suite.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace steenrod;

namespace {

struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> prefixes;
  double time_limit;  // seconds, wall clock for the whole group
};

bool matches(const std::string& name, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes)
    if (name == p || name.rfind(p + "/", 0) == 0) return true;
  return false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "diagonal at level 0 on the 2-simplex matches Alexander-Whitney", {"aw-golden"}, 1},
      {2, "diagonal at level 1 on the 2-simplex matches the printed cup-1 value", {"cup1-golden"}, 60},
      {3, "degenerate displays D0 and D1 match", {"degenerate-display"}, 60},
      {4, "eta_k signs for k = 0..6", {"prop-c4"}, 60},
      {5, "chain map and equivariance up to level 4, dimension 5", {"chain-map", "equivariance"}, 600},
      {6, "prime 3 identity for k <= 4", {"prime3"}, 600},
      {7, "Sq^0 = id, Sq^1 on RP^2, Sq^1 and Sq^2 on RP^4", {"sq0", "sq1", "sq2"}, 600},
      {8, "Dold-Kan: N Gamma C = C, Moore complex, reduced homology", {"dold-kan"}, 600},
      {9, "gamma after Hurewicz is the identity", {"gamma-hurewicz"}, 600},
      {10, "Hurewicz morphism square", {"hurewicz-morphism"}, 600},
      {11, "Vandermonde independence and symbolic determinant", {"vandermonde"}, 600},
      {12, "degeneracy-free detection", {"degeneracy-free"}, 600},
  };

  std::vector<CorpusSpace> corpus;
  try {
    corpus = load_corpus(STEENROD_CORPUS_DIR);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  bool all = true;
  for (const auto& c : criteria) {
    DiagonalTable table;
    SuiteConfig config;
    config.slow = true;
    config.threads = 1;
    std::vector<SuiteCheck> selected;
    for (auto& check : build_checks(config, corpus, table))
      if (matches(check.name, c.prefixes)) selected.push_back(std::move(check));

    const auto start = std::chrono::steady_clock::now();
    const SuiteReport report = run_checks(std::move(selected), 1);
    const double elapsed = seconds_since(start);

    std::string detail;
    bool ok = !report.results.empty() && report.all_passed();
    if (report.results.empty()) detail = "no checks selected";
    for (const auto& r : report.results)
      if (!r.passed) detail += (detail.empty() ? "" : "; ") + r.name;

    if (c.number == 1) {
      // Single diagonal from a cold table.
      DiagonalTable cold;
      auto x = to_simplicial_set(load_document(std::filesystem::path(STEENROD_CORPUS_DIR) / "simplex_2.json"));
      const auto t0 = std::chrono::steady_clock::now();
      diagonal_text(x, x.nondegenerate(2, 0), 0, cold);
      if (seconds_since(t0) >= c.time_limit) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("diagonal over time");
      }
    }
    if (elapsed >= c.time_limit) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    all = all && ok;

    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", elapsed);
    std::cout << (ok ? "PASS " : "FAIL ") << c.number << ": " << c.description << " (" << report.results.size()
              << " checks, " << timing << ")";
    if (!ok) std::cout << " [" << detail << "]";
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
