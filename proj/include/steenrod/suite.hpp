#pragma once

#include "steenrod/io.hpp"
#include "steenrod/steenrod.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace steenrod {

/// A corpus file together with its role in the checks.
struct CorpusSpace {
  std::string name;
  ComplexDocument doc;
  /// Large spaces run only when the slow tier is requested or named.
  bool slow = false;
};

/// Loads every *.json file in name order. Throws InputError naming the
/// file and cell on the first invalid document.
std::vector<CorpusSpace> load_corpus(const std::filesystem::path& dir);

struct SuiteConfig {
  std::filesystem::path corpus_dir = STEENROD_CORPUS_DIR;
  /// Run only checks whose name equals this or starts with it plus '/'.
  std::optional<std::string> only;
  int max_k = 6;
  /// Truncation used for the Dold-Kan and Hurewicz checks.
  int truncation = 4;
  bool slow = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Counterexample or summary in canonical text.
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::vector<CheckResult> results;
  bool all_passed() const;
  std::size_t failures() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Named check before execution.
struct SuiteCheck {
  std::string name;
  std::function<CheckResult()> run;
};

std::vector<SuiteCheck> build_checks(const SuiteConfig& config, const std::vector<CorpusSpace>& corpus,
                                     DiagonalTable& table);
/// Runs the selected checks in parallel; results keep the build order.
SuiteReport run_checks(std::vector<SuiteCheck> checks, unsigned threads);
/// Loads the corpus, builds, filters and runs.
SuiteReport run_suite(const SuiteConfig& config, DiagonalTable& table);

/// ξ(e_n⊗cell) written on vertex lists (labels, or cell names when the
/// space has none), in canonical order.
std::string diagonal_text(const SimplicialSet& x, CellId cell, int n, DiagonalTable& table,
                          Ring ring = Ring::integers());
/// Chain from (coefficient, left, right) triples.
DiagonalChain diagonal_from_terms(const std::vector<std::tuple<int, Simplex, Simplex>>& terms);

/// Classical Alexander-Whitney cup product over 𝔽₂ on normalized cochains.
Cochain classical_cup(const Cochain& u, const Cochain& v, const SimplicialSet& space);

}  // namespace steenrod
