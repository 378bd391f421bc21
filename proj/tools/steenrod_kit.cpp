#include "steenrod/homology.hpp"
#include "steenrod/io.hpp"
#include "steenrod/simplicial.hpp"
#include "steenrod/steenrod.hpp"
#include "steenrod/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace steenrod;
using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::optional<std::string> ring;  // default depends on the subcommand
  std::optional<int> truncation;
  std::optional<std::string> cache;
  std::optional<std::string> only;
  int max_k = 6;
  bool json = false;
  int level = 0;
  std::string simplex;
  std::optional<int> square;
  bool slow = false;
  unsigned threads = 0;
};

void common_options(CLI::App* app, Options& o, bool input_required) {
  auto* in = app->add_option("--input", o.input, "complex file (verify: corpus directory or file)");
  if (input_required) in->required();
  app->add_option("--ring", o.ring, "coefficients: z, q, f2, f3 or f5")->check(CLI::IsMember({"z", "q", "f2", "f3", "f5"}));
  app->add_option("--truncation", o.truncation, "simplicial truncation dimension");
  app->add_option("--cache", o.cache, "directory of the diagonal cache");
  app->add_option("--only", o.only, "run only checks with this name or name prefix");
  app->add_option("--max-k", o.max_k, "largest k for the top-diagonal checks");
  app->add_flag("--json", o.json, "machine-readable output");
}

Ring parse_ring(const std::string& s) {
  if (s == "z") return Ring::integers();
  if (s == "q") return Ring::rationals();
  return Ring::prime_field(std::stoi(s.substr(1)));
}

std::vector<int> parse_vertices(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--simplex: \"" + text + "\" is not a comma-separated vertex list");
    }
  }
  if (out.empty()) throw InputError("--simplex: empty vertex list");
  return out;
}

class CacheSession {
 public:
  explicit CacheSession(const std::optional<std::string>& requested) : dir_(resolve_cache_dir(requested)) {
    try {
      load_cache(dir_, table_);
    } catch (const InputError& e) {
      std::cerr << "warning: ignoring unreadable cache (" << e.what() << ")\n";
    }
    loaded_ = table_.size();
  }
  ~CacheSession() {
    if (table_.size() == loaded_) return;
    try {
      save_cache(dir_, table_);
    } catch (const std::exception& e) {
      std::cerr << "warning: cache not written (" << e.what() << ")\n";
    }
  }
  DiagonalTable& table() { return table_; }

 private:
  std::filesystem::path dir_;
  DiagonalTable table_;
  std::size_t loaded_ = 0;
};

int cmd_diag(const Options& o) {
  const ComplexDocument doc = load_document(o.input);
  const int trunc = o.truncation.value_or(std::max(doc.truncation, doc.top_dim()));
  const SimplicialSet x = to_simplicial_set(doc, trunc);
  if (o.level < 0) throw InputError("--n must be non-negative");
  std::vector<CellId> cells;
  if (!o.simplex.empty()) {
    const Simplex wanted(parse_vertices(o.simplex));
    if (wanted.dimension() > trunc)
      throw InputError("simplex " + to_string(wanted) + " lies above truncation " + std::to_string(trunc));
    if (!x.has_labels()) throw InputError(doc.name + ": --simplex needs a complex with vertex labels");
    for (CellId c : x.cells(wanted.dimension()))
      if (x.vertex_list(c) == wanted) cells.push_back(c);
    if (cells.empty()) throw InputError(doc.name + ": no cell with vertices " + to_string(wanted));
  } else {
    const int top = std::min(doc.top_dim(), trunc);
    cells = x.nondegenerate_cells(top);
  }
  const Ring ring = parse_ring(o.ring.value_or("z"));
  CacheSession cache(o.cache);
  json out = json::array();
  for (CellId c : cells) {
    const std::string text = diagonal_text(x, c, o.level, cache.table(), ring);
    if (o.json) {
      json terms = json::array();
      std::istringstream lines(text);
      for (std::string line; std::getline(lines, line);)
        if (line != "0") {
          const auto space = line.find(' ');
          terms.push_back({line.substr(0, space), line.substr(space + 1)});
        }
      out.push_back({{"cell", x.label(c)}, {"level", o.level}, {"terms", terms}});
    } else {
      if (cells.size() > 1) std::cout << "# e" << o.level << " on " << x.label(c) << "\n";
      std::cout << text;
    }
  }
  if (o.json) std::cout << json{{"space", doc.name}, {"diagonals", out}}.dump(2) << "\n";
  return 0;
}

int cmd_sq(const Options& o) {
  if (o.ring.value_or("f2") != "f2") throw InputError("sq works over f2 only; got --ring " + *o.ring);
  const ComplexDocument doc = load_document(o.input);
  const int trunc = o.truncation.value_or(std::max(doc.truncation, doc.top_dim() + 1));
  const SimplicialSet x = to_simplicial_set(doc, trunc);
  const int top = std::min(doc.top_dim(), trunc - 1);
  if (o.square && (*o.square < 0 || *o.square > top))
    throw InputError("Sq^" + std::to_string(*o.square) + " lies outside degrees 0.." + std::to_string(top));
  CacheSession cache(o.cache);
  const auto chains = normalized_chains(x, Ring::prime_field(2));
  json out = json::array();
  for (int p = 0; p <= top; ++p)
    for (int i = 0; i <= p && p + i <= top; ++i) {
      if (o.square && *o.square != i) continue;
      const Matrix m = square_matrix(i, p, x, cache.table());
      if (m.rows() == 0 || m.cols() == 0) continue;
      if (o.json)
        out.push_back({{"i", i}, {"source", p}, {"target", p + i}, {"matrix", to_string(m)}});
      else
        std::cout << "Sq^" << i << ": H^" << p << " -> H^" << p + i << " = " << to_string(m) << "\n";
    }
  if (o.json) std::cout << json{{"space", doc.name}, {"squares", out}}.dump(2) << "\n";
  return 0;
}

int cmd_homology(const Options& o) {
  const ComplexDocument doc = load_document(o.input);
  const int trunc = o.truncation.value_or(std::max(doc.truncation, doc.top_dim() + 1));
  const SimplicialSet x = to_simplicial_set(doc, trunc);
  const auto chains = normalized_chains(x, parse_ring(o.ring.value_or("z")));
  json out = json::array();
  for (int n = 0; n <= trunc - 1; ++n) {
    const HomologyGroup h = homology(chains, n);
    if (o.json)
      out.push_back({{"degree", n}, {"free_rank", h.free_rank}, {"torsion", [&] {
                       std::vector<std::string> t;
                       for (const auto& c : h.torsion) t.push_back(c.str());
                       return t;
                     }()}, {"text", h.describe()}});
    else
      std::cout << "H_" << n << " = " << h.describe() << "\n";
  }
  if (o.json) std::cout << json{{"space", doc.name}, {"ring", o.ring.value_or("z")}, {"homology", out}}.dump(2) << "\n";
  return 0;
}

int cmd_info(const Options& o) {
  const ComplexDocument doc = load_document(o.input);
  const int trunc = o.truncation.value_or(std::max(doc.truncation, doc.top_dim()));
  const SimplicialSet x = to_simplicial_set(doc, trunc);
  const DeltaComplex c = core(x);
  std::vector<std::size_t> nondeg, all, core_cells;
  for (int n = 0; n <= trunc; ++n) {
    nondeg.push_back(x.nondegenerate_count(n));
    all.push_back(x.count(n));
  }
  for (int n = 0; n <= c.top_dim(); ++n) core_cells.push_back(c.count(n));
  const bool free = is_degeneracy_free(x);
  std::size_t core_total = 0;
  for (auto k : core_cells) core_total += k;
  if (o.json) {
    std::cout << json{{"space", doc.name},
                      {"kind", doc.kind == ComplexDocument::Kind::Delta ? "delta" : "simplicial"},
                      {"truncation", trunc},
                      {"nondegenerate_cells", nondeg},
                      {"cells", all},
                      {"degeneracy_free", free},
                      {"core_cells", core_cells},
                      {"core_size", core_total}}
                     .dump(2)
              << "\n";
    return 0;
  }
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  std::cout << "space: " << doc.name << "\n";
  std::cout << "kind: " << (doc.kind == ComplexDocument::Kind::Delta ? "delta" : "simplicial") << "\n";
  std::cout << "truncation: " << trunc << "\n";
  std::cout << "nondegenerate cells by dimension: " << list(nondeg) << "\n";
  std::cout << "cells by dimension: " << list(all) << "\n";
  std::cout << "degeneracy-free: " << (free ? "true" : "false") << "\n";
  std::cout << "core cells by dimension: " << list(core_cells) << "\n";
  std::cout << "core size: " << core_total << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  SuiteConfig config;
  config.only = o.only;
  config.max_k = o.max_k;
  config.slow = o.slow;
  config.threads = o.threads;
  if (o.truncation) config.truncation = *o.truncation;
  if (o.max_k < 0) throw InputError("--max-k must be non-negative");
  std::vector<CorpusSpace> corpus;
  if (o.input.empty()) {
    corpus = load_corpus(config.corpus_dir);
  } else if (std::filesystem::is_directory(o.input)) {
    corpus = load_corpus(o.input);
  } else {
    const std::filesystem::path path(o.input);
    corpus.push_back({path.stem().string(), load_document(path), false});
  }
  CacheSession cache(o.cache);
  const auto checks = build_checks(config, corpus, cache.table());
  if (checks.empty()) throw InputError("no check matches --only " + o.only.value_or(""));
  const SuiteReport report = run_checks(checks, config.threads);
  std::cout << (o.json ? report.to_json() : report.to_text());
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steenrod coalgebra toolkit: chain-level diagonals, squares and verification"};
  app.require_subcommand(1);
  Options o;
  auto* diag = app.add_subcommand("diag", "print xi(e_n ⊗ sigma) in canonical term order");
  common_options(diag, o, true);
  diag->add_option("--n", o.level, "bar level n");
  diag->add_option("--simplex", o.simplex, "vertex list of the cell, e.g. 0,1,2 (default: every top cell)");
  auto* sq = app.add_subcommand("sq", "matrices of the Steenrod squares on mod 2 cohomology");
  common_options(sq, o, true);
  sq->add_option("--i", o.square, "only this square");
  auto* hom = app.add_subcommand("homology", "homology groups per degree");
  common_options(hom, o, true);
  auto* info = app.add_subcommand("info", "cell counts, degeneracy-freeness and core size");
  common_options(info, o, true);
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  common_options(verify, o, false);
  verify->add_flag("--slow", o.slow, "include the slow tier");
  verify->add_option("--threads", o.threads, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*diag) return cmd_diag(o);
    if (*sq) return cmd_sq(o);
    if (*hom) return cmd_homology(o);
    if (*info) return cmd_info(o);
    return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
