#include "steenrod/suite.hpp"

#include "steenrod/dold_kan.hpp"
#include "steenrod/homology.hpp"
#include "steenrod/witness.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

namespace steenrod {

namespace {

using Terms = std::vector<std::tuple<int, Simplex, Simplex>>;

// Displays as printed in the literature, in the e_1 basis used there.
const Terms aw_printed = {{1, {0, 1, 2}, {2}}, {1, {0, 1}, {1, 2}}, {1, {0}, {0, 1, 2}}};
const Terms cup1_printed = {{1, {0, 1, 2}, {1, 2}}, {-1, {0, 2}, {0, 1, 2}}, {-1, {0, 1, 2}, {0, 1}}};
const Terms d0_printed = {{1, {0, 0, 1}, {0, 1}}, {-1, {0, 1}, {0, 0, 1}}, {-1, {0, 0, 1}, {0, 0}}};
const Terms d1_printed = {{1, {0, 1, 1}, {1, 1}}, {-1, {0, 1}, {0, 1, 1}}, {-1, {0, 1, 1}, {1, 1}}};
// Signs of ξ(e_k⊗Δ^k) for k = 0..6.
const int eta_printed[] = {1, 1, -1, -1, 1, 1, -1};

CheckResult verdict(std::string name, bool passed, std::string detail = {}) {
  return CheckResult{std::move(name), passed, std::move(detail), 0};
}

std::string mismatch(const std::string& expected, const std::string& got) {
  return "expected\n" + expected + "got\n" + got;
}

std::string group_text(const HomologyGroup& h) { return h.describe(); }

bool same_group(const HomologyGroup& a, const HomologyGroup& b) {
  return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

int safe_truncation(const ComplexDocument& doc) { return std::max(doc.truncation, doc.top_dim() + 1); }

ComplexDocument pointed(ComplexDocument doc) {
  if (!doc.basepoint) doc.basepoint = 0;
  return doc;
}

ChainComplex<CellId> random_chain_complex(std::mt19937& rng, Ring ring, int max_rank, int max_degree) {
  std::uniform_int_distribution<int> rank(0, max_rank), coef(-2, 2);
  std::vector<std::size_t> ranks(max_degree + 1);
  for (auto& r : ranks) r = rank(rng);
  std::vector<Matrix> boundaries(max_degree + 1, Matrix(0, 0, ring));
  boundaries[0] = Matrix(0, ranks[0], ring);
  for (int n = 1; n <= max_degree; ++n) {
    // columns drawn from the kernel of the previous boundary keep ∂∂ = 0
    const Matrix k = n == 1 ? Matrix::identity(ranks[0], ring) : kernel_basis(boundaries[n - 1]);
    Matrix r(k.cols(), ranks[n], ring);
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) r.set(i, j, coef(rng));
    boundaries[n] = k * r;
  }
  return complex_from_matrices(ring, ranks, boundaries);
}

std::vector<Chain<Simplex>> random_distinct_chains(std::mt19937& rng, Ring ring, int t) {
  // random 1-chains on the edges of Δ^5
  std::vector<Simplex> edges;
  for (int a = 0; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) edges.push_back({a, b});
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::vector<Chain<Simplex>> out;
  std::set<std::map<Simplex, Rational>> seen;
  while (static_cast<int>(out.size()) < t) {
    Chain<Simplex> c(ring);
    const int terms = 1 + static_cast<int>(pick(rng) % 3);
    for (int i = 0; i < terms; ++i) c.add_term(edges[pick(rng)], coef(rng));
    if (!c.is_zero() && seen.insert(c.terms()).second) out.push_back(std::move(c));
  }
  return out;
}

std::string polynomial_mismatch(const Polynomial& det, const Polynomial& product) {
  return "det = " + to_string(det) + "\nproduct = " + to_string(product) + "\n";
}

class Builder {
 public:
  Builder(const SuiteConfig& config, const std::vector<CorpusSpace>& corpus, DiagonalTable& table)
      : config_(config), corpus_(corpus), table_(table) {}

  std::vector<SuiteCheck> build() {
    golden();
    eta_checks();
    chain_map();
    prime3();
    squares();
    dold_kan();
    hurewicz_checks();
    vandermonde();
    degeneracy_free();
    cache();
    return std::move(checks_);
  }

 private:
  void add(std::string name, std::function<CheckResult(const std::string&)> fn) {
    checks_.push_back({name, [name, fn] { return fn(name); }});
  }

  bool include(const CorpusSpace& s) const { return !s.slow || config_.slow; }

  std::vector<const CorpusSpace*> spaces(bool delta_only) const {
    std::vector<const CorpusSpace*> out;
    for (const auto& s : corpus_)
      if (include(s) && (!delta_only || s.doc.kind == ComplexDocument::Kind::Delta)) out.push_back(&s);
    return out;
  }

  void golden() {
    DiagonalTable& table = table_;
    add("aw-golden", [&table](const std::string& name) {
      const std::string got = format_chain(normalize_diagonal(xi_standard(e(0), 2, table)));
      const std::string want = format_chain(diagonal_from_terms(aw_printed));
      return verdict(name, got == want, got == want ? "" : mismatch(want, got));
    });
    add("cup1-golden", [&table](const std::string& name) {
      const std::string got = format_chain(xi_standard(e(1), 2, table));
      const std::string want = format_chain(diagonal_from_terms(cup1_printed));
      return verdict(name, got == want, got == want ? "" : mismatch(want, got));
    });
    for (const auto& [label, simplex, terms] :
         {std::tuple{"D0", Simplex{0, 0, 1}, &d0_printed}, std::tuple{"D1", Simplex{0, 1, 1}, &d1_printed}}) {
      add(std::string("degenerate-display/") + label, [&table, simplex, terms](const std::string& name) {
        const std::string got = format_chain(xi_simplex(e(1), simplex, table));
        const std::string want = format_chain(diagonal_from_terms(*terms));
        return verdict(name, got == want, got == want ? "" : mismatch(want, got));
      });
    }
  }

  void eta_checks() {
    DiagonalTable& table = table_;
    for (int k = 0; k <= config_.max_k; ++k)
      add("prop-c4/eta-" + std::to_string(k), [&table, k](const std::string& name) {
        const int sign = k < 7 ? eta_printed[k] : ((k * (k - 1) / 2) % 2 == 0 ? 1 : -1);
        const Simplex top = standard_simplex(k);
        const DiagonalChain want = DiagonalChain::of(make_tensor(top, top), sign);
        const DiagonalChain got = xi_standard(e(k), k, table);
        return verdict(name, got == want, got == want ? "" : mismatch(format_chain(want), format_chain(got)));
      });
  }

  void chain_map() {
    DiagonalTable& table = table_;
    add("chain-map", [&table](const std::string& name) {
      const auto bad = chain_map_violations(4, 5, table);
      std::string detail;
      for (const auto& [b, k] : bad) detail += "∂ξ ≠ ξ∂ at " + to_string(b) + "⊗Δ^" + std::to_string(k) + "\n";
      return verdict(name, bad.empty(), detail);
    });
    add("equivariance", [&table](const std::string& name) {
      for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= 5; ++k) {
          const DiagonalChain plain = xi_standard(e(n), k, table);
          const DiagonalChain twisted = xi_standard(te(n), k, table);
          if (twisted != twist_act(true, plain) || twist_act(true, twisted) != plain)
            return verdict(name, false, "T fails on e" + std::to_string(n) + "⊗Δ^" + std::to_string(k));
        }
      return verdict(name, true);
    });
  }

  void prime3() {
    DiagonalTable& table = table_;
    for (int k = 0; k <= 4; ++k)
      add("prime3/" + std::to_string(k), [&table, k](const std::string& name) {
        if (check_prime3(k, table)) return verdict(name, true);
        auto [lhs, rhs] = prime3_sides(standard_simplex(k), table);
        return verdict(name, false, mismatch(format_chain(rhs), format_chain(lhs)));
      });
  }

  void squares() {
    DiagonalTable& table = table_;
    for (const CorpusSpace* s : spaces(false)) {
      const ComplexDocument doc = s->doc;
      add("sq0/" + s->name, [&table, doc](const std::string& name) {
        const SimplicialSet x = to_simplicial_set(doc, safe_truncation(doc));
        for (int p = 0; p <= doc.top_dim(); ++p) {
          const Matrix m = square_matrix(0, p, x, table);
          if (!(m == Matrix::identity(m.rows(), Ring::prime_field(2))))
            return verdict(name, false, "Sq0 is not the identity on H^" + std::to_string(p));
        }
        return verdict(name, true);
      });
    }
    auto top_square = [this](const std::string& space, int i, int p) {
      auto it = std::find_if(corpus_.begin(), corpus_.end(), [&](const CorpusSpace& c) { return c.name == space; });
      if (it == corpus_.end()) return;
      const bool named = config_.only && config_.only->rfind("sq", 0) == 0;
      if (it->slow && !config_.slow && !named) return;
      DiagonalTable& table = table_;
      const ComplexDocument doc = it->doc;
      add("sq" + std::to_string(i) + "/" + space + "/H" + std::to_string(p), [&table, doc, i, p](const std::string& name) {
        const SimplicialSet x = to_simplicial_set(doc, safe_truncation(doc));
        const Ring f2 = Ring::prime_field(2);
        const auto chains = normalized_chains(x, f2);
        const Matrix m = square_matrix(i, p, x, table);
        std::ostringstream detail;
        detail << "matrix " << to_string(m);
        if (m.is_zero()) return verdict(name, false, detail.str() + " is zero");
        // oracle: for i = p the square is the classical cup square
        const HomologyGroup source = cohomology(chains, p);
        const HomologyGroup target = cohomology(chains, p + i);
        for (std::size_t j = 0; j < source.generators.size(); ++j) {
          const Cochain u = cochain_from_vector(chains, p, source.generators[j]);
          Vector diff = cochain_to_vector(chains, steenrod_square(i, u, x, table));
          if (i == p) {
            const Vector cup = cochain_to_vector(chains, classical_cup(u, u, x));
            for (std::size_t r = 0; r < diff.size(); ++r) diff[r] = f2.normalize(diff[r] + cup[r]);
            if (!target.is_trivial_class(diff))
              return verdict(name, false, detail.str() + " disagrees with the cup square on generator " + std::to_string(j));
          }
        }
        return verdict(name, true, detail.str());
      });
    };
    top_square("rp2_6", 1, 1);
    top_square("rp2_1", 1, 1);
    top_square("rp4_5", 1, 1);
    top_square("rp4_5", 2, 2);
  }

  void dold_kan() {
    const int trunc = config_.truncation;
    add("dold-kan/random-complexes", [](const std::string& name) {
      std::mt19937 rng(4471);
      for (int trial = 0; trial < 50; ++trial) {
        const auto c = random_chain_complex(rng, Ring::integers(), 3, 3);
        if (!normalized_gamma_is_identity(c, 3))
          return verdict(name, false, "N(Gamma C) differs from C on random complex " + std::to_string(trial));
        if (!gamma_normalized_is_identity(gamma(c, 3).group))
          return verdict(name, false, "Gamma N differs on Gamma C for random complex " + std::to_string(trial));
      }
      return verdict(name, true, "50 complexes");
    });
    for (const CorpusSpace* s : spaces(false)) {
      const ComplexDocument doc = pointed(s->doc);
      add("dold-kan/moore/" + s->name, [doc, trunc](const std::string& name) {
        const SimplicialSet x = to_simplicial_set(doc, trunc);
        const auto moore = moore_complex(free_simplicial_abelian(x, Ring::integers(), true));
        const auto chains = pointed_unnormalized_chains(x);
        for (int n = 0; n <= trunc; ++n) {
          if (moore.rank(n) != chains.rank(n)) return verdict(name, false, "rank differs in degree " + std::to_string(n));
          if (n > 0 && !(moore.boundary_matrix(n) == chains.boundary_matrix(n)))
            return verdict(name, false, "boundary differs in degree " + std::to_string(n));
        }
        return verdict(name, true);
      });
      add("dold-kan/homology/" + s->name, [doc, trunc](const std::string& name) {
        const SimplicialSet x = to_simplicial_set(doc, trunc);
        const auto moore = moore_complex(free_simplicial_abelian(x, Ring::integers(), true));
        std::optional<ChainComplex<CellId>> oracle;
        if (doc.kind == ComplexDocument::Kind::Delta)
          oracle = delta_chains(to_delta_complex(doc));
        else
          oracle = pointed_normalized_chains(x);
        std::ostringstream detail;
        for (int i = 0; i <= std::min(3, trunc - 1); ++i) {
          const HomologyGroup got = homology(moore, i);
          HomologyGroup want;
          if (i <= oracle->truncation() - 1) want = homology(*oracle, i);
          if (doc.kind == ComplexDocument::Kind::Delta && i == 0) want.free_rank -= 1;  // reduced
          detail << "H" << i << " = " << group_text(got) << "\n";
          if (!same_group(got, want))
            return verdict(name, false, "H" + std::to_string(i) + ": expected " + group_text(want) + ", got " + group_text(got));
        }
        return verdict(name, true, detail.str());
      });
      add("dold-kan/gamma-normalized/" + s->name, [doc](const std::string& name) {
        const SimplicialSet x = to_simplicial_set(doc, 3);
        return verdict(name, gamma_normalized_is_identity(free_simplicial_abelian(x, Ring::integers(), true)));
      });
    }
  }

  void hurewicz_checks() {
    DiagonalTable& table = table_;
    const int trunc = config_.truncation;
    for (const CorpusSpace* s : spaces(true)) {
      const ComplexDocument doc = pointed(s->doc);
      add("gamma-hurewicz/" + s->name, [doc, trunc](const std::string& name) {
        const SimplicialSet x = to_simplicial_set(doc, trunc);
        const FreeSpace rx(x, Ring::integers());
        for (int m = 0; m <= trunc; ++m)
          for (CellId c : x.cells(m)) {
            const Chain<CellId> want = x.is_basepoint_cell(c) ? Chain<CellId>() : Chain<CellId>::of(c);
            const Chain<CellId> got = gamma_x(rx, hurewicz(rx, c));
            if (got != want) return verdict(name, false, "gamma(h(" + x.label(c) + ")) = " + inline_chain(got));
          }
        const auto h = hom_differential(hurewicz_chain_map(rx));
        for (int m = 1; m <= trunc; ++m)
          for (CellId c : x.nondegenerate_cells(m))
            if (!x.is_basepoint_cell(c) && !h(c).is_zero())
              return verdict(name, false, "h is not a chain map at " + x.label(c));
        return verdict(name, true);
      });
      add("hurewicz-morphism/" + s->name, [&table, doc](const std::string& name) {
        const SimplicialSet x = to_simplicial_set(doc, 3);
        const FreeSpace rx(x, Ring::integers());
        std::string detail;
        for (bool normalized : {false, true})
          for (CellId c : hurewicz_morphism_violations(rx, 3, 3, table, normalized))
            detail += std::string(normalized ? "normalized" : "unnormalized") + " square fails at " + x.label(c) + "\n";
        return verdict(name, detail.empty(), detail);
      });
      if (s->doc.faces[0].size() == 1 && s->doc.top_dim() >= 1)
        add("injectivity/" + s->name, [doc](const std::string& name) {
          const SimplicialSet x = to_simplicial_set(doc, 3);
          const FreeSpace rx(x, Ring::integers());
          int failures = 0;
          for (int dim = 1; dim <= std::min(2, doc.top_dim()); ++dim)
            if (!x.nondegenerate_cells(dim).empty()) failures += injectivity_witness(rx, dim, 3, 20, 97 + dim);
          return verdict(name, failures == 0, std::to_string(failures) + " dependent draws");
        });
    }
  }

  void vandermonde() {
    for (const auto& [label, ring, seed] : {std::tuple{"q", Ring::rationals(), 101u}, std::tuple{"f5", Ring::prime_field(5), 103u}})
      add(std::string("vandermonde/") + label, [ring, seed](const std::string& name) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> size(1, 5);
        for (int draw = 0; draw < 200; ++draw) {
          const auto cs = random_distinct_chains(rng, ring, size(rng));
          if (!vandermonde_independence(cs, ring)) {
            std::string detail = "dependent tuple:\n";
            for (const auto& c : cs) detail += inline_chain(c) + "\n";
            return verdict(name, false, detail);
          }
        }
        return verdict(name, true, "200 tuples");
      });
    add("vandermonde/symbolic-t3", [](const std::string& name) {
      const Ring q = Ring::rationals();
      std::mt19937 rng(107);
      VariableIndex<Simplex> vars;
      std::vector<Polynomial> fs;
      for (const auto& c : random_distinct_chains(rng, q, 3)) fs.push_back(linear_form(c, vars, q));
      // indeterminate linear forms as well as random ones
      std::vector<Polynomial> generic = {Polynomial::variable(100, q), Polynomial::variable(101, q), Polynomial::variable(102, q)};
      for (const auto& f : {fs, generic}) {
        const Polynomial det = vandermonde_determinant(f);
        // the transposed Vandermonde matrix: det = Π_{i<j}(f_j − f_i) = −Π_{i<j}(f_i − f_j) for t = 3
        Polynomial descending = Polynomial::constant(1, q);
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = i + 1; j < f.size(); ++j) descending = descending * (f[i] - f[j]);
        if (det != vandermonde_product(f) || det != Polynomial::constant(-1, q) * descending)
          return verdict(name, false, polynomial_mismatch(det, vandermonde_product(f)));
      }
      return verdict(name, true, "det = " + to_string(vandermonde_determinant(generic)));
    });
    add("vandermonde/preconditions", [](const std::string& name) {
      const Ring q = Ring::rationals();
      const Chain<Simplex> a = Chain<Simplex>::of({0, 1}, 1, q);
      auto throws = [&](const std::vector<Chain<Simplex>>& cs) {
        try {
          vandermonde_independence(cs, q);
        } catch (const std::invalid_argument&) {
          return true;
        }
        return false;
      };
      const bool ok = throws({a, a}) && throws({a, Chain<Simplex>(q)}) && throws({}) &&
                      throws({a, Chain<Simplex>::of({0, 1, 2}, 1, q)});
      return verdict(name, ok, ok ? "" : "a precondition violation was not reported");
    });
  }

  void degeneracy_free() {
    for (const CorpusSpace* s : spaces(false)) {
      const ComplexDocument doc = s->doc;
      const bool expected = doc.kind == ComplexDocument::Kind::Delta;
      add("degeneracy-free/" + s->name, [doc, expected](const std::string& name) {
        const SimplicialSet x = to_simplicial_set(doc, std::min(safe_truncation(doc), 4));
        const bool got = is_degeneracy_free(x);
        return verdict(name, got == expected, std::string("verdict ") + (got ? "true" : "false"));
      });
      if (expected)
        add("core/" + s->name, [doc](const std::string& name) {
          const DeltaComplex y = to_delta_complex(doc);
          const DeltaComplex c = core(to_simplicial_set(doc, doc.top_dim() + 1));
          return verdict(name, c.faces == y.faces, c.faces == y.faces ? "" : "Core(d(Y)) differs from Y");
        });
    }
  }

  void cache() {
    DiagonalTable& table = table_;
    add("cache/round-trip", [&table](const std::string& name) {
      DiagonalTable local;
      for (int k = 0; k <= 4; ++k)
        for (int n = 0; n <= k; ++n) xi_standard(e(n), k, local);
      for (const auto& [n, k, c] : table.entries())
        if (!local.find(n, k)) local.insert(n, k, *c);
      const std::string text = serialize_table(local);
      DiagonalTable back;
      if (!deserialize_table(text, back)) return verdict(name, false, "schema rejected");
      if (serialize_table(back) != text) return verdict(name, false, "text differs after a round trip");
      for (const auto& [n, k, c] : local.entries())
        if (!back.find(n, k) || *back.find(n, k) != *c)
          return verdict(name, false, "entry (" + std::to_string(n) + "," + std::to_string(k) + ") differs");
      return verdict(name, true, std::to_string(local.size()) + " entries");
    });
  }

  const SuiteConfig& config_;
  const std::vector<CorpusSpace>& corpus_;
  DiagonalTable& table_;
  std::vector<SuiteCheck> checks_;
};

}  // namespace

std::vector<CorpusSpace> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError(dir.string() + ": corpus directory not found");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusSpace> out;
  for (const auto& f : files) {
    ComplexDocument doc = load_document(f);
    const std::string name = f.stem().string();
    out.push_back({name, std::move(doc), name.rfind("rp4", 0) == 0});
  }
  return out;
}

bool SuiteReport::all_passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    out << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)\n";
    if (!r.passed && !r.detail.empty()) {
      std::istringstream lines(r.detail);
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
  }
  out << results.size() - failures() << " passed, " << failures() << " failed\n";
  return out.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results)
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
  return nlohmann::json{{"passed", all_passed()}, {"failures", failures()}, {"checks", checks}}.dump(2) + "\n";
}

std::vector<SuiteCheck> build_checks(const SuiteConfig& config, const std::vector<CorpusSpace>& corpus,
                                     DiagonalTable& table) {
  auto checks = Builder(config, corpus, table).build();
  if (config.only) {
    const std::string& only = *config.only;
    std::erase_if(checks, [&](const SuiteCheck& c) {
      return !(c.name == only || c.name.rfind(only + "/", 0) == 0);
    });
  }
  return checks;
}

SuiteReport run_checks(std::vector<SuiteCheck> checks, unsigned threads) {
  SuiteReport report;
  report.results.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = checks[i].run();
      } catch (const std::exception& e) {
        r = verdict(checks[i].name, false, std::string("exception: ") + e.what());
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      report.results[i] = std::move(r);  // each slot written by one worker
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, checks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

SuiteReport run_suite(const SuiteConfig& config, DiagonalTable& table) {
  const auto corpus = load_corpus(config.corpus_dir);
  return run_checks(build_checks(config, corpus, table), config.threads);
}

DiagonalChain diagonal_from_terms(const Terms& terms) {
  DiagonalChain out;
  for (const auto& [coef, left, right] : terms) out.add_term(make_tensor(left, right), coef);
  return out;
}

std::string diagonal_text(const SimplicialSet& x, CellId cell, int n, DiagonalTable& table, Ring ring) {
  const auto chain = xi_space(e(n), cell, x, table, ring);
  if (x.has_labels()) {
    DiagonalChain labelled(ring);
    for (const auto& [t, coef] : chain)
      labelled.add_term(make_tensor(*x.vertex_list(t.factors[0]), *x.vertex_list(t.factors[1])), coef);
    return format_chain(labelled);
  }
  return format_chain(chain);
}

Cochain classical_cup(const Cochain& u, const Cochain& v, const SimplicialSet& space) {
  const Ring f2 = Ring::prime_field(2);
  Cochain out{f2, u.degree + v.degree, {}};
  const int p = u.degree, q = v.degree;
  if (p + q > space.truncation()) return out;
  MonotoneMap front(p + 1), back(q + 1);
  for (int i = 0; i <= p; ++i) front[i] = i;
  for (int i = 0; i <= q; ++i) back[i] = p + i;
  for (CellId s : space.nondegenerate_cells(p + q)) {
    const Rational value = f2.normalize(u(space.apply(s, front)) * v(space.apply(s, back)));
    if (value != 0) out.values[s] = value;
  }
  return out;
}

}  // namespace steenrod
