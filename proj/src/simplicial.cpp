#include "steenrod/simplicial.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>

namespace steenrod {

Surjection::Surjection(int source_dim, std::vector<int> word) : source_dim_(source_dim), word_(std::move(word)) {
  if (source_dim_ < 0) throw std::invalid_argument("negative source dimension");
  if (static_cast<int>(word_.size()) > source_dim_) throw std::invalid_argument("degeneracy word too long");
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] < 0 || word_[i] >= source_dim_)
      throw std::invalid_argument("degeneracy index out of range");
    if (i && word_[i] >= word_[i - 1]) throw std::invalid_argument("degeneracy word not strictly decreasing");
  }
}

Surjection Surjection::from_images(const MonotoneMap& images) {
  if (images.empty() || images.front() != 0) throw std::invalid_argument("surjection must start at 0");
  std::vector<int> word;
  for (std::size_t j = 0; j + 1 < images.size(); ++j) {
    const int step = images[j + 1] - images[j];
    if (step == 0)
      word.push_back(static_cast<int>(j));
    else if (step != 1)
      throw std::invalid_argument("not a monotone surjection");
  }
  std::reverse(word.begin(), word.end());
  return Surjection(static_cast<int>(images.size()) - 1, std::move(word));
}

std::vector<Surjection> Surjection::all(int m, int n) {
  std::vector<Surjection> out;
  if (n < 0 || n > m) return out;
  const int k = m - n;
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<int> word;
    for (int j = m - 1; j >= 0; --j)
      if (mask[j]) word.push_back(j);
    out.emplace_back(m, std::move(word));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

MonotoneMap Surjection::images() const {
  MonotoneMap f(source_dim_ + 1, 0);
  std::set<int> repeats(word_.begin(), word_.end());
  for (int j = 0; j < source_dim_; ++j) f[j + 1] = f[j] + (repeats.count(j) ? 0 : 1);
  return f;
}

Surjection Surjection::after(const Surjection& other) const {
  if (other.target_dim() != source_dim_) throw std::invalid_argument("surjections not composable");
  const MonotoneMap f = images();
  MonotoneMap g = other.images();
  for (int& v : g) v = f[v];
  return from_images(g);
}

std::string to_string(const Surjection& s) {
  if (s.is_identity()) return "id";
  std::string out;
  for (int i : s.word()) out += "s" + std::to_string(i);
  return out;
}

MonotoneMap coface(int n, int i) {
  MonotoneMap m;
  for (int v = 0; v <= n; ++v)
    if (v != i) m.push_back(v);
  return m;
}

MonotoneMap codegeneracy(int n, int i) {
  MonotoneMap m;
  for (int v = 0; v <= n + 1; ++v) m.push_back(v <= i ? v : v - 1);
  return m;
}

std::string DeltaComplex::label(int n, int j) const {
  if (n < static_cast<int>(labels.size()) && j < static_cast<int>(labels[n].size())) return to_string(labels[n][j]);
  return to_string(CellId{n, j});
}

std::vector<CellId> DeltaComplex::face_identity_violations() const {
  std::vector<CellId> bad;
  for (int n = 1; n <= top_dim(); ++n)
    for (int c = 0; c < static_cast<int>(faces[n].size()); ++c) {
      const auto& f = faces[n][c];
      bool ok = static_cast<int>(f.size()) == n + 1;
      for (int x : f) ok = ok && x >= 0 && x < static_cast<int>(faces[n - 1].size());
      if (ok && n >= 2)
        for (int j = 1; j <= n && ok; ++j)
          for (int i = 0; i < j && ok; ++i) ok = faces[n - 1][f[j]][i] == faces[n - 1][f[i]][j - 1];
      if (!ok) bad.push_back({n, c});
    }
  return bad;
}

DeltaComplex delta_from_facets(std::string name, const std::vector<std::vector<int>>& facets) {
  std::vector<std::set<Simplex>> by_dim;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
      throw std::invalid_argument("facet with repeated vertex");
    const int size = static_cast<int>(facet.size());
    for (unsigned mask = 1; mask < (1u << size); ++mask) {
      std::vector<int> v;
      for (int i = 0; i < size; ++i)
        if (mask & (1u << i)) v.push_back(facet[i]);
      const int n = static_cast<int>(v.size()) - 1;
      if (static_cast<int>(by_dim.size()) <= n) by_dim.resize(n + 1);
      by_dim[n].insert(Simplex(std::move(v)));
    }
  }
  DeltaComplex out;
  out.name = std::move(name);
  out.faces.resize(by_dim.size());
  out.labels.resize(by_dim.size());
  std::vector<std::map<Simplex, int>> index(by_dim.size());
  for (std::size_t n = 0; n < by_dim.size(); ++n) {
    for (const auto& s : by_dim[n]) {
      index[n].emplace(s, static_cast<int>(out.labels[n].size()));
      out.labels[n].push_back(s);
    }
    for (const auto& s : out.labels[n]) {
      std::vector<int> f;
      if (n > 0)
        for (int i = 0; i <= static_cast<int>(n); ++i) f.push_back(index[n - 1].at(s.face(i)));
      out.faces[n].push_back(std::move(f));
    }
  }
  return out;
}

DeltaComplex standard_simplex_complex(int k) {
  std::vector<int> all(k + 1);
  for (int i = 0; i <= k; ++i) all[i] = i;
  return delta_from_facets("simplex_" + std::to_string(k), {all});
}

SimplicialSet::SimplicialSet(std::string name, std::vector<std::vector<std::vector<Cell>>> nondeg_faces,
                             int truncation, std::optional<int> basepoint,
                             std::vector<std::vector<Simplex>> nondeg_labels)
    : name_(std::move(name)),
      truncation_(truncation),
      basepoint_(basepoint),
      nondeg_faces_(std::move(nondeg_faces)),
      labels_(std::move(nondeg_labels)) {
  if (truncation_ < 0) throw std::invalid_argument("negative truncation");
  if (static_cast<int>(nondeg_faces_.size()) > truncation_ + 1) nondeg_faces_.resize(truncation_ + 1);
  if (static_cast<int>(labels_.size()) > truncation_ + 1) labels_.resize(truncation_ + 1);
  if (basepoint_ && (*basepoint_ < 0 || *basepoint_ >= static_cast<int>(nondegenerate_count(0))))
    throw std::invalid_argument(name_ + ": basepoint is not a vertex");

  for (int n = 0; n < static_cast<int>(nondeg_faces_.size()); ++n)
    for (int j = 0; j < static_cast<int>(nondeg_faces_[n].size()); ++j) {
      const auto& f = nondeg_faces_[n][j];
      const std::string where = name_ + ": cell " + std::to_string(j) + " of dimension " + std::to_string(n);
      if (n == 0 && !f.empty()) throw std::invalid_argument(where + " is a vertex but lists faces");
      if (n > 0 && static_cast<int>(f.size()) != n + 1)
        throw std::invalid_argument(where + " needs " + std::to_string(n + 1) + " faces");
      for (const Cell& c : f)
        if (c.dim() != n - 1 || c.base < 0 || c.base >= static_cast<int>(nondegenerate_count(c.base_dim())))
          throw std::invalid_argument(where + " has a face outside the complex");
    }

  for (int n = 2; n < static_cast<int>(nondeg_faces_.size()); ++n)
    for (int b = 0; b < static_cast<int>(nondeg_faces_[n].size()); ++b)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          const Cell& dj = nondeg_faces_[n][b][j];
          const Cell& di = nondeg_faces_[n][b][i];
          if (apply(dj, coface(n - 1, i)) != apply(di, coface(n - 1, j - 1)))
            throw std::invalid_argument(name_ + ": cell " + std::to_string(b) + " of dimension " +
                                        std::to_string(n) + " violates d" + std::to_string(i) + " d" +
                                        std::to_string(j) + " = d" + std::to_string(j - 1) + " d" +
                                        std::to_string(i));
        }

  cells_.resize(truncation_ + 1);
  index_.resize(truncation_ + 1);
  for (int m = 0; m <= truncation_; ++m) {
    for (int n = 0; n <= m; ++n) {
      const auto surjections = Surjection::all(m, n);
      for (int b = 0; b < static_cast<int>(nondegenerate_count(n)); ++b)
        for (const auto& s : surjections) cells_[m].push_back(Cell{b, s});
    }
    for (int i = 0; i < static_cast<int>(cells_[m].size()); ++i) index_[m].emplace(cells_[m][i], i);
  }
}

CellId SimplicialSet::id(const Cell& c) const {
  const int m = c.dim();
  if (m < 0 || m > truncation_) throw std::out_of_range(name_ + ": cell dimension above the truncation");
  auto it = index_[m].find(c);
  if (it == index_[m].end()) throw std::out_of_range(name_ + ": unknown cell");
  return {m, it->second};
}

std::vector<CellId> SimplicialSet::cells(int m) const {
  std::vector<CellId> out;
  for (int i = 0; i < static_cast<int>(count(m)); ++i) out.push_back({m, i});
  return out;
}

std::vector<CellId> SimplicialSet::nondegenerate_cells(int m) const {
  std::vector<CellId> out;
  for (int i = 0; i < static_cast<int>(count(m)); ++i)
    if (cells_[m][i].surj.is_identity()) out.push_back({m, i});
  return out;
}

bool SimplicialSet::is_basepoint_cell(CellId id) const {
  const Cell& c = cell(id);
  return basepoint_ && c.base_dim() == 0 && c.base == *basepoint_;
}

Cell SimplicialSet::restrict_to_face(int base, int n, const MonotoneMap& mono) const {
  const int r = static_cast<int>(mono.size()) - 1;
  if (r == n) return Cell{base, Surjection::identity(n)};
  // peel off the coface of the largest vertex not hit by mono
  std::set<int> hit(mono.begin(), mono.end());
  int missing = n;
  while (hit.count(missing)) --missing;
  MonotoneMap rest(mono.size());
  for (std::size_t j = 0; j < mono.size(); ++j) rest[j] = mono[j] - (mono[j] > missing ? 1 : 0);
  return apply(nondeg_faces_[n][base][missing], rest);
}

Cell SimplicialSet::apply(const Cell& x, const MonotoneMap& theta) const {
  if (theta.empty()) throw std::invalid_argument("operator with empty source");
  const MonotoneMap f = x.surj.images();
  MonotoneMap g(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) {
    if (theta[j] < 0 || theta[j] > x.dim() || (j && theta[j] < theta[j - 1]))
      throw std::invalid_argument("operator is not a monotone map into the cell's dimension");
    g[j] = f[theta[j]];
  }
  // g = μ∘ε with ε surjective onto its image rank and μ injective
  MonotoneMap mu;
  MonotoneMap eps(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (mu.empty() || mu.back() != g[j]) mu.push_back(g[j]);
    eps[j] = static_cast<int>(mu.size()) - 1;
  }
  const Cell y = restrict_to_face(x.base, x.base_dim(), mu);
  const MonotoneMap yf = y.surj.images();
  MonotoneMap composite(eps.size());
  for (std::size_t j = 0; j < eps.size(); ++j) composite[j] = yf[eps[j]];
  return Cell{y.base, Surjection::from_images(composite)};
}

CellId SimplicialSet::face(CellId x, int i) const {
  if (x.dim == 0) throw std::invalid_argument("a vertex has no faces");
  return apply(x, coface(x.dim, i));
}

CellId SimplicialSet::degeneracy(CellId x, int i) const { return apply(x, codegeneracy(x.dim, i)); }

std::optional<Simplex> SimplicialSet::vertex_list(CellId id) const {
  const Cell& c = cell(id);
  const int n = c.base_dim();
  if (n >= static_cast<int>(labels_.size()) || c.base >= static_cast<int>(labels_[n].size())) return std::nullopt;
  const Simplex& base = labels_[n][c.base];
  std::vector<int> v;
  for (int k : c.surj.images()) v.push_back(base.vertices.at(k));
  return Simplex(std::move(v));
}

std::string SimplicialSet::label(CellId id) const {
  if (auto v = vertex_list(id)) return to_string(*v);
  const Cell& c = cell(id);
  const std::string base = "x" + std::to_string(c.base_dim()) + "_" + std::to_string(c.base);
  return c.surj.is_identity() ? base : to_string(c.surj) + "(" + base + ")";
}

std::vector<CellId> SimplicialSet::simplicial_identity_violations() const {
  std::vector<CellId> bad;
  for (int m = 0; m <= truncation_; ++m)
    for (int k = 0; k < static_cast<int>(cells_[m].size()); ++k) {
      const Cell& x = cells_[m][k];
      bool ok = true;
      auto d = [&](const Cell& c, int i) { return apply(c, coface(c.dim(), i)); };
      auto s = [&](const Cell& c, int i) { return apply(c, codegeneracy(c.dim(), i)); };
      for (int j = 1; m >= 2 && j <= m && ok; ++j)
        for (int i = 0; i < j && ok; ++i) ok = d(d(x, j), i) == d(d(x, i), j - 1);
      for (int j = 0; j <= m && ok; ++j)
        for (int i = 0; i <= j && ok; ++i) ok = s(s(x, j), i) == s(s(x, i), j + 1);
      for (int j = 0; j <= m && ok; ++j) {
        const Cell sx = s(x, j);
        for (int i = 0; i <= m + 1 && ok; ++i) {
          if (i < j)
            ok = d(sx, i) == s(d(x, i), j - 1);
          else if (i == j || i == j + 1)
            ok = d(sx, i) == x;
          else
            ok = d(sx, i) == s(d(x, i - 1), j);
        }
      }
      if (!ok) bad.push_back({m, k});
    }
  return bad;
}

DeltaComplex forget_degeneracies(const SimplicialSet& x) {
  DeltaComplex out;
  out.name = x.name() + "_f";
  out.faces.resize(x.truncation() + 1);
  if (x.has_labels()) out.labels.resize(x.truncation() + 1);
  for (int m = 0; m <= x.truncation(); ++m)
    for (CellId c : x.cells(m)) {
      std::vector<int> f;
      for (int i = 0; m > 0 && i <= m; ++i) f.push_back(x.face(c, i).index);
      out.faces[m].push_back(std::move(f));
      if (x.has_labels()) out.labels[m].push_back(x.vertex_list(c).value_or(Simplex{}));
    }
  return out;
}

SimplicialSet freely_add_degeneracies(const DeltaComplex& y, int truncation, std::optional<int> basepoint) {
  std::vector<std::vector<std::vector<Cell>>> faces(std::min(truncation, y.top_dim()) + 1);
  for (int n = 0; n < static_cast<int>(faces.size()); ++n)
    for (const auto& f : y.faces[n]) {
      std::vector<Cell> cells;
      for (int i : f) cells.push_back(Cell{i, Surjection::identity(n - 1)});
      faces[n].push_back(std::move(cells));
    }
  std::vector<std::vector<Simplex>> labels = y.labels;
  return SimplicialSet(y.name + "_d", std::move(faces), truncation, basepoint, std::move(labels));
}

CoreComplex core_with_inclusion(const SimplicialSet& x) {
  const int top = x.truncation();
  std::vector<std::set<int>> members(top + 1);
  for (int m = 0; m <= top; ++m)
    for (CellId c : x.nondegenerate_cells(m)) members[m].insert(c.index);
  for (int m = top; m >= 1; --m)
    for (int k : members[m])
      for (int i = 0; i <= m; ++i) members[m - 1].insert(x.face({m, k}, i).index);

  CoreComplex out;
  out.delta.name = x.name() + "_core";
  out.delta.faces.resize(top + 1);
  out.inclusion.resize(top + 1);
  if (x.has_labels()) out.delta.labels.resize(top + 1);
  std::vector<std::map<int, int>> position(top + 1);
  for (int m = 0; m <= top; ++m) {
    for (int k : members[m]) {
      position[m].emplace(k, static_cast<int>(out.inclusion[m].size()));
      out.inclusion[m].push_back({m, k});
      if (x.has_labels()) out.delta.labels[m].push_back(x.vertex_list({m, k}).value_or(Simplex{}));
    }
    for (int k : members[m]) {
      std::vector<int> f;
      for (int i = 0; m > 0 && i <= m; ++i) f.push_back(position[m - 1].at(x.face({m, k}, i).index));
      out.delta.faces[m].push_back(std::move(f));
    }
  }
  while (out.delta.faces.size() > 1 && out.delta.faces.back().empty()) {
    out.delta.faces.pop_back();
    out.inclusion.pop_back();
    if (!out.delta.labels.empty()) out.delta.labels.pop_back();
  }
  return out;
}

DeltaComplex core(const SimplicialSet& x) { return core_with_inclusion(x).delta; }

bool is_degeneracy_free(const SimplicialSet& x) {
  const CoreComplex c = core_with_inclusion(x);
  for (int m = 0; m <= x.truncation(); ++m) {
    std::set<int> image;
    std::size_t produced = 0;
    for (int n = 0; n <= m; ++n) {
      const auto surjections = Surjection::all(m, n);
      if (n >= static_cast<int>(c.inclusion.size())) continue;
      for (CellId kappa : c.inclusion[n])
        for (const auto& s : surjections) {
          image.insert(x.apply(kappa, s.images()).index);
          ++produced;
        }
    }
    if (image.size() != produced || image.size() != x.count(m)) return false;
  }
  return true;
}

namespace {

template <class Keep>
ChainComplex<CellId> chains_of(const SimplicialSet& x, Ring ring, Keep keep) {
  auto shared = std::make_shared<const SimplicialSet>(x);
  std::vector<std::vector<CellId>> basis(x.truncation() + 1);
  for (int m = 0; m <= x.truncation(); ++m)
    for (CellId c : x.cells(m))
      if (keep(*shared, c)) basis[m].push_back(c);
  BoundaryFn<CellId> d = [shared, keep, ring](const CellId& c) {
    Chain<CellId> out(ring);
    for (int i = 0; c.dim > 0 && i <= c.dim; ++i) {
      CellId f = shared->face(c, i);
      if (keep(*shared, f)) out.add_term(f, i % 2 == 0 ? 1 : -1);
    }
    return out;
  };
  return ChainComplex<CellId>(ring, std::move(basis), std::move(d));
}

}  // namespace

ChainComplex<CellId> unnormalized_chains(const SimplicialSet& x, Ring ring) {
  return chains_of(x, ring, [](const SimplicialSet&, CellId) { return true; });
}

ChainComplex<CellId> normalized_chains(const SimplicialSet& x, Ring ring) {
  return chains_of(x, ring, [](const SimplicialSet& s, CellId c) { return !s.is_degenerate(c); });
}

ChainComplex<CellId> pointed_unnormalized_chains(const SimplicialSet& x, Ring ring) {
  return chains_of(x, ring, [](const SimplicialSet& s, CellId c) { return !s.is_basepoint_cell(c); });
}

ChainComplex<CellId> pointed_normalized_chains(const SimplicialSet& x, Ring ring) {
  return chains_of(x, ring,
                   [](const SimplicialSet& s, CellId c) { return !s.is_degenerate(c) && !s.is_basepoint_cell(c); });
}

ChainComplex<CellId> delta_chains(const DeltaComplex& y, Ring ring) {
  auto faces = std::make_shared<const std::vector<std::vector<std::vector<int>>>>(y.faces);
  // one empty degree above the top cells: the complex is finite, so that
  // degree is genuinely zero and the top homology is defined
  std::vector<std::vector<CellId>> basis(y.top_dim() + 2);
  for (int n = 0; n <= y.top_dim(); ++n)
    for (int j = 0; j < static_cast<int>(y.count(n)); ++j) basis[n].push_back({n, j});
  BoundaryFn<CellId> d = [faces, ring](const CellId& c) {
    Chain<CellId> out(ring);
    if (c.dim == 0) return out;
    const auto& f = (*faces)[c.dim][c.index];
    for (int i = 0; i <= c.dim; ++i) out.add_term({c.dim - 1, f[i]}, i % 2 == 0 ? 1 : -1);
    return out;
  };
  return ChainComplex<CellId>(ring, std::move(basis), std::move(d));
}

Chain<Simplex> simplex_boundary(const Simplex& s) {
  Chain<Simplex> out;
  for (int i = 0; s.dimension() > 0 && i <= s.dimension(); ++i) out.add_term(s.face(i), i % 2 == 0 ? 1 : -1);
  return out;
}

Chain<Simplex> normalized_simplex_boundary(const Simplex& s) {
  Chain<Simplex> out;
  for (int i = 0; s.dimension() > 0 && i <= s.dimension(); ++i) {
    Simplex f = s.face(i);
    if (!f.is_degenerate()) out.add_term(f, i % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace steenrod
