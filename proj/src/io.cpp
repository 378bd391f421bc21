#include "steenrod/io.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace steenrod {

using nlohmann::json;

namespace {

std::string cell_name(const std::string& doc, int n, int j) {
  return doc + ": cell " + std::to_string(j) + " of dimension " + std::to_string(n);
}

Cell parse_face(const json& entry, int n, const std::string& where) {
  if (entry.is_number_integer()) return Cell{entry.get<int>(), Surjection::identity(n - 1)};
  if (entry.is_object() && entry.contains("cell")) {
    const std::vector<int> word = entry.value("degeneracy", std::vector<int>{});
    try {
      return Cell{entry.at("cell").get<int>(), Surjection(n - 1, word)};
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": bad degeneracy word (" + e.what() + ")");
    }
  }
  throw InputError(where + ": a face must be a cell index or {\"cell\", \"degeneracy\"}");
}

json face_json(const Cell& c) {
  if (c.surj.is_identity()) return c.base;
  return json{{"cell", c.base}, {"degeneracy", c.surj.word()}};
}

void validate_references(const ComplexDocument& doc) {
  for (int n = 1; n <= doc.top_dim(); ++n)
    for (int j = 0; j < static_cast<int>(doc.faces[n].size()); ++j) {
      const auto& faces = doc.faces[n][j];
      if (static_cast<int>(faces.size()) != n + 1)
        throw InputError(cell_name(doc.name, n, j) + ": expected " + std::to_string(n + 1) + " faces, found " +
                         std::to_string(faces.size()));
      for (int i = 0; i <= n; ++i) {
        const Cell& f = faces[i];
        const int base_dim = f.base_dim();
        if (doc.kind == ComplexDocument::Kind::Delta && !f.surj.is_identity())
          throw InputError(cell_name(doc.name, n, j) + ": face " + std::to_string(i) +
                           " is degenerate in a delta complex");
        if (base_dim < 0 || f.base < 0 || f.base >= static_cast<int>(doc.faces[base_dim].size()))
          throw InputError(cell_name(doc.name, n, j) + ": face " + std::to_string(i) + " refers to missing " +
                           std::to_string(base_dim) + "-cell " + std::to_string(f.base));
      }
    }
  for (std::size_t n = 0; n < doc.labels.size(); ++n) {
    if (n >= doc.faces.size() || doc.labels[n].size() != doc.faces[n].size())
      throw InputError(doc.name + ": labels of dimension " + std::to_string(n) + " do not match the cells");
    for (std::size_t j = 0; j < doc.labels[n].size(); ++j)
      if (doc.labels[n][j].dimension() != static_cast<int>(n))
        throw InputError(cell_name(doc.name, static_cast<int>(n), static_cast<int>(j)) + ": label has the wrong length");
  }
  if (doc.basepoint && (*doc.basepoint < 0 || doc.faces.empty() || *doc.basepoint >= static_cast<int>(doc.faces[0].size())))
    throw InputError(doc.name + ": basepoint is not a vertex");
}

}  // namespace

ComplexDocument parse_document(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
  ComplexDocument doc;
  try {
    doc.name = j.value("name", source);
    const std::string kind = j.value("kind", "delta");
    if (kind == "delta")
      doc.kind = ComplexDocument::Kind::Delta;
    else if (kind == "simplicial")
      doc.kind = ComplexDocument::Kind::Simplicial;
    else
      throw InputError(doc.name + ": unknown kind \"" + kind + "\"");
    const json& cells = j.at("cells");
    if (!cells.is_array() || cells.empty()) throw InputError(doc.name + ": \"cells\" must be a non-empty array");
    for (std::size_t n = 0; n < cells.size(); ++n) {
      doc.faces.emplace_back();
      for (std::size_t c = 0; c < cells[n].size(); ++c) {
        std::vector<Cell> faces;
        const std::string where = cell_name(doc.name, static_cast<int>(n), static_cast<int>(c));
        if (!cells[n][c].is_array()) throw InputError(where + ": faces must be an array");
        for (const json& entry : cells[n][c]) faces.push_back(parse_face(entry, static_cast<int>(n), where));
        doc.faces.back().push_back(std::move(faces));
      }
    }
    doc.truncation = j.value("truncation", doc.top_dim() + 1);
    if (doc.truncation < 0) throw InputError(doc.name + ": negative truncation");
    if (j.contains("basepoint") && !j["basepoint"].is_null()) doc.basepoint = j["basepoint"].get<int>();
    if (j.contains("labels"))
      for (const json& level : j["labels"]) {
        doc.labels.emplace_back();
        for (const json& v : level) doc.labels.back().emplace_back(v.get<std::vector<int>>());
      }
  } catch (const json::exception& e) {
    throw InputError((doc.name.empty() ? source : doc.name) + ": " + e.what());
  }
  validate_references(doc);
  if (doc.kind == ComplexDocument::Kind::Delta) {
    const auto bad = to_delta_complex(doc).face_identity_violations();
    if (!bad.empty())
      throw InputError(cell_name(doc.name, bad.front().dim, bad.front().index) + ": face identities fail");
  } else {
    to_simplicial_set(doc);
  }
  return doc;
}

ComplexDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot read file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_document(text.str(), path.string());
}

std::string serialize_document(const ComplexDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"name\": " << json(doc.name).dump() << ",\n";
  out << "  \"kind\": \"" << (doc.kind == ComplexDocument::Kind::Delta ? "delta" : "simplicial") << "\",\n";
  out << "  \"truncation\": " << doc.truncation << ",\n";
  if (doc.basepoint) out << "  \"basepoint\": " << *doc.basepoint << ",\n";
  out << "  \"cells\": [\n";
  for (int n = 0; n <= doc.top_dim(); ++n) {
    json level = json::array();
    for (const auto& faces : doc.faces[n]) {
      json f = json::array();
      for (const Cell& c : faces) f.push_back(face_json(c));
      level.push_back(f);
    }
    out << "    " << level.dump() << (n < doc.top_dim() ? ",\n" : "\n");
  }
  out << "  ]";
  if (!doc.labels.empty()) {
    out << ",\n  \"labels\": [\n";
    for (std::size_t n = 0; n < doc.labels.size(); ++n) {
      json level = json::array();
      for (const auto& s : doc.labels[n]) level.push_back(s.vertices);
      out << "    " << level.dump() << (n + 1 < doc.labels.size() ? ",\n" : "\n");
    }
    out << "  ]";
  }
  out << "\n}\n";
  return out.str();
}

DeltaComplex to_delta_complex(const ComplexDocument& doc) {
  if (doc.kind != ComplexDocument::Kind::Delta) throw InputError(doc.name + ": not a delta complex");
  DeltaComplex y;
  y.name = doc.name;
  for (const auto& level : doc.faces) {
    y.faces.emplace_back();
    for (const auto& faces : level) {
      std::vector<int> ids;
      for (const Cell& c : faces) ids.push_back(c.base);
      y.faces.back().push_back(std::move(ids));
    }
  }
  y.labels = doc.labels;
  return y;
}

SimplicialSet to_simplicial_set(const ComplexDocument& doc, std::optional<int> truncation) {
  const int trunc = truncation.value_or(doc.truncation);
  if (trunc < 0) throw InputError(doc.name + ": negative truncation");
  if (doc.kind == ComplexDocument::Kind::Delta) {
    DeltaComplex y = to_delta_complex(doc);
    const std::size_t keep = std::min<std::size_t>(y.faces.size(), trunc + 1);
    y.faces.resize(keep);
    if (y.labels.size() > keep) y.labels.resize(keep);
    return freely_add_degeneracies(y, trunc, doc.basepoint);
  }
  auto faces = doc.faces;
  auto labels = doc.labels;
  const std::size_t keep = std::min<std::size_t>(faces.size(), trunc + 1);
  faces.resize(keep);
  if (labels.size() > keep) labels.resize(keep);
  try {
    return SimplicialSet(doc.name, std::move(faces), trunc, doc.basepoint, std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw InputError(doc.name + ": " + e.what());
  }
}

std::string serialize_table(const DiagonalTable& table) {
  auto entries = table.entries();
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
  json list = json::array();
  for (const auto& [n, k, chain] : entries) {
    json terms = json::array();
    for (const auto& [t, coef] : *chain) {
      std::ostringstream c;
      c << coef;
      terms.push_back(json::array({c.str(), t.factors[0].vertices, t.factors[1].vertices}));
    }
    list.push_back(json{{"level", n}, {"k", k}, {"terms", terms}});
  }
  return json{{"schema", cache_schema_version}, {"entries", list}}.dump() + "\n";
}

bool deserialize_table(const std::string& text, DiagonalTable& table) {
  std::vector<std::tuple<int, int, DiagonalChain>> parsed;
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<int>() != cache_schema_version) return false;
    for (const json& e : j.at("entries")) {
      DiagonalChain c;
      for (const json& term : e.at("terms")) {
        const Rational coef(term.at(0).get<std::string>());
        c.add_term(make_tensor(Simplex(term.at(1).get<std::vector<int>>()), Simplex(term.at(2).get<std::vector<int>>())),
                   coef);
      }
      parsed.emplace_back(e.at("level").get<int>(), e.at("k").get<int>(), std::move(c));
    }
  } catch (const std::exception& e) {
    throw InputError(std::string("diagonal cache: ") + e.what());
  }
  for (auto& [n, k, c] : parsed)
    if (!table.find(n, k)) table.insert(n, k, std::move(c));
  return true;
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& requested) {
  if (const char* env = std::getenv("STEENROD_CACHE"); env && *env) return env;
  if (requested) return *requested;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "steenrod-kit";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "steenrod-kit";
  return ".steenrod-cache";
}

std::filesystem::path cache_file(const std::filesystem::path& dir) { return dir / "xi_table.json"; }

bool load_cache(const std::filesystem::path& dir, DiagonalTable& table) {
  std::ifstream in(cache_file(dir));
  if (!in) return false;
  std::ostringstream text;
  text << in.rdbuf();
  return deserialize_table(text.str(), table);
}

void save_cache(const std::filesystem::path& dir, const DiagonalTable& table) {
  std::filesystem::create_directories(dir);
  const auto target = cache_file(dir);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(dir.string() + ": cannot write the diagonal cache");
    out << serialize_table(table);
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace steenrod
