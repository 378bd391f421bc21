#pragma once

#include "steenrod/simplicial.hpp"
#include "steenrod/steenrod.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace steenrod {

/// Malformed or inconsistent user input (maps to exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A complex as stored on disk. For the delta kind every face is a
/// nondegenerate cell one dimension down; the simplicial kind also allows
/// degenerate faces in normal form.
struct ComplexDocument {
  enum class Kind { Delta, Simplicial };

  std::string name;
  Kind kind = Kind::Delta;
  int truncation = 0;
  std::optional<int> basepoint;
  /// faces[n][j][i] is the i-th face of nondegenerate n-cell j.
  std::vector<std::vector<std::vector<Cell>>> faces;
  /// Optional vertex lists, same shape as faces.
  std::vector<std::vector<Simplex>> labels;

  int top_dim() const { return static_cast<int>(faces.size()) - 1; }
};

/// Parses and validates: references resolve, each n-cell has n+1 faces and
/// the face identities hold. Errors name the offending cell.
ComplexDocument parse_document(const std::string& text, const std::string& source = "<input>");
ComplexDocument load_document(const std::filesystem::path& path);
/// One line per dimension, matching the shipped corpus files.
std::string serialize_document(const ComplexDocument& doc);

/// Only for the delta kind.
DeltaComplex to_delta_complex(const ComplexDocument& doc);
/// 𝔡(Y) for the delta kind, the presented simplicial set otherwise, at the
/// document's truncation unless one is given.
SimplicialSet to_simplicial_set(const ComplexDocument& doc, std::optional<int> truncation = std::nullopt);

inline constexpr int cache_schema_version = 1;

/// {"schema":1,"entries":[{"level":n,"k":k,"terms":[[coef,left,right],…]}]},
/// entries sorted by (level, k) and terms in canonical order.
std::string serialize_table(const DiagonalTable& table);
/// Adds the entries to `table`. Returns false (adding nothing) when the
/// schema version differs; throws InputError on malformed text.
bool deserialize_table(const std::string& text, DiagonalTable& table);

/// Cache directory: $STEENROD_CACHE, else the requested one, else
/// $XDG_CACHE_HOME/steenrod-kit or ~/.cache/steenrod-kit.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& requested);
std::filesystem::path cache_file(const std::filesystem::path& dir);
/// False when there is no usable cache file.
bool load_cache(const std::filesystem::path& dir, DiagonalTable& table);
/// Writes through a temporary file and a rename.
void save_cache(const std::filesystem::path& dir, const DiagonalTable& table);

}  // namespace steenrod
