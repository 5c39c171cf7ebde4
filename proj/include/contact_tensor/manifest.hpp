#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contact_tensor/catalog.hpp"
#include "contact_tensor/contact.hpp"
#include "contact_tensor/errors.hpp"

namespace ctensor {

inline constexpr int kManifestSchemaVersion = 1;

/// Textual manifest: every expression is kept as written until build().
/// Bracket and frame indices in JSON are 1-based.
struct Manifest {
  struct SymbolDecl {
    std::string name;
    SymbolKind kind;
  };
  struct Bracket {
    std::size_t i;  ///< 0-based, i < j
    std::size_t j;
    std::vector<std::string> value;
  };

  int schema_version = kManifestSchemaVersion;
  std::string name;
  std::string description;
  std::size_t dimension = 0;
  FrameMode mode = FrameMode::abstract;
  std::vector<SymbolDecl> symbols;
  std::vector<std::vector<std::string>> frame;  ///< chart: row i = components of e_i
  std::vector<Bracket> brackets;                ///< abstract: nonzero [e_i, e_j]
  std::vector<std::vector<std::string>> metric;
  std::vector<std::vector<std::string>> phi;    ///< row i = phi(e_i)
  std::vector<std::string> xi;
};

/// Every problem found while reading a manifest, each prefixed with the JSON
/// location (and expression column where relevant).
class IngestError : public Error {
 public:
  explicit IngestError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Parses manifest JSON text. Throws IngestError.
Manifest parse_manifest(std::string_view text);
Manifest read_manifest(const std::string& path);

/// Canonical JSON text (sorted keys, two-space indent, trailing newline).
std::string dump_manifest(const Manifest& m);

/// Parses every expression and constructs the structure. Throws IngestError
/// collecting parse, symbol and shape problems; construction failures such
/// as a singular frame or metric are reported the same way.
ContactStructure build(const Manifest& m);

/// Canonical manifest describing `c`.
Manifest to_manifest(const std::string& name, const std::string& description,
                     const ContactStructure& c);
Manifest to_manifest(const CatalogEntry& entry);

}  // namespace ctensor
