#include "contact_tensor/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "contact_tensor/parser.hpp"
#include "json_io.hpp"

namespace ctensor {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? std::string(sep) : "") + items[k];
  return out;
}

/// Reader that records problems instead of throwing, so one pass reports
/// everything wrong with a manifest.
class Reader {
 public:
  std::vector<std::string> problems;

  void fail(const std::string& where, const std::string& what) { problems.push_back(where + ": " + what); }

  const json* field(const json& obj, const std::string& key, bool required = true) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail("/" + key, "missing required field");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> expr_text(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(where, "expected an expression string");
    return std::nullopt;
  }

  std::vector<std::string> vector_of(const json& v, const std::string& where, std::size_t n) {
    std::vector<std::string> out;
    if (!v.is_array()) {
      fail(where, "expected an array of " + std::to_string(n) + " expressions");
      return out;
    }
    if (v.size() != n)
      fail(where, "expected " + std::to_string(n) + " entries, found " + std::to_string(v.size()));
    for (std::size_t k = 0; k < v.size(); ++k)
      out.push_back(expr_text(v[k], where + "/" + std::to_string(k)).value_or("0"));
    return out;
  }

  std::vector<std::vector<std::string>> matrix_of(const json& v, const std::string& where,
                                                  std::size_t n) {
    std::vector<std::vector<std::string>> out;
    if (!v.is_array()) {
      fail(where, "expected an array of " + std::to_string(n) + " rows");
      return out;
    }
    if (v.size() != n)
      fail(where, "expected " + std::to_string(n) + " rows, found " + std::to_string(v.size()));
    for (std::size_t r = 0; r < v.size(); ++r)
      out.push_back(vector_of(v[r], where + "/" + std::to_string(r), n));
    return out;
  }
};

}  // namespace

namespace {

/// Every expression of a manifest parsed against its symbol table. Shape
/// is not checked here, so this also runs on manifests that failed it.
struct ParsedManifest {
  SymbolTable symbols;
  std::vector<std::vector<Expr>> frame, metric, phi;
  std::vector<Expr> xi;
  std::vector<std::vector<Expr>> brackets;
  std::vector<std::string> problems;
};

ParsedManifest parse_expressions(const Manifest& m) {
  ParsedManifest out;
  for (std::size_t k = 0; k < m.symbols.size(); ++k) {
    try {
      out.symbols.add(m.symbols[k].name, m.symbols[k].kind);
    } catch (const Error& e) {
      out.problems.push_back("/symbols/" + std::to_string(k) + ": " + e.what());
    }
  }
  auto parse = [&](const std::string& text, const std::string& where) {
    try {
      return parse_expr(text, out.symbols);
    } catch (const Error& e) {
      out.problems.push_back(where + ": " + e.what());
    }
    return Expr();
  };
  auto parse_vector = [&](const std::vector<std::string>& items, const std::string& where) {
    std::vector<Expr> v;
    for (std::size_t c = 0; c < items.size(); ++c) v.push_back(parse(items[c], where + "/" + std::to_string(c)));
    return v;
  };
  auto parse_matrix = [&](const std::vector<std::vector<std::string>>& rows, const std::string& where) {
    std::vector<std::vector<Expr>> v;
    for (std::size_t r = 0; r < rows.size(); ++r) v.push_back(parse_vector(rows[r], where + "/" + std::to_string(r)));
    return v;
  };
  out.frame = parse_matrix(m.frame, "/frame");
  out.metric = parse_matrix(m.metric, "/metric");
  out.phi = parse_matrix(m.phi, "/phi");
  out.xi = parse_vector(m.xi, "/xi");
  for (std::size_t k = 0; k < m.brackets.size(); ++k)
    out.brackets.push_back(parse_vector(m.brackets[k].value, "/brackets/" + std::to_string(k) + "/value"));
  return out;
}

}  // namespace

IngestError::IngestError(std::vector<std::string> problems)
    : Error(problems.size() == 1 ? problems.front()
                                 : std::to_string(problems.size()) + " problems:\n  " +
                                       join(problems, "\n  ")),
      problems_(std::move(problems)) {}

Manifest parse_manifest(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("] "); p != std::string::npos) msg = msg.substr(p + 2);
    throw IngestError({msg});
  }
  Reader rd;
  Manifest m;
  if (!doc.is_object()) throw IngestError({"/: manifest must be a JSON object"});

  if (const json* v = rd.field(doc, "schema_version")) {
    if (!v->is_number_integer())
      rd.fail("/schema_version", "expected an integer");
    else if (v->get<int>() != kManifestSchemaVersion)
      rd.fail("/schema_version", "unsupported version " + std::to_string(v->get<int>()) +
                                     " (supported: " + std::to_string(kManifestSchemaVersion) + ")");
    else
      m.schema_version = v->get<int>();
  }
  if (const json* v = rd.field(doc, "name")) {
    if (v->is_string()) m.name = v->get<std::string>();
    else rd.fail("/name", "expected a string");
  }
  if (const json* v = rd.field(doc, "description", false)) {
    if (v->is_string()) m.description = v->get<std::string>();
    else rd.fail("/description", "expected a string");
  }
  if (const json* v = rd.field(doc, "dimension")) {
    if (v->is_number_integer() && v->get<long long>() > 0)
      m.dimension = v->get<std::size_t>();
    else
      rd.fail("/dimension", "expected a positive integer");
  }
  if (const json* v = rd.field(doc, "mode")) {
    if (*v == "chart") m.mode = FrameMode::chart;
    else if (*v == "abstract") m.mode = FrameMode::abstract;
    else rd.fail("/mode", "expected \"chart\" or \"abstract\"");
  }
  if (const json* v = rd.field(doc, "symbols")) {
    if (!v->is_array()) rd.fail("/symbols", "expected an array");
    else
      for (std::size_t k = 0; k < v->size(); ++k) {
        const json& s = (*v)[k];
        const std::string where = "/symbols/" + std::to_string(k);
        if (!s.is_object() || !s.contains("name") || !s["name"].is_string() || !s.contains("kind")) {
          rd.fail(where, "expected {\"name\": string, \"kind\": \"coordinate\"|\"parameter\"}");
          continue;
        }
        Manifest::SymbolDecl d{s["name"].get<std::string>(), SymbolKind::parameter};
        if (s["kind"] == "coordinate") d.kind = SymbolKind::coordinate;
        else if (s["kind"] != "parameter") rd.fail(where + "/kind", "expected \"coordinate\" or \"parameter\"");
        m.symbols.push_back(std::move(d));
      }
  }
  if (m.dimension == 0) throw IngestError(rd.problems);
  const std::size_t n = m.dimension;

  if (m.mode == FrameMode::chart) {
    if (const json* v = rd.field(doc, "frame")) m.frame = rd.matrix_of(*v, "/frame", n);
    if (doc.contains("brackets")) rd.fail("/brackets", "not allowed in chart mode");
  } else {
    if (doc.contains("frame")) rd.fail("/frame", "not allowed in abstract mode");
    if (const json* v = rd.field(doc, "brackets", false)) {
      if (!v->is_array()) rd.fail("/brackets", "expected an array");
      else
        for (std::size_t k = 0; k < v->size(); ++k) {
          const json& b = (*v)[k];
          const std::string where = "/brackets/" + std::to_string(k);
          auto index = [&](const char* key) -> std::optional<std::size_t> {
            if (!b.is_object() || !b.contains(key) || !b[key].is_number_integer()) {
              rd.fail(where + "/" + key, "expected a frame index");
              return std::nullopt;
            }
            const long long i = b[key].get<long long>();
            if (i < 1 || static_cast<std::size_t>(i) > n) {
              rd.fail(where + "/" + key, "frame index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
              return std::nullopt;
            }
            return static_cast<std::size_t>(i - 1);
          };
          auto i = index("i");
          auto j = index("j");
          if (!b.is_object() || !b.contains("value")) {
            rd.fail(where + "/value", "missing required field");
            continue;
          }
          auto value = rd.vector_of(b["value"], where + "/value", n);
          if (i && j && *i == *j) rd.fail(where, "[e_i, e_i] cannot be declared");
          else if (i && j) m.brackets.push_back({*i, *j, std::move(value)});
        }
    }
  }
  if (const json* v = rd.field(doc, "metric")) m.metric = rd.matrix_of(*v, "/metric", n);
  if (const json* v = rd.field(doc, "phi")) m.phi = rd.matrix_of(*v, "/phi", n);
  if (const json* v = rd.field(doc, "xi")) m.xi = rd.vector_of(*v, "/xi", n);

  static const std::set<std::string> known = {"schema_version", "name", "description", "dimension",
                                              "mode", "symbols", "frame", "brackets", "metric",
                                              "phi", "xi"};
  for (const auto& item : doc.items())
    if (!known.count(item.key())) rd.fail("/" + item.key(), "unknown field");

  if (!rd.problems.empty()) {
    for (auto& p : parse_expressions(m).problems) rd.problems.push_back(std::move(p));
    throw IngestError(rd.problems);
  }
  return m;
}

Manifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestError({path + ": cannot open file"});
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_manifest(buf.str());
  } catch (const IngestError& e) {
    std::vector<std::string> located;
    for (const auto& p : e.problems()) located.push_back(path + ": " + p);
    throw IngestError(located);
  }
}

json manifest_json(const Manifest& m) {
  json doc;
  doc["schema_version"] = m.schema_version;
  doc["name"] = m.name;
  if (!m.description.empty()) doc["description"] = m.description;
  doc["dimension"] = m.dimension;
  doc["mode"] = std::string(to_string(m.mode));
  json symbols = json::array();
  for (const auto& s : m.symbols) symbols.push_back({{"name", s.name}, {"kind", std::string(to_string(s.kind))}});
  doc["symbols"] = symbols;
  if (m.mode == FrameMode::chart) {
    doc["frame"] = m.frame;
  } else {
    json brackets = json::array();
    for (const auto& b : m.brackets) brackets.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"value", b.value}});
    doc["brackets"] = brackets;
  }
  doc["metric"] = m.metric;
  doc["phi"] = m.phi;
  doc["xi"] = m.xi;
  return doc;
}

std::string dump_manifest(const Manifest& m) { return manifest_json(m).dump(2) + "\n"; }

ContactStructure build(const Manifest& m) {
  ParsedManifest parsed = parse_expressions(m);
  std::vector<std::string>& problems = parsed.problems;
  const SymbolTable& symbols = parsed.symbols;
  auto& frame = parsed.frame;
  auto& metric = parsed.metric;
  auto& phi = parsed.phi;
  auto& xi = parsed.xi;
  const std::size_t n = m.dimension;
  StructureConstants sc(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < m.brackets.size(); ++k) {
    const auto& b = m.brackets[k];
    const auto key = std::minmax(b.i, b.j);
    if (!seen.insert(key).second) {
      problems.push_back("/brackets/" + std::to_string(k) + ": bracket [e" + std::to_string(key.first + 1) +
                         ", e" + std::to_string(key.second + 1) + "] declared twice");
      continue;
    }
    if (parsed.brackets[k].size() == n) sc.set_bracket(b.i, b.j, VectorField(std::move(parsed.brackets[k])));
  }
  if (!problems.empty()) throw IngestError(problems);

  try {
    FrameManifold base = m.mode == FrameMode::chart
                             ? FrameManifold::chart(symbols, ExprMatrix::from_rows(frame), ExprMatrix::from_rows(metric))
                             : FrameManifold::abstract(symbols, std::move(sc), ExprMatrix::from_rows(metric));
    std::vector<VectorField> images;
    for (auto& row : phi) images.emplace_back(std::move(row));
    return ContactStructure::from_images(std::move(base), images, VectorField(std::move(xi)));
  } catch (const Error& e) {
    throw IngestError({e.what()});
  }
}

Manifest to_manifest(const std::string& name, const std::string& description, const ContactStructure& c) {
  const FrameManifold& fm = c.base();
  const std::size_t n = fm.dim();
  Manifest m;
  m.name = name;
  m.description = description;
  m.dimension = n;
  m.mode = fm.mode();
  for (const auto& s : fm.symbols().symbols()) m.symbols.push_back({s.name(), s.kind()});
  auto text_rows = [&](auto&& at) {
    std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) rows[r][k] = at(r, k).to_string();
    return rows;
  };
  if (m.mode == FrameMode::chart) {
    m.frame = text_rows([&](std::size_t r, std::size_t k) { return fm.frame_matrix()(r, k); });
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const VectorField v = fm.structure().bracket(i, j);
        if (v.is_zero()) continue;
        Manifest::Bracket b{i, j, {}};
        for (std::size_t k = 0; k < n; ++k) b.value.push_back(v[k].to_string());
        m.brackets.push_back(std::move(b));
      }
  }
  m.metric = text_rows([&](std::size_t r, std::size_t k) { return fm.metric()(r, k); });
  m.phi = text_rows([&](std::size_t r, std::size_t k) { return c.phi()(k, r); });
  for (std::size_t k = 0; k < n; ++k) m.xi.push_back(c.xi()[k].to_string());
  return m;
}

Manifest to_manifest(const CatalogEntry& entry) {
  return to_manifest(entry.id, entry.provenance, entry.structure);
}

}  // namespace ctensor
