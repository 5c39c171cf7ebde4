#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contact_tensor/checks.hpp"
#include "contact_tensor/classify.hpp"
#include "contact_tensor/manifest.hpp"

namespace ctensor {

inline constexpr int kReportSchemaVersion = 1;

/// Parameter values from `--set name=value`, keyed by parameter name.
using ParameterValues = std::map<std::string, Rational>;

/// Parses "name=p/q". Throws Error on malformed input.
std::pair<std::string, Rational> parse_assignment(const std::string& text);

/// Parses a rational literal such as "-3/2" or "0.25". Throws Error.
Rational parse_rational(const std::string& text);

/// Turns parameter values into a substitution. Throws Error for names that
/// are not declared parameters of `symbols`.
std::map<Var, Expr> parameter_substitution(const SymbolTable& symbols, const ParameterValues& values);

struct ValidationSummary {
  ValidationVerdict almost_contact;
  ValidationVerdict contact_metric;
  ValidationVerdict h;
  JacobiVerdict jacobi;

  bool contact_valid() const { return almost_contact.ok() && contact_metric.ok(); }
  bool ok() const { return contact_valid() && h.ok() && jacobi.ok(); }
};

ValidationSummary validate(const ContactStructure& c, const ExprMatrix& h);

/// Full pipeline result for one structure: brackets, h, connection,
/// curvature, classification and self-checks.
class Analysis {
 public:
  /// `symbolic` is echoed as the manifest; parameters in `values` are
  /// substituted before anything is computed.
  Analysis(std::string name, std::string description, const ContactStructure& symbolic,
           const ParameterValues& values = {}, ExecPolicy policy = ExecPolicy::serial);

  const Manifest& manifest() const { return manifest_; }
  const ParameterValues& values() const { return values_; }
  const ContactStructure& structure() const { return structure_; }
  const ExprMatrix& h() const { return h_; }
  const CurvatureTables& tables() const { return tables_; }
  const ValidationSummary& validation() const { return validation_; }
  const ClassificationReport& classification() const { return classification_; }
  const std::vector<Check>& self_checks() const { return self_checks_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

  bool self_checks_passed() const { return all_passed(self_checks_); }

 private:
  Manifest manifest_;
  ParameterValues values_;
  ContactStructure structure_;
  ExprMatrix h_;
  ValidationSummary validation_;
  CurvatureTables tables_;
  ClassificationReport classification_;
  std::vector<Check> self_checks_;
  std::vector<std::string> diagnostics_;
};

/// Canonical JSON report (sorted keys, two-space indent, trailing newline).
std::string report_json(const Analysis& a);

/// Aligned human-readable report; ANSI colors when `color` is set.
std::string report_text(const Analysis& a, bool color);

/// Human-readable validation listing for `--lint`.
std::string lint_text(const Analysis& a);

/// "2 e1 + (2/x) e3"; "0" for the zero vector.
std::string format_vector(const VectorField& v);

}  // namespace ctensor
