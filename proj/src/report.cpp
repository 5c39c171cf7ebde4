#include "contact_tensor/report.hpp"

#include <algorithm>
#include <sstream>

#include "json_io.hpp"

namespace ctensor {

using nlohmann::json;

namespace {

std::string e(std::size_t i) { return "e" + std::to_string(i + 1); }

std::string rational_text(const Rational& q) { return Expr(q).to_string(); }

/// Name of xi when it is a frame vector, else "xi".
std::string xi_label(const ContactStructure& c) {
  std::optional<std::size_t> hit;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    if (c.xi()[k].is_zero()) continue;
    if (hit || !(c.xi()[k] == Expr(1))) return "xi";
    hit = k;
  }
  return hit ? e(*hit) : "xi";
}

std::string bracket_label(std::size_t i, std::size_t j) { return "[" + e(i) + "," + e(j) + "]"; }
std::string nabla_label(std::size_t i, std::size_t j) { return "nabla_" + e(i) + " " + e(j); }
std::string riemann_label(std::size_t i, std::size_t j, std::size_t k) {
  return "R(" + e(i) + "," + e(j) + ")" + e(k);
}
std::string nabla_r_label(std::size_t w, std::size_t i, std::size_t j, std::size_t k) {
  return "(nabla_" + e(w) + " R)(" + e(i) + "," + e(j) + ")" + e(k);
}

json vector_json(const VectorField& v) {
  json out = json::object();
  for (std::size_t l = 0; l < v.size(); ++l)
    if (!v[l].is_zero()) out[e(l)] = v[l].to_string();
  return out;
}

json one_based(const std::vector<std::size_t>& index) {
  json out = json::array();
  for (auto i : index) out.push_back(i + 1);
  return out;
}

std::string sasakian_component(const ContactStructure& c, const ComponentWitness& w) {
  return "R(" + e(w.index[0]) + "," + e(w.index[1]) + ")" + xi_label(c);
}

std::string symmetry_component(const ComponentWitness& w, bool phi_squared) {
  const std::string base = nabla_r_label(w.index[0], w.index[1], w.index[2], w.index[3]);
  return phi_squared ? "phi^2(" + base + ")" : base;
}

json witness_json(const ComponentWitness& w, const std::string& component) {
  return {{"index", one_based(w.index)},
          {"component", component},
          {"direction", e(w.index.back())},
          {"lhs", w.lhs.to_string()},
          {"rhs", w.rhs.to_string()}};
}

json symmetry_json(const SymmetryVerdict& v, bool phi_squared) {
  json out{{"value", v.holds}};
  out["witness"] = v.witness ? witness_json(*v.witness, symmetry_component(*v.witness, phi_squared)) : json();
  return out;
}

json recurrence_json(const RecurrenceVerdict& v) {
  json out{{"status", std::string(to_string(v.status))},
           {"scope", std::string(to_string(v.scope))},
           {"only_zero", v.only_zero},
           {"a_parameter_only", v.a_parameter_only}};
  if (v.a) {
    json a = json::object();
    for (std::size_t w = 0; w < v.a->size(); ++w) a[e(w)] = (*v.a)[w].to_string();
    out["A"] = a;
  } else {
    out["A"] = json();
  }
  out["obstruction"] = v.obstruction ? witness_json(*v.obstruction, symmetry_component(*v.obstruction, true)) : json();
  return out;
}

json violations_json(const ValidationVerdict& v) {
  json out = json::array();
  for (const auto& x : v.violations) out.push_back(x.to_string());
  return out;
}

Check from_verdict(std::string name, const ValidationVerdict& v) {
  Check c{std::move(name), v.ok(), ""};
  if (!v.ok()) c.detail = v.violations.front().to_string();
  return c;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string coefficient_text(const Expr& c) {
  const std::string s = c.to_string();
  const bool compound = s.find_first_of("+-/*", 1) != std::string::npos;
  return compound ? "(" + s + ")" : s;
}

}  // namespace

std::string format_vector(const VectorField& v) {
  std::string out;
  for (std::size_t l = 0; l < v.size(); ++l) {
    if (v[l].is_zero()) continue;
    std::string term;
    if (v[l] == Expr(1)) term = e(l);
    else if (v[l] == Expr(-1)) term = "-" + e(l);
    else term = coefficient_text(v[l]) + " " + e(l);
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

Rational parse_rational(const std::string& text) {
  const std::string t = [&] {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    return s;
  }();
  auto bad = [&] { return Error("malformed rational '" + text + "'"); };
  if (t.empty()) throw bad();
  if (auto dot = t.find('.'); dot != std::string::npos) {
    const std::string whole = t.substr(0, dot), frac = t.substr(dot + 1);
    const bool neg = !whole.empty() && whole[0] == '-';
    const std::string digits = (neg || (!whole.empty() && whole[0] == '+') ? whole.substr(1) : whole) + frac;
    if (digits.empty() || frac.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) throw bad();
    Rational q(mpz_class(digits, 10), mpz_class("1" + std::string(frac.size(), '0'), 10));
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  const auto slash = t.find('/');
  auto is_int = [](const std::string& s) {
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(), ::isdigit);
  };
  const std::string num = t.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  const mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
  if (d == 0) throw Error("zero denominator in '" + text + "'");
  Rational q(mpz_class(num[0] == '+' ? num.substr(1) : num, 10), d);
  q.canonicalize();
  return q;
}

std::pair<std::string, Rational> parse_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw Error("expected name=value, got '" + text + "'");
  return {text.substr(0, eq), parse_rational(text.substr(eq + 1))};
}

std::map<Var, Expr> parameter_substitution(const SymbolTable& symbols, const ParameterValues& values) {
  std::map<Var, Expr> out;
  for (const auto& [name, value] : values) {
    const Symbol* s = symbols.find(name);
    if (!s) throw Error("--set " + name + ": no such symbol");
    if (s->is_coordinate()) throw Error("--set " + name + ": coordinates cannot be bound");
    out.emplace(s->var(), Expr(value));
  }
  return out;
}

ValidationSummary validate(const ContactStructure& c, const ExprMatrix& h) {
  return {validate_almost_contact(c), check_contact_metric(c), check_h(c, h), check_jacobi(c.base())};
}

Analysis::Analysis(std::string name, std::string description, const ContactStructure& symbolic,
                   const ParameterValues& values, ExecPolicy policy)
    : manifest_(to_manifest(name, description, symbolic)),
      values_(values),
      structure_(substitute(symbolic, parameter_substitution(symbolic.base().symbols(), values))),
      h_(lie_h(structure_)),
      validation_(validate(structure_, h_)),
      tables_(structure_.base(), policy),
      classification_(classify(tables_, structure_, h_, validation_.contact_valid(), policy)) {
  const FrameManifold& m = structure_.base();
  const std::size_t n = m.dim();
  diagnostics_ = classification_.diagnostics;

  for (const Check& c : check_connection(m, tables_.connection())) self_checks_.push_back(c);
  if (validation_.jacobi.ok()) {
    for (const Check& c : check_curvature_symmetries(tables_)) self_checks_.push_back(c);
  } else {
    diagnostics_.emplace_back("Jacobi identity fails; curvature symmetry checks skipped");
  }
  if (n == 3 && validation_.jacobi.ok())
    self_checks_.push_back({"3-D curvature decomposition", check_3d_decomposition(m, tables_.riemann(), tables_.ricci()), ""});

  if (validation_.contact_valid()) {
    self_checks_.push_back(from_verdict("h invariants", validation_.h));
    for (const Check& c : check_structure_identities(tables_, structure_, h_)) self_checks_.push_back(c);
    for (const Check& c : check_optional_contact_identities(tables_, structure_, h_)) self_checks_.push_back(c);

    const KappaMuVerdict& km = classification_.kappa_mu;
    if (km.status != KappaMuStatus::inconsistent) {
      const Expr& kappa = *km.kappa;
      Check h2{"h^2 = (kappa - 1) phi^2", true, ""};
      const ExprMatrix diff = h_ * h_ - (kappa - Expr(1)) * (structure_.phi() * structure_.phi());
      for (std::size_t i = 0; i < n && h2.passed; ++i)
        for (std::size_t k = 0; k < n; ++k)
          if (!diff(k, i).is_zero()) {
            h2.passed = false;
            h2.detail = "difference on " + e(i) + " has " + e(k) + "-component " + diff(k, i).to_string();
            break;
          }
      self_checks_.push_back(h2);

      Check ric{"S(X, xi) = 2n kappa eta(X)", true, ""};
      const Expr two_n_kappa = Expr(static_cast<long>(n - 1)) * kappa;
      for (std::size_t i = 0; i < n; ++i) {
        Expr s;
        for (std::size_t k = 0; k < n; ++k) s += tables_.ricci().ricci(i, k) * structure_.xi()[k];
        const Expr d = s - two_n_kappa * structure_.eta()[i];
        if (!d.is_zero()) {
          ric.passed = false;
          ric.detail = "difference at X = " + e(i) + " is " + d.to_string();
          break;
        }
      }
      self_checks_.push_back(ric);
      self_checks_.push_back(check_nabla_phi_kmu(tables_, structure_, h_));
    }
  }
  self_checks_.push_back({"implication chain flat => locally symmetric => phi-symmetric => locally phi-symmetric",
                          classification_.implication_chain_holds(), ""});
}

std::string report_json(const Analysis& a) {
  const ContactStructure& c = a.structure();
  const FrameManifold& m = c.base();
  const CurvatureTables& t = a.tables();
  const std::size_t n = m.dim();
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["manifest"] = manifest_json(a.manifest());
  json values = json::object();
  for (const auto& [k, v] : a.values()) values[k] = rational_text(v);
  doc["parameters"] = values;

  json brackets = json::object();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const VectorField v = m.structure().bracket(i, j);
      if (!v.is_zero()) brackets[bracket_label(i, j)] = vector_json(v);
    }
  doc["brackets"] = brackets;

  json h = json::object();
  for (std::size_t i = 0; i < n; ++i) {
    const VectorField v(a.h().column(i));
    if (!v.is_zero()) h["h " + e(i)] = vector_json(v);
  }
  doc["h"] = h;

  json conn = json::object();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const VectorField v = t.connection().nabla(i, j);
      if (!v.is_zero()) conn[nabla_label(i, j)] = vector_json(v);
    }
  doc["connection"] = conn;

  json riemann = json::object();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t.riemann()(i, j, k).is_zero()) riemann[riemann_label(i, j, k)] = vector_json(t.riemann()(i, j, k));
  json ricci = json::object();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!t.ricci().ricci(i, j).is_zero())
        ricci["S(" + e(i) + "," + e(j) + ")"] = t.ricci().ricci(i, j).to_string();
  json q = json::object();
  for (std::size_t i = 0; i < n; ++i) {
    const VectorField v(t.ricci().operator_.column(i));
    if (!v.is_zero()) q["Q " + e(i)] = vector_json(v);
  }
  json nabla_r = json::object();
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const VectorField v = t.nabla_R(w, i, j, k);
          if (!v.is_zero()) nabla_r[nabla_r_label(w, i, j, k)] = vector_json(v);
        }
  doc["curvature"] = {{"riemann", riemann},
                      {"ricci", ricci},
                      {"ricci_operator", q},
                      {"scalar", t.ricci().scalar.to_string()},
                      {"nabla_R", nabla_r}};

  const ClassificationReport& cl = a.classification();
  json cls;
  cls["contact_valid"] = cl.contact_valid;
  cls["sasakian"] = {{"value", cl.sasakian.sasakian},
                     {"witness", cl.sasakian.witness
                                     ? witness_json(*cl.sasakian.witness, sasakian_component(c, *cl.sasakian.witness))
                                     : json()}};
  const KappaMuVerdict& km = cl.kappa_mu;
  cls["kappa_mu"] = {{"status", std::string(to_string(km.status))},
                     {"kappa", km.kappa ? json(km.kappa->to_string()) : json()},
                     {"mu", km.mu ? json(km.mu->to_string()) : json()},
                     {"constant", km.constant},
                     {"kappa_at_most_one", km.kappa_at_most_one ? json(*km.kappa_at_most_one) : json()},
                     {"witness", km.witness ? witness_json(*km.witness, sasakian_component(c, *km.witness)) : json()}};
  cls["flat"] = cl.flat;
  cls["constant_curvature"] = cl.constant_curvature ? json(cl.constant_curvature->to_string()) : json();
  cls["locally_symmetric"] = symmetry_json(cl.locally_symmetric, false);
  cls["phi_symmetric"] = symmetry_json(cl.phi_symmetric, true);
  cls["locally_phi_symmetric"] = symmetry_json(cl.locally_phi_symmetric, true);
  cls["phi_recurrent"] = recurrence_json(cl.phi_recurrent);
  cls["locally_phi_recurrent"] = recurrence_json(cl.locally_phi_recurrent);
  cls["implication_chain"] = cl.implication_chain_holds();
  doc["classification"] = cls;

  const ValidationSummary& val = a.validation();
  json jac = json::array();
  if (!val.jacobi.ok()) {
    const auto& tr = *val.jacobi.violation;
    jac.push_back("Jacobi identity at (" + e(tr[0]) + "," + e(tr[1]) + "," + e(tr[2]) +
                  "): cyclic sum " + format_vector(val.jacobi.residual));
  }
  doc["validation"] = {{"almost_contact", violations_json(val.almost_contact)},
                       {"contact_metric", violations_json(val.contact_metric)},
                       {"h", violations_json(val.h)},
                       {"jacobi", jac}};

  json checks = json::array();
  for (const Check& ch : a.self_checks()) {
    json item{{"name", ch.name}, {"passed", ch.passed}};
    if (!ch.detail.empty()) item["detail"] = ch.detail;
    checks.push_back(item);
  }
  doc["self_checks"] = checks;
  doc["diagnostics"] = a.diagnostics();
  return doc.dump(2) + "\n";
}

namespace {

class TextWriter {
 public:
  explicit TextWriter(bool color) : color_(color) {}

  void heading(const std::string& title) {
    flush();
    out_ << "\n" << paint(title, "1") << "\n";
  }
  void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  std::string good(const std::string& s) const { return paint(s, "32"); }
  std::string bad(const std::string& s) const { return paint(s, "31"); }
  std::string verdict(bool ok, const std::string& yes = "yes", const std::string& no = "no") const {
    return ok ? good(yes) : bad(no);
  }
  void line(const std::string& s) {
    flush();
    out_ << s << "\n";
  }
  std::string str() {
    flush();
    return out_.str();
  }

 private:
  std::string paint(const std::string& s, const char* code) const {
    return color_ ? "\033[" + std::string(code) + "m" + s + "\033[0m" : s;
  }
  void flush() {
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r.first.size());
    for (const auto& r : rows_) out_ << "  " << pad(r.first, width) << "  " << r.second << "\n";
    rows_.clear();
  }
  bool color_;
  std::ostringstream out_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string witness_text(const ComponentWitness& w, const std::string& component, const char* rhs_name) {
  return component + " " + e(w.index.back()) + "-component " + w.lhs.to_string() + ", " + rhs_name +
         " " + w.rhs.to_string();
}

void validation_rows(TextWriter& tw, const ValidationSummary& val) {
  auto list = [&](const std::string& name, const ValidationVerdict& v) {
    if (v.ok()) {
      tw.row(name, tw.good("ok"));
      return;
    }
    for (std::size_t k = 0; k < v.violations.size(); ++k)
      tw.row(k == 0 ? name : "", tw.bad(v.violations[k].to_string()));
  };
  list("almost contact", val.almost_contact);
  list("contact metric", val.contact_metric);
  list("h invariants", val.h);
  if (val.jacobi.ok()) {
    tw.row("Jacobi identity", tw.good("ok"));
  } else {
    const auto& tr = *val.jacobi.violation;
    tw.row("Jacobi identity", tw.bad("fails at (" + e(tr[0]) + "," + e(tr[1]) + "," + e(tr[2]) +
                                     "): cyclic sum " + format_vector(val.jacobi.residual)));
  }
}

}  // namespace

std::string lint_text(const Analysis& a) {
  TextWriter tw(false);
  tw.line("lint: " + a.manifest().name);
  validation_rows(tw, a.validation());
  return tw.str();
}

std::string report_text(const Analysis& a, bool color) {
  const ContactStructure& c = a.structure();
  const FrameManifold& m = c.base();
  const CurvatureTables& t = a.tables();
  const std::size_t n = m.dim();
  TextWriter tw(color);
  tw.line(a.manifest().name + " (" + std::string(to_string(m.mode())) + ", dimension " + std::to_string(n) + ")");
  if (!a.values().empty()) {
    std::string s;
    for (const auto& [k, v] : a.values()) s += (s.empty() ? "" : ", ") + k + " = " + rational_text(v);
    tw.line("parameters: " + s);
  }

  tw.heading("validation");
  validation_rows(tw, a.validation());

  tw.heading("brackets");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const VectorField v = m.structure().bracket(i, j);
      if (!v.is_zero()) tw.row(bracket_label(i, j), format_vector(v));
    }

  tw.heading("operator h");
  for (std::size_t i = 0; i < n; ++i) tw.row("h " + e(i), format_vector(VectorField(a.h().column(i))));

  tw.heading("connection");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const VectorField v = t.connection().nabla(i, j);
      if (!v.is_zero()) tw.row(nabla_label(i, j), format_vector(v));
    }

  tw.heading("curvature");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t.riemann()(i, j, k).is_zero()) tw.row(riemann_label(i, j, k), format_vector(t.riemann()(i, j, k)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!t.ricci().ricci(i, j).is_zero())
        tw.row("S(" + e(i) + "," + e(j) + ")", t.ricci().ricci(i, j).to_string());
  tw.row("r", t.ricci().scalar.to_string());

  const ClassificationReport& cl = a.classification();
  tw.heading("classification");
  tw.row("contact metric", tw.verdict(cl.contact_valid));
  tw.row("sasakian", cl.sasakian.sasakian ? tw.good("yes")
                                          : tw.bad("no") + "  " +
                                                witness_text(*cl.sasakian.witness,
                                                             sasakian_component(c, *cl.sasakian.witness), "required"));
  const KappaMuVerdict& km = cl.kappa_mu;
  std::string kmu = std::string(to_string(km.status));
  if (km.status == KappaMuStatus::inconsistent)
    kmu = tw.bad(kmu) + "  " + witness_text(*km.witness, sasakian_component(c, *km.witness), "required");
  else
    kmu += "  kappa = " + km.kappa->to_string() + ", mu = " + km.mu->to_string() +
           (km.constant ? "" : "  (non-constant)");
  tw.row("(kappa,mu)-nullity", kmu);
  tw.row("flat", tw.verdict(cl.flat));
  tw.row("constant curvature", cl.constant_curvature ? cl.constant_curvature->to_string() : "none");
  auto sym = [&](const std::string& name, const SymmetryVerdict& v, bool phi2) {
    tw.row(name, v.holds ? tw.good("yes")
                         : tw.bad("no") + "  " + witness_text(*v.witness, symmetry_component(*v.witness, phi2), "expected"));
  };
  sym("locally symmetric", cl.locally_symmetric, false);
  sym("phi-symmetric", cl.phi_symmetric, true);
  sym("locally phi-symmetric", cl.locally_phi_symmetric, true);
  auto rec = [&](const std::string& name, const RecurrenceVerdict& v) {
    std::string s = std::string(to_string(v.status));
    if (v.status == RecurrenceStatus::not_recurrent) {
      s = tw.bad(s) + "  ";
      s += v.only_zero ? "only A = 0 solves"
                       : witness_text(*v.obstruction, symmetry_component(*v.obstruction, true), "recurrence requires");
    } else {
      s = tw.good(s) + "  A = ";
      std::string form;
      for (std::size_t w = 0; w < v.a->size(); ++w)
        if (!(*v.a)[w].is_zero())
          form += (form.empty() ? "" : " + ") + coefficient_text((*v.a)[w]) + " " + e(w) + "^*";
      s += form.empty() ? "0" : form;
    }
    tw.row(name, s);
  };
  rec("phi-recurrent", cl.phi_recurrent);
  rec("locally phi-recurrent", cl.locally_phi_recurrent);

  tw.heading("self-checks");
  for (const Check& ch : a.self_checks())
    tw.row(ch.passed ? tw.good("pass") : tw.bad("FAIL"), ch.detail.empty() ? ch.name : ch.name + ": " + ch.detail);

  if (!a.diagnostics().empty()) {
    tw.heading("diagnostics");
    for (const auto& d : a.diagnostics()) tw.line("  " + d);
  }
  return tw.str();
}

}  // namespace ctensor
