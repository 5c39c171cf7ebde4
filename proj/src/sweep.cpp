#include "contact_tensor/sweep.hpp"

#include "contact_tensor/report.hpp"
#include "json_io.hpp"

namespace ctensor {

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

std::string text(const Rational& r) { return Expr(r).to_string(); }

SweepRow evaluate(const ContactStructure& templ, const Rational& lambda, const Rational& mu) {
  SweepRow row;
  row.lambda = lambda;
  row.mu = mu;
  if (lambda == 0) {
    row.skipped = true;
    row.reason = "lambda = 0 is the Sasakian boundary";
    return row;
  }
  const ParameterValues values{{"lambda", lambda}, {"mu", mu}};
  const ContactStructure c = substitute(templ, parameter_substitution(templ.base().symbols(), values));
  const ExprMatrix h = lie_h(c);
  const bool valid = validate_almost_contact(c).ok() && check_contact_metric(c).ok();
  const CurvatureTables t(c.base());
  const ClassificationReport r = classify(t, c, h, valid);
  row.kappa = r.kappa_mu.kappa ? r.kappa_mu.kappa->to_string() : "";
  row.flat = r.flat;
  row.sasakian = r.sasakian.sasakian;
  row.locally_symmetric = r.locally_symmetric.holds;
  row.phi_symmetric = r.phi_symmetric.holds;
  row.locally_phi_symmetric = r.locally_phi_symmetric.holds;
  row.phi_recurrent = r.phi_recurrent.status;
  row.locally_phi_recurrent = r.locally_phi_recurrent.status;
  row.chain = r.implication_chain_holds();
  return row;
}

}  // namespace

std::vector<Rational> default_sweep_lambdas() { return {q(1, 4), q(1, 2), q(1), q(3, 2)}; }
std::vector<Rational> default_sweep_mus() { return {q(-1), q(0), q(1), q(2)}; }

std::vector<SweepRow> run_sweep(const ContactStructure& templ, const std::vector<Rational>& lambdas,
                                const std::vector<Rational>& mus, ExecPolicy policy) {
  for (const char* name : {"lambda", "mu"}) {
    const Symbol* s = templ.base().symbols().find(name);
    if (!s || s->is_coordinate()) throw Error(std::string("sweep template must declare parameter '") + name + "'");
  }
  std::vector<SweepRow> rows(lambdas.size() * mus.size());
  for_each_index(policy, rows.size(), [&](std::size_t k) {
    rows[k] = evaluate(templ, lambdas[k / mus.size()], mus[k % mus.size()]);
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "lambda,mu,skipped,kappa,flat,sasakian,locally_symmetric,phi_symmetric,locally_phi_symmetric,"
      "phi_recurrent,locally_phi_recurrent,implication_chain\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const SweepRow& r : rows) {
    out += text(r.lambda) + "," + text(r.mu) + "," + b(r.skipped);
    if (r.skipped) {
      out += ",,,,,,,,,\n";
      continue;
    }
    out += "," + r.kappa + "," + b(r.flat) + "," + b(r.sasakian) + "," + b(r.locally_symmetric) + "," +
           b(r.phi_symmetric) + "," + b(r.locally_phi_symmetric) + "," +
           b(SweepRow::recurrent(r.phi_recurrent)) + "," + b(SweepRow::recurrent(r.locally_phi_recurrent)) +
           "," + b(r.chain) + "\n";
  }
  return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    nlohmann::json row{{"lambda", text(r.lambda)}, {"mu", text(r.mu)}, {"skipped", r.skipped}};
    if (r.skipped) {
      row["reason"] = r.reason;
    } else {
      row["kappa"] = r.kappa;
      row["flat"] = r.flat;
      row["sasakian"] = r.sasakian;
      row["locally_symmetric"] = r.locally_symmetric;
      row["phi_symmetric"] = r.phi_symmetric;
      row["locally_phi_symmetric"] = r.locally_phi_symmetric;
      row["phi_recurrent"] = std::string(to_string(r.phi_recurrent));
      row["locally_phi_recurrent"] = std::string(to_string(r.locally_phi_recurrent));
      row["implication_chain"] = r.chain;
    }
    out.push_back(row);
  }
  return out.dump(2) + "\n";
}

}  // namespace ctensor
