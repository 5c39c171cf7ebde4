#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contact_tensor/classify.hpp"
#include "contact_tensor/contact.hpp"

namespace ctensor {

/// One grid point of a (lambda, mu) sweep over a template structure that
/// declares parameters named "lambda" and "mu".
struct SweepRow {
  Rational lambda;
  Rational mu;
  bool skipped = false;
  std::string reason;

  std::string kappa;
  bool flat = false;
  bool sasakian = false;
  bool locally_symmetric = false;
  bool phi_symmetric = false;
  bool locally_phi_symmetric = false;
  RecurrenceStatus phi_recurrent = RecurrenceStatus::not_recurrent;
  RecurrenceStatus locally_phi_recurrent = RecurrenceStatus::not_recurrent;
  bool chain = true;

  static bool recurrent(RecurrenceStatus s) { return s != RecurrenceStatus::not_recurrent; }
};

std::vector<Rational> default_sweep_lambdas();
std::vector<Rational> default_sweep_mus();

/// Rows in (lambda, mu) lexicographic grid order regardless of `policy`.
/// lambda = 0 rows are skipped. Throws Error if the template lacks either
/// parameter.
std::vector<SweepRow> run_sweep(const ContactStructure& templ, const std::vector<Rational>& lambdas,
                                const std::vector<Rational>& mus, ExecPolicy policy = ExecPolicy::serial);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

}  // namespace ctensor
