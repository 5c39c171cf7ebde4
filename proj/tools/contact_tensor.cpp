// contact-tensor: command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 validation failure under
// --strict, 3 self-check failure.

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "contact_tensor/catalog.hpp"
#include "contact_tensor/manifest.hpp"
#include "contact_tensor/report.hpp"
#include "contact_tensor/sweep.hpp"

using namespace ctensor;

namespace {

constexpr int kUsage = 1;
constexpr int kStrict = 2;
constexpr int kSelfCheck = 3;

bool use_color() {
  if (const char* env = std::getenv("CONTACT_TENSOR_COLOR")) return std::string(env) == "1";
  return ::isatty(STDOUT_FILENO) != 0;
}

ParameterValues parse_values(const std::vector<std::string>& assignments) {
  ParameterValues values;
  for (const auto& a : assignments) {
    auto [name, value] = parse_assignment(a);
    if (!values.emplace(name, value).second) throw Error("--set " + name + " given twice");
  }
  return values;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
  if (out.empty()) throw Error("empty value list");
  return out;
}

struct ReportOptions {
  std::string format = "text";
  bool strict = false;
  bool lint = false;
  std::vector<std::string> set;
};

int emit(const Analysis& a, const ReportOptions& opt) {
  if (opt.lint) {
    std::cout << lint_text(a);
    return 0;
  }
  std::cout << (opt.format == "json" ? report_json(a) : report_text(a, use_color()));
  if (!a.self_checks_passed()) {
    std::cerr << "self-check failure: an internal invariant does not hold\n";
    return kSelfCheck;
  }
  if (opt.strict && !a.validation().ok()) {
    std::cerr << "validation failed (--strict)\n";
    return kStrict;
  }
  return 0;
}

void add_report_options(CLI::App* cmd, ReportOptions& opt) {
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--set", opt.set, "Bind a parameter, name=rational")->take_all();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic curvature and classification for frame-defined contact metric manifolds"};
  app.require_subcommand(1);

  ReportOptions report_opt;
  std::string report_path;
  auto* report = app.add_subcommand("report", "Analyse a manifest file");
  report->add_option("file", report_path, "Manifest JSON")->required();
  add_report_options(report, report_opt);
  report->add_flag("--strict", report_opt.strict, "Exit 2 when the structure fails validation");
  report->add_flag("--lint", report_opt.lint, "Only list validation results");

  std::string sweep_path, lambdas, mus, sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Classify a (lambda, mu) template over a grid");
  sweep->add_option("file", sweep_path, "Template manifest declaring parameters lambda and mu")->required();
  sweep->add_option("--lambda", lambdas, "Comma-separated rationals (default 1/4,1/2,1,3/2)");
  sweep->add_option("--mu", mus, "Comma-separated rationals (default -1,0,1,2)");
  sweep->add_option("--format", sweep_format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  ReportOptions demo_opt;
  std::string demo_id;
  auto* demo = app.add_subcommand("demo", "Report on a built-in catalog entry");
  demo->add_option("id", demo_id, "Catalog id")->required();
  add_report_options(demo, demo_opt);

  std::string export_id, export_path;
  auto* exp = app.add_subcommand("export", "Write a catalog entry as a manifest");
  exp->add_option("id", export_id, "Catalog id")->required();
  exp->add_option("-o,--output", export_path, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*report) {
      const Manifest m = read_manifest(report_path);
      const Analysis a(m.name, m.description, build(m), parse_values(report_opt.set));
      return emit(a, report_opt);
    }
    if (*demo) {
      const CatalogEntry entry = build_entry(demo_id);
      const Analysis a(entry.id, entry.provenance, entry.structure, parse_values(demo_opt.set));
      return emit(a, demo_opt);
    }
    if (*sweep) {
      const ContactStructure templ = build(read_manifest(sweep_path));
      const auto ls = lambdas.empty() ? default_sweep_lambdas() : parse_list(lambdas);
      const auto ms = mus.empty() ? default_sweep_mus() : parse_list(mus);
      const auto rows = run_sweep(templ, ls, ms, ExecPolicy::parallel);
      std::cout << (sweep_format == "json" ? sweep_json(rows) : sweep_csv(rows));
      for (const auto& r : rows)
        if (!r.skipped && !r.chain) return kSelfCheck;
      return 0;
    }
    if (*exp) {
      const std::string text = dump_manifest(to_manifest(build_entry(export_id)));
      std::ofstream out(export_path, std::ios::binary);
      if (!(out << text)) throw Error("cannot write " + export_path);
      return 0;
    }
  } catch (const IngestError& e) {
    for (const auto& p : e.problems()) std::cerr << "error: " << p << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
