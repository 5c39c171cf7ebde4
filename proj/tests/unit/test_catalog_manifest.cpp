#include <json.hpp>

#include "contact_tensor/manifest.hpp"
#include "contact_tensor/report.hpp"
#include "contact_tensor/sweep.hpp"
#include "support.hpp"

using namespace ctensor;
using namespace testing;
using nlohmann::json;

namespace {

json exported(const std::string& id) { return json::parse(dump_manifest(to_manifest(build_entry(id)))); }

std::vector<std::string> problems_of(const json& doc) {
  try {
    build(parse_manifest(doc.dump()));
  } catch (const IngestError& e) {
    return e.problems();
  }
  return {};
}

bool mentions(const std::vector<std::string>& problems, const std::string& needle) {
  for (const auto& p : problems)
    if (p.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("entries validate unless tagged") {
    for (const auto& id : catalog_ids()) {
      const CatalogEntry c = build_entry(id);
      CHECK_MESSAGE(check_jacobi(c.manifold()).ok(), id);
      if (c.invalid_fixture) continue;
      CHECK_MESSAGE(validate_almost_contact(c.structure).ok(), id);
      CHECK_MESSAGE(check_contact_metric(c.structure).ok(), id);
      CHECK_MESSAGE(check_h(c.structure, lie_h(c.structure)).ok(), id);
    }
    CHECK(build_flat_euclidean(3).invalid_fixture);
  }

  TEST_CASE("unknown ids list the catalog") {
    try {
      build_entry("torus");
      FAIL("expected an error");
    } catch (const Error& e) {
      for (const auto& id : catalog_ids()) CHECK(std::string(e.what()).find(id) != std::string::npos);
    }
  }

  TEST_CASE("(kappa,mu) frame arguments") {
    CHECK_THROWS(build_kmu_frame(Expr(0), Expr(0), SymbolTable{}));
    CHECK_THROWS(build_kmu_frame(Expr(-1), Expr(0), SymbolTable{}));
    CHECK_THROWS(build_flat_euclidean(4));
    const ContactStructure one = kmu_at(1, 1, 0, 1);
    CHECK(CurvatureTables(one.base()).riemann().is_zero());
  }
}

TEST_SUITE("manifest") {
  TEST_CASE("export and ingest reproduce the catalog objects") {
    for (const auto& id : catalog_ids()) {
      const CatalogEntry c = build_entry(id);
      const Manifest m = parse_manifest(dump_manifest(to_manifest(c)));
      const ContactStructure back = build(m);
      CHECK_MESSAGE(back.base().structure() == c.manifold().structure(), id);
      CHECK_MESSAGE(back.base().metric() == c.manifold().metric(), id);
      CHECK_MESSAGE(back.base().frame_matrix() == c.manifold().frame_matrix(), id);
      CHECK_MESSAGE(back.phi() == c.structure.phi(), id);
      CHECK_MESSAGE(back.xi() == c.structure.xi(), id);
      CHECK_MESSAGE(back.base().symbols() == c.manifold().symbols(), id);
      CHECK_MESSAGE(dump_manifest(m) == dump_manifest(to_manifest(c)), id);
    }
  }

  TEST_CASE("shape errors name the row") {
    json doc = exported("example41");
    doc["phi"][1] = json::array({"0", "1"});
    const auto p = problems_of(doc);
    CHECK(mentions(p, "/phi/1: expected 3 entries, found 2"));
  }

  TEST_CASE("undeclared symbols") {
    json doc = exported("example41");
    doc["symbols"] = json::array({{{"name", "y"}, {"kind", "coordinate"}}, {{"name", "z"}, {"kind", "coordinate"}}});
    const auto p = problems_of(doc);
    CHECK(mentions(p, "/frame/0/1"));
    CHECK(mentions(p, "unknown symbol 'x'"));
  }

  TEST_CASE("every problem is reported at once") {
    json doc = exported("kmu");
    doc["phi"][2] = json::array({"0", "1"});
    doc["xi"][0] = "nu";
    doc["colour"] = "red";
    const auto p = problems_of(doc);
    CHECK(mentions(p, "/phi/2"));
    CHECK(mentions(p, "/xi/0"));
    CHECK(mentions(p, "/colour: unknown field"));
  }

  TEST_CASE("structural errors") {
    json doc = exported("kmu");
    doc["schema_version"] = 7;
    CHECK(mentions(problems_of(doc), "unsupported version 7"));

    doc = exported("kmu");
    doc["frame"] = doc["metric"];
    CHECK(mentions(problems_of(doc), "/frame: not allowed in abstract mode"));

    doc = exported("kmu");
    doc["brackets"].push_back(doc["brackets"][0]);
    CHECK(mentions(problems_of(doc), "declared twice"));

    doc = exported("kmu");
    doc["brackets"][0]["i"] = 4;
    CHECK(mentions(problems_of(doc), "out of range"));

    doc = exported("example41");
    doc["frame"][1] = json::array({"0", "2/x", "0"});
    CHECK(mentions(problems_of(doc), "frame matrix"));
  }

  TEST_CASE("JSON syntax errors keep their position") {
    try {
      parse_manifest("{\n  \"name\": ,\n}");
      FAIL("expected an error");
    } catch (const IngestError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }

  TEST_CASE("integers are accepted as expressions") {
    json doc = exported("sphere");
    doc["metric"] = json::array({json::array({1, 0, 0}), json::array({0, 1, 0}), json::array({0, 0, 1})});
    CHECK(problems_of(doc).empty());
  }
}

TEST_SUITE("report") {
  TEST_CASE("rational literals") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(parse_rational("4/2") == Rational(2));
    for (const char* bad : {"", "x", "1/0", "1.", "1/-2", "--1"}) CHECK_THROWS_AS(parse_rational(bad), Error);
    CHECK(parse_assignment("lambda=1/2") == std::pair<std::string, Rational>{"lambda", Rational(1, 2)});
    CHECK_THROWS(parse_assignment("lambda"));
  }

  TEST_CASE("parameter bindings must name parameters") {
    const CatalogEntry ex = build_example_41();
    CHECK_THROWS(parameter_substitution(ex.manifold().symbols(), {{"x", Rational(1)}}));
    CHECK_THROWS(parameter_substitution(ex.manifold().symbols(), {{"lambda", Rational(1)}}));
  }

  TEST_CASE("JSON report content") {
    const CatalogEntry ex = build_example_41();
    const json r = json::parse(report_json(Analysis(ex.id, ex.provenance, ex.structure)));
    CHECK(r["schema_version"] == kReportSchemaVersion);
    CHECK(r["classification"]["kappa_mu"]["status"] == "inconsistent");
    CHECK(r["curvature"]["riemann"]["R(e1,e2)e3"]["e2"] == "-4/x");
    CHECK(r["connection"]["nabla_e2 e3"]["e1"] == "2");
    CHECK(r["brackets"]["[e1,e2]"]["e1"] == "2/x");
    CHECK(r["brackets"]["[e1,e2]"]["e3"] == "2");
    CHECK(r["h"]["h e1"]["e1"] == "-1");

    const CatalogEntry k = build_kmu_symbolic();
    const json half = json::parse(report_json(Analysis(k.id, k.provenance, k.structure, {{"lambda", Rational(1, 2)}, {"mu", Rational(0)}})));
    CHECK(half["classification"]["kappa_mu"]["kappa"] == "3/4");
    CHECK(half["parameters"]["lambda"] == "1/2");
    const json one = json::parse(report_json(Analysis(k.id, k.provenance, k.structure, {{"lambda", Rational(1)}, {"mu", Rational(0)}})));
    CHECK(one["classification"]["flat"] == true);
    CHECK(one["classification"]["phi_recurrent"]["status"] == "trivially_recurrent");

    const CatalogEntry s = build_sasakian_sphere();
    const json sr = json::parse(report_json(Analysis(s.id, s.provenance, s.structure)));
    CHECK(sr["classification"]["constant_curvature"] == "1");

    const CatalogEntry f = build_flat_euclidean(5);
    const json fr = json::parse(report_json(Analysis(f.id, f.provenance, f.structure)));
    CHECK(fr["curvature"]["riemann"].empty());
    CHECK(fr["curvature"]["scalar"] == "0");
  }

  TEST_CASE("self-checks pass on the catalog") {
    for (const auto& id : catalog_ids()) {
      const CatalogEntry c = build_entry(id);
      const Analysis a(c.id, c.provenance, c.structure);
      for (const Check& ch : a.self_checks()) CHECK_MESSAGE(ch.passed, id << ": " << ch.name << " " << ch.detail);
    }
  }

  TEST_CASE("text report") {
    const CatalogEntry ex = build_example_41();
    const std::string t = report_text(Analysis(ex.id, ex.provenance, ex.structure), false);
    CHECK(t.find("R(e1,e2)e3  (-4/x) e2") != std::string::npos);
    CHECK(t.find("\033[") == std::string::npos);
    CHECK(report_text(Analysis(ex.id, ex.provenance, ex.structure), true).find("\033[") != std::string::npos);
    CHECK(format_vector(vec({2, 0, Expr(-1)})) == "2 e1 - e3");
    CHECK(format_vector(VectorField(3)) == "0");
  }
}

TEST_SUITE("sweep") {
  TEST_CASE("default grid") {
    const auto rows = run_sweep(build_kmu_symbolic().structure, default_sweep_lambdas(), default_sweep_mus());
    REQUIRE(rows.size() == 16);
    int recurrent = 0;
    for (const SweepRow& r : rows) {
      CHECK_FALSE(r.skipped);
      CHECK(r.locally_phi_symmetric);
      CHECK(r.chain);
      CHECK(SweepRow::recurrent(r.phi_recurrent) == r.flat);
      CHECK(r.locally_symmetric == r.flat);
      CHECK(r.phi_symmetric == r.flat);
      if (SweepRow::recurrent(r.phi_recurrent)) {
        ++recurrent;
        CHECK(r.lambda == 1);
        CHECK(r.mu == 0);
      }
    }
    CHECK(recurrent == 1);
  }

  TEST_CASE("lambda = 0 rows are skipped and ordering is stable") {
    const std::vector<Rational> ls{Rational(0), Rational(1, 2)}, ms{Rational(1), Rational(0)};
    const auto serial = run_sweep(build_kmu_symbolic().structure, ls, ms, ExecPolicy::serial);
    const auto parallel = run_sweep(build_kmu_symbolic().structure, ls, ms, ExecPolicy::parallel);
    CHECK(serial[0].skipped);
    CHECK(serial[1].skipped);
    CHECK_FALSE(serial[2].skipped);
    CHECK(serial[2].mu == 1);
    CHECK(sweep_csv(serial) == sweep_csv(parallel));
    CHECK(sweep_json(serial) == sweep_json(parallel));
  }

  TEST_CASE("templates must declare lambda and mu") {
    CHECK_THROWS(run_sweep(build_sasakian_sphere().structure, {Rational(1)}, {Rational(0)}));
  }
}
