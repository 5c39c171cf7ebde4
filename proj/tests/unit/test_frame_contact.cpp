#include "contact_tensor/contact.hpp"
#include "support.hpp"

using namespace ctensor;
using namespace testing;

namespace {

SymbolTable chart_xyz() {
  SymbolTable s;
  s.add("x", SymbolKind::coordinate);
  s.add("y", SymbolKind::coordinate);
  s.add("z", SymbolKind::coordinate);
  return s;
}

FrameManifold abstract_frame(const SymbolTable& s, std::vector<std::pair<std::pair<int, int>, VectorField>> brackets,
                             std::size_t n = 3) {
  StructureConstants sc(n);
  for (auto& [ij, v] : brackets) sc.set_bracket(ij.first, ij.second, v);
  return FrameManifold::abstract(s, sc, ExprMatrix::identity(n));
}

}  // namespace

TEST_SUITE("frame") {
  TEST_CASE("chart brackets of the example frame") {
    const FrameManifold m = build_example_41().manifold();
    const SymbolTable& s = m.symbols();
    CHECK(m.structure().bracket(0, 1) == vec({px("2/x", s), 0, 2}));
    CHECK(m.structure().bracket(0, 2).is_zero());
    CHECK(m.structure().bracket(1, 2) == vec({2, 0, 0}));
    CHECK(m.bracket(m.basis(1), m.basis(2)) == vec({2, 0, 0}));
  }

  TEST_CASE("coordinate and rescaled frames commute") {
    const SymbolTable s = chart_xyz();
    CHECK(brackets_from_chart(s, ExprMatrix::identity(3)) == StructureConstants(3));
    SymbolTable t;
    t.add("x", SymbolKind::coordinate);
    t.add("y", SymbolKind::coordinate);
    const StructureConstants sc = brackets_from_chart(t, ExprMatrix::from_rows({{px("x", t), 0}, {0, 1}}));
    CHECK(sc.bracket(0, 1).is_zero());
  }

  TEST_CASE("singular chart frame is rejected") {
    const SymbolTable s = chart_xyz();
    const ExprMatrix f = ExprMatrix::from_rows({{1, 0, 0}, {px("x", s), 0, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(FrameManifold::chart(s, f, ExprMatrix::identity(3)), SingularMatrix);
  }

  TEST_CASE("metric validation") {
    const SymbolTable s = chart_xyz();
    CHECK_THROWS(FrameManifold::abstract(s, StructureConstants(2), ExprMatrix::from_rows({{1, 1}, {0, 1}})));
    CHECK_THROWS(FrameManifold::abstract(s, StructureConstants(2), ExprMatrix::from_rows({{1, 1}, {1, 1}})));
    CHECK_THROWS(FrameManifold::abstract(s, StructureConstants(2), ExprMatrix::from_rows({{px("x", s), 0}, {0, 1}})));
  }

  TEST_CASE("directional derivatives") {
    const FrameManifold m = build_example_41().manifold();
    const Expr x(m.symbols().at("x"));
    CHECK(m.directional_derivative(0, x).is_zero());
    CHECK(m.directional_derivative(1, x) == Expr(2));
    const FrameManifold k = build_kmu_symbolic().manifold();
    CHECK(k.directional_derivative(1, Expr(k.symbols().at("lambda"))).is_zero());
  }

  TEST_CASE("Leibniz term in brackets") {
    SymbolTable s;
    s.add("x", SymbolKind::coordinate);
    s.add("y", SymbolKind::coordinate);
    const FrameManifold m = FrameManifold::chart(s, ExprMatrix::identity(2), ExprMatrix::identity(2));
    const Expr x(s.at("x"));
    CHECK(m.bracket(m.basis(0), x * m.basis(0)) == m.basis(0));
    const VectorField v = vec({x, Expr(s.at("y")) * x});
    CHECK(m.bracket(v, v).is_zero());
  }

  TEST_CASE("Jacobi") {
    CHECK(check_jacobi(build_kmu_symbolic().manifold()).ok());
    CHECK(check_jacobi(build_flat_euclidean(3).manifold()).ok());
    const SymbolTable none;
    // [e1,e2] = e1, [e2,e3] = e1, [e3,e1] = e2: cyclic sum at (1,2,3) is nonzero
    const FrameManifold bad = abstract_frame(none, {{{0, 1}, vec({1, 0, 0})}, {{1, 2}, vec({1, 0, 0})}, {{2, 0}, vec({0, 1, 0})}});
    const JacobiVerdict v = check_jacobi(bad);
    REQUIRE_FALSE(v.ok());
    CHECK(*v.violation == std::array<std::size_t, 3>{0, 1, 2});
    CHECK_FALSE(v.residual.is_zero());
    // the same structure without the tampered bracket satisfies Jacobi
    CHECK(check_jacobi(abstract_frame(none, {{{0, 1}, vec({1, 0, 0})}, {{1, 2}, vec({1, 0, 0})}})).ok());
  }
}

TEST_SUITE("contact") {
  TEST_CASE("catalog structures are almost contact metric") {
    CHECK(validate_almost_contact(build_example_41().structure).ok());
    CHECK(validate_almost_contact(build_kmu_symbolic().structure).ok());
    CHECK(validate_almost_contact(build_sasakian_sphere().structure).ok());
  }

  TEST_CASE("phi = 0 violates phi^2 = -Id + eta xi at e2") {
    const ContactStructure good = build_kmu_symbolic().structure;
    const ContactStructure bad(good.base(), ExprMatrix(3, 3), good.xi());
    const ValidationVerdict v = validate_almost_contact(bad);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violations.front().axiom.find("phi^2") != std::string::npos);
    CHECK(v.violations.front().i == std::optional<std::size_t>(1));
  }

  TEST_CASE("d eta") {
    const ContactStructure k = build_kmu_symbolic().structure;
    CHECK(d_eta(k, 2, 1) == Expr(1));
    CHECK(d_eta(k, 1, 2) == Expr(-1));
    for (std::size_t i = 0; i < 3; ++i) CHECK(d_eta(k, i, i).is_zero());
    const ContactStructure e = build_example_41().structure;
    CHECK(d_eta(e, 0, 1) == Expr(-1));
    CHECK(e.base().inner(e.base().basis(0), e.apply_phi(e.base().basis(1))) == Expr(-1));
  }

  TEST_CASE("contact metric condition") {
    CHECK(check_contact_metric(build_example_41().structure).ok());
    CHECK(check_contact_metric(kmu_at(1, 2, 0, 1)).ok());
    CHECK(check_contact_metric(kmu_at(3, 2, -1, 1)).ok());
    const ContactStructure k = build_kmu_symbolic().structure;
    const ContactStructure abelian(FrameManifold::abstract(k.base().symbols(), StructureConstants(3), ExprMatrix::identity(3)),
                                   k.phi(), k.xi());
    CHECK_FALSE(check_contact_metric(abelian).ok());
  }

  TEST_CASE("operator h") {
    const ExprMatrix h41 = compute_h(build_example_41().structure);
    CHECK(h41 == ExprMatrix::from_rows({{-1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));

    const CatalogEntry k = build_kmu_symbolic();
    const Expr lambda(k.manifold().symbols().at("lambda"));
    const ExprMatrix hk = compute_h(k.structure);
    CHECK(hk == ExprMatrix::from_rows({{0, 0, 0}, {0, lambda, 0}, {0, 0, -lambda}}));

    CHECK(compute_h(build_sasakian_sphere().structure).is_zero());
  }

  TEST_CASE("h eigenstructure") {
    const HEigenstructure e = h_eigenstructure(compute_h(build_example_41().structure));
    CHECK(e.lambda == Expr(1));
    CHECK(e.plus == std::vector<std::size_t>{1});
    CHECK(e.minus == std::vector<std::size_t>{0});
    CHECK(e.zero == std::vector<std::size_t>{2});

    const HEigenstructure z = h_eigenstructure(ExprMatrix(3, 3));
    CHECK(z.zero == std::vector<std::size_t>{0, 1, 2});
    CHECK(z.plus.empty());

    const HEigenstructure half = h_eigenstructure(compute_h(kmu_at(1, 2, 0, 1)));
    CHECK(half.lambda == Expr::rational(1, 2));
    CHECK(half.plus == std::vector<std::size_t>{1});
    CHECK(half.minus == std::vector<std::size_t>{2});

    CHECK_THROWS_AS(h_eigenstructure(ExprMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})), Unsupported);
  }

  TEST_CASE("h invariants detect a broken h") {
    const ContactStructure c = build_example_41().structure;
    const ExprMatrix h = ExprMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    CHECK_FALSE(check_h(c, h).ok());
  }

  TEST_CASE("substitution rebuilds the structure") {
    const CatalogEntry k = build_kmu_symbolic();
    const SymbolTable& s = k.manifold().symbols();
    const ContactStructure c =
        substitute(k.structure, {{s.at("lambda").var(), Expr::rational(1, 2)}, {s.at("mu").var(), Expr(0)}});
    CHECK(c.base().structure() == kmu_at(1, 2, 0, 1).base().structure());
  }
}
