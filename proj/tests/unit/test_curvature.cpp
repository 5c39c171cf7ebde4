#include "contact_tensor/curvature.hpp"
#include "support.hpp"

using namespace ctensor;
using namespace testing;

namespace {

struct Kmu {
  CatalogEntry entry = build_kmu_symbolic();
  Expr lambda{entry.manifold().symbols().at("lambda")};
  Expr mu{entry.manifold().symbols().at("mu")};
  Expr c2 = Expr(1) - lambda - mu / Expr(2);
  Expr c3 = Expr(1) + lambda - mu / Expr(2);
  Expr kappa = Expr(1) - lambda * lambda;
  Expr half(const Expr& e) const { return e / Expr(2); }
};

VectorField e(std::size_t i, const Expr& coefficient = Expr(1)) {
  return coefficient * VectorField::basis(3, i);
}

}  // namespace

TEST_SUITE("curvature") {
  TEST_CASE("Koszul table of the example frame") {
    const FrameManifold m = build_example_41().manifold();
    const ConnectionTable c = koszul(m);
    const Expr x(m.symbols().at("x"));
    CHECK(c.nabla(0, 2).is_zero());
    CHECK(c.nabla(1, 2) == e(0, 2));
    CHECK(c.nabla(2, 2).is_zero());
    CHECK(c.nabla(0, 1) == e(0, Expr(2) / x));
    CHECK(c.nabla(1, 0) == e(2, -2));
    CHECK(c.nabla(1, 1).is_zero());
    CHECK(c.nabla(2, 1).is_zero());
    CHECK(c.nabla(0, 0) == e(1, Expr(-2) / x));
    CHECK(c.nabla(2, 0).is_zero());
  }

  TEST_CASE("Koszul table of the (kappa,mu) frame") {
    const Kmu k;
    const ConnectionTable c = koszul(k.entry.manifold());
    for (std::size_t i = 0; i < 3; ++i) CHECK(c.nabla(i, i).is_zero());
    CHECK(c.nabla(0, 1) == e(2, k.half(k.c2 + k.c3 - Expr(2))));
    CHECK(c.nabla(1, 0) == e(2, k.half(k.c2 - k.c3 - Expr(2))));
    CHECK(c.nabla(0, 2) == e(1, -k.half(k.c2 + k.c3 - Expr(2))));
    CHECK(c.nabla(2, 0) == e(1, k.half(k.c2 - k.c3 + Expr(2))));
    CHECK(c.nabla(1, 2) == e(0, k.half(k.c3 - k.c2 + Expr(2))));
    CHECK(c.nabla(2, 1) == e(0, k.half(k.c3 - k.c2 - Expr(2))));
  }

  TEST_CASE("abelian frame is flat") {
    const FrameManifold m = build_flat_euclidean(5).manifold();
    const CurvatureTables t(m);
    CHECK(t.connection() == ConnectionTable(5));
    CHECK(t.riemann().is_zero());
    CHECK(t.ricci().ricci.is_zero());
    CHECK(t.ricci().scalar.is_zero());
  }

  TEST_CASE("covariant derivative of vector fields") {
    const FrameManifold m = build_example_41().manifold();
    const ConnectionTable c = koszul(m);
    CHECK(covariant_derivative_vf(m, c, m.basis(1), m.basis(2)) == e(0, 2));
    CHECK(covariant_derivative_vf(m, c, m.basis(1), m.zero_vector()).is_zero());

    SymbolTable s;
    s.add("x", SymbolKind::coordinate);
    s.add("y", SymbolKind::coordinate);
    s.add("z", SymbolKind::coordinate);
    const FrameManifold flat = FrameManifold::chart(s, ExprMatrix::identity(3), ExprMatrix::identity(3));
    const Expr x(s.at("x"));
    CHECK(covariant_derivative_vf(flat, koszul(flat), flat.basis(0), x * flat.basis(0)) == flat.basis(0));
  }

  TEST_CASE("Riemann tensor") {
    const FrameManifold m = build_example_41().manifold();
    const CurvatureTables t(m);
    const Expr x(m.symbols().at("x"));
    CHECK(t.riemann()(0, 1, 2) == e(1, Expr(-4) / x));

    const Kmu k;
    const CurvatureTables tk(k.entry.manifold());
    const Expr coefficient = Expr::rational(1, 4) * (Expr(12) - Expr(4) * (k.c2 + k.c3) - (k.c2 - k.c3).pow(2));
    CHECK(tk.riemann()(1, 2, 1) == e(2, coefficient));
    CHECK(tk.riemann()(1, 2, 1) == e(2, k.kappa + k.mu));
    CHECK(tk.riemann()(1, 2, 2) == e(1, -(k.kappa + k.mu)));
    CHECK(tk.riemann()(1, 0, 0) == e(1, k.kappa + k.mu * k.lambda));
    CHECK(tk.riemann()(2, 0, 0) == e(2, k.kappa - k.mu * k.lambda));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = 0; l < 3; ++l)
          if (i != j && j != l && l != i) CHECK(tk.riemann()(i, j, l).is_zero());
  }

  TEST_CASE("Ricci data") {
    const CurvatureTables sphere(build_sasakian_sphere().manifold());
    CHECK(sphere.ricci().scalar == Expr(6));
    CHECK(sphere.ricci().ricci == Expr(2) * ExprMatrix::identity(3));

    const Kmu k;
    const CurvatureTables tk(k.entry.manifold());
    // S(X, xi) = 2 kappa eta(X) with xi = e1
    CHECK(tk.ricci().ricci(0, 0) == Expr(2) * k.kappa);
    CHECK(tk.ricci().ricci(1, 0).is_zero());
    CHECK(tk.ricci().ricci(2, 0).is_zero());
    CHECK(tk.ricci().operator_ == tk.ricci().ricci);
  }

  TEST_CASE("covariant derivative of R") {
    const Kmu k;
    const CurvatureTables t(k.entry.manifold());
    CHECK(t.nabla_R(1, 1, 2, 2).is_zero());
    CHECK(t.nabla_R(2, 1, 2, 1).is_zero());
    for (std::size_t i = 0; i < 3; ++i) CHECK(t.nabla_R(0, 1, 2, i).is_zero());
    const Expr one_plus = Expr(1) + k.lambda;
    const Expr one_minus = k.lambda - Expr(1);
    CHECK(t.nabla_R(1, 1, 2, 1) == e(0, Expr(2) * one_plus * one_plus * (Expr(1) - k.lambda + k.half(k.mu))));
    CHECK(t.nabla_R(2, 1, 2, 2) == e(0, Expr(2) * one_minus * one_minus * (Expr(1) + k.lambda + k.half(k.mu))));
    // Both terms of (nabla_{e2} R)(e2,e3)e1 point along e2:
    // -(1+lambda)[(kappa + mu lambda) + (kappa + mu)] e2.
    const VectorField sym = t.nabla_R(1, 1, 2, 0);
    CHECK(sym == e(1, -one_plus * ((k.kappa + k.mu * k.lambda) + (k.kappa + k.mu))));
    CHECK(sym == e(1, one_plus * one_plus * (Expr(2) * k.lambda - k.mu - Expr(2))));
    CHECK(t.nabla_R(1, 1, 2, 0) == nabla_R_component(t.manifold(), t.connection(), t.riemann(), 1, 1, 2, 0));
  }

  TEST_CASE("structure tensors") {
    const Kmu k;
    const CurvatureTables t(k.entry.manifold());
    const StructureDerivatives d = nabla_structure_tensors(t.manifold(), t.connection(), k.entry.structure);
    CHECK(d.nabla_xi[1] == e(2, -(Expr(1) + k.lambda)));
    for (const auto& id : catalog_ids()) {
      const CatalogEntry c = build_entry(id);
      const CurvatureTables tc(c.manifold());
      const StructureDerivatives dc = nabla_structure_tensors(c.manifold(), tc.connection(), c.structure);
      VectorField along_xi = c.manifold().zero_vector();
      for (std::size_t i = 0; i < c.structure.dim(); ++i) along_xi += c.structure.xi()[i] * dc.nabla_xi[i];
      CHECK_MESSAGE(along_xi.is_zero(), id);
    }
    const CatalogEntry sphere = build_sasakian_sphere();
    const CurvatureTables ts(sphere.manifold());
    const StructureDerivatives ds = nabla_structure_tensors(sphere.manifold(), ts.connection(), sphere.structure);
    CHECK(ds.nabla_xi[1] == -sphere.structure.phi_image(1));
  }

  TEST_CASE("identity checks pass on the catalog") {
    for (const auto& id : catalog_ids()) {
      const CatalogEntry c = build_entry(id);
      const CurvatureTables t(c.manifold());
      CHECK_MESSAGE(all_passed(check_connection(c.manifold(), t.connection())), id);
      CHECK_MESSAGE(all_passed(check_curvature_symmetries(t)), id);
      if (c.invalid_fixture) continue;
      const ExprMatrix h = compute_h(c.structure);
      CHECK_MESSAGE(all_passed(check_structure_identities(t, c.structure, h)), id);
      CHECK_MESSAGE(all_passed(check_optional_contact_identities(t, c.structure, h)), id);
    }
  }

  TEST_CASE("identity checks detect corruption") {
    const CatalogEntry c = build_kmu_symbolic();
    const CurvatureTables t(c.manifold());
    ConnectionTable bad = t.connection();
    bad(0, 1, 2) += Expr(1);
    CHECK_FALSE(all_passed(check_connection(c.manifold(), bad)));
    const ExprMatrix h = compute_h(c.structure);
    CHECK_FALSE(check_nabla_phi_kmu(t, c.structure, Expr(2) * h).passed);
  }

  TEST_CASE("3-D decomposition") {
    for (const auto& id : {"example41", "kmu", "sphere", "flat3"}) {
      const CatalogEntry c = build_entry(id);
      const CurvatureTables t(c.manifold());
      CHECK_MESSAGE(check_3d_decomposition(c.manifold(), t.riemann(), t.ricci()), id);
    }
    const CatalogEntry c = build_kmu_symbolic();
    const CurvatureTables t(c.manifold());
    RicciData corrupted = t.ricci();
    corrupted.ricci(0, 0) += Expr(1);
    CHECK_FALSE(check_3d_decomposition(c.manifold(), t.riemann(), corrupted));
    CHECK_THROWS_AS(check_3d_decomposition(build_flat_euclidean(5).manifold(), RiemannTensor(5), RicciData{}), DimensionError);
  }

  TEST_CASE("serial and parallel kernels agree") {
    for (const auto& id : catalog_ids()) {
      const FrameManifold m = build_entry(id).manifold();
      const ConnectionTable cs = koszul(m, ExecPolicy::serial);
      const ConnectionTable cp = koszul(m, ExecPolicy::parallel);
      CHECK_MESSAGE(cs == cp, id);
      CHECK_MESSAGE(riemann(m, cs, ExecPolicy::serial) == riemann(m, cs, ExecPolicy::parallel), id);
      const CurvatureTables serial(m, ExecPolicy::serial), parallel(m, ExecPolicy::parallel);
      parallel.compute_all_nabla_R(ExecPolicy::parallel);
      const std::size_t n = m.dim();
      bool same = true;
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) same = same && serial.nabla_R(w, i, j, k) == parallel.nabla_R(w, i, j, k);
      CHECK_MESSAGE(same, id);
    }
  }
}
