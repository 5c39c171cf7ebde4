#include "contact_tensor/catalog.hpp"

#include "contact_tensor/errors.hpp"
#include "contact_tensor/parser.hpp"

namespace ctensor {

namespace {

VectorField vec(std::initializer_list<Expr> components) {
  return VectorField(std::vector<Expr>(components));
}

CatalogEntry make(std::string id, std::string provenance, FrameManifold m,
                  std::vector<VectorField> phi_images, VectorField xi, bool fixture = false) {
  return CatalogEntry{std::move(id), std::move(provenance), fixture,
                      ContactStructure::from_images(std::move(m), phi_images, std::move(xi))};
}

}  // namespace

CatalogEntry build_example_41() {
  SymbolTable s;
  s.add("x", SymbolKind::coordinate);
  s.add("y", SymbolKind::coordinate);
  s.add("z", SymbolKind::coordinate);
  auto p = [&](std::string_view text) { return parse_expr(text, s); };
  ExprMatrix frame = ExprMatrix::from_rows({
      {Expr(), p("2/x"), Expr()},
      {Expr(2), p("-4*z/x"), p("x*y")},
      {Expr(), Expr(), Expr(1)},
  });
  FrameManifold m = FrameManifold::chart(s, std::move(frame), ExprMatrix::identity(3));
  return make("example41",
              "3-D chart frame on {x != 0} claimed to be (kappa,mu); identity frame metric",
              std::move(m), {vec({0, 1, 0}), vec({-1, 0, 0}), vec({0, 0, 0})}, vec({0, 0, 1}));
}

CatalogEntry build_kmu_frame(const Expr& lambda, const Expr& mu, SymbolTable symbols) {
  if (lambda.is_zero()) throw Error("lambda must be nonzero (kappa < 1)");
  if (auto v = lambda.constant_value(); v && *v <= 0) throw Error("lambda must be positive");
  for (const Expr* e : {&lambda, &mu})
    if (!e->is_parameter_only(symbols)) throw Error("lambda and mu must be parameter-only");
  const Expr half_mu = Expr::rational(1, 2) * mu;
  const Expr c2 = Expr(1) - lambda - half_mu;
  const Expr c3 = Expr(1) + lambda - half_mu;
  StructureConstants c(3);
  c.set_bracket(1, 2, vec({2, 0, 0}));
  c.set_bracket(2, 0, vec({0, c2, 0}));
  c.set_bracket(0, 1, vec({0, 0, c3}));
  FrameManifold m = FrameManifold::abstract(std::move(symbols), std::move(c), ExprMatrix::identity(3));
  return make("kmu", "non-Sasakian (kappa,mu)-contact frame with h-eigenvalue lambda",
              std::move(m), {vec({0, 0, 0}), vec({0, 0, 1}), vec({0, -1, 0})}, vec({1, 0, 0}));
}

CatalogEntry build_kmu_symbolic() {
  SymbolTable s;
  const Expr lambda(s.add("lambda", SymbolKind::parameter));
  const Expr mu(s.add("mu", SymbolKind::parameter));
  return build_kmu_frame(lambda, mu, std::move(s));
}

CatalogEntry build_sasakian_sphere() {
  StructureConstants c(3);
  c.set_bracket(1, 2, vec({2, 0, 0}));
  c.set_bracket(2, 0, vec({0, 2, 0}));
  c.set_bracket(0, 1, vec({0, 0, 2}));
  FrameManifold m = FrameManifold::abstract(SymbolTable{}, std::move(c), ExprMatrix::identity(3));
  return make("sphere", "unit 3-sphere as a cyclic frame, Sasakian with constant curvature 1",
              std::move(m), {vec({0, 0, 0}), vec({0, 0, 1}), vec({0, -1, 0})}, vec({1, 0, 0}));
}

CatalogEntry build_flat_euclidean(std::size_t dim) {
  if (dim < 3 || dim % 2 == 0) throw Error("flat fixture dimension must be odd and at least 3");
  FrameManifold m =
      FrameManifold::abstract(SymbolTable{}, StructureConstants(dim), ExprMatrix::identity(dim));
  std::vector<VectorField> images(dim, VectorField(dim));
  for (std::size_t a = 1; a + 1 < dim; a += 2) {
    images[a][a + 1] = Expr(1);
    images[a + 1][a] = Expr(-1);
  }
  return make("flat" + std::to_string(dim),
              "abelian Euclidean frame; almost contact but not contact metric", std::move(m),
              std::move(images), VectorField::basis(dim, 0), true);
}

std::vector<std::string> catalog_ids() { return {"example41", "kmu", "sphere", "flat3", "flat5"}; }

CatalogEntry build_entry(std::string_view id) {
  if (id == "example41") return build_example_41();
  if (id == "kmu") return build_kmu_symbolic();
  if (id == "sphere") return build_sasakian_sphere();
  if (id == "flat3") return build_flat_euclidean(3);
  if (id == "flat5") return build_flat_euclidean(5);
  std::string ids;
  for (const auto& known : catalog_ids()) ids += (ids.empty() ? "" : ", ") + known;
  throw Error("unknown catalog id '" + std::string(id) + "'; available: " + ids);
}

}  // namespace ctensor
