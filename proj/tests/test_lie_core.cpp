#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prolong/algebra_io.hpp"
#include "prolong/lie_algebra.hpp"
#include "prolong/models.hpp"

using namespace prolong;

namespace {

Vec unit(std::size_t dim, std::size_t i) {
  Vec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("build: abelian algebra") {
  GradedAlgebra a = GradedAlgebra::build({{"N", -2}}, {});
  CHECK(a.dim() == 1);
  CHECK(a.min_degree() == -2);
  CHECK(a.max_degree() == -2);
  CHECK(a.bracket(unit(1, 0), unit(1, 0)) == Vec{Rat(0)});
}

TEST_CASE("build: m(2) degrees and dimension") {
  GradedAlgebra a = make_m(2);
  CHECK(a.dim() == 6);
  // X, E1, E2, F1, F2, N with degrees -1, -1, -2, -1, -2, -2.
  CHECK(a.element(0).name == "X");
  CHECK(a.element(0).degree == -1);
  CHECK(a.indices_of_degree(-1).size() == 3);
  CHECK(a.indices_of_degree(-2).size() == 3);
  CHECK(a.min_degree() == -2);
}

TEST_CASE("build rejects malformed input") {
  CHECK_THROWS_AS(GradedAlgebra::build({{"A", -1}, {"A", -2}}, {}), AlgebraError);
  CHECK_THROWS_AS(
      GradedAlgebra::build({{"A", -1}, {"B", -1}}, {{"A", "B", {{"C", Rat(1)}}}}),
      AlgebraError);
  // Grading violation: [deg -1, deg -1] must land in degree -2.
  CHECK_THROWS_AS(
      GradedAlgebra::build({{"A", -1}, {"B", -1}}, {{"A", "B", {{"A", Rat(1)}}}}),
      AlgebraError);
  // Declared [A, A] nonzero.
  CHECK_THROWS_AS(
      GradedAlgebra::build({{"A", -1}, {"C", -2}}, {{"A", "A", {{"C", Rat(1)}}}}),
      AlgebraError);
}

TEST_CASE("bracket values") {
  GradedAlgebra m3 = make_m(3);
  std::size_t x = *m3.index_of("X"), e1 = *m3.index_of("E1"), e2 = *m3.index_of("E2");
  Vec b = m3.bracket_basis(x, e1);
  CHECK(b == [&] {
    Vec v(m3.dim(), Rat(0));
    v[e2] = 1;
    return v;
  }());
  // Antisymmetry.
  Vec rev = m3.bracket_basis(e1, x);
  for (std::size_t i = 0; i < rev.size(); ++i) CHECK(rev[i] == -b[i]);
  // [u, u] = 0 for a generic element.
  Vec u(m3.dim(), Rat(0));
  u[x] = Rat(2, 3);
  u[e1] = Rat(-5);
  CHECK(m3.bracket(u, u) == Vec(m3.dim(), Rat(0)));

  GradedAlgebra g3 = make_gprime(3);
  std::size_t ge1 = *g3.index_of("E1"), gf2 = *g3.index_of("F2"), gn = *g3.index_of("N");
  Vec c = g3.bracket_basis(ge1, gf2);
  Vec expected(g3.dim(), Rat(0));
  expected[gn] = -1;  // [E_i, F_{k-i}] = (-1)^i N at i = 1
  CHECK(c == expected);
}

TEST_CASE("check_jacobi") {
  CHECK(make_heisenberg(3).algebra.check_jacobi().empty());
  for (int k = 3; k <= 6; ++k) CHECK(make_gprime(k).check_jacobi().empty());

  // Corrupt g'(3) by doubling [X, E1]; Jacobi must fail on a triple with X, E1.
  GradedAlgebra good = make_gprime(3);
  std::vector<BasisElement> basis = good.basis();
  std::vector<BracketSpec> br;
  for (std::size_t i = 0; i < good.dim(); ++i)
    for (std::size_t j = i + 1; j < good.dim(); ++j) {
      Vec v = good.bracket_basis(i, j);
      BracketSpec spec{basis[i].name, basis[j].name, {}};
      for (std::size_t t = 0; t < v.size(); ++t)
        if (v[t] != 0) spec.value.emplace_back(basis[t].name, v[t]);
      if (spec.left == "X" && spec.right == "E1")
        for (auto& [_, c] : spec.value) c *= 2;
      if (!spec.value.empty()) br.push_back(std::move(spec));
    }
  GradedAlgebra bad = GradedAlgebra::build_unchecked(basis, br);
  auto fails = bad.check_jacobi();
  REQUIRE_FALSE(fails.empty());
  std::size_t x = *bad.index_of("X"), e1 = *bad.index_of("E1");
  bool names_x_e1 = false;
  for (auto& f : fails)
    if ((f.i == x || f.j == x || f.l == x) && (f.i == e1 || f.j == e1 || f.l == e1))
      names_x_e1 = true;
  CHECK(names_x_e1);
  // And the eagerly checked constructor refuses the same input.
  CHECK_THROWS_AS(GradedAlgebra::build(basis, br), AlgebraError);
}

TEST_CASE("is_fundamental") {
  for (int k = 2; k <= 8; ++k) CHECK(make_m(k).is_fundamental());
  CHECK(make_heisenberg(2).algebra.is_fundamental());
  // Abelian in degrees -1 and -2: the -2 part is not generated.
  GradedAlgebra ab = GradedAlgebra::build({{"A", -1}, {"B", -2}}, {});
  CHECK_FALSE(ab.is_fundamental());
  // Nonnegative degrees are rejected.
  GradedAlgebra z = GradedAlgebra::build({{"A", 0}}, {});
  CHECK_THROWS_AS(z.is_fundamental(), AlgebraError);
}

TEST_CASE("graded_component") {
  GradedAlgebra m4 = make_m(4);
  CHECK(m4.graded_component(-4).dim() == 1);
  CHECK(m4.graded_component(0).dim() == 0);
  std::size_t total = 0;
  for (int d = m4.min_degree(); d <= m4.max_degree(); ++d)
    total += m4.graded_component(d).dim();
  CHECK(total == m4.dim());
}

TEST_CASE("m(k) global shape") {
  for (int k = 2; k <= 8; ++k) {
    GradedAlgebra m = make_m(k);
    CHECK(m.dim() == static_cast<std::size_t>(k + 4));
    CHECK(m.min_degree() == -k);
    CHECK(m.max_degree() == -1);
    CHECK(m.check_jacobi().empty());
  }
}

TEST_CASE("JSON round-trip is byte-identical") {
  for (const GradedAlgebra& a :
       {make_m(4), make_gprime(3), make_heisenberg(2).algebra, make_s(3).ns}) {
    std::string once = algebra_to_json(a);
    std::string twice = algebra_to_json(algebra_from_json(once));
    CHECK(once == twice);
  }
}

TEST_CASE("AlgebraElement bracket checks algebra identity") {
  GradedAlgebra a = make_m(3), b = make_m(3);
  AlgebraElement u{&a, a.coordinate_vector(0)};
  AlgebraElement v{&b, b.coordinate_vector(1)};
  CHECK_THROWS_AS(u.bracket_with(v), AlgebraError);
  AlgebraElement w{&a, a.coordinate_vector(1)};
  CHECK(u.bracket_with(w).coeffs == a.bracket_basis(0, 1));
}
