#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "prolong/linear_maps.hpp"
#include "prolong/models.hpp"
#include "prolong/oracle.hpp"
#include "prolong/prolongation.hpp"
#include "prolong/verify.hpp"

using namespace prolong;

namespace {

GradedAlgebra abelian(std::size_t n) {
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back({"A" + std::to_string(i), -1});
  return GradedAlgebra::build(basis, {});
}

std::vector<Derivation> gl_of(std::size_t n) {
  std::vector<Derivation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatMatrix e(n, n);
      e.set(i, j, 1);
      Derivation d;
      d.blocks[-1] = std::move(e);
      out.push_back(std::move(d));
    }
  return out;
}

LinearMapSpace hom(std::size_t dim_v, std::size_t dim_w) {
  LinearMapSpace l{dim_v, dim_w, {}};
  for (std::size_t w = 0; w < dim_w; ++w)
    for (std::size_t v = 0; v < dim_v; ++v) {
      RatMatrix m(dim_w, dim_v);
      m.set(w, v, 1);
      l.basis.push_back(std::move(m));
    }
  return l;
}

}  // namespace

TEST_CASE("der0 dimensions") {
  CHECK(der0(make_heisenberg(2).algebra).dim() == 22);
  for (std::size_t n : {1u, 2u, 3u, 4u})
    CHECK(der0(abelian(n)).dim() == n * n);
}

TEST_CASE("der0(m(3)) contains the grading element") {
  GradedAlgebra m3 = make_m(3);
  Derivation grading;
  for (int d = -1; d >= m3.min_degree(); --d) {
    std::size_t n = m3.indices_of_degree(d).size();
    RatMatrix blk(n, n);
    for (std::size_t i = 0; i < n; ++i) blk.set(i, i, Rat(d));
    grading.blocks[d] = std::move(blk);
  }
  CHECK(der0(m3).contains(flatten_derivation(m3, grading)));
}

TEST_CASE("first prolongation of gl(n) over an abelian base") {
  // gl(n) is of infinite type, so only one step is taken, never tanaka().
  for (std::size_t n : {2u, 3u}) {
    ProlongationState state(abelian(n));
    state.install_fixed_g0(gl_of(n));
    CHECK(state.compute_step(1).dim() == n * n * (n + 1) / 2);
  }
}

TEST_CASE("restricted unknowns agree with the full multi-block computation") {
  ProlongationState state(make_m(3));
  for (int p = 0; p <= 2; ++p) {
    ProlongComponent c = state.compute_step(p);
    std::vector<Vec> flats;
    for (const auto& e : c.basis) flats.push_back(state.flatten_element(e));
    CHECK(span_of(state.full_flat_dim(p), flats) == state.compute_step_full(p));
    state.install(std::move(c));
  }
}

TEST_CASE("tanaka(m(2)): the exceptional case") {
  ProlongationResult r = tanaka(make_m(2), std::nullopt, default_max_degree());
  CHECK(r.total_dim() == 21);
  CHECK(r.nu == 2);
  CHECK(r.terminated == Termination::Vanished);
  std::size_t pos = 0, neg = 0;
  for (auto& [d, n] : r.dims_by_degree()) {
    if (d > 0) pos += n;
    if (d < 0) neg += n;
  }
  CHECK(pos == 6);
  CHECK(neg == 6);
}

TEST_CASE("tanaka(m(3)): exact per-degree dimensions") {
  ProlongationResult r = tanaka(make_m(3), std::nullopt, default_max_degree());
  std::map<int, std::size_t> expected{{-3, 1}, {-2, 3}, {-1, 3}, {0, 6}, {1, 3}, {2, 1}};
  CHECK(r.dims_by_degree() == expected);
  CHECK(r.total_dim() == 17);
  CHECK(r.nu == 2);

  // The assembled algebra is honestly a graded Lie algebra.
  CHECK(r.assembled.check_jacobi().empty());

  // Grading element: some degree-0 element brackets as [e, u] = deg(u) u.
  const GradedAlgebra& a = r.assembled;
  std::vector<std::size_t> zero = a.indices_of_degree(0);
  RatMatrix sys(a.dim() * a.dim(), zero.size());
  Vec rhs(a.dim() * a.dim(), Rat(0));
  for (std::size_t u = 0; u < a.dim(); ++u) {
    for (std::size_t c = 0; c < zero.size(); ++c) {
      Vec b = a.bracket_basis(zero[c], u);
      for (std::size_t t = 0; t < a.dim(); ++t)
        if (b[t] != 0) sys.set(u * a.dim() + t, c, b[t]);
    }
    rhs[u * a.dim() + u] = Rat(a.element(u).degree);
  }
  CHECK(solve(sys, rhs).has_value());

  // Brackets out of the top component in positive degree vanish.
  for (std::size_t i : a.indices_of_degree(1))
    for (std::size_t j : a.indices_of_degree(2))
      CHECK(a.bracket_basis(i, j) == Vec(a.dim(), Rat(0)));

  // Non-degeneracy: every positive element acts nontrivially on g_-1.
  for (const auto& comp : r.components) {
    if (comp.degree == 0) continue;
    for (const auto& e : comp.basis) CHECK_FALSE(e.action.at(-1).is_zero());
  }
}

TEST_CASE("vanishing propagates: once a component is zero, all later ones are") {
  ProlongationState state(make_m(3));
  for (int p = 0; p <= 3; ++p) state.install(state.compute_step(p));
  CHECK(state.components().back().dim() == 0);
  ProlongComponent next = state.compute_step(4);
  CHECK(next.dim() == 0);
}

TEST_CASE("assemble with only a fixed g0 reproduces base plus action") {
  SModel s = make_s(3);
  ProlongationState state(s.heis.algebra);
  state.install_fixed_g0(s.s_derivations);
  GradedAlgebra a = state.assemble();
  const GradedAlgebra& n = s.heis.algebra;
  CHECK(a.dim() == n.dim() + s.s_derivations.size());
  // Base brackets are unchanged.
  for (std::size_t i = 0; i < n.dim(); ++i)
    for (std::size_t j = i + 1; j < n.dim(); ++j) {
      Vec got = a.bracket_basis(i, j);
      Vec want = n.bracket_basis(i, j);
      for (std::size_t t = 0; t < a.dim(); ++t)
        CHECK(got[t] == (t < n.dim() ? want[t] : Rat(0)));
    }
  // [g0 element, base element] is exactly the installed derivation action.
  auto pos_in_degree = [&](std::size_t idx) {
    auto idxs = n.indices_of_degree(n.element(idx).degree);
    for (std::size_t p = 0; p < idxs.size(); ++p)
      if (idxs[p] == idx) return p;
    return idxs.size();
  };
  for (std::size_t t = 0; t < s.s_derivations.size(); ++t)
    for (std::size_t j = 0; j < n.dim(); ++j) {
      int d = n.element(j).degree;
      Vec got = a.bracket_basis(n.dim() + t, j);
      const RatMatrix& blk = s.s_derivations[t].blocks.at(d);
      auto idxs = n.indices_of_degree(d);
      Vec want(a.dim(), Rat(0));
      for (std::size_t r = 0; r < idxs.size(); ++r)
        want[idxs[r]] = blk.get(r, pos_in_degree(j));
      CHECK(got == want);
    }
}

TEST_CASE("standard prolongation of full Hom(V, W)") {
  // Hom(V, W)^(1) = Sym^2 V* (x) W.
  CHECK(standard_prolongation(hom(2, 1)).basis.size() == 3);
  CHECK(standard_prolongation(hom(3, 2)).basis.size() == 12);
}

TEST_CASE("irreducible gl(2) inside gl(m)") {
  for (std::size_t m : {4u, 5u, 6u}) {
    ProlongationChain chain(gl2_irreducible(m));
    CHECK(chain.dim(1) == 0);
  }
  for (std::size_t m : {2u, 3u}) {
    ProlongationChain chain(gl2_irreducible(m));
    CHECK(chain.dim(1) > 0);
  }
}

TEST_CASE("prolongations of the secant quadrics match the minor counts") {
  for (int k : {4, 5, 6}) {
    ProlongationChain chain(secant_quadrics_as_maps(k));
    for (int r = 0; 0 <= k - 2 * r - 2 && r <= 2; ++r)
      CHECK(Int(chain.dim(r)) == binomial(k - r, r + 2));
  }
}

TEST_CASE("recursive and one-shot prolongations produce the same flat span") {
  for (int k : {4, 5}) {
    LinearMapSpace l = secant_quadrics_as_maps(k);
    ProlongationChain chain(l);
    for (std::size_t i = 1; i <= 2; ++i)
      CHECK(chain.flat_span(i) == standard_prolongation_direct(l, i));
  }
}

TEST_CASE("x-partials of level-r polynomials lie in level r-1") {
  int k = 6;
  ProlongationChain chain(secant_quadrics_as_maps(k));
  std::vector<std::vector<WeightedPolynomial>> levels;
  for (std::size_t r = 0; r <= 2; ++r) {
    std::vector<WeightedPolynomial> polys;
    for (const Vec& flat : chain.flat_tensors(r))
      polys.push_back(flat_tensor_poly(k, r, flat));
    levels.push_back(std::move(polys));
  }
  for (std::size_t r = 1; r <= 2; ++r)
    for (const auto& p : levels[r])
      for (int j = 0; j <= k; ++j) {
        WeightedPolynomial d = p.dx(j);
        if (d.is_zero()) continue;
        std::vector<WeightedPolynomial> extended = levels[r - 1];
        extended.push_back(d);
        CHECK(poly_span_equal(levels[r - 1], extended));
      }
}

TEST_CASE("result_to_json shape") {
  ProlongationResult r = tanaka(make_m(3), std::nullopt, default_max_degree());
  auto j = nlohmann::json::parse(result_to_json(r));
  CHECK(j.contains("dims"));
  CHECK(j.contains("nu"));
  CHECK(j["nu"] == 2);
  CHECK(j["terminated"] == "vanished");
  CHECK(j.contains("algebra"));
  CHECK(j["dims"]["0"] == 6);
}
