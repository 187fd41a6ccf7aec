#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "prolong/contact.hpp"
#include "prolong/models.hpp"
#include "prolong/oracle.hpp"
#include "prolong/polynomial.hpp"

using namespace prolong;

namespace {

WeightedPolynomial random_poly(std::mt19937& rng, int k, int max_weight) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> deg(0, 2);
  WeightedPolynomial p(k);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    m.e.assign(2 * (k + 1) + 1, 0);
    int weight = 0;
    while (true) {
      std::uniform_int_distribution<int> var(0, 2 * (k + 1));
      int v = var(rng);
      int w = (v == 2 * (k + 1)) ? 2 : 1;  // standard weight of one variable
      if (weight + w > max_weight || deg(rng) == 0) break;
      ++m.e[v];
      weight += w;
    }
    int c = coef(rng);
    if (c != 0) p.add_term(m, Rat(c));
  }
  return p;
}

WeightedPolynomial bracketed(const WeightedPolynomial& f, const WeightedPolynomial& g) {
  return contact_bracket(f, g);
}

}  // namespace

TEST_CASE("contact bracket on coordinates") {
  int k = 3;
  auto x0 = WeightedPolynomial::var_x(k, 0);
  auto y0 = WeightedPolynomial::var_y(k, 0);
  CHECK(contact_bracket(x0, y0) == WeightedPolynomial::constant(k, 1));
  CHECK(contact_bracket(y0, x0) == WeightedPolynomial::constant(k, -1));
  CHECK(contact_bracket(x0, WeightedPolynomial::var_y(k, 1)).is_zero());

  std::mt19937 rng(31337);
  for (int t = 0; t < 10; ++t) {
    WeightedPolynomial g = random_poly(rng, k, 6);
    // {1, g} = g_z and {f, f} = 0.
    CHECK(contact_bracket(WeightedPolynomial::constant(k, 1), g) == g.dz());
    CHECK(contact_bracket(g, g).is_zero());
  }
}

TEST_CASE("to_field on distinguished generators") {
  int k = 2;
  ContactField d = to_field(WeightedPolynomial::constant(k, 1));
  for (auto& c : d.cx) CHECK(c.is_zero());
  for (auto& c : d.cy) CHECK(c.is_zero());
  CHECK(d.cz == WeightedPolynomial::constant(k, 1));  // X_1 = @z

  ContactField e = to_field(WeightedPolynomial::var_z(k));
  for (int i = 0; i <= k; ++i) {
    CHECK(e.cx[i] == WeightedPolynomial::var_x(k, i).scaled(Rat(1, 2)));
    CHECK(e.cy[i] == WeightedPolynomial::var_y(k, i).scaled(Rat(1, 2)));
  }
  CHECK(e.cz == WeightedPolynomial::var_z(k));
}

TEST_CASE("X_{f,g} = [X_f, X_g] on random pairs") {
  int k = 2;
  std::mt19937 rng(90210);
  for (int t = 0; t < 50; ++t) {
    WeightedPolynomial f = random_poly(rng, k, 5);
    WeightedPolynomial g = random_poly(rng, k, 5);
    CHECK(to_field(contact_bracket(f, g)) == field_commutator(to_field(f), to_field(g)));
  }
}

TEST_CASE("contact bracket satisfies the Jacobi identity") {
  int k = 2;
  std::mt19937 rng(1618033);
  for (int t = 0; t < 100; ++t) {
    WeightedPolynomial f = random_poly(rng, k, 6);
    WeightedPolynomial g = random_poly(rng, k, 6);
    WeightedPolynomial h = random_poly(rng, k, 6);
    WeightedPolynomial total = bracketed(f, bracketed(g, h)) +
                               bracketed(g, bracketed(h, f)) +
                               bracketed(h, bracketed(f, g));
    CHECK(total.is_zero());
  }
}

TEST_CASE("weights of generators") {
  int k = 3;
  CHECK(WeightedPolynomial::var_x(k, 2).weight(Grading::Second).value == 2);
  CHECK(WeightedPolynomial::var_y(k, 0).weight(Grading::Second).value == 2);
  CHECK(WeightedPolynomial::var_y(k, 3).weight(Grading::Second).value == -1);
  CHECK(WeightedPolynomial::var_x(k, 2).weight(Grading::Standard).value == 1);
  CHECK(WeightedPolynomial(k).weight(Grading::Standard).kind == WeightInfo::Kind::Zero);

  WeightedPolynomial minor = secant_ideal(3, 0)[0];  // 2 x0 x2 - x1^2
  CHECK(minor.weight(Grading::Second).value == 2);
  CHECK(minor.weight(Grading::Standard).value == 2);

  WeightedPolynomial mixed = WeightedPolynomial::var_x(k, 0) + WeightedPolynomial::var_z(k);
  CHECK(mixed.weight(Grading::Standard).kind == WeightInfo::Kind::Inhomogeneous);
}

TEST_CASE("weights are additive under multiplication (both gradings)") {
  int k = 3;
  std::mt19937 rng(777777);
  int done = 0;
  while (done < 40) {
    WeightedPolynomial f = random_poly(rng, k, 4);
    WeightedPolynomial g = random_poly(rng, k, 4);
    for (Grading gr : {Grading::Standard, Grading::Second}) {
      WeightInfo wf = f.weight(gr), wg = g.weight(gr), wp = (f * g).weight(gr);
      if (wf.kind != WeightInfo::Kind::Homogeneous || wg.kind != WeightInfo::Kind::Homogeneous)
        continue;
      REQUIRE(wp.kind == WeightInfo::Kind::Homogeneous);
      CHECK(wp.value == wf.value + wg.value);
      ++done;
    }
  }
}

TEST_CASE("gns_component on small cases") {
  for (int k : {4, 6}) {
    std::vector<std::vector<WeightedPolynomial>> prev = {make_s(k).s_polys};
    std::vector<WeightedPolynomial> g1 = gns_component(k, 1, prev);
    CHECK(poly_span_equal(g1, secant_ideal(k, 1)));
    if (k == 4) CHECK(g1.size() == 1);
    if (k == 6) {
      prev.push_back(g1);
      std::vector<WeightedPolynomial> g2 = gns_component(k, 2, prev);
      CHECK(g2.size() == 1);
      CHECK(poly_span_equal(g2, secant_ideal(6, 2)));
    }
  }
  // k = 3: nothing above degree 0.
  CHECK(gns_component(3, 1, {make_s(3).s_polys}).empty());
}

TEST_CASE("positive components only involve the x variables") {
  OracleResult r = oracle_full(5, 16);
  for (std::size_t i = 1; i < r.components.size(); ++i)
    for (auto& p : r.components[i])
      for (auto& [m, c] : p.terms())
        for (std::size_t v = 6; v < m.e.size(); ++v) CHECK(m.e[v] == 0);
}

TEST_CASE("oracle_full dimension tables") {
  OracleResult r3 = oracle_full(3, 16);
  CHECK(r3.total_dim() == 17);
  CHECK(r3.nu == 0);
  CHECK(r3.components.size() == 1);  // s only, no positive part

  OracleResult r5 = oracle_full(5, 16);
  CHECK(r5.nu == 1);
  CHECK(r5.components[1].size() == 4);  // C(4, 3)

  OracleResult r6 = oracle_full(6, 16);
  CHECK(r6.nu == 2);
  CHECK(r6.components[1].size() == 10);
  CHECK(r6.components[2].size() == 1);
}

TEST_CASE("bidegrees of the gl(2) generators") {
  SModel s = make_s(4);
  CHECK(bidegree(s.s_polys[0]) == std::pair<int, int>(0, -1));  // X
  CHECK(bidegree(s.s_polys[1]) == std::pair<int, int>(0, 0));   // H
  CHECK(bidegree(s.s_polys[2]) == std::pair<int, int>(0, 1));   // Y
  CHECK(bidegree(s.s_polys[3]) == std::pair<int, int>(0, 0));   // Z1
  CHECK(bidegree(s.s_polys[4]) == std::pair<int, int>(0, 0));   // Z2
  CHECK_THROWS(bidegree(s.s_polys[0] + s.s_polys[2]));
}

TEST_CASE("bidegree table marginals and maximal second degree") {
  for (int k : {3, 4, 5, 6}) {
    OracleResult r = oracle_full(k, 16);
    auto table = bidegree_table(r);
    // First marginal reproduces the oracle's own dimension table.
    std::map<int, std::size_t> first;
    int max_second = -100;
    for (auto& [bd, n] : table) {
      first[bd.first] += n;
      max_second = std::max(max_second, bd.second);
    }
    CHECK(first == r.dims_by_degree());
    CHECK(max_second == (k + 1) * (k + 1) / 4 - 2);
  }
}
