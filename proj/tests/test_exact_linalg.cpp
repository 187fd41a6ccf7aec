#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prolong/linalg.hpp"
#include "prolong/matrix.hpp"
#include "prolong/models.hpp"

using namespace prolong;

namespace {

RatMatrix from_rows(const std::vector<Vec>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] != 0) m.set(i, j, rows[i][j]);
  return m;
}

// Independent oracle: textbook dense Gauss-Jordan elimination over Q.
struct NaiveRref {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

NaiveRref naive_rref(const RatMatrix& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec r(m.cols(), Rat(0));
    for (auto& [j, v] : m.row_nonzeros(i)) r[j] = v;
    rows.push_back(std::move(r));
  }
  NaiveRref out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < rows.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    Rat inv = rows[lead][col];
    for (auto& v : rows[lead]) v /= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] -= f * rows[lead][c];
    }
    out.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  out.rows = std::move(rows);
  return out;
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> fill(0, 2);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (fill(rng) != 0) m.set(i, j, Rat(num(rng), den(rng)));
  return m;
}

}  // namespace

TEST_CASE("nullspace basics") {
  CHECK(nullspace(RatMatrix::identity(2)).dim() == 0);
  CHECK(nullspace(RatMatrix(1, 3)).dim() == 3);

  RatMatrix m = from_rows({{1, 2}, {2, 4}});
  Subspace n = nullspace(m);
  REQUIRE(n.dim() == 1);
  // Canonical echelon representative of span{(-2, 1)}.
  CHECK(n.basis[0] == Vec{Rat(1), Rat(-1, 2)});
  CHECK(n.contains(Vec{Rat(-2), Rat(1)}));
}

TEST_CASE("rank basics and Hankel rank one on the curve") {
  CHECK(rank(RatMatrix::identity(5)) == 5);
  CHECK(rank(RatMatrix(4, 3)) == 0);

  // Evaluate the symbolic 2x3 catalecticant at a curve point: rank 1.
  HankelMatrix h = hankel(3, 0);
  std::vector<Rat> pt = curve_point(3, 1, 1);  // x_i = 1/i!
  RatMatrix m(h.rows, h.cols);
  for (std::size_t i = 0; i < h.rows; ++i)
    for (std::size_t j = 0; j < h.cols; ++j)
      m.set(i, j, h.entries[i][j].coeff * pt[h.entries[i][j].var]);
  CHECK(rank(m) == 1);
}

TEST_CASE("rank plus nullity and transpose invariance on random matrices") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t r = 1 + trial % 30, c = 1 + (trial * 7) % 30;
    RatMatrix m = random_matrix(rng, r, c);
    std::size_t rk = rank(m);
    CHECK(rk + nullspace(m).dim() == c);
    CHECK(rank(m.transposed()) == rk);
  }
}

TEST_CASE("intersect") {
  Subspace a = span_of(3, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}});
  Subspace b = span_of(3, {{Rat(1), Rat(1), Rat(1)}});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, b) == b);

  Subspace p = span_of(4, {{Rat(1), Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0), Rat(0)}});
  Subspace q = span_of(4, {{Rat(0), Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(0), Rat(1)}});
  CHECK(intersect(p, q).dim() == 0);
}

TEST_CASE("solve") {
  Vec b = {Rat(3), Rat(-7, 2)};
  auto x = solve(RatMatrix::identity(2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CHECK_FALSE(solve(RatMatrix(2, 2), Vec{Rat(1), Rat(0)}).has_value());

  RatMatrix d = from_rows({{2, 0}, {0, 3}});
  auto y = solve(d, Vec{Rat(1), Rat(1)});
  REQUIRE(y.has_value());
  CHECK(*y == Vec{Rat(1, 2), Rat(1, 3)});
}

TEST_CASE("subspace canonicity under respanning") {
  std::mt19937 rng(987123);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 15; ++trial) {
    RatMatrix m = random_matrix(rng, 4, 9);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < 4; ++i) {
      Vec r(9, Rat(0));
      for (auto& [j, v] : m.row_nonzeros(i)) r[j] = v;
      rows.push_back(std::move(r));
    }
    // A second spanning set: random invertible-ish recombinations plus sums.
    std::vector<Vec> mixed;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Vec v(9, Rat(0));
      for (std::size_t l = 0; l < rows.size(); ++l) {
        int c = (l == i) ? 1 : coef(rng);
        for (std::size_t j = 0; j < 9; ++j) v[j] += Rat(c) * rows[l][j];
      }
      mixed.push_back(std::move(v));
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      Vec v(9, Rat(0));
      for (std::size_t j = 0; j < 9; ++j) v[j] = rows[i][j] + rows[i + 1][j];
      mixed.push_back(std::move(v));
    }
    Subspace s1 = span_of(9, rows);
    Subspace s2 = span_of(9, mixed);
    CHECK(s1 == s2);
    CHECK(s1.basis == s2.basis);
  }
}

TEST_CASE("fraction-free elimination agrees with naive rational elimination") {
  std::mt19937 rng(55501);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t r = 1 + trial % 12, c = 1 + (trial * 5) % 12;
    RatMatrix m = random_matrix(rng, r, c);
    NaiveRref naive = naive_rref(m);
    CHECK(rank(m) == naive.rows.size());
    Subspace row_space = span_of(c, [&] {
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec v(c, Rat(0));
        for (auto& [j, val] : m.row_nonzeros(i)) v[j] = val;
        rows.push_back(std::move(v));
      }
      return rows;
    }());
    CHECK(row_space.basis == naive.rows);
    CHECK(row_space.pivots == naive.pivots);
    // Kernel vectors annihilate the matrix exactly.
    Subspace n = nullspace(m);
    CHECK(n.dim() + naive.rows.size() == c);
    for (const Vec& v : n.basis) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat dot = 0;
        for (auto& [j, val] : m.row_nonzeros(i)) dot += val * v[j];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("matrix storage representations agree") {
  std::mt19937 rng(777);
  RatMatrix m = random_matrix(rng, 12, 12);
  RatMatrix copy = m;
  copy.compact();
  CHECK(m == copy);
  CHECK(m.multiply(RatMatrix::identity(12)) == m);
}

TEST_CASE("coordinates_of returns exact coordinates in the canonical basis") {
  Subspace s = span_of(3, {{Rat(1), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(3)}});
  Vec v = {Rat(2), Rat(4), Rat(-1)};
  auto c = s.coordinates_of(v);
  REQUIRE(c.has_value());
  Vec rebuilt(3, Rat(0));
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) rebuilt[j] += (*c)[i] * s.basis[i][j];
  CHECK(rebuilt == v);
  CHECK_FALSE(s.coordinates_of(Vec{Rat(0), Rat(1), Rat(0)}).has_value());
}
