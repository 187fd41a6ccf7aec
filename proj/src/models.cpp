#include "prolong/models.hpp"

#include <stdexcept>

namespace prolong {

namespace {

std::string en(int i) { return "E" + std::to_string(i); }
std::string fn(int i) { return "F" + std::to_string(i); }

Rat rat_pow(const Rat& b, int e) {
  Rat out(1);
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

}  // namespace

GradedAlgebra make_m(int k) {
  if (k < 2) throw std::invalid_argument("make_m: requires k >= 2");
  std::vector<BasisElement> basis;
  basis.push_back({"X", -1});
  for (int i = 1; i <= k; ++i) basis.push_back({en(i), -i});
  basis.push_back({fn(k - 1), -1});
  basis.push_back({fn(k), -2});
  basis.push_back({"N", -2});
  std::vector<BracketSpec> br;
  for (int i = 1; i < k; ++i) br.push_back({"X", en(i), {{en(i + 1), 1}}});
  br.push_back({"X", fn(k - 1), {{fn(k), 1}}});
  br.push_back({fn(k - 1), en(1), {{"N", 1}}});
  return GradedAlgebra::build(std::move(basis), br);
}

GradedAlgebra make_gprime(int k) {
  if (k < 2) throw std::invalid_argument("make_gprime: requires k >= 2");
  std::vector<BasisElement> basis;
  basis.push_back({"X", -1});
  for (int i = 0; i <= k; ++i) basis.push_back({en(i), -i});
  for (int i = 0; i <= k; ++i) basis.push_back({fn(i), k - 2 - i});
  basis.push_back({"N", -2});
  std::vector<BracketSpec> br;
  for (int i = 0; i < k; ++i) br.push_back({"X", en(i), {{en(i + 1), 1}}});
  for (int i = 0; i < k; ++i) br.push_back({"X", fn(i), {{fn(i + 1), 1}}});
  for (int i = 0; i <= k; ++i)
    br.push_back({en(i), fn(k - i), {{"N", (i % 2 == 0) ? Rat(1) : Rat(-1)}}});
  return GradedAlgebra::build(std::move(basis), br);
}

HeisenbergModel make_heisenberg(int k) {
  if (k < 1) throw std::invalid_argument("make_heisenberg: requires k >= 1");
  std::vector<BasisElement> basis;
  for (int i = 0; i <= k; ++i) basis.push_back({en(i), -1});
  for (int i = 0; i <= k; ++i) basis.push_back({fn(i), -1});
  basis.push_back({"N", -2});
  std::vector<BracketSpec> br;
  for (int i = 0; i <= k; ++i)
    br.push_back({en(i), fn(k - i), {{"N", (i % 2 == 0) ? Rat(1) : Rat(-1)}}});
  HeisenbergModel out{GradedAlgebra::build(std::move(basis), br), RatMatrix(2 * (k + 1), 2 * (k + 1))};
  for (int i = 0; i <= k; ++i) {
    Rat s = (i % 2 == 0) ? 1 : -1;
    out.J.set(i, k + 1 + (k - i), s);
    out.J.set(k + 1 + (k - i), i, -s);
  }
  return out;
}

WeightedPolynomial HankelMatrix::entry_poly(std::size_t i, std::size_t j) const {
  return WeightedPolynomial::var_x(k, entries.at(i).at(j).var).scaled(entries.at(i).at(j).coeff);
}

HankelMatrix hankel(int k, int r) {
  if (r < 0 || r + 2 > k - r)
    throw std::invalid_argument("hankel: requires 0 <= r and r+2 <= k-r");
  HankelMatrix h;
  h.k = k;
  h.r = r;
  h.rows = static_cast<std::size_t>(r + 2);
  h.cols = static_cast<std::size_t>(k - r);
  h.entries.resize(h.rows);
  for (std::size_t i = 0; i < h.rows; ++i)
    for (std::size_t j = 0; j < h.cols; ++j) {
      int v = static_cast<int>(i + j);
      h.entries[i].push_back({Rat(factorial(v)), v});
    }
  return h;
}

namespace {

// Laplace expansion along the first remaining row.
WeightedPolynomial poly_det(const std::vector<std::vector<WeightedPolynomial>>& m,
                            std::size_t row, std::vector<std::size_t> cols, int k) {
  if (cols.empty()) return WeightedPolynomial::constant(k, 1);
  WeightedPolynomial out(k);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<std::size_t> rest;
    for (std::size_t d = 0; d < cols.size(); ++d)
      if (d != c) rest.push_back(cols[d]);
    WeightedPolynomial sub = poly_det(m, row + 1, rest, k);
    WeightedPolynomial term = m[row][cols[c]] * sub;
    out = (c % 2 == 0) ? out + term : out - term;
  }
  return out;
}

}  // namespace

std::vector<WeightedPolynomial> secant_ideal(int k, int r) {
  HankelMatrix h = hankel(k, r);
  std::vector<std::vector<WeightedPolynomial>> m(h.rows);
  for (std::size_t i = 0; i < h.rows; ++i)
    for (std::size_t j = 0; j < h.cols; ++j) m[i].push_back(h.entry_poly(i, j));
  std::vector<WeightedPolynomial> out;
  // Column subsets of size r+2 in lexicographic order.
  std::vector<std::size_t> sel(h.rows);
  for (std::size_t i = 0; i < h.rows; ++i) sel[i] = i;
  while (true) {
    out.push_back(poly_det(m, 0, sel, k));
    // Advance to the next combination.
    std::size_t pos = sel.size();
    while (pos > 0 && sel[pos - 1] == h.cols - (sel.size() - (pos - 1))) --pos;
    if (pos == 0) break;
    ++sel[pos - 1];
    for (std::size_t q = pos; q < sel.size(); ++q) sel[q] = sel[q - 1] + 1;
  }
  // The maximal minors are linearly independent generators.
  std::map<Monomial, std::size_t, MonomialLess> index;
  for (auto& p : out)
    for (auto& [mo, c] : p.terms())
      index.emplace(mo, index.size());
  RowReducer red(index.size());
  for (auto& p : out) {
    Vec row(index.size(), Rat(0));
    for (auto& [mo, c] : p.terms()) row[index.at(mo)] = c;
    red.add_row(row);
  }
  if (red.rank() != out.size())
    throw std::logic_error("secant_ideal: minors are not linearly independent");
  return out;
}

std::vector<Rat> curve_point(int k, const Rat& u, const Rat& v) {
  if (u == 0 && v == 0) throw std::invalid_argument("curve_point: (u, v) must be nonzero");
  std::vector<Rat> out;
  for (int i = 0; i <= k; ++i)
    out.push_back(rat_pow(u, k - i) * rat_pow(v, i) / Rat(factorial(i)));
  return out;
}

std::vector<Rat> secant_point(int k, int r, const std::vector<CurveParam>& params) {
  if (params.size() != static_cast<std::size_t>(r + 1))
    throw std::invalid_argument("secant_point: expected r+1 curve parameters");
  std::vector<Rat> out(k + 1, Rat(0));
  for (auto& p : params) {
    auto pt = curve_point(k, p.u, p.v);
    for (int i = 0; i <= k; ++i) out[i] += p.scale * pt[i];
  }
  return out;
}

NSEmbedding embed_ns(int k) {
  if (k < 3) throw std::invalid_argument("embed_ns: requires k >= 3");
  NSEmbedding e;
  e.k = k;
  e.f_sign = (k % 2 == 1) ? 1 : -1;
  for (int i = 0; i <= k; ++i) e.images.push_back(WeightedPolynomial::var_y(k, i));
  for (int i = 0; i <= k; ++i) {
    Rat c = Rat(e.f_sign) * ((i % 2 == 0) ? Rat(1) : Rat(-1));
    e.images.push_back(WeightedPolynomial::var_x(k, k - i).scaled(c));
  }
  e.images.push_back(WeightedPolynomial::constant(k, 1));
  // The Lagrange bracket of the images must reproduce the Heisenberg
  // structure constants exactly.
  HeisenbergModel h = make_heisenberg(k);
  for (std::size_t a = 0; a < e.images.size(); ++a)
    for (std::size_t b = a + 1; b < e.images.size(); ++b) {
      Vec sc = h.algebra.bracket_basis(a, b);
      WeightedPolynomial expect(k);
      for (std::size_t t = 0; t < sc.size(); ++t)
        if (sc[t] != 0) expect = expect + e.images[t].scaled(sc[t]);
      if (!(contact_bracket(e.images[a], e.images[b]) == expect))
        throw std::logic_error("embed_ns: images do not realize the Heisenberg brackets");
    }
  return e;
}

Vec n_coordinates(const NSEmbedding& e, const WeightedPolynomial& p) {
  int k = e.k;
  Vec out(2 * (k + 1) + 1, Rat(0));
  for (auto& [m, c] : p.terms()) {
    if (m.total_degree() == 0) {
      out[2 * (k + 1)] = c;  // constant -> N
      continue;
    }
    if (m.total_degree() != 1 || m.e[2 * (k + 1)] != 0)
      throw std::invalid_argument("n_coordinates: polynomial is not affine in x, y");
    for (int i = 0; i <= k; ++i) {
      if (m.e[k + 1 + i] == 1) out[i] = c;  // y_i -> E_i
      if (m.e[i] == 1) {
        // x_i is the image of F_{k-i} up to the global sign.
        Rat s = Rat(e.f_sign) * (((k - i) % 2 == 0) ? Rat(1) : Rat(-1));
        out[k + 1 + (k - i)] = c * s;
      }
    }
  }
  return out;
}

SModel make_s(int k) {
  if (k < 3) throw std::invalid_argument("make_s: requires k >= 3");
  SModel s;
  s.k = k;
  s.heis = make_heisenberg(k);
  s.embedding = embed_ns(k);
  s.f_sign = s.embedding.f_sign;

  auto X = WeightedPolynomial(k);
  for (int i = 0; i < k; ++i)
    X = X + WeightedPolynomial::var_x(k, i) * WeightedPolynomial::var_y(k, i + 1);
  auto H = WeightedPolynomial(k);
  for (int i = 0; i <= k; ++i)
    H = H + (WeightedPolynomial::var_x(k, i) * WeightedPolynomial::var_y(k, i)).scaled(Rat(k - 2 * i));
  auto Y = WeightedPolynomial(k);
  for (int i = 1; i <= k; ++i)
    Y = Y + (WeightedPolynomial::var_x(k, i) * WeightedPolynomial::var_y(k, i - 1))
                .scaled(Rat(i) * Rat(k + 1 - i));
  auto Z1 = WeightedPolynomial(k);
  for (int i = 0; i <= k; ++i)
    Z1 = Z1 + WeightedPolynomial::var_x(k, i) * WeightedPolynomial::var_y(k, i);
  auto Z2 = WeightedPolynomial::var_z(k);

  s.s_names = {"X", "H", "Y", "Z1", "Z2"};
  s.s_polys = {X, H, Y, Z1, Z2};
  auto minors = secant_ideal(k, 0);
  for (std::size_t i = 0; i < minors.size(); ++i) {
    s.s_names.push_back("M" + std::to_string(i));
    s.s_polys.push_back(minors[i]);
  }
  for (auto& p : s.s_polys) {
    WeightInfo w = p.weight(Grading::Standard);
    if (w.kind != WeightInfo::Kind::Homogeneous || w.value != 2)
      throw std::logic_error("make_s: generator is not of standard weight 2");
  }

  std::size_t n1 = 2 * (k + 1);
  for (auto& f : s.s_polys) {
    Derivation d;
    RatMatrix b1(n1, n1);
    for (std::size_t b = 0; b < n1; ++b) {
      Vec co = n_coordinates(s.embedding, contact_bracket(f, s.embedding.images[b]));
      if (co[n1] != 0)
        throw std::logic_error("make_s: degree-0 action does not preserve the grading");
      for (std::size_t r = 0; r < n1; ++r)
        if (co[r] != 0) b1.set(r, b, co[r]);
    }
    RatMatrix b2(1, 1);
    WeightedPolynomial on_n = contact_bracket(f, s.embedding.images[n1]);
    Vec co = n_coordinates(s.embedding, on_n);
    for (std::size_t r = 0; r < n1; ++r)
      if (co[r] != 0) throw std::logic_error("make_s: action on the center leaves the center");
    b2.set(0, 0, co[n1]);
    d.blocks[-1] = std::move(b1);
    d.blocks[-2] = std::move(b2);
    s.s_derivations.push_back(std::move(d));
  }

  // Assemble n + s as one graded algebra. [s, s] brackets are resolved by
  // expanding the Lagrange bracket over the generator polynomials.
  std::map<Monomial, std::size_t, MonomialLess> index;
  for (auto& p : s.s_polys)
    for (auto& [mo, c] : p.terms()) index.emplace(mo, index.size());
  auto s_coordinates = [&](const WeightedPolynomial& p) -> Vec {
    RatMatrix sys(index.size(), s.s_polys.size());
    for (std::size_t c = 0; c < s.s_polys.size(); ++c)
      for (auto& [mo, v] : s.s_polys[c].terms()) sys.set(index.at(mo), c, v);
    Vec rhs(index.size(), Rat(0));
    for (auto& [mo, v] : p.terms()) {
      auto it = index.find(mo);
      if (it == index.end()) throw std::logic_error("make_s: s is not closed under bracket");
      rhs[it->second] = v;
    }
    auto sol = solve(sys, rhs);
    if (!sol) throw std::logic_error("make_s: s is not closed under bracket");
    return *sol;
  };

  std::vector<BasisElement> basis = s.heis.algebra.basis();
  for (auto& n : s.s_names) basis.push_back({n, 0});
  std::vector<BracketSpec> br;
  for (std::size_t i = 0; i + 1 < s.heis.algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < s.heis.algebra.dim(); ++j) {
      Vec w = s.heis.algebra.bracket_basis(i, j);
      BracketSpec spec{s.heis.algebra.element(i).name, s.heis.algebra.element(j).name, {}};
      for (std::size_t t = 0; t < w.size(); ++t)
        if (w[t] != 0) spec.value.emplace_back(s.heis.algebra.element(t).name, w[t]);
      if (!spec.value.empty()) br.push_back(std::move(spec));
    }
  for (std::size_t a = 0; a < s.s_polys.size(); ++a) {
    for (std::size_t b = 0; b < s.heis.algebra.dim(); ++b) {
      Vec co = n_coordinates(s.embedding,
                             contact_bracket(s.s_polys[a], s.embedding.images[b]));
      BracketSpec spec{s.s_names[a], s.heis.algebra.element(b).name, {}};
      for (std::size_t t = 0; t < co.size(); ++t)
        if (co[t] != 0) spec.value.emplace_back(s.heis.algebra.element(t).name, co[t]);
      if (!spec.value.empty()) br.push_back(std::move(spec));
    }
    for (std::size_t b = a + 1; b < s.s_polys.size(); ++b) {
      Vec co = s_coordinates(contact_bracket(s.s_polys[a], s.s_polys[b]));
      BracketSpec spec{s.s_names[a], s.s_names[b], {}};
      for (std::size_t t = 0; t < co.size(); ++t)
        if (co[t] != 0) spec.value.emplace_back(s.s_names[t], co[t]);
      if (!spec.value.empty()) br.push_back(std::move(spec));
    }
  }
  s.ns = GradedAlgebra::build(std::move(basis), br);
  return s;
}

}  // namespace prolong
