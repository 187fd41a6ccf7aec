#include "prolong/oracle.hpp"

#include <stdexcept>

namespace prolong {

namespace {

std::map<Monomial, std::size_t, MonomialLess> build_index(
    const std::vector<const std::vector<WeightedPolynomial>*>& lists) {
  std::map<Monomial, std::size_t, MonomialLess> index;
  for (auto* l : lists)
    for (auto& p : *l)
      for (auto& [m, c] : p.terms()) index.emplace(m, 0);
  std::size_t next = 0;
  for (auto& [m, i] : index) i = next++;
  return index;
}

Vec vectorize(const WeightedPolynomial& p,
              const std::map<Monomial, std::size_t, MonomialLess>& index) {
  Vec out(index.size(), Rat(0));
  for (auto& [m, c] : p.terms()) out[index.at(m)] = c;
  return out;
}

}  // namespace

PolySpan poly_span(const std::vector<WeightedPolynomial>& polys) {
  PolySpan out;
  auto index = build_index({&polys});
  out.index.resize(index.size(), Monomial{});
  for (auto& [m, i] : index) out.index[i] = m;
  std::vector<Vec> rows;
  for (auto& p : polys) rows.push_back(vectorize(p, index));
  out.space = span_of(index.size(), rows);
  return out;
}

bool poly_span_equal(const std::vector<WeightedPolynomial>& a,
                     const std::vector<WeightedPolynomial>& b) {
  auto index = build_index({&a, &b});
  std::vector<Vec> ra, rb;
  for (auto& p : a) ra.push_back(vectorize(p, index));
  for (auto& p : b) rb.push_back(vectorize(p, index));
  return span_of(index.size(), ra) == span_of(index.size(), rb);
}

std::pair<int, int> bidegree(const WeightedPolynomial& p) {
  WeightInfo w1 = p.weight(Grading::Standard);
  WeightInfo w2 = p.weight(Grading::Second);
  if (w1.kind != WeightInfo::Kind::Homogeneous || w2.kind != WeightInfo::Kind::Homogeneous)
    throw std::invalid_argument("bidegree: polynomial is not bihomogeneous");
  return {w1.value - 2, w2.value - 2};
}

std::vector<WeightedPolynomial> gns_component(
    int k, int i, const std::vector<std::vector<WeightedPolynomial>>& previous) {
  if (i < 1 || previous.size() < static_cast<std::size_t>(i))
    throw std::invalid_argument("gns_component: need all previous components");
  const auto& prev1 = previous[i - 1];
  std::vector<WeightedPolynomial> n_neg;
  for (int j = 0; j <= k; ++j) n_neg.push_back(WeightedPolynomial::var_x(k, j));
  for (int j = 0; j <= k; ++j) n_neg.push_back(WeightedPolynomial::var_y(k, j));
  const auto& prev2 = (i >= 2) ? previous[i - 2] : n_neg;

  // Candidate ambient from the Euler identity: any weight-homogeneous g with
  // all first-order brackets landing in g_(i-1) and g_z in g_(i-2) satisfies
  // w*g = sum_j (x_j dx_j + y_j dy_j) g + 2 z g_z, so g lies in
  // x*prev1 + y*prev1 + z*prev2.
  std::vector<WeightedPolynomial> spanning;
  for (auto& p : prev1)
    for (int j = 0; j <= k; ++j) {
      spanning.push_back(WeightedPolynomial::var_x(k, j) * p);
      spanning.push_back(WeightedPolynomial::var_y(k, j) * p);
    }
  for (auto& q : prev2) spanning.push_back(WeightedPolynomial::var_z(k) * q);
  PolySpan amb = poly_span(spanning);
  std::vector<WeightedPolynomial> candidates;
  for (const Vec& row : amb.space.basis) {
    WeightedPolynomial p(k);
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) p.add_term(amb.index[c], row[c]);
    candidates.push_back(std::move(p));
  }
  std::size_t unknowns = candidates.size();
  if (unknowns == 0) return {};

  RowReducer red(unknowns);
  // One constraint family per bracket partner: the combination of brackets
  // must lie in the span of the target component.
  auto add_family = [&](const std::vector<WeightedPolynomial>& brackets,
                        const std::vector<WeightedPolynomial>& target) {
    std::vector<const std::vector<WeightedPolynomial>*> lists = {&brackets, &target};
    auto index = build_index(lists);
    std::vector<Vec> tgt;
    for (auto& p : target) tgt.push_back(vectorize(p, index));
    Subspace tspan = span_of(index.size(), tgt);
    std::vector<Vec> residuals;
    for (auto& h : brackets) {
      Vec v = vectorize(h, index);
      for (std::size_t t = 0; t < tspan.basis.size(); ++t) {
        const Rat& lead = v[tspan.pivots[t]];
        if (lead == 0) continue;
        Rat c = lead;
        for (std::size_t w = 0; w < v.size(); ++w) v[w] -= c * tspan.basis[t][w];
      }
      residuals.push_back(std::move(v));
    }
    for (std::size_t col = 0; col < index.size(); ++col) {
      std::vector<std::pair<std::size_t, Rat>> row;
      for (std::size_t u = 0; u < unknowns; ++u)
        if (residuals[u][col] != 0) row.emplace_back(u, residuals[u][col]);
      if (!row.empty()) red.add_row_sparse(row);
    }
  };

  for (int j = 0; j <= k; ++j) {
    std::vector<WeightedPolynomial> bx, by;
    for (auto& g : candidates) {
      bx.push_back(contact_bracket(WeightedPolynomial::var_x(k, j), g));
      by.push_back(contact_bracket(WeightedPolynomial::var_y(k, j), g));
    }
    add_family(bx, prev1);
    add_family(by, prev1);
  }
  {
    std::vector<WeightedPolynomial> bz;
    for (auto& g : candidates) bz.push_back(g.dz());
    add_family(bz, prev2);
  }

  std::vector<WeightedPolynomial> out;
  for (const Vec& sol : red.kernel().basis) {
    WeightedPolynomial p(k);
    for (std::size_t u = 0; u < unknowns; ++u)
      if (sol[u] != 0) p = p + candidates[u].scaled(sol[u]);
    WeightInfo w = p.weight(Grading::Standard);
    if (w.kind != WeightInfo::Kind::Homogeneous || w.value != i + 2)
      throw std::logic_error("gns_component: element of unexpected weight");
    out.push_back(std::move(p));
  }
  return out;
}

std::size_t OracleResult::total_dim() const {
  std::size_t total = 2 * (k + 1) + 1;  // n(k)
  for (auto& c : components) total += c.size();
  return total;
}

std::map<int, std::size_t> OracleResult::dims_by_degree() const {
  std::map<int, std::size_t> dims;
  dims[-2] = 1;
  dims[-1] = 2 * (k + 1);
  for (std::size_t j = 0; j < components.size(); ++j)
    if (!components[j].empty()) dims[static_cast<int>(j)] = components[j].size();
  return dims;
}

OracleResult oracle_full(int k, int cap) {
  if (cap < 1) throw std::invalid_argument("oracle_full: cap must be >= 1");
  SModel s = make_s(k);
  OracleResult r;
  r.k = k;
  r.components.push_back(s.s_polys);
  for (int i = 1;; ++i) {
    if (i > cap)
      throw std::logic_error("oracle_full: cap reached before the tower vanished");
    auto comp = gns_component(k, i, r.components);
    if (comp.empty()) {
      r.nu = i - 1;
      break;
    }
    // Independent description: the degree-(i+2) graded slice of the secant
    // ideal, generated by the maximal minors of the order-(i+2) catalecticant.
    if (i + 2 > k - i)
      throw std::logic_error("oracle_full: nonzero component past the expected depth");
    if (!poly_span_equal(comp, secant_ideal(k, i)))
      throw std::logic_error("oracle_full: component differs from the secant ideal slice");
    r.components.push_back(std::move(comp));
  }
  return r;
}

std::map<std::pair<int, int>, std::size_t> bidegree_table(const OracleResult& r) {
  int k = r.k;
  std::map<std::pair<int, int>, std::size_t> table;
  std::vector<std::vector<WeightedPolynomial>> all;
  all.push_back({WeightedPolynomial::constant(k, 1)});  // degree -2
  std::vector<WeightedPolynomial> neg1;
  for (int j = 0; j <= k; ++j) neg1.push_back(WeightedPolynomial::var_x(k, j));
  for (int j = 0; j <= k; ++j) neg1.push_back(WeightedPolynomial::var_y(k, j));
  all.push_back(std::move(neg1));
  for (auto& c : r.components) all.push_back(c);

  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    int degree = static_cast<int>(idx) - 2;
    const auto& comp = all[idx];
    if (comp.empty()) continue;
    // Split into second-grading homogeneous pieces; the pieces of a basis of
    // a bigraded space span it, so the dimensions must add up.
    std::map<int, std::vector<WeightedPolynomial>> parts;
    for (auto& p : comp)
      for (int w = -2 * k; w <= 2 * k + 4; ++w) {
        WeightedPolynomial part = p.graded_part(Grading::Second, w);
        if (!part.is_zero()) parts[w].push_back(part);
      }
    std::size_t total = 0;
    for (auto& [w, polys] : parts) {
      std::size_t d = poly_span(polys).space.dim();
      table[{degree, w - 2}] += d;
      total += d;
    }
    if (total != poly_span(comp).space.dim())
      throw std::logic_error("bidegree_table: component is not bigraded");
  }
  return table;
}

}  // namespace prolong
