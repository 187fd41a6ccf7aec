#include "prolong/linear_maps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "prolong/models.hpp"

namespace prolong {

namespace {

Vec flatten_map(const RatMatrix& b) {
  // Hom(V, W) flat layout: index a * dim_w + w.
  Vec out(b.rows() * b.cols(), Rat(0));
  for (std::size_t w = 0; w < b.rows(); ++w)
    for (auto& [a, v] : b.row_nonzeros(w)) out[a * b.rows() + w] = v;
  return out;
}

}  // namespace

LinearMapSpace standard_prolongation(const LinearMapSpace& l) {
  std::size_t n = l.dim_v, m = l.dim_w;
  std::size_t ambient = n * n * m;  // T(a, b, w) at (a*n + b)*m + w
  std::vector<Vec> first;           // V* x L
  for (std::size_t a = 0; a < n; ++a)
    for (auto& b : l.basis) {
      Vec t(ambient, Rat(0));
      for (std::size_t w = 0; w < m; ++w)
        for (auto& [col, v] : b.row_nonzeros(w)) t[(a * n + col) * m + w] = v;
      first.push_back(std::move(t));
    }
  std::vector<Vec> sym;  // Sym^2 V* x W
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t w = 0; w < m; ++w) {
        Vec t(ambient, Rat(0));
        t[(a * n + b) * m + w] = 1;
        t[(b * n + a) * m + w] = 1;  // no-op when a == b, then overwritten to 1
        sym.push_back(std::move(t));
      }
  Subspace inter = intersect(span_of(ambient, first), span_of(ambient, sym));

  // Express each intersection tensor as a map V -> L over the given basis.
  RatMatrix sys(n * m, l.basis.size());
  for (std::size_t c = 0; c < l.basis.size(); ++c) {
    Vec f = flatten_map(l.basis[c]);
    for (std::size_t r = 0; r < f.size(); ++r)
      if (f[r] != 0) sys.set(r, c, f[r]);
  }
  if (rank(sys) != l.basis.size())
    throw std::invalid_argument("standard_prolongation: basis maps are dependent");
  LinearMapSpace out;
  out.dim_v = n;
  out.dim_w = l.basis.size();
  for (const Vec& t : inter.basis) {
    RatMatrix c(l.basis.size(), n);
    for (std::size_t a = 0; a < n; ++a) {
      Vec rhs(n * m, Rat(0));
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t w = 0; w < m; ++w) rhs[b * m + w] = t[(a * n + b) * m + w];
      auto coords = solve(sys, rhs);
      if (!coords) throw std::logic_error("standard_prolongation: slice escaped L");
      for (std::size_t lidx = 0; lidx < coords->size(); ++lidx)
        if ((*coords)[lidx] != 0) c.set(lidx, a, (*coords)[lidx]);
    }
    out.basis.push_back(std::move(c));
  }
  return out;
}

ProlongationChain::ProlongationChain(LinearMapSpace base) { levels_.push_back(std::move(base)); }

const LinearMapSpace& ProlongationChain::level(std::size_t i) {
  while (levels_.size() <= i) {
    levels_.push_back(standard_prolongation(levels_.back()));
    // A vanished level keeps dim_v/dim_w shapes so deeper levels stay empty.
  }
  return levels_[i];
}

std::vector<Vec> ProlongationChain::flat_tensors(std::size_t i) {
  const LinearMapSpace& base = levels_.front();
  std::size_t n = base.dim_v, m = base.dim_w;
  if (i == 0) {
    std::vector<Vec> out;
    for (auto& b : level(0).basis) out.push_back(flatten_map(b));
    return out;
  }
  std::vector<Vec> prev = flat_tensors(i - 1);
  std::size_t prev_len = prev.empty() ? 0 : prev[0].size();
  std::vector<Vec> out;
  for (auto& c : level(i).basis) {
    Vec t(n * (prev_len == 0 ? 0 : prev_len), Rat(0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t l = 0; l < prev.size(); ++l) {
        Rat coef = c.get(l, a);
        if (coef == 0) continue;
        for (std::size_t r = 0; r < prev_len; ++r) t[a * prev_len + r] += coef * prev[l][r];
      }
    out.push_back(std::move(t));
  }
  (void)m;
  return out;
}

Subspace ProlongationChain::flat_span(std::size_t i) {
  std::size_t n = levels_.front().dim_v, m = levels_.front().dim_w;
  std::size_t ambient = m;
  for (std::size_t q = 0; q <= i; ++q) ambient *= n;
  return span_of(ambient, flat_tensors(i));
}

namespace {

void enumerate_sorted(std::size_t n, std::size_t len, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  std::size_t start = cur.empty() ? 0 : cur.back();
  for (std::size_t v = start; v < n; ++v) {
    cur.push_back(v);
    enumerate_sorted(n, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Subspace standard_prolongation_direct(const LinearMapSpace& l, std::size_t i) {
  std::size_t n = l.dim_v, m = l.dim_w;
  std::vector<std::vector<std::size_t>> syms;
  std::vector<std::size_t> cur;
  enumerate_sorted(n, i + 1, cur, syms);
  std::map<std::vector<std::size_t>, std::size_t> sym_index;
  for (std::size_t q = 0; q < syms.size(); ++q) sym_index[syms[q]] = q;
  std::size_t unknowns = syms.size() * m;

  Subspace lspan;
  {
    std::vector<Vec> flats;
    for (auto& b : l.basis) flats.push_back(flatten_map(b));
    lspan = span_of(n * m, flats);
  }
  std::vector<bool> is_pivot(n * m, false);
  for (auto p : lspan.pivots) is_pivot[p] = true;

  RowReducer red(unknowns);
  std::vector<std::vector<std::size_t>> alphas;
  cur.clear();
  if (i == 0) {
    alphas.push_back({});
  } else {
    enumerate_sorted(n, i, cur, alphas);
  }
  auto unknown_at = [&](const std::vector<std::size_t>& alpha, std::size_t b,
                        std::size_t w) -> std::size_t {
    std::vector<std::size_t> beta = alpha;
    beta.push_back(b);
    std::sort(beta.begin(), beta.end());
    return sym_index.at(beta) * m + w;
  };
  for (auto& alpha : alphas) {
    // The slice T(alpha, ., .) must lie in L: every non-pivot coordinate is
    // determined by the pivot coordinates through the RREF rows of L.
    for (std::size_t c = 0; c < n * m; ++c) {
      if (is_pivot[c]) continue;
      std::map<std::size_t, Rat> row;
      row[unknown_at(alpha, c / m, c % m)] += 1;
      for (std::size_t t = 0; t < lspan.basis.size(); ++t) {
        const Rat& coef = lspan.basis[t][c];
        if (coef == 0) continue;
        std::size_t p = lspan.pivots[t];
        row[unknown_at(alpha, p / m, p % m)] -= coef;
      }
      std::vector<std::pair<std::size_t, Rat>> sparse;
      for (auto& [col, v] : row)
        if (v != 0) sparse.emplace_back(col, v);
      if (!sparse.empty()) red.add_row_sparse(sparse);
    }
  }
  Subspace kernel = red.kernel();

  // Expand symmetric coordinates to full tensors.
  std::size_t ambient = m;
  for (std::size_t q = 0; q <= i; ++q) ambient *= n;
  std::vector<Vec> full;
  for (const Vec& s : kernel.basis) {
    Vec t(ambient, Rat(0));
    std::vector<std::size_t> tuple(i + 1, 0);
    while (true) {
      std::vector<std::size_t> sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      std::size_t flat = 0;
      for (auto a : tuple) flat = flat * n + a;
      for (std::size_t w = 0; w < m; ++w)
        t[flat * m + w] = s[sym_index.at(sorted) * m + w];
      std::size_t pos = tuple.size();
      while (pos > 0 && tuple[pos - 1] == n - 1) --pos;
      if (pos == 0) break;
      ++tuple[pos - 1];
      for (std::size_t q = pos; q < tuple.size(); ++q) tuple[q] = 0;
    }
    full.push_back(std::move(t));
  }
  return span_of(ambient, full);
}

LinearMapSpace gl2_irreducible(std::size_t m) {
  if (m < 1) throw std::invalid_argument("gl2_irreducible: m >= 1 required");
  LinearMapSpace out;
  out.dim_v = out.dim_w = m;
  RatMatrix raise(m, m), diag(m, m), lower(m, m);
  long deg = static_cast<long>(m) - 1;
  for (std::size_t i = 0; i + 1 < m; ++i) raise.set(i + 1, i, 1);
  for (std::size_t i = 0; i < m; ++i) diag.set(i, i, Rat(deg - 2 * static_cast<long>(i)));
  for (std::size_t i = 1; i < m; ++i)
    lower.set(i - 1, i, Rat(static_cast<long>(i)) * Rat(deg + 1 - static_cast<long>(i)));
  out.basis = {raise, diag, lower, RatMatrix::identity(m)};
  return out;
}

LinearMapSpace secant_quadrics_as_maps(int k) {
  LinearMapSpace out;
  out.dim_v = out.dim_w = static_cast<std::size_t>(k + 1);
  for (auto& q : secant_ideal(k, 0)) {
    RatMatrix b(k + 1, k + 1);
    for (int w = 0; w <= k; ++w)
      for (int a = 0; a <= k; ++a) {
        Rat v = q.dx(w).dx(a).evaluate_x(std::vector<Rat>(k + 1, Rat(0)));
        if (v != 0) b.set(w, a, v / 2);
      }
    out.basis.push_back(std::move(b));
  }
  return out;
}

WeightedPolynomial flat_tensor_poly(int k, std::size_t i, const Vec& flat) {
  std::size_t n = static_cast<std::size_t>(k + 1);
  std::size_t expect = n;
  for (std::size_t q = 0; q <= i; ++q) expect *= n;
  if (flat.size() != expect)
    throw std::invalid_argument("flat_tensor_poly: tensor length mismatch");
  WeightedPolynomial p(k);
  std::vector<std::size_t> tuple(i + 2, 0);  // i+1 V slots plus the W slot
  while (true) {
    std::size_t idx = 0;
    for (auto a : tuple) idx = idx * n + a;
    if (flat[idx] != 0) {
      Monomial m{std::vector<std::uint32_t>(2 * n + 1, 0)};
      for (auto a : tuple) ++m.e[a];
      p.add_term(m, flat[idx]);
    }
    std::size_t pos = tuple.size();
    while (pos > 0 && tuple[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    ++tuple[pos - 1];
    for (std::size_t q = pos; q < tuple.size(); ++q) tuple[q] = 0;
  }
  return p;
}

}  // namespace prolong
