#include "prolong/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace prolong {

namespace {

using IRow = std::vector<std::pair<std::size_t, Int>>;

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

// Divide by content, make the leading coefficient positive.
void normalize(IRow& r) {
  if (r.empty()) return;
  Int g = 0;
  for (auto& [c, v] : r) {
    g = gcd_int(g, v);
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) v /= g;
}

// r <- p_lead * r - r_lead * p, where r and p share their leading column.
IRow cross_eliminate(const IRow& r, const IRow& p) {
  const Int& rl = r.front().second;
  const Int& pl = p.front().second;
  IRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j >= p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, pl * r[i].second);
      ++i;
    } else if (i >= r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -rl * p[j].second);
      ++j;
    } else {
      Int v = pl * r[i].second - rl * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  normalize(out);
  return out;
}

IRow to_irow(const std::vector<std::pair<std::size_t, Rat>>& row) {
  Int l = 1;
  for (auto& [c, v] : row) {
    Int d = denominator(v);
    l = l / gcd_int(l, d) * d;
  }
  IRow out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    Int x = numerator(v) * (l / denominator(v));
    if (x != 0) out.emplace_back(c, std::move(x));
  }
  normalize(out);
  return out;
}

}  // namespace

RowReducer::RowReducer(std::size_t cols) : cols_(cols) {}

bool RowReducer::add_irow(IRow r) {
  while (!r.empty()) {
    std::size_t lead = r.front().first;
    auto it = std::lower_bound(pivot_of_.begin(), pivot_of_.end(), lead);
    std::size_t pos = static_cast<std::size_t>(it - pivot_of_.begin());
    if (it == pivot_of_.end() || *it != lead) {
      rows_.insert(rows_.begin() + pos, std::move(r));
      pivot_of_.insert(it, lead);
      return true;
    }
    r = cross_eliminate(r, rows_[pos]);
  }
  return false;
}

bool RowReducer::add_row(const Vec& row) {
  if (row.size() != cols_) throw std::invalid_argument("RowReducer: row size mismatch");
  std::vector<std::pair<std::size_t, Rat>> sp;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) sp.emplace_back(j, row[j]);
  return add_irow(to_irow(sp));
}

bool RowReducer::add_row_sparse(const std::vector<std::pair<std::size_t, Rat>>& row) {
  for (auto& [c, v] : row)
    if (c >= cols_) throw std::invalid_argument("RowReducer: column out of range");
  return add_irow(to_irow(row));
}

std::vector<std::size_t> RowReducer::pivot_columns() const { return pivot_of_; }

std::vector<Vec> RowReducer::rref() const {
  // Back-substitution pass: exact division to unit pivots, then clear the
  // pivot columns upward. Processed bottom-up so each row only needs the
  // already-reduced rows below it.
  std::vector<std::vector<std::pair<std::size_t, Rat>>> rr(rows_.size());
  for (std::size_t i = rows_.size(); i-- > 0;) {
    const IRow& src = rows_[i];
    Rat lead(src.front().second);
    std::vector<std::pair<std::size_t, Rat>> cur;
    cur.reserve(src.size());
    for (auto& [c, v] : src) cur.emplace_back(c, Rat(v) / lead);
    // Eliminate entries sitting on pivot columns of later rows.
    for (std::size_t l = i + 1; l < rows_.size(); ++l) {
      std::size_t pc = pivot_of_[l];
      auto it = std::lower_bound(cur.begin(), cur.end(), pc,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it == cur.end() || it->first != pc || it->second == 0) continue;
      Rat f = it->second;
      // cur -= f * rr[l]
      std::vector<std::pair<std::size_t, Rat>> merged;
      merged.reserve(cur.size() + rr[l].size());
      std::size_t a = 0, b = 0;
      while (a < cur.size() || b < rr[l].size()) {
        if (b >= rr[l].size() || (a < cur.size() && cur[a].first < rr[l][b].first)) {
          merged.push_back(cur[a++]);
        } else if (a >= cur.size() || rr[l][b].first < cur[a].first) {
          merged.emplace_back(rr[l][b].first, -f * rr[l][b].second);
          ++b;
        } else {
          Rat v = cur[a].second - f * rr[l][b].second;
          if (v != 0) merged.emplace_back(cur[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      cur = std::move(merged);
    }
    rr[i] = std::move(cur);
  }
  std::vector<Vec> out(rows_.size(), Vec(cols_));
  for (std::size_t i = 0; i < rr.size(); ++i)
    for (auto& [c, v] : rr[i]) out[i][c] = v;
  return out;
}

Subspace RowReducer::kernel() const {
  std::vector<Vec> rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivot_of_) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < rr.size(); ++i)
      if (rr[i][f] != 0) v[pivot_of_[i]] = -rr[i][f];
    basis.push_back(std::move(v));
  }
  return span_of(cols_, basis);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient) throw std::invalid_argument("Subspace::contains: size mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rat& f = r[pivots[i]];
    if (f == 0) continue;
    Rat c = f;
    for (std::size_t j = 0; j < ambient; ++j)
      if (basis[i][j] != 0) r[j] -= c * basis[i][j];
  }
  for (auto& x : r)
    if (x != 0) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient) throw std::invalid_argument("Subspace::coordinates_of: size mismatch");
  Vec coords(basis.size());
  Vec r = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rat c = r[pivots[i]];
    coords[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient; ++j)
      if (basis[i][j] != 0) r[j] -= c * basis[i][j];
  }
  for (auto& x : r)
    if (x != 0) return std::nullopt;
  return coords;
}

bool Subspace::operator==(const Subspace& rhs) const {
  return ambient == rhs.ambient && pivots == rhs.pivots && basis == rhs.basis;
}

Subspace span_of(std::size_t ambient, const std::vector<Vec>& vectors) {
  RowReducer red(ambient);
  for (auto& v : vectors) red.add_row(v);
  Subspace s;
  s.ambient = ambient;
  s.basis = red.rref();
  s.pivots = red.pivot_columns();
  return s;
}

Subspace nullspace(const RatMatrix& m) {
  RowReducer red(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) red.add_row_sparse(m.row_nonzeros(i));
  return red.kernel();
}

std::size_t rank(const RatMatrix& m) {
  RowReducer red(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) red.add_row_sparse(m.row_nonzeros(i));
  return red.rank();
}

std::optional<Vec> solve(const RatMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  RowReducer red(m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row_nonzeros(i);
    if (b[i] != 0) row.emplace_back(m.cols(), b[i]);
    red.add_row_sparse(row);
  }
  auto pivots = red.pivot_columns();
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  auto rr = red.rref();
  Vec x(m.cols());
  for (std::size_t i = 0; i < rr.size(); ++i) x[pivots[i]] = rr[i][m.cols()];
  return x;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  // Kernel of [A^T | -B^T]: combinations agreeing in the ambient space.
  RowReducer red(a.dim() + b.dim());
  for (std::size_t x = 0; x < a.ambient; ++x) {
    std::vector<std::pair<std::size_t, Rat>> row;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.basis[i][x] != 0) row.emplace_back(i, a.basis[i][x]);
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (b.basis[j][x] != 0) row.emplace_back(a.dim() + j, -b.basis[j][x]);
    red.add_row_sparse(row);
  }
  Subspace ker = red.kernel();
  std::vector<Vec> vecs;
  for (auto& kv : ker.basis) {
    Vec v(a.ambient);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (kv[i] != 0)
        for (std::size_t x = 0; x < a.ambient; ++x) v[x] += kv[i] * a.basis[i][x];
    vecs.push_back(std::move(v));
  }
  return span_of(a.ambient, vecs);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  std::vector<Vec> vecs = a.basis;
  vecs.insert(vecs.end(), b.basis.begin(), b.basis.end());
  return span_of(a.ambient, vecs);
}

}  // namespace prolong
