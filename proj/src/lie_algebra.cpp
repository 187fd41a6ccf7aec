#include "prolong/lie_algebra.hpp"

#include <algorithm>
#include <set>

namespace prolong {

namespace {
constexpr std::size_t kEagerJacobiLimit = 200;

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}
}  // namespace

GradedAlgebra GradedAlgebra::build(std::vector<BasisElement> basis,
                                   const std::vector<BracketSpec>& brackets) {
  GradedAlgebra a = build_unchecked(std::move(basis), brackets);
  if (a.dim() <= kEagerJacobiLimit) {
    auto fails = a.check_jacobi();
    if (!fails.empty()) {
      const auto& f = fails.front();
      throw AlgebraError("Jacobi violation on triple (" + a.basis_[f.i].name + ", " +
                         a.basis_[f.j].name + ", " + a.basis_[f.l].name + ")");
    }
  }
  return a;
}

GradedAlgebra GradedAlgebra::build_unchecked(std::vector<BasisElement> basis,
                                             const std::vector<BracketSpec>& brackets) {
  GradedAlgebra a;
  a.basis_ = std::move(basis);
  std::map<std::string, std::size_t, std::less<>> by_name;
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    auto [it, inserted] = by_name.emplace(a.basis_[i].name, i);
    if (!inserted) throw AlgebraError("duplicate basis name: " + a.basis_[i].name);
  }
  if (!a.basis_.empty()) {
    a.min_degree_ = a.max_degree_ = a.basis_[0].degree;
    for (auto& e : a.basis_) {
      a.min_degree_ = std::min(a.min_degree_, e.degree);
      a.max_degree_ = std::max(a.max_degree_, e.degree);
    }
  }
  auto lookup = [&](const std::string& name) -> std::size_t {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw AlgebraError("unknown basis name in bracket: " + name);
    return it->second;
  };
  for (const auto& spec : brackets) {
    std::size_t i = lookup(spec.left);
    std::size_t j = lookup(spec.right);
    Vec v(a.dim());
    for (auto& [name, c] : spec.value) v[lookup(name)] += c;
    if (i == j) {
      if (!is_zero_vec(v))
        throw AlgebraError("nonzero bracket [" + spec.left + ", " + spec.left + "]");
      continue;
    }
    Rat sign = 1;
    if (i > j) {
      std::swap(i, j);
      sign = -1;
    }
    if (a.table_.count({i, j}))
      throw AlgebraError("bracket [" + spec.left + ", " + spec.right + "] declared twice");
    int dsum = a.basis_[i].degree + a.basis_[j].degree;
    for (std::size_t l = 0; l < v.size(); ++l) {
      if (v[l] != 0 && a.basis_[l].degree != dsum)
        throw AlgebraError("grading violation in [" + spec.left + ", " + spec.right +
                           "]: lands on " + a.basis_[l].name);
      v[l] *= sign;
    }
    if (!is_zero_vec(v)) a.table_.emplace(std::make_pair(i, j), std::move(v));
  }
  return a;
}

std::optional<std::size_t> GradedAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

Vec GradedAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out(dim());
  if (i == j) return out;
  Rat sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = table_.find({i, j});
  if (it == table_.end()) return out;
  for (std::size_t l = 0; l < dim(); ++l) out[l] = sign * it->second[l];
  return out;
}

Vec GradedAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw AlgebraError("bracket: coefficient vector length mismatch");
  Vec out(dim());
  for (auto& [ij, c] : table_) {
    auto [i, j] = ij;
    Rat f = u[i] * v[j] - u[j] * v[i];
    if (f == 0) continue;
    for (std::size_t l = 0; l < dim(); ++l)
      if (c[l] != 0) out[l] += f * c[l];
  }
  return out;
}

std::vector<JacobiFailure> GradedAlgebra::check_jacobi() const {
  std::vector<JacobiFailure> fails;
  std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = coordinate_vector(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec ej = coordinate_vector(j);
      Vec bij = bracket_basis(i, j);
      for (std::size_t l = j + 1; l < n; ++l) {
        Vec el = coordinate_vector(l);
        Vec r = bracket(ei, bracket_basis(j, l));
        Vec t = bracket(ej, bracket_basis(l, i));
        Vec s = bracket(el, bij);
        for (std::size_t m = 0; m < n; ++m) r[m] += t[m] + s[m];
        if (!is_zero_vec(r)) fails.push_back({i, j, l, std::move(r)});
      }
    }
  }
  return fails;
}

bool GradedAlgebra::is_fundamental() const {
  for (auto& e : basis_)
    if (e.degree >= 0)
      throw AlgebraError("is_fundamental: nonnegative degree present (" + e.name + ")");
  std::vector<Vec> gen;
  for (std::size_t i : indices_of_degree(-1)) gen.push_back(coordinate_vector(i));
  Subspace span = span_of(dim(), gen);
  for (;;) {
    std::vector<Vec> next = span.basis;
    for (auto& g : gen)
      for (auto& v : span.basis) next.push_back(bracket(g, v));
    Subspace grown = span_of(dim(), next);
    if (grown.dim() == span.dim()) break;
    span = std::move(grown);
  }
  return span.dim() == dim();
}

Subspace GradedAlgebra::graded_component(int d) const {
  std::vector<Vec> vecs;
  for (std::size_t i : indices_of_degree(d)) vecs.push_back(coordinate_vector(i));
  Subspace s = span_of(dim(), vecs);
  return s;
}

std::vector<std::size_t> GradedAlgebra::indices_of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == d) out.push_back(i);
  return out;
}

Vec GradedAlgebra::coordinate_vector(std::size_t i) const {
  Vec v(dim());
  v.at(i) = 1;
  return v;
}

AlgebraElement AlgebraElement::bracket_with(const AlgebraElement& rhs) const {
  if (algebra == nullptr || algebra != rhs.algebra)
    throw AlgebraError("bracket_with: elements of different algebras");
  return {algebra, algebra->bracket(coeffs, rhs.coeffs)};
}

}  // namespace prolong
