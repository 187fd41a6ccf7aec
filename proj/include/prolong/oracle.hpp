#pragma once

#include <map>
#include <utility>
#include <vector>

#include "prolong/contact.hpp"
#include "prolong/linalg.hpp"
#include "prolong/models.hpp"
#include "prolong/polynomial.hpp"

namespace prolong {

/// Canonical span of a list of polynomials: a shared sorted monomial index
/// over the union of supports plus the RREF subspace of coefficient vectors.
struct PolySpan {
  std::vector<Monomial> index;
  Subspace space;
};
PolySpan poly_span(const std::vector<WeightedPolynomial>& polys);

/// Span equality over the union of both supports.
bool poly_span_equal(const std::vector<WeightedPolynomial>& a,
                     const std::vector<WeightedPolynomial>& b);

/// (standard degree, second degree) of a generating polynomial: the two
/// weights shifted by -2. Throws when p is not homogeneous in both gradings.
std::pair<int, int> bidegree(const WeightedPolynomial& p);

/// Basis of the degree-i component of the prolongation of (n, s) computed
/// purely inside the polynomial model: candidates from the Euler-identity
/// ambient x*g_(i-1) + y*g_(i-1) + z*g_(i-2), constrained by requiring all
/// brackets with n to land in the previous components. previous[j] must be a
/// basis of g_j for 0 <= j < i (previous[0] = the s generators).
std::vector<WeightedPolynomial> gns_component(
    int k, int i, const std::vector<std::vector<WeightedPolynomial>>& previous);

struct OracleResult {
  int k = 0;
  /// components[j] is a polynomial basis of g_j, starting at j = 0 (= s).
  std::vector<std::vector<WeightedPolynomial>> components;
  int nu = 0;

  std::size_t total_dim() const;
  /// Dimensions per degree including the negative part (-2 and -1).
  std::map<int, std::size_t> dims_by_degree() const;
};

/// Full prolongation of (n(k), s) in the polynomial model. Each positive
/// component is verified against the matching secant-ideal graded piece;
/// reaching the cap before vanishing aborts.
OracleResult oracle_full(int k, int cap);

/// Joint dimension table over (standard degree, second degree), covering the
/// whole algebra from degree -2 up. Verifies each component splits into
/// bihomogeneous pieces.
std::map<std::pair<int, int>, std::size_t> bidegree_table(const OracleResult& r);

}  // namespace prolong
