#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prolong/linalg.hpp"

namespace prolong {

struct BasisElement {
  std::string name;
  int degree = 0;
};

/// One bracket declaration: [left, right] = sum of coeff * name.
struct BracketSpec {
  std::string left, right;
  std::vector<std::pair<std::string, Rat>> value;
};

struct JacobiFailure {
  std::size_t i, j, l;
  Vec residual;
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional graded Lie algebra over Q, given by structure
/// constants. Construction validates grading and (for dim <= 200) the
/// Jacobi identity on all basis triples. Immutable after construction.
class GradedAlgebra {
 public:
  /// Zero-dimensional algebra; meaningful instances come from build().
  GradedAlgebra() = default;

  static GradedAlgebra build(std::vector<BasisElement> basis,
                             const std::vector<BracketSpec>& brackets);

  /// Same structural validation (names, grading, antisymmetry) but without
  /// the Jacobi check, so check_jacobi can report violations on purpose-built
  /// inputs instead of the constructor throwing.
  static GradedAlgebra build_unchecked(std::vector<BasisElement> basis,
                                       const std::vector<BracketSpec>& brackets);

  std::size_t dim() const { return basis_.size(); }
  const BasisElement& element(std::size_t i) const { return basis_.at(i); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }

  /// [e_i, e_j] as a coefficient vector (antisymmetry handled for i > j).
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the structure constants.
  Vec bracket(const Vec& u, const Vec& v) const;

  /// Empty iff Jacobi holds on all basis triples.
  std::vector<JacobiFailure> check_jacobi() const;

  /// True iff iterated brackets of the degree -1 component span everything.
  /// Requires a negatively graded algebra.
  bool is_fundamental() const;

  Subspace graded_component(int d) const;
  std::vector<std::size_t> indices_of_degree(int d) const;

  Vec coordinate_vector(std::size_t i) const;  // e_i as a coordinate vector

 private:
  std::vector<BasisElement> basis_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> table_;  // only i < j
  int min_degree_ = 0, max_degree_ = 0;
};

/// Element of a specific algebra; operations check algebra identity.
struct AlgebraElement {
  const GradedAlgebra* algebra = nullptr;
  Vec coeffs;

  AlgebraElement bracket_with(const AlgebraElement& rhs) const;
};

}  // namespace prolong
