#pragma once

#include <optional>
#include <vector>

#include "prolong/matrix.hpp"
#include "prolong/rational.hpp"

namespace prolong {

using Vec = std::vector<Rat>;

/// Subspace of Q^ambient in canonical form: the basis rows are the reduced
/// row echelon form of any spanning set, so two representations of the same
/// subspace compare equal componentwise.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vec> basis;            // RREF rows, unit pivots
  std::vector<std::size_t> pivots;   // strictly increasing pivot columns

  std::size_t dim() const { return basis.size(); }
  bool contains(const Vec& v) const;

  /// Coordinates of v over the canonical basis, if v lies in the subspace.
  std::optional<Vec> coordinates_of(const Vec& v) const;

  bool operator==(const Subspace& rhs) const;
};

Subspace span_of(std::size_t ambient, const std::vector<Vec>& vectors);

/// Full kernel of M, canonical. dim = cols - rank(M).
Subspace nullspace(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Some x with Mx = b, free variables pinned to 0 under the fixed pivot
/// order; nullopt when the system is inconsistent.
std::optional<Vec> solve(const RatMatrix& m, const Vec& b);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Incremental exact row reduction. The forward pass is fraction-free
/// (integer rows, cross-multiplication, content normalization); exact
/// division to unit pivots happens only when the RREF is extracted.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols);

  /// Reduces the row against current pivots and installs it if independent.
  /// Returns true when the row increased the rank.
  bool add_row(const Vec& row);
  bool add_row_sparse(const std::vector<std::pair<std::size_t, Rat>>& row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Canonical RREF over Q (back-substituted, unit pivots).
  std::vector<Vec> rref() const;
  std::vector<std::size_t> pivot_columns() const;

  /// Kernel of the matrix formed by all rows added so far.
  Subspace kernel() const;

 private:
  using IRow = std::vector<std::pair<std::size_t, Int>>;  // sorted by column
  bool add_irow(IRow r);

  std::size_t cols_;
  std::vector<IRow> rows_;             // echelon rows in pivot-column order
  std::vector<std::size_t> pivot_of_;  // pivot column per row
};

}  // namespace prolong
