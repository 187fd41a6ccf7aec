#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "prolong/rational.hpp"

namespace prolong {

/// Exact rational matrix. Entries are held densely or sparsely depending on
/// fill; the representation is an internal detail and both agree entrywise.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Rat v);
  void add_to(std::size_t i, std::size_t j, const Rat& v);

  /// Nonzero entries of row i as sorted (col, value) pairs.
  std::vector<std::pair<std::size_t, Rat>> row_nonzeros(std::size_t i) const;

  /// Switches to the sparse representation when fill is below the threshold.
  /// Pure storage decision; entry values are unchanged.
  void compact();

  RatMatrix transposed() const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;  // M * v
  RatMatrix multiply(const RatMatrix& rhs) const;

  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rat& c) const;
  bool operator==(const RatMatrix& rhs) const;

  bool is_zero() const;
  std::size_t nonzero_count() const;

 private:
  void check_bounds(std::size_t i, std::size_t j) const;

  std::size_t rows_ = 0, cols_ = 0;
  bool sparse_ = false;
  std::vector<Rat> dense_;                       // row-major, when !sparse_
  std::vector<std::map<std::size_t, Rat>> rows_sparse_;  // when sparse_
};

}  // namespace prolong
