#include "prolong/matrix.hpp"

#include <stdexcept>

namespace prolong {

namespace {
constexpr double kSparseFillThreshold = 0.10;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), dense_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void RatMatrix::check_bounds(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("RatMatrix: index out of range");
}

Rat RatMatrix::get(std::size_t i, std::size_t j) const {
  check_bounds(i, j);
  if (!sparse_) return dense_[i * cols_ + j];
  auto it = rows_sparse_[i].find(j);
  return it == rows_sparse_[i].end() ? Rat(0) : it->second;
}

void RatMatrix::set(std::size_t i, std::size_t j, Rat v) {
  check_bounds(i, j);
  if (!sparse_) {
    dense_[i * cols_ + j] = std::move(v);
  } else if (v == 0) {
    rows_sparse_[i].erase(j);
  } else {
    rows_sparse_[i][j] = std::move(v);
  }
}

void RatMatrix::add_to(std::size_t i, std::size_t j, const Rat& v) {
  if (v == 0) return;
  set(i, j, get(i, j) + v);
}

std::vector<std::pair<std::size_t, Rat>> RatMatrix::row_nonzeros(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("RatMatrix: row out of range");
  std::vector<std::pair<std::size_t, Rat>> out;
  if (sparse_) {
    out.assign(rows_sparse_[i].begin(), rows_sparse_[i].end());
  } else {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& v = dense_[i * cols_ + j];
      if (v != 0) out.emplace_back(j, v);
    }
  }
  return out;
}

void RatMatrix::compact() {
  if (sparse_ || rows_ * cols_ == 0) return;
  std::size_t nnz = nonzero_count();
  if (static_cast<double>(nnz) >= kSparseFillThreshold * static_cast<double>(rows_ * cols_))
    return;
  rows_sparse_.assign(rows_, {});
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Rat& v = dense_[i * cols_ + j];
      if (v != 0) rows_sparse_[i].emplace(j, std::move(v));
    }
  dense_.clear();
  dense_.shrink_to_fit();
  sparse_ = true;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, v] : row_nonzeros(i)) t.set(j, i, v);
  return t;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix::apply: size mismatch");
  std::vector<Rat> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, a] : row_nonzeros(i)) out[i] += a * v[j];
  return out;
}

RatMatrix RatMatrix::multiply(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix::multiply: size mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [l, a] : row_nonzeros(i))
      for (auto& [j, b] : rhs.row_nonzeros(l)) out.add_to(i, j, a * b);
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("RatMatrix::operator+: size mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (auto& [j, v] : row_nonzeros(i)) out.add_to(i, j, v);
    for (auto& [j, v] : rhs.row_nonzeros(i)) out.add_to(i, j, v);
  }
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  return *this + rhs.scaled(-1);
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix out(rows_, cols_);
  if (c == 0) return out;
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, v] : row_nonzeros(i)) out.set(i, j, v * c);
  return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    if (row_nonzeros(i) != rhs.row_nonzeros(i)) return false;
  return true;
}

bool RatMatrix::is_zero() const { return nonzero_count() == 0; }

std::size_t RatMatrix::nonzero_count() const {
  std::size_t n = 0;
  if (sparse_) {
    for (auto& r : rows_sparse_) n += r.size();
  } else {
    for (auto& v : dense_)
      if (v != 0) ++n;
  }
  return n;
}

}  // namespace prolong
