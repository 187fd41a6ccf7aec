#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prolong/rational.hpp"

namespace prolong {

/// Exponent multi-index over x_0..x_k, y_0..y_k, z (in that order).
struct Monomial {
  std::vector<std::uint32_t> e;

  std::uint32_t total_degree() const;
  bool operator==(const Monomial& rhs) const { return e == rhs.e; }
};

/// Graded lexicographic order on the concatenated exponent vector.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class Grading { Standard, Second };

struct WeightInfo {
  enum class Kind { Zero, Homogeneous, Inhomogeneous };
  Kind kind = Kind::Zero;
  int value = 0;  // meaningful only for Homogeneous
};

/// Sparse multivariate polynomial in x_0..x_k, y_0..y_k, z over Q, carrying
/// the two weight gradings of the contact realization. No zero coefficients
/// are stored; term order is canonical.
class WeightedPolynomial {
 public:
  explicit WeightedPolynomial(int k) : k_(k) {}

  static WeightedPolynomial constant(int k, Rat c);
  static WeightedPolynomial var_x(int k, int i);
  static WeightedPolynomial var_y(int k, int i);
  static WeightedPolynomial var_z(int k);

  int k() const { return k_; }
  std::size_t var_count() const { return 2 * (k_ + 1) + 1; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat, MonomialLess>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c);

  WeightedPolynomial operator+(const WeightedPolynomial& rhs) const;
  WeightedPolynomial operator-(const WeightedPolynomial& rhs) const;
  WeightedPolynomial operator*(const WeightedPolynomial& rhs) const;
  WeightedPolynomial scaled(const Rat& c) const;
  bool operator==(const WeightedPolynomial& rhs) const;

  WeightedPolynomial dx(int i) const;  // partial d/dx_i
  WeightedPolynomial dy(int i) const;
  WeightedPolynomial dz() const;

  /// Evaluation at rational points: xs, ys of length k+1 plus z.
  Rat evaluate(const std::vector<Rat>& xs, const std::vector<Rat>& ys, const Rat& z) const;

  /// Evaluation with y = 0, z = 0 (polynomials on E).
  Rat evaluate_x(const std::vector<Rat>& xs) const;

  /// Standard: wt(x_i) = wt(y_i) = 1, wt(z) = 2.
  /// Second:   wt(x_i) = i, wt(y_i) = 2 - i, wt(z) = 2.
  WeightInfo weight(Grading g) const;

  /// Sum of homogeneous pieces of the given weight.
  WeightedPolynomial graded_part(Grading g, int w) const;

  std::string to_string() const;
  std::string to_json() const;

 private:
  int monomial_weight(const Monomial& m, Grading g) const;

  int k_;
  std::map<Monomial, Rat, MonomialLess> terms_;
};

}  // namespace prolong
