#pragma once

#include "prolong/polynomial.hpp"

namespace prolong {

/// d/dx_i = @/@x_i + (y_i/2) @/@z applied to f.
WeightedPolynomial dx_long(const WeightedPolynomial& f, int i);
/// d/dy_i = @/@y_i - (x_i/2) @/@z applied to f.
WeightedPolynomial dy_long(const WeightedPolynomial& f, int i);

/// {f,g} = f g_z - g f_z + sum_i (df/dx_i dg/dy_i - dg/dx_i df/dy_i),
/// the Lagrange bracket of generating functions of contact fields.
WeightedPolynomial contact_bracket(const WeightedPolynomial& f, const WeightedPolynomial& g);

/// First-order differential operator: sum cx[i] @x_i + cy[i] @y_i + cz @z.
struct ContactField {
  std::vector<WeightedPolynomial> cx, cy;
  WeightedPolynomial cz;

  bool operator==(const ContactField& rhs) const;
};

/// The contact field X_f with theta(X_f) = f for
/// theta = dz + (1/2) sum (x_i dy_i - y_i dx_i).
ContactField to_field(const WeightedPolynomial& f);

/// Commutator [A, B] of first-order operators.
ContactField field_commutator(const ContactField& a, const ContactField& b);

}  // namespace prolong
