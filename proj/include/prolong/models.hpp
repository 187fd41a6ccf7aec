#pragma once

#include <string>
#include <vector>

#include "prolong/contact.hpp"
#include "prolong/lie_algebra.hpp"
#include "prolong/polynomial.hpp"
#include "prolong/prolongation.hpp"

namespace prolong {

/// The depth-mu(k) symbol m(k) of the rank-3 distribution family, k >= 2.
/// Basis order: X, E_1..E_k, F_{k-1}, F_k, N.
GradedAlgebra make_m(int k);

/// The larger graded algebra g'(k) containing m(k), dim 2k+4, k >= 2.
/// Basis order: X, E_0..E_k, F_0..F_k, N.
GradedAlgebra make_gprime(int k);

/// Heisenberg algebra n(k) of dim 2k+3 with the split symplectic form
/// sigma(E_i, F_j) = (-1)^i delta_{i,k-j}. J is the Gram matrix of sigma
/// over the degree -1 basis E_0..E_k, F_0..F_k.
struct HeisenbergModel {
  GradedAlgebra algebra;
  RatMatrix J;
};
HeisenbergModel make_heisenberg(int k);

/// Catalecticant matrix with (i,j) entry (i+j)! * x_{i+j}, shape
/// (r+2) x (k-r). Requires 0 <= r and r+2 <= k-r.
struct HankelMatrix {
  int k = 0, r = 0;
  std::size_t rows = 0, cols = 0;
  struct Entry {
    Rat coeff;
    int var;  // index of x_var
  };
  std::vector<std::vector<Entry>> entries;

  WeightedPolynomial entry_poly(std::size_t i, std::size_t j) const;
};
HankelMatrix hankel(int k, int r);

/// All maximal minors of hankel(k, r): generators of the ideal of the r-th
/// secant variety of the cone over the rational normal curve. Column subsets
/// in lexicographic order; count C(k-r, r+2); validated linearly independent.
std::vector<WeightedPolynomial> secant_ideal(int k, int r);

/// Point u^(k-i) v^i / i! of the cone over the rational normal curve.
std::vector<Rat> curve_point(int k, const Rat& u, const Rat& v);

struct CurveParam {
  Rat scale, u, v;
};
/// Sum of r+1 scaled curve points: a point of the r-th secant cone.
std::vector<Rat> secant_point(int k, int r, const std::vector<CurveParam>& params);

/// Contact-polynomial realization of n(k): each basis element of the
/// Heisenberg model is sent to a generating polynomial; the Lagrange bracket
/// of the images reproduces the structure constants. The F-images carry a
/// global sign making the map a homomorphism for every parity of k.
struct NSEmbedding {
  int k = 0;
  int f_sign = 1;  // (-1)^(k+1)
  std::vector<WeightedPolynomial> images;  // aligned with heisenberg basis
};
NSEmbedding embed_ns(int k);

/// The reductive-plus-ideal subalgebra s acting on n(k): gl(2) spanned by
/// X, H, Y plus the two central scalings Z1, Z2 plus all 2x2 minors of the
/// full catalecticant, realized as weight-2 generating polynomials. k >= 3.
struct SModel {
  int k = 0;
  int f_sign = 1;
  HeisenbergModel heis;
  NSEmbedding embedding;
  std::vector<std::string> s_names;
  std::vector<WeightedPolynomial> s_polys;
  std::vector<Derivation> s_derivations;  // action on n, aligned with s_names
  GradedAlgebra ns;                       // n + s as one graded algebra
};
SModel make_s(int k);

/// Coordinates of a weight-1 polynomial over the n_-1 images (E then F),
/// with the constant term on N last; throws when not weight <= 1 linear.
Vec n_coordinates(const NSEmbedding& e, const WeightedPolynomial& p);

}  // namespace prolong
