#pragma once

#include <vector>

#include "prolong/linalg.hpp"
#include "prolong/matrix.hpp"
#include "prolong/polynomial.hpp"

namespace prolong {

/// Subspace L of Hom(V, W) given by a basis of dim_w x dim_v matrices.
struct LinearMapSpace {
  std::size_t dim_v = 0, dim_w = 0;
  std::vector<RatMatrix> basis;
};

/// First prolongation L^(1) = (V* x L) intersect (Sym^2 V* x W), returned as
/// maps V -> L (dim_w of the result is the number of basis maps of L).
LinearMapSpace standard_prolongation(const LinearMapSpace& l);

/// Iterated prolongations L^(i), computed recursively and memoized.
/// flat_tensors(i) expands each basis element of L^(i) to a symmetric tensor
/// in (V*)^(i+1) x W, flattened with the V slots major and W minor.
class ProlongationChain {
 public:
  explicit ProlongationChain(LinearMapSpace base);

  const LinearMapSpace& level(std::size_t i);
  std::vector<Vec> flat_tensors(std::size_t i);
  Subspace flat_span(std::size_t i);
  std::size_t dim(std::size_t i) { return level(i).basis.size(); }

 private:
  std::vector<LinearMapSpace> levels_;
};

/// L^(i) computed in one shot: unknowns are coordinates of Sym^(i+1) V* x W
/// and the constraint pins every depth-i slice to lie in L. Returned in the
/// same flat tensor coordinates as ProlongationChain::flat_span for direct
/// comparison of the two routes.
Subspace standard_prolongation_direct(const LinearMapSpace& l, std::size_t i);

/// Irreducible gl(2) on binary forms of degree m-1 realized inside gl(m):
/// raising operator, diagonal (m-1-2i), lowering operator i(m-i), identity.
LinearMapSpace gl2_irreducible(std::size_t m);

/// The quadric generators of the secant ideal of the rational normal cone as
/// symmetric maps E -> E*: entry (w, a) is half the mixed second partial.
LinearMapSpace secant_quadrics_as_maps(int k);

/// Polynomial x_{a_1}...x_{a_(i+1)} x_w contraction of a flat tensor from
/// ProlongationChain::flat_tensors over V = W* = E (so all slots are x's).
WeightedPolynomial flat_tensor_poly(int k, std::size_t i, const Vec& flat);

}  // namespace prolong
