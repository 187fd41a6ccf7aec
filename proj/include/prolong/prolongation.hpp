#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prolong/lie_algebra.hpp"
#include "prolong/matrix.hpp"

namespace prolong {

/// Grading-preserving degree-0 map of a graded algebra: one square block per
/// occupied negative degree.
struct Derivation {
  std::map<int, RatMatrix> blocks;  // degree d -> matrix on the degree-d component
};

/// One homogeneous piece of the prolongation being built. A basis element of
/// degree p acts on every negative base component; the map out of degree -j
/// lands in the component of degree p-j (base coordinates when p-j < 0,
/// component coordinates when p-j >= 0).
struct ProlongComponent {
  struct Element {
    std::map<int, RatMatrix> action;  // key: negative base degree -j
  };
  int degree = 0;
  std::vector<Element> basis;
  /// Canonical echelon coordinates in Hom(g_-1, comp_{degree-1}).
  Subspace coords;

  std::size_t dim() const { return basis.size(); }
};

struct ProlongStats {
  int degree = 0;
  std::size_t unknowns = 0;
  std::size_t constraint_rows = 0;
  double seconds = 0.0;
};

enum class Termination { Vanished, Capped };

struct ProlongationResult {
  GradedAlgebra base;
  std::vector<ProlongComponent> components;  // degrees 0, 1, ... in order
  GradedAlgebra assembled;
  Termination terminated = Termination::Vanished;
  int nu = 0;  // largest degree with a nonzero component
  std::vector<ProlongStats> stats;

  std::size_t total_dim() const { return assembled.dim(); }
  std::map<int, std::size_t> dims_by_degree() const;
};

/// Incremental prolongation tower over a fundamental negatively graded base.
/// The unknown at degree p is restricted to maps out of g_-1; values on
/// deeper components are propagated through the derivation identity, which
/// is valid because the base is fundamental.
class ProlongationState {
 public:
  explicit ProlongationState(GradedAlgebra base);

  const GradedAlgebra& base() const { return base_; }
  int depth() const { return -base_.min_degree(); }

  /// Validates each map is a grading-preserving derivation and the set is
  /// closed under commutator, then installs it as the degree-0 component.
  void install_fixed_g0(const std::vector<Derivation>& g0);

  /// Computes Der0 and installs it as the degree-0 component.
  void compute_g0();

  /// Space of degree-p prolongation elements given everything below p.
  ProlongComponent compute_step(int p) const;
  void install(ProlongComponent c);

  const std::vector<ProlongComponent>& components() const { return components_; }
  const ProlongStats& last_stats() const { return last_stats_; }

  /// Debug/validation route: the same component computed from the full
  /// multi-block unknown (maps out of every negative degree) with no
  /// propagation. Returned in flattened full-map coordinates.
  Subspace compute_step_full(int p) const;

  /// Flattened full-map coordinates (all blocks concatenated) of an element.
  Vec flatten_element(const ProlongComponent::Element& e) const;
  std::size_t full_flat_dim(int p) const;

  /// With truncate_at_top, brackets landing above the top computed component
  /// are dropped and Jacobi validation is skipped: that is the honest
  /// truncation of a capped tower, which is not itself a Lie algebra. The
  /// default refuses such escapes loudly.
  GradedAlgebra assemble(bool truncate_at_top = false) const;

 private:
  std::size_t comp_dim(int degree) const;
  // Bracket of basis element t of the (nonneg or base) component of degree c
  // with base basis element at position pos of degree -j, in component
  // coordinates of degree c-j.
  Vec bracket_with_neg(int c, std::size_t t, int j, std::size_t pos) const;

  GradedAlgebra base_;
  // Base bookkeeping: indices per degree, and (degree, position) per index.
  std::map<int, std::vector<std::size_t>> base_by_degree_;
  std::vector<std::pair<int, std::size_t>> base_pos_;
  // Representation of each deeper basis element as brackets of g_-1 with the
  // previous component (fundamentality): list of (a, b, coeff) meaning
  // coeff * [g_-1 basis a, g_-(j-1) basis b].
  std::map<int, std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rat>>>> gen_repr_;
  std::vector<ProlongComponent> components_;
  mutable ProlongStats last_stats_;
};

/// Full Tanaka prolongation of a fundamental negatively graded algebra, or
/// (with fixed_g0) the prolongation of the non-positively graded extension.
ProlongationResult tanaka(const GradedAlgebra& m,
                          const std::optional<std::vector<Derivation>>& fixed_g0,
                          int max_degree);

/// Der0 as a canonical subspace of flattened full maps.
Subspace der0(const GradedAlgebra& m);
std::vector<Derivation> der0_basis(const GradedAlgebra& m);

/// Flattened full-map vector of a derivation (blocks in degree order -1, -2, ...).
Vec flatten_derivation(const GradedAlgebra& m, const Derivation& d);

std::string result_to_json(const ProlongationResult& r);

}  // namespace prolong
