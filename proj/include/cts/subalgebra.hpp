#ifndef CTS_SUBALGEBRA_HPP
#define CTS_SUBALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cts/fpmat.hpp"
#include "cts/slice.hpp"

namespace cts {

/// Z-graded subalgebra of W(m;N|n;r): one echelonized basis of homogeneous
/// fields per degree.  Component bases are reduced row echelon w.r.t. the
/// canonical field_basis coordinates, so equal subspaces have identical
/// stored bases regardless of construction order.
class GradedSubalgebra {
public:
  GradedSubalgebra() = default;
  explicit GradedSubalgebra(SigPtr sig) : sig_(std::move(sig)) {}

  const SigPtr& signature() const { return sig_; }

  /// Inserts a degree/parity-homogeneous field; returns true if the span
  /// grew.  Throws on inhomogeneous input.
  bool insert(const VectorField& X);

  bool has_component(int k) const { return comps_.count(k) != 0; }
  std::size_t component_dim(int k) const;
  std::vector<int> degrees() const;
  int min_degree() const;
  int max_degree() const;
  std::size_t dim() const;
  /// (even, odd) total dimensions.
  std::pair<std::size_t, std::size_t> sdim() const;

  /// Canonical basis fields of the degree-k component (empty if none).
  std::vector<VectorField> basis(int k) const;
  /// Flat basis over all degrees, degree-ascending.
  std::vector<VectorField> flat_basis() const;

  const EchelonSpan* span(int k) const;

  bool contains(const VectorField& X) const;
  bool operator==(const GradedSubalgebra& o) const;
  bool operator!=(const GradedSubalgebra& o) const { return !(*this == o); }

  /// Componentwise subspace test.
  bool contained_in(const GradedSubalgebra& o) const;

private:
  SigPtr sig_;
  std::map<int, EchelonSpan> comps_;
};

/// Exact membership report for a homogeneous field against a component.
struct Membership {
  bool in_span = false;
  std::vector<std::uint32_t> coords;    // w.r.t. the canonical component basis
  std::vector<std::uint32_t> residual;  // pivot residue certificate (slice coords)
};
Membership span_membership(const VectorField& X, const GradedSubalgebra& alg, int degree);

/// Smallest bracket-closed graded span of the given homogeneous fields.
GradedSubalgebra bracket_closure(const SigPtr& sig, const std::vector<VectorField>& generators);

/// Nonzero structure constants [e_i, e_j] = Σ c e_k over the flat basis of
/// a bracket-closed algebra, i ≤ j, deterministic order.  Throws (naming
/// the offending bracket) if the algebra is not closed.
struct StructureConstant {
  std::size_t i, j, k;
  std::uint32_t c;
};
std::vector<StructureConstant> structure_constants(const GradedSubalgebra& alg);

/// Flat-coordinate view of a bracket-closed GradedSubalgebra: basis fields,
/// degrees, parities and the full bracket table, for ideal/center work.
class CoordAlgebra {
public:
  explicit CoordAlgebra(const GradedSubalgebra& alg);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<VectorField>& basis() const { return basis_; }
  int degree(std::size_t i) const { return degrees_[i]; }
  std::uint32_t parity(std::size_t i) const { return parities_[i]; }
  std::uint32_t p() const { return p_; }

  /// Coordinates of [e_i, e_j].
  const std::vector<std::uint32_t>& table(std::size_t i, std::size_t j) const {
    return table_[i * basis_.size() + j];
  }
  /// Bracket of coordinate vectors.
  std::vector<std::uint32_t> bracket_coords(const std::vector<std::uint32_t>& x,
                                            const std::vector<std::uint32_t>& y) const;

  /// Smallest subspace containing seed with [g, I] ⊆ I.
  EchelonSpan ideal_closure(const std::vector<std::vector<std::uint32_t>>& seed) const;
  /// Span of all brackets.
  EchelonSpan derived_span() const;
  /// Centralizer of the whole algebra.
  EchelonSpan center_span() const;
  bool is_abelian() const;

  VectorField field_from(const std::vector<std::uint32_t>& coords) const;
  GradedSubalgebra subalgebra_from(const EchelonSpan& span) const;

private:
  std::uint32_t p_;
  SigPtr sig_;
  std::vector<VectorField> basis_;
  std::vector<int> degrees_;
  std::vector<std::uint32_t> parities_;
  std::vector<std::vector<std::uint32_t>> table_;
};

/// Exact eigenvalue vector of a commuting torus action.
struct Weight {
  std::vector<std::uint32_t> eigenvalues;
  auto operator<=>(const Weight&) const = default;
};

/// Simultaneous eigenspace decomposition of a component under pairwise
/// commuting, semisimply acting torus fields.  Throws naming the failing
/// operator when the action is not diagonalizable over GF(p).
std::map<Weight, std::vector<VectorField>> weight_decompose(const GradedSubalgebra& alg, int degree,
                                                            const std::vector<VectorField>& torus);

/// Joint kernel of ad(border) on a component, echelonized, each vector
/// scaled so its leading canonical coordinate is 1.
std::vector<VectorField> singular_vectors(const GradedSubalgebra& alg, int degree,
                                          const std::vector<VectorField>& border);

/// Submodules of a component generated by each singular vector under the
/// degree-0 action.
struct ModuleSummand {
  VectorField lowest_weight;
  std::vector<VectorField> basis;
  std::uint32_t parity;
};
struct ModuleDecomposition {
  std::vector<ModuleSummand> summands;
  bool direct_sum = false;   // sum is direct and exhausts the component
};
ModuleDecomposition decompose_module(const GradedSubalgebra& alg, int degree,
                                     const std::vector<VectorField>& acting,
                                     const std::vector<VectorField>& border);

/// Center of the algebra as fields.
std::vector<VectorField> center(const GradedSubalgebra& alg);

GradedSubalgebra derived_subalgebra(const GradedSubalgebra& alg);

/// Graded simplicity criterion.  border_neg/pos are the lowering/raising
/// generators of the degree-0 action used for the irreducibility clause.
struct SimplicityChecklist {
  bool neg1_irreducible = false;      // (a) g_{-1} irreducible over g_0
  bool neg_generated = false;         // (b) [g_{-1}, g_{-1}] = g_{-2}
  bool bracket_onto_g0 = false;       // (c) [g_1, g_{-1}] = g_0
  bool pos_generated = false;         // (d) [g_1, g_k] = g_{k+1} for k >= 1
  bool transitive = false;            // (e) no X, deg >= 0, [X, g_{-1}] = 0
  bool simple() const {
    return neg1_irreducible && neg_generated && bracket_onto_g0 && pos_generated && transitive;
  }
};
SimplicityChecklist is_simple_criterion(const GradedSubalgebra& alg,
                                        const std::vector<VectorField>& border_neg,
                                        const std::vector<VectorField>& border_pos);

/// Oracle: every basis vector's ideal closure is the whole algebra and the
/// algebra is non-abelian.  Refuses above the dimension cap.
bool is_simple_bruteforce(const GradedSubalgebra& alg, std::size_t cap = 200);

/// Ideal closure of the negative part followed by derived passes until
/// stable; the result is verified simple by the brute-force oracle (and by
/// the criterion when borders are supplied).  Throws with the failing
/// checklist otherwise.
GradedSubalgebra simple_ideal(const GradedSubalgebra& alg,
                              const std::vector<VectorField>* border_neg = nullptr,
                              const std::vector<VectorField>* border_pos = nullptr);

}  // namespace cts

#endif
