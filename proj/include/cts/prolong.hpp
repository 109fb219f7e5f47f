#ifndef CTS_PROLONG_HPP
#define CTS_PROLONG_HPP

#include <optional>

#include "cts/subalgebra.hpp"

namespace cts {

/// Input of a Cartan–Tanaka–Shchepochkina prolongation: the non-positive
/// part g_{-d} ⊕ … ⊕ g_0 realized inside W(m;N|n;r).
///
/// Preconditions (verified by cts_prolong):
///   * [g_0, g_i] ⊆ g_i for all i < 0,
///   * g_- is generated by g_{-1} ([g_{-1}, g_{-1}] = g_{-2} at depth 2);
/// the membership test at each step then only needs g_{-1}, and the
/// [g_k, g_{-2}] ⊆ g_{k-2} condition is verified post hoc.
struct ProlongProblem {
  GradedSubalgebra nonpos;
  /// Commuting semisimple degree-0 fields; when present, each step solves
  /// blockwise per weight (cross-checked against the plain solve in tests).
  std::vector<VectorField> torus;
  /// Hard cap override; default 2(p^N − 1) + n − 2.
  std::optional<int> max_degree;
};

struct ProlongResult {
  GradedSubalgebra alg;
  int top_degree = 0;
  /// Set when the cap was reached with a nonzero last component.
  bool truncated = false;
};

int default_degree_cap(const Signature& sig);

/// Degree-k component {X ∈ W_k : [X, Y] ∈ target for all Y ∈ g_{-1}},
/// where target is the degree k−1 component computed so far.
EchelonSpan prolong_step(const SigPtr& sig, const std::vector<VectorField>& g_minus1,
                         const EchelonSpan* target, int k,
                         const std::vector<VectorField>* torus = nullptr);

/// Full prolongation: iterates prolong_step from degree 1, stops at the
/// first zero component or at the cap, then verifies bracket closure over
/// every computed pair of components.
ProlongResult cts_prolong(const ProlongProblem& problem);

/// Shchepochkina partial prolong of (g_{≤0}, h_1): h_1 must be a
/// g_0-submodule of the degree-1 solution space with [g_{-1}, h_1] = g_0;
/// components h_i for i ≥ 2 solve [X, g_{-1}] ⊆ h_{i-1}.
ProlongResult partial_prolong(const ProlongProblem& problem, const std::vector<VectorField>& h1);

}  // namespace cts

#endif
