#ifndef CTS_AG2_HPP
#define CTS_AG2_HPP

#include <array>
#include <memory>
#include <string>

#include "cts/contact.hpp"
#include "cts/prolong.hpp"

namespace cts {

/// One of the four inequivalent Cartan matrices of ag(2), with the parity
/// marker of each Chevalley generator (data only; prolong runs use the
/// first matrix).
struct CartanMatrixRecord {
  int index;
  std::array<std::array<int, 3>, 3> a;
  std::array<int, 3> odd;
};
const std::array<CartanMatrixRecord, 4>& ag2_cartan_matrices();

/// The realized non-positive part of the ag(2) model inside k(1;N|7):
/// contact fields of the generating functions
///   X_1^+ = −v4 w3 − u v1,  X_2^+ = v3 w1,
///   X_1^- = −v3 w4 − u w1,  X_2^- = v1 w3,
/// their Chevalley descendants X_i^± (i ≤ 6), H_1, H_2, the grading field
/// X_t, and the assembled graded pieces.
struct RealizedModel {
  SigPtr sig;
  std::shared_ptr<ContactStructure> C;
  VectorField Xt;
  std::array<VectorField, 6> Xp, Xm;  // X_1^±..X_6^±
  VectorField H1, H2;
  GradedSubalgebra negative;     // g_{-2} ⊕ g_{-1}
  GradedSubalgebra nonpos_full;  // g_{-2} ⊕ g_{-1} ⊕ (g(2) ⊕ z)
  std::size_t g2_dim = 0;        // dim bracket_closure({X_1^±, X_2^±})
};

RealizedModel build_model(std::uint32_t p, std::uint32_t N);

/// Chevalley relation check of the realized X_1^±, X_2^±, H_i against a
/// 2×2 Cartan matrix, matrix-vs-transpose orientation auto-detected.
struct ChevalleyReport {
  bool pass = false;
  bool transposed = false;      // relations matched A^T instead of A
  std::string detail;           // mismatch description when failing
};
ChevalleyReport verify_chevalley(const RealizedModel& model, const std::array<std::array<int, 2>, 2>& a);

/// p = 3 only: psl(3) ⊕ z̃ with psl(3) = closure{X_1^±, X_3^±} (dim 7) and
/// z̃ = span of the field of t + v1 w1 + v3 w3 + 2 v4 w4.  Verified: the
/// closure has dimension 7, the sum is direct, and z̃ is central.
GradedSubalgebra build_tilde_g0(const RealizedModel& model);

/// psl(3) lowering/raising generators (x_1^± = X_1^±, x_2^± = X_3^±).
std::vector<VectorField> tilde_border_neg(const RealizedModel& model);
std::vector<VectorField> tilde_border_pos(const RealizedModel& model);

}  // namespace cts

#endif
