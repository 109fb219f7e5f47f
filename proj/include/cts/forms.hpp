#ifndef CTS_FORMS_HPP
#define CTS_FORMS_HPP

#include <map>
#include <tuple>
#include <vector>

#include "cts/vfield.hpp"

namespace cts {

// Super differential forms up to degree 3 (degree 3 exists only so d∘d = 0
// is testable on one-forms).  Conventions, locked by the invariant suite:
//   * du_i carries the parity of u_i and weight weight_i;
//   * du_i du_j = −(−1)^{p_i p_j} du_j du_i (so du² ≠ 0 for odd u);
//   * d(f) = Σ ∂_i(f) du_i, coefficients on the left;
//   * ι_X(f du_i) = X^i · f (the inserted field's coefficient comes out
//     leftmost, so ι_X(df) = X(f) exactly);
//   * L_X ω = ι_X(dω) + (−1)^{p(X)} d(ι_X ω).
// The parity twist in L is what the super chain rule demands here: with a
// plain "+" the odd pairing of a contact form degenerates mod 3.

/// ω = Σ f_i du_i.
class OneForm {
public:
  OneForm() = default;
  explicit OneForm(SigPtr sig) : sig_(sig), comps_(sig ? sig->count() : 0, DPElement(sig)) {}

  const SigPtr& signature() const { return sig_; }
  const DPElement& coefficient(std::uint32_t i) const { return comps_[i]; }
  DPElement& coefficient(std::uint32_t i) { return comps_[i]; }

  bool is_zero() const {
    for (const auto& f : comps_)
      if (!f.is_zero()) return false;
    return true;
  }

  OneForm operator+(const OneForm& o) const;
  OneForm operator-(const OneForm& o) const;
  bool operator==(const OneForm& o) const;
  bool operator!=(const OneForm& o) const { return !(*this == o); }

private:
  SigPtr sig_;
  std::vector<DPElement> comps_;
};

/// Σ c_{ij} du_i du_j, storage normalized to i ≤ j (i = j only for odd i)
/// with the swap sign folded in.
class TwoForm {
public:
  TwoForm() = default;
  explicit TwoForm(SigPtr sig) : sig_(sig) {}

  const SigPtr& signature() const { return sig_; }
  const std::map<std::pair<std::uint32_t, std::uint32_t>, DPElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·du_a du_b in any index order; normalizes.
  void add(std::uint32_t a, std::uint32_t b, const DPElement& c);
  DPElement coefficient(std::uint32_t i, std::uint32_t j) const;

private:
  void put(std::uint32_t i, std::uint32_t j, const DPElement& c);
  SigPtr sig_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, DPElement> terms_;
};

/// Normalized triple-index storage; only d: Ω²→Ω³ feeds it (test support).
class ThreeForm {
public:
  explicit ThreeForm(SigPtr sig) : sig_(sig) {}
  bool is_zero() const { return terms_.empty(); }
  void add(std::uint32_t a, std::uint32_t b, std::uint32_t c, const DPElement& f);
  const std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, DPElement>& terms() const { return terms_; }

private:
  SigPtr sig_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, DPElement> terms_;
};

OneForm d(const DPElement& f);
TwoForm d(const OneForm& w);
ThreeForm d(const TwoForm& w);

/// ι_X ω = α(X)-style pairing: Σ X^i · f_i.
DPElement interior(const VectorField& X, const OneForm& w);
/// First-slot contraction of a 2-form.
OneForm interior(const VectorField& X, const TwoForm& w);

/// L_X ω = ι_X(dω) + (−1)^{p(X)} d(ι_X ω); X must be parity-homogeneous.
OneForm lie_derivative(const VectorField& X, const OneForm& w);

}  // namespace cts

#endif
