#ifndef CTS_VFIELD_HPP
#define CTS_VFIELD_HPP

#include <optional>
#include <string>
#include <vector>

#include "cts/element.hpp"

namespace cts {

/// Special vector field X = Σ f_i ∂_i of W(m;N|n;r), stored extensionally
/// by its coefficient vector.  Parity and weighted degree are defined when
/// every nonzero coefficient agrees: p(X) = p(f_i) + p(∂_i),
/// deg X = deg f_i − weight_i.
class VectorField {
public:
  VectorField() = default;
  explicit VectorField(SigPtr sig) : sig_(sig), comps_(sig ? sig->count() : 0, DPElement(sig)) {}

  static VectorField zero(SigPtr sig) { return VectorField(std::move(sig)); }
  /// The coordinate derivation ∂_i.
  static VectorField partial(SigPtr sig, std::uint32_t i) {
    VectorField X(sig);
    X.comps_[i] = DPElement::one(sig);
    return X;
  }
  /// f·∂_i.
  static VectorField monomial_field(SigPtr sig, const DPElement& f, std::uint32_t i) {
    VectorField X(sig);
    X.comps_[i] = f;
    return X;
  }

  const SigPtr& signature() const { return sig_; }
  const DPElement& coefficient(std::uint32_t i) const { return comps_[i]; }
  DPElement& coefficient(std::uint32_t i) { return comps_[i]; }

  bool is_zero() const {
    for (const auto& f : comps_)
      if (!f.is_zero()) return false;
    return true;
  }

  VectorField operator+(const VectorField& Y) const;
  VectorField operator-(const VectorField& Y) const;
  VectorField scaled(std::uint32_t c) const;
  VectorField& operator+=(const VectorField& Y) { return *this = *this + Y; }
  bool operator==(const VectorField& Y) const;
  bool operator!=(const VectorField& Y) const { return !(*this == Y); }

  std::optional<std::uint32_t> parity() const;
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  /// Slice of the given weighted degree.
  VectorField component(int k) const;

  std::string render() const;

private:
  SigPtr sig_;
  std::vector<DPElement> comps_;
};

/// X(f) = Σ f_i · ∂_i(f).
DPElement apply(const VectorField& X, const DPElement& f);

/// Superbracket [X,Y] = X∘Y − (−1)^{p(X)p(Y)} Y∘X of special fields,
/// computed coefficientwise: Σ_j X(Y_j)∂_j − (−1)^{p(X)p(Y)} Σ_i Y(X_i)∂_i.
/// Inputs must be parity-homogeneous.
VectorField bracket(const VectorField& X, const VectorField& Y);

/// Basis {u^r ∂_i : deg u^r − weight_i = k} of the degree-k slice of
/// W(m;N|n;r), ordered direction-major (∂_t first), monomials canonical.
std::vector<VectorField> field_basis(const SigPtr& sig, int k);

/// Single-term description of a field_basis element.
struct SliceEntry {
  Monomial m;
  std::uint32_t dir;
};
std::vector<SliceEntry> field_slice_entries(const Signature& sig, int k);

/// Parses the field rendering grammar (terms `[coef] [monomial] d/d<name>`
/// joined by '+'/'-').
VectorField parse_field(const SigPtr& sig, const std::string& text);

}  // namespace cts

#endif
