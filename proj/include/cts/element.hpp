#ifndef CTS_ELEMENT_HPP
#define CTS_ELEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cts/fp.hpp"
#include "cts/monomial.hpp"
#include "cts/signature.hpp"

namespace cts {

/// Element of O(m;N|n): a GF(p)-linear combination of supermonomials.
/// Terms are kept sorted (intrinsic monomial order), coefficients nonzero.
class DPElement {
public:
  struct Term {
    Monomial m;
    std::uint32_t c;  // canonical residue, nonzero
  };

  DPElement() = default;
  explicit DPElement(SigPtr sig) : sig_(std::move(sig)) {}
  DPElement(SigPtr sig, const Monomial& m, std::uint32_t c = 1) : sig_(std::move(sig)) {
    c %= sig_->p();
    if (c) terms_.push_back({m, c});
  }

  static DPElement zero(SigPtr sig) { return DPElement(std::move(sig)); }
  static DPElement one(SigPtr sig) { return DPElement(std::move(sig), Monomial::one(), 1); }
  static DPElement generator(SigPtr sig, std::uint32_t i) {
    Monomial m = Monomial::generator(*sig, i);
    return DPElement(std::move(sig), m, 1);
  }

  const SigPtr& signature() const { return sig_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::uint32_t coeff(const Monomial& m) const;

  DPElement operator+(const DPElement& g) const;
  DPElement operator-(const DPElement& g) const;
  DPElement& operator+=(const DPElement& g) { return *this = *this + g; }
  DPElement& operator-=(const DPElement& g) { return *this = *this - g; }
  DPElement scaled(std::uint32_t c) const;
  DPElement operator-() const { return scaled(sig_ ? sig_->p() - 1 : 2); }
  bool operator==(const DPElement& g) const;
  bool operator!=(const DPElement& g) const { return !(*this == g); }

  /// Homogeneity queries.  degree()/parity() return nullopt for 0 and for
  /// mixed elements.
  std::optional<int> degree() const;
  std::optional<std::uint32_t> parity() const;
  bool is_homogeneous() const { return is_zero() || (degree().has_value() && parity().has_value()); }
  /// Slice of the given weighted degree.
  DPElement component(int d) const;

  std::string render() const;

  /// Adds c·u^m (storage primitive; keeps order and nonzero invariants).
  void add_term(const Monomial& m, std::uint32_t c);

private:
  SigPtr sig_;
  std::vector<Term> terms_;
};

/// Divided-powers product: bilinear extension of
/// u^r · u^s = binom(r+s, r) u^{r+s} with Koszul signs from reordering odd
/// factors; odd squares vanish, even overflow past p^{N_i}-1 vanishes via
/// the Lucas coefficient.
DPElement dp_mul(const DPElement& f, const DPElement& g);

/// Product of two single monomials; returns coefficient (possibly 0) and
/// the resulting monomial.
std::pair<std::uint32_t, Monomial> mono_mul(const Signature& sig, const Monomial& a, const Monomial& b);

/// Special derivation ∂_i acting from the left:
/// ∂_i(u_j^{(k)}) = δ_ij u_j^{(k-1)}, with a sign -1 for each odd factor an
/// odd ∂_i passes.
DPElement special_derive(std::uint32_t i, const DPElement& f);

/// Basis of the degree-d slice of O(m;N|n), canonically ordered.
std::vector<Monomial> graded_monomials(const Signature& sig, int d);

/// Parses the rendering grammar: terms joined by '+'/'-', each term an
/// optional decimal coefficient followed by factors `name` or `name^(k)`
/// in any order (Koszul signs applied by multiplication order).
DPElement parse_element(const SigPtr& sig, const std::string& text);

}  // namespace cts

#endif
