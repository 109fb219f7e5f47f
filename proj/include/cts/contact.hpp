#ifndef CTS_CONTACT_HPP
#define CTS_CONTACT_HPP

#include <map>
#include <memory>

#include "cts/forms.hpp"
#include "cts/fpmat.hpp"
#include "cts/slice.hpp"

namespace cts {

/// The contact structure of k(1;N|n): the form
///   α = dt − Σ (v_i dw_i + w_i dv_i) + 2u du
/// (odd pairs (x_i, x_{k+i}) for i < k, a self-paired last variable when n
/// is odd), together with the generating-function ↔ field correspondence.
///
/// A field X is contact when L_X α = μ·α; its generating function is α(X).
/// field_of solves the defining linear system degree by degree, so no
/// closed formula is baked in; solves are cached per degree.
class ContactStructure {
public:
  explicit ContactStructure(SigPtr sig);

  const SigPtr& signature() const { return sig_; }
  const OneForm& alpha() const { return alpha_; }

  /// The unique contact field with α(X_f) = f; f must be parity- and
  /// degree-homogeneous.  deg X_f = deg f − 2, p(X_f) = p(f).
  VectorField field_of(const DPElement& f) const;

  /// α(X), after checking that X is contact (throws otherwise).
  DPElement generating_function(const VectorField& X) const;

  /// Is L_X α ≡ 0 mod α?  (μ is read off the dt coefficient.)
  bool is_contact(const VectorField& X, DPElement* mu_out = nullptr) const;

  /// Echelon-friendly basis {field_of(m) : m monomial of degree k+2}.
  std::vector<VectorField> contact_basis(int k) const;

  /// Dimension of the degree-k contact slice.
  std::size_t slice_dim(int k) const;

private:
  struct DegreeCache {
    std::vector<VectorField> basis;   // contact fields, one per monomial of degree k+2
    std::vector<Monomial> monomials;  // graded basis of O at degree k+2
    FpMat to_field;                   // genfun coords -> contact-basis coords
  };
  const DegreeCache& cache(int k) const;

  SigPtr sig_;
  OneForm alpha_;
  TwoForm dalpha_;
  mutable std::map<int, DegreeCache> cache_;
};

}  // namespace cts

#endif
