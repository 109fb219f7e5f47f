#include "cts/contact.hpp"

#include <stdexcept>

namespace cts {

ContactStructure::ContactStructure(SigPtr sig) : sig_(std::move(sig)), alpha_(sig_), dalpha_(sig_) {
  const Signature& s = *sig_;
  if (s.even_count() != 1 || s.weight(0) != 2)
    throw std::invalid_argument("ContactStructure: expected one even indeterminate of weight 2");
  for (std::uint32_t j = 0; j < s.odd_count(); ++j)
    if (s.weight(1 + j) != 1) throw std::invalid_argument("ContactStructure: odd weights must be 1");
  const std::uint32_t n = s.odd_count();
  const std::uint32_t k = n / 2;
  alpha_.coefficient(0) = DPElement::one(sig_);
  for (std::uint32_t i = 0; i < k; ++i) {
    // − v_i dw_i − w_i dv_i  (positions: v block first, then w block)
    alpha_.coefficient(1 + k + i) += -DPElement::generator(sig_, 1 + i);
    alpha_.coefficient(1 + i) += -DPElement::generator(sig_, 1 + k + i);
  }
  if (n % 2) {
    // self-paired last odd indeterminate; the coefficient is 2^{-1} mod p,
    // which for p = 3 is literally the printed 2 u du (its Gram entry is
    // then twice the hyperbolic pairs', matching the invariant cubic's
    // normalization at every p)
    alpha_.coefficient(n) += DPElement::generator(sig_, n).scaled((s.p() + 1) / 2);
  }
  dalpha_ = d(alpha_);
}

bool ContactStructure::is_contact(const VectorField& X, DPElement* mu_out) const {
  OneForm L = lie_derivative(X, alpha_);
  DPElement mu = L.coefficient(0);  // α's dt coefficient is 1
  for (std::uint32_t i = 0; i < sig_->count(); ++i) {
    DPElement rem = L.coefficient(i) - dp_mul(mu, alpha_.coefficient(i));
    if (!rem.is_zero()) return false;
  }
  if (mu_out) *mu_out = mu;
  return true;
}

const ContactStructure::DegreeCache& ContactStructure::cache(int k) const {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;

  DegreeCache dc;
  dc.monomials = graded_monomials(*sig_, k + 2);
  const Slice& wk = Slice::get(sig_, k);
  const std::uint32_t p = sig_->p();

  // Constraint matrix: rows = coefficients of L_e α − μ_e α over all du_j
  // and all monomials; columns = W_k basis.  μ_e is the dt coefficient.
  std::vector<std::vector<std::uint32_t>> rows;  // built transposed below
  std::size_t ncols = wk.dim();
  std::vector<OneForm> rem(ncols, OneForm(sig_));
  for (std::size_t e = 0; e < ncols; ++e) {
    VectorField f = wk.field(sig_, [&] {
      std::vector<std::uint32_t> v(ncols, 0);
      v[e] = 1;
      return v;
    }());
    OneForm L = lie_derivative(f, alpha_);
    DPElement mu = L.coefficient(0);
    OneForm r(sig_);
    for (std::uint32_t j = 0; j < sig_->count(); ++j)
      r.coefficient(j) = L.coefficient(j) - dp_mul(mu, alpha_.coefficient(j));
    rem[e] = std::move(r);
  }
  // collect the monomial support per direction
  std::size_t nrows = 0;
  std::vector<std::map<Monomial, std::size_t>> rowindex(sig_->count());
  for (std::size_t e = 0; e < ncols; ++e)
    for (std::uint32_t j = 0; j < sig_->count(); ++j)
      for (const auto& t : rem[e].coefficient(j).terms())
        if (rowindex[j].emplace(t.m, nrows).second) ++nrows;
  FpMat A(nrows, ncols, p);
  for (std::size_t e = 0; e < ncols; ++e)
    for (std::uint32_t j = 0; j < sig_->count(); ++j)
      for (const auto& t : rem[e].coefficient(j).terms())
        A.at(rowindex[j].at(t.m), e) = t.c;

  FpMat ker = A.kernel();
  if (ker.rows() != dc.monomials.size())
    throw std::logic_error("ContactStructure: contact slice dimension " + std::to_string(ker.rows()) +
                           " != monomial count " + std::to_string(dc.monomials.size()) + " at degree " + std::to_string(k));

  // α-evaluation matrix E: contact-basis row -> generating function coords
  std::map<Monomial, std::size_t> monoindex;
  for (std::size_t i = 0; i < dc.monomials.size(); ++i) monoindex.emplace(dc.monomials[i], i);
  FpMat E(dc.monomials.size(), ker.rows(), p);
  dc.basis.reserve(ker.rows());
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    VectorField X = wk.field(sig_, ker.row_vec(r));
    DPElement gf = interior(X, alpha_);
    for (const auto& t : gf.terms()) {
      auto it2 = monoindex.find(t.m);
      if (it2 == monoindex.end()) throw std::logic_error("ContactStructure: generating function escapes its degree");
      E.at(it2->second, r) = t.c;
    }
    dc.basis.push_back(std::move(X));
  }
  dc.to_field = E.inverse();  // injectivity of f ↦ X_f makes E square invertible
  return cache_.emplace(k, std::move(dc)).first->second;
}

VectorField ContactStructure::field_of(const DPElement& f) const {
  require_same_signature(sig_, f.signature(), "field_of");
  if (f.is_zero()) return VectorField::zero(sig_);
  auto deg = f.degree();
  auto par = f.parity();
  if (!deg || !par) throw std::invalid_argument("field_of: generating function must be degree- and parity-homogeneous");
  const DegreeCache& dc = cache(*deg - 2);
  std::vector<std::uint32_t> fc(dc.monomials.size(), 0);
  for (const auto& t : f.terms()) {
    std::size_t i = 0;
    while (i < dc.monomials.size() && !(dc.monomials[i] == t.m)) ++i;
    if (i == dc.monomials.size()) throw std::logic_error("field_of: monomial missing from graded basis");
    fc[i] = t.c;
  }
  // x = to_field · fc, then X = Σ x_r basis_r
  VectorField X(sig_);
  for (std::size_t r = 0; r < dc.basis.size(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < fc.size(); ++i)
      acc += std::uint64_t{dc.to_field.at(r, i)} * fc[i];
    std::uint32_t c = static_cast<std::uint32_t>(acc % sig_->p());
    if (c) X += dc.basis[r].scaled(c);
  }
  return X;
}

DPElement ContactStructure::generating_function(const VectorField& X) const {
  require_same_signature(sig_, X.signature(), "generating_function");
  if (!is_contact(X)) throw std::invalid_argument("generating_function: field is not contact");
  return interior(X, alpha_);
}

std::vector<VectorField> ContactStructure::contact_basis(int k) const {
  const DegreeCache& dc = cache(k);
  std::vector<VectorField> out;
  out.reserve(dc.monomials.size());
  for (const auto& m : dc.monomials) out.push_back(field_of(DPElement(sig_, m, 1)));
  return out;
}

std::size_t ContactStructure::slice_dim(int k) const { return cache(k).basis.size(); }

}  // namespace cts
