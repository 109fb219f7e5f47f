#include "cts/forms.hpp"

#include <stdexcept>

namespace cts {

// The operators are the derivations of the supercommutative algebra
// O[du_1..du_a] with p(du_i) = p(u_i) + 1:
//   d    = Σ du_i ∂_i                      (odd),
//   ι_X  = Σ g_i ∂/∂(du_i)-substitution    (parity p(X)+1),
//   L_X  = [ι_X, d] = ι_X d + (−1)^{p(X)} d ι_X.
// Stored coefficients sit to the LEFT of du factors; the Koszul signs below
// are exactly the cost of moving du past a coefficient in that model.
// Consequences: ι_X(df) = X(f) on the nose, d∘d = 0, contact fields close
// under bracket, and the odd Heisenberg pairing of α stays nondegenerate
// mod 3.  The du_i du_j swap sign is −(−1)^{p_i p_j} on same-parity pairs.

namespace {

inline std::uint32_t hat_parity(const Signature& sig, std::uint32_t i) {
  return sig.is_odd_index(i) ? 0u : 1u;  // p(du_i) = p(u_i) + 1
}

/// Negates the odd-parity terms: f ↦ Σ (−1)^{p(term)} term.
DPElement sign_by_parity(const DPElement& f) {
  DPElement r(f.signature());
  const std::uint32_t p = f.signature()->p();
  for (const auto& t : f.terms())
    r.add_term(t.m, t.m.parity() ? p - t.c : t.c);
  return r;
}

/// du_i-coefficient of d(f): Σ (−1)^{p(du_i)·p(term)} term over ∂_i f.
DPElement d_coefficient(const DPElement& f, std::uint32_t i) {
  DPElement g = special_derive(i, f);
  if (hat_parity(*f.signature(), i)) g = sign_by_parity(g);
  return g;
}

}  // namespace

OneForm OneForm::operator+(const OneForm& o) const {
  require_same_signature(sig_, o.sig_, "OneForm::operator+");
  OneForm r(sig_);
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
  return r;
}

OneForm OneForm::operator-(const OneForm& o) const {
  require_same_signature(sig_, o.sig_, "OneForm::operator-");
  OneForm r(sig_);
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] - o.comps_[i];
  return r;
}

bool OneForm::operator==(const OneForm& o) const {
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i] != o.comps_[i]) return false;
  return true;
}

void TwoForm::put(std::uint32_t i, std::uint32_t j, const DPElement& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TwoForm::add(std::uint32_t a, std::uint32_t b, const DPElement& c) {
  if (c.is_zero()) return;
  const Signature& sig = *sig_;
  if (a == b) {
    if (!sig.is_odd_index(a)) return;  // dt dt = 0
    put(a, a, c);
    return;
  }
  if (a < b) {
    put(a, b, c);
    return;
  }
  // du_a du_b = (−1)^{p(du_a)p(du_b)} du_b du_a
  std::uint32_t s = hat_parity(sig, a) & hat_parity(sig, b);
  put(b, a, s ? -c : c);
}

DPElement TwoForm::coefficient(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find(std::make_pair(i, j));
  if (it != terms_.end()) return it->second;
  return DPElement(sig_);
}

void ThreeForm::add(std::uint32_t a, std::uint32_t b, std::uint32_t c, const DPElement& f) {
  if (f.is_zero()) return;
  const Signature& sig = *sig_;
  std::uint32_t idx[3] = {a, b, c};
  DPElement cur = f;
  for (int pass = 0; pass < 3; ++pass)
    for (int t = 0; t < 2; ++t)
      if (idx[t] > idx[t + 1]) {
        if (hat_parity(sig, idx[t]) & hat_parity(sig, idx[t + 1])) cur = -cur;
        std::swap(idx[t], idx[t + 1]);
      }
  for (int t = 0; t < 2; ++t)
    if (idx[t] == idx[t + 1] && !sig.is_odd_index(idx[t])) return;
  auto key = std::make_tuple(idx[0], idx[1], idx[2]);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, cur);
  } else {
    it->second += cur;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OneForm d(const DPElement& f) {
  OneForm w(f.signature());
  for (std::uint32_t i = 0; i < f.signature()->count(); ++i)
    w.coefficient(i) = d_coefficient(f, i);
  return w;
}

TwoForm d(const OneForm& w) {
  const SigPtr& sig = w.signature();
  TwoForm r(sig);
  for (std::uint32_t j = 0; j < sig->count(); ++j) {
    if (w.coefficient(j).is_zero()) continue;
    for (std::uint32_t i = 0; i < sig->count(); ++i)
      r.add(i, j, d_coefficient(w.coefficient(j), i));
  }
  return r;
}

ThreeForm d(const TwoForm& w) {
  const SigPtr& sig = w.signature();
  ThreeForm r(sig);
  for (const auto& [key, c] : w.terms())
    for (std::uint32_t i = 0; i < sig->count(); ++i)
      r.add(i, key.first, key.second, d_coefficient(c, i));
  return r;
}

DPElement interior(const VectorField& X, const OneForm& w) {
  require_same_signature(X.signature(), w.signature(), "interior");
  const SigPtr& sig = w.signature();
  DPElement r(sig);
  // ι_X(f du_i) = (−1)^{(p(X)+1)·p(f)} f·g_i, per monomial on both sides
  for (std::uint32_t i = 0; i < sig->count(); ++i) {
    const DPElement& f = w.coefficient(i);
    const DPElement& g = X.coefficient(i);
    if (f.is_zero() || g.is_zero()) continue;
    std::uint32_t pi_idx = sig->is_odd_index(i) ? 1u : 0u;
    for (const auto& ft : f.terms())
      for (const auto& gt : g.terms()) {
        // p(ι) per g-term: p(X) = p(g_i) + p_i, so p(ι) = p(g-term) + p_i + 1
        std::uint32_t piota = (gt.m.parity() + pi_idx + 1u) & 1u;
        std::uint32_t sign = piota & ft.m.parity();
        auto [c, mono] = mono_mul(*sig, ft.m, gt.m);
        if (!c) continue;
        std::uint64_t v = (std::uint64_t{ft.c} * gt.c) % sig->p();
        v = (v * c) % sig->p();
        r.add_term(mono, sign ? sig->p() - static_cast<std::uint32_t>(v) : static_cast<std::uint32_t>(v));
      }
  }
  return r;
}

OneForm interior(const VectorField& X, const TwoForm& w) {
  require_same_signature(X.signature(), w.signature(), "interior");
  const SigPtr& sig = w.signature();
  OneForm r(sig);
  for (const auto& [key, c] : w.terms()) {
    auto [a, b] = key;
    // ι_X(c du_a du_b) = (−1)^{p(ι)p(c)} c g_a · du_b
    //                  + (−1)^{p(ι)p(c) + p(ι)p̂_a + p̂_a p(g_b)} c g_b · du_a
    auto accumulate = [&](std::uint32_t slot, std::uint32_t other, bool second) {
      const DPElement& g = X.coefficient(slot);
      if (g.is_zero()) return;
      std::uint32_t pslot = sig->is_odd_index(slot) ? 1u : 0u;
      std::uint32_t hat_a = hat_parity(*sig, a);
      for (const auto& ct : c.terms())
        for (const auto& gt : g.terms()) {
          std::uint32_t piota = (gt.m.parity() + pslot + 1u) & 1u;
          std::uint32_t sign = piota & ct.m.parity();
          if (second) sign ^= (piota & hat_a) ^ (hat_a & gt.m.parity());
          auto [cc, mono] = mono_mul(*sig, ct.m, gt.m);
          if (!cc) continue;
          std::uint64_t v = (std::uint64_t{ct.c} * gt.c) % sig->p();
          v = (v * cc) % sig->p();
          DPElement piece(sig);
          piece.add_term(mono, sign & 1u ? sig->p() - static_cast<std::uint32_t>(v) : static_cast<std::uint32_t>(v));
          r.coefficient(other) += piece;
        }
    };
    accumulate(a, b, false);
    accumulate(b, a, true);  // a == b (odd) contributes through both slots
  }
  return r;
}

OneForm lie_derivative(const VectorField& X, const OneForm& w) {
  auto px = X.parity();
  if (!X.is_zero() && !px) throw std::invalid_argument("lie_derivative: X not parity-homogeneous");
  OneForm a = interior(X, d(w));
  OneForm b = d(interior(X, w));
  if (px && (*px & 1u)) return a - b;
  return a + b;
}

}  // namespace cts
