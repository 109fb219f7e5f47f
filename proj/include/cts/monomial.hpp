#ifndef CTS_MONOMIAL_HPP
#define CTS_MONOMIAL_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cts/signature.hpp"

namespace cts {

/// A divided-powers supermonomial u^r.  Even exponents are stored packed
/// (one byte each, capped by the signature), odd exponents as a bitmask.
/// The canonical written form puts even factors first, odd factors in
/// increasing index order.
struct Monomial {
  std::array<std::uint8_t, Signature::kMaxEven> ev{};
  std::uint32_t odd = 0;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;  // intrinsic storage order

  bool is_one() const {
    for (auto e : ev)
      if (e) return false;
    return odd == 0;
  }
  std::uint32_t parity() const { return static_cast<std::uint32_t>(std::popcount(odd)) & 1u; }

  int degree(const Signature& sig) const {
    int d = 0;
    for (std::uint32_t i = 0; i < sig.even_count(); ++i) d += int(ev[i]) * sig.weight(i);
    std::uint32_t bits = odd;
    while (bits) {
      std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(bits));
      d += sig.weight(sig.even_count() + j);
      bits &= bits - 1;
    }
    return d;
  }

  std::uint32_t exponent(const Signature& sig, std::uint32_t i) const {
    if (sig.is_odd_index(i)) return (odd >> (i - sig.even_count())) & 1u;
    return ev[i];
  }

  static Monomial one() { return Monomial{}; }

  static Monomial generator(const Signature& sig, std::uint32_t i) {
    Monomial m;
    if (sig.is_odd_index(i))
      m.odd = 1u << (i - sig.even_count());
    else
      m.ev[i] = 1;
    return m;
  }

  std::string render(const Signature& sig) const {
    std::string s;
    for (std::uint32_t i = 0; i < sig.even_count(); ++i) {
      if (ev[i] == 0) continue;
      if (!s.empty()) s += ' ';
      s += sig.name(i);
      if (ev[i] > 1) s += "^(" + std::to_string(int(ev[i])) + ")";
    }
    for (std::uint32_t j = 0; j < sig.odd_count(); ++j) {
      if (!((odd >> j) & 1u)) continue;
      if (!s.empty()) s += ' ';
      s += sig.name(sig.even_count() + j);
    }
    return s.empty() ? "1" : s;
  }
};

/// Canonical (graded lexicographic) comparison: degree first, then larger
/// exponent earlier, scanning indeterminates in the fixed order.
inline bool canon_less(const Signature& sig, const Monomial& a, const Monomial& b) {
  int da = a.degree(sig), db = b.degree(sig);
  if (da != db) return da < db;
  for (std::uint32_t i = 0; i < sig.count(); ++i) {
    std::uint32_t ea = a.exponent(sig, i), eb = b.exponent(sig, i);
    if (ea != eb) return ea > eb;
  }
  return false;
}

/// All monomials of weighted degree exactly d, canonically ordered.
std::vector<Monomial> graded_monomials(const Signature& sig, int d);

/// Number of monomials of each degree 0..top_degree (graded dimension).
std::vector<std::uint64_t> graded_dimension(const Signature& sig);

}  // namespace cts

#endif
