#ifndef CTS_FP_HPP
#define CTS_FP_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace cts {

inline bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Residue arithmetic in GF(p), p an odd prime.  Values are canonical in
/// [0, p) at all times; binary operations require equal moduli.
class Fp {
public:
  Fp() : v_(0), p_(3) {}
  Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("Fp: modulus must be an odd prime, got " + std::to_string(p));
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp b) const { check(b); return raw((v_ + b.v_) % p_, p_); }
  Fp operator-(Fp b) const { check(b); return raw((v_ + p_ - b.v_) % p_, p_); }
  Fp operator*(Fp b) const {
    check(b);
    return raw(static_cast<std::uint32_t>((std::uint64_t{v_} * b.v_) % p_), p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp inv() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // Fermat: a^(p-2); p is tiny so the loop is fine.
    return pow(p_ - 2);
  }
  Fp operator/(Fp b) const { check(b); return *this * b.inv(); }

  Fp pow(std::uint64_t e) const {
    Fp r = raw(1, p_), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Fp& b) const { return v_ == b.v_ && p_ == b.p_; }
  bool operator!=(const Fp& b) const { return !(*this == b); }

  static Fp raw(std::uint32_t canonical, std::uint32_t p) {
    Fp f;
    f.v_ = canonical;
    f.p_ = p;
    return f;
  }

private:
  void check(const Fp& b) const {
    if (p_ != b.p_) throw std::invalid_argument("Fp: mixed moduli " + std::to_string(p_) + " and " + std::to_string(b.p_));
  }
  std::uint32_t v_;
  std::uint32_t p_;
};

/// C(a, b) mod p by the Lucas rule: product of digitwise binomials base p.
inline std::uint32_t lucas_binom(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  if (b > a) return 0;
  std::uint64_t r = 1;
  while (b > 0 || a > 0) {
    std::uint64_t ad = a % p, bd = b % p;
    if (bd > ad) return 0;
    // C(ad, bd) for digits < p
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < bd; ++i) {
      num = (num * ((ad - i) % p)) % p;
      den = (den * ((i + 1) % p)) % p;
    }
    std::uint64_t deninv = 1;  // den is nonzero mod p (all factors < p)
    {
      std::uint64_t base = den, e = p - 2;
      while (e) {
        if (e & 1) deninv = (deninv * base) % p;
        base = (base * base) % p;
        e >>= 1;
      }
    }
    r = (r * ((num * deninv) % p)) % p;
    if (r == 0) return 0;
    a /= p;
    b /= p;
  }
  return static_cast<std::uint32_t>(r);
}

/// Multi-index binomial Π_i C(top_i, bottom_i) mod p; requires bottom ≤ top
/// componentwise (returns 0 otherwise, matching the vanishing convention).
inline Fp binom_mod(std::span<const std::uint64_t> top, std::span<const std::uint64_t> bottom, std::uint32_t p) {
  if (top.size() != bottom.size()) throw std::invalid_argument("binom_mod: index length mismatch");
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < top.size(); ++i) {
    r = (r * lucas_binom(top[i], bottom[i], p)) % p;
    if (r == 0) break;
  }
  return Fp::raw(static_cast<std::uint32_t>(r), p);
}

}  // namespace cts

#endif
