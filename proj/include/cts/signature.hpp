#ifndef CTS_SIGNATURE_HPP
#define CTS_SIGNATURE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cts/fp.hpp"

namespace cts {

/// Shape of a divided-powers superalgebra O(m;N|n): odd prime p, m even
/// indeterminates with heights N_i (exponents run in [0, p^{N_i})), n odd
/// indeterminates (exponents 0 or 1), display names (even first) and an
/// integer weight per indeterminate.
///
/// Weights default to the standard grading (all 1); the contact grading of
/// k(2n+1;N|m) sets deg t = 2 instead.
class Signature {
public:
  static constexpr std::uint32_t kMaxEven = 8;
  static constexpr std::uint32_t kMaxOdd = 32;
  static constexpr std::uint32_t kMaxCap = 255;  // p^{N_i} - 1 must fit a byte

  Signature(std::uint32_t p, std::vector<std::uint32_t> heights,
            std::vector<std::string> names, std::vector<int> weights = {})
      : p_(p), heights_(std::move(heights)), names_(std::move(names)), weights_(std::move(weights)) {
    if (!is_odd_prime(p_)) throw std::invalid_argument("Signature: p must be an odd prime");
    m_ = static_cast<std::uint32_t>(heights_.size());
    if (names_.size() < m_) throw std::invalid_argument("Signature: fewer names than heights");
    n_ = static_cast<std::uint32_t>(names_.size()) - m_;
    if (m_ > kMaxEven || n_ > kMaxOdd) throw std::invalid_argument("Signature: too many indeterminates");
    caps_.resize(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
      if (heights_[i] == 0) throw std::invalid_argument("Signature: heights must be positive");
      std::uint64_t cap = 1;
      for (std::uint32_t k = 0; k < heights_[i]; ++k) cap *= p_;
      cap -= 1;
      if (cap > kMaxCap) throw std::invalid_argument("Signature: p^N - 1 exceeds representable exponent");
      caps_[i] = static_cast<std::uint32_t>(cap);
    }
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw std::invalid_argument("Signature: weight count mismatch");
    for (int w : weights_)
      if (w <= 0) throw std::invalid_argument("Signature: weights must be positive");
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t even_count() const { return m_; }
  std::uint32_t odd_count() const { return n_; }
  std::uint32_t count() const { return m_ + n_; }
  std::uint32_t height(std::uint32_t i) const { return heights_[i]; }
  std::uint32_t cap(std::uint32_t i) const { return caps_[i]; }  // max exponent of even indeterminate i
  const std::string& name(std::uint32_t i) const { return names_[i]; }
  int weight(std::uint32_t i) const { return weights_[i]; }
  bool is_odd_index(std::uint32_t i) const { return i >= m_; }
  int max_weight() const {
    int w = 0;
    for (int x : weights_) w = x > w ? x : w;
    return w;
  }
  /// Largest weighted degree attained by a monomial of O(m;N|n).
  int top_degree() const {
    int d = 0;
    for (std::uint32_t i = 0; i < m_; ++i) d += static_cast<int>(caps_[i]) * weights_[i];
    for (std::uint32_t i = m_; i < count(); ++i) d += weights_[i];
    return d;
  }

  int index_of(const std::string& name) const {
    for (std::uint32_t i = 0; i < count(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const Signature& o) const {
    return p_ == o.p_ && heights_ == o.heights_ && names_ == o.names_ && weights_ == o.weights_;
  }
  bool operator!=(const Signature& o) const { return !(*this == o); }

  /// The k(1|n) signature: one even t of weight 2 plus n odd indeterminates
  /// of weight 1.  For n = 7 the odd names follow the fixed order
  /// v1, v3, v4, w1, w3, w4, u.
  static std::shared_ptr<const Signature> contact_k1(std::uint32_t p, std::uint32_t N, std::uint32_t n = 7) {
    std::vector<std::string> names{"t"};
    if (n == 7) {
      names.insert(names.end(), {"v1", "v3", "v4", "w1", "w3", "w4", "u"});
    } else {
      for (std::uint32_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    }
    std::vector<int> weights(1 + n, 1);
    weights[0] = 2;
    return std::make_shared<const Signature>(p, std::vector<std::uint32_t>{N}, std::move(names), std::move(weights));
  }

private:
  std::uint32_t p_, m_ = 0, n_ = 0;
  std::vector<std::uint32_t> heights_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<std::uint32_t> caps_;
};

using SigPtr = std::shared_ptr<const Signature>;

inline void require_same_signature(const SigPtr& a, const SigPtr& b, const char* where) {
  if (a.get() == b.get()) return;
  if (!a || !b || *a != *b) throw std::invalid_argument(std::string(where) + ": signature mismatch");
}

}  // namespace cts

#endif
