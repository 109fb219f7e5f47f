#include "cts/fpmat.hpp"

#include <algorithm>

namespace cts {

std::uint32_t FpMat::inv_mod(std::uint32_t v) const {
  std::uint32_t r = 1;
  std::uint64_t base = v, e = p_ - 2;
  while (e) {
    if (e & 1) r = static_cast<std::uint32_t>((std::uint64_t{r} * base) % p_);
    base = (base * base) % p_;
    e >>= 1;
  }
  return r;
}

std::vector<std::size_t> FpMat::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      std::swap_ranges(row(sel), row(sel) + cols_, row(r));
    std::uint32_t inv = inv_mod(at(r, c));
    if (inv != 1)
      for (std::size_t j = c; j < cols_; ++j) at(r, j) = static_cast<std::uint32_t>((std::uint64_t{at(r, j)} * inv) % p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      std::uint32_t f = at(i, c);
      if (!f) continue;
      std::uint32_t fm = p_ - f;
      for (std::size_t j = c; j < cols_; ++j)
        at(i, j) = static_cast<std::uint32_t>((at(i, j) + std::uint64_t{fm} * at(r, j)) % p_);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

FpMat FpMat::kernel() const {
  FpMat work = *this;
  std::vector<std::size_t> pivots = work.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  FpMat ker(0, cols_, p_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      std::uint32_t val = work.at(i, c);
      if (val) v[pivots[i]] = p_ - val;
    }
    ker.append_row(v);
  }
  return ker;
}

FpMat FpMat::operator*(const FpMat& B) const {
  if (cols_ != B.rows_ || p_ != B.p_) throw std::invalid_argument("FpMat::operator*: shape/modulus mismatch");
  FpMat C(rows_, B.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t v = at(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < B.cols_; ++j)
        C.at(i, j) = static_cast<std::uint32_t>((C.at(i, j) + std::uint64_t{v} * B.at(k, j)) % p_);
    }
  return C;
}

FpMat FpMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("FpMat::inverse: not square");
  FpMat aug(rows_, 2 * cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto piv = aug.rref();
  if (piv.size() != rows_ || piv.back() >= cols_) throw std::domain_error("FpMat::inverse: singular matrix");
  FpMat inv(rows_, cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

EchelonSpan::Reduction EchelonSpan::reduce(std::vector<std::uint32_t> v) const {
  Reduction out;
  out.coords.assign(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint32_t c = v[pivots_[i]];
    if (!c) continue;
    out.coords[i] = c;
    std::uint32_t cm = p_ - c;
    const auto& r = rows_[i];
    for (std::size_t j = pivots_[i]; j < cols_; ++j)
      v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t{cm} * r[j]) % p_);
  }
  out.in_span = std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
  out.residual = std::move(v);
  return out;
}

bool EchelonSpan::insert(std::vector<std::uint32_t> v) {
  Reduction red = reduce(std::move(v));
  if (red.in_span) return false;
  std::vector<std::uint32_t>& w = red.residual;
  std::size_t piv = 0;
  while (piv < cols_ && w[piv] == 0) ++piv;
  // normalize pivot to 1
  std::uint32_t inv = 1;
  {
    std::uint64_t base = w[piv], e = p_ - 2, r = 1;
    while (e) {
      if (e & 1) r = (r * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    inv = static_cast<std::uint32_t>(r);
  }
  if (inv != 1)
    for (auto& x : w) x = static_cast<std::uint32_t>((std::uint64_t{x} * inv) % p_);
  // clear the new pivot column in existing rows
  for (auto& r : rows_) {
    std::uint32_t f = r[piv];
    if (!f) continue;
    std::uint32_t fm = p_ - f;
    for (std::size_t j = piv; j < cols_; ++j)
      r[j] = static_cast<std::uint32_t>((r[j] + std::uint64_t{fm} * w[j]) % p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

}  // namespace cts
