#ifndef CTS_FPMAT_HPP
#define CTS_FPMAT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cts {

/// Dense matrix over GF(p), entries canonical in [0, p).  Row-major.
class FpMat {
public:
  FpMat() : p_(3), rows_(0), cols_(0) {}
  FpMat(std::size_t rows, std::size_t cols, std::uint32_t p)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::uint32_t* row(std::size_t r) { return a_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return a_.data() + r * cols_; }

  void append_row(const std::vector<std::uint32_t>& v) {
    if (v.size() != cols_) throw std::invalid_argument("FpMat::append_row: width mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
  }

  std::vector<std::uint32_t> row_vec(std::size_t r) const {
    return std::vector<std::uint32_t>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref();

  /// Basis of the right kernel {x : A x = 0}, one vector per row of the
  /// result, in the deterministic free-column order.
  FpMat kernel() const;

  /// Matrix product A·B.
  FpMat operator*(const FpMat& B) const;

  /// Inverse of a square invertible matrix (throws if singular).
  FpMat inverse() const;

private:
  std::uint32_t inv_mod(std::uint32_t v) const;
  std::uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

/// Incrementally maintained reduced row echelon span of coordinate vectors.
/// The row set is the unique canonical basis of the span, independent of
/// insertion order.
class EchelonSpan {
public:
  EchelonSpan() : p_(3), cols_(0) {}
  EchelonSpan(std::size_t cols, std::uint32_t p) : p_(p), cols_(cols) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint32_t p() const { return p_; }
  const std::vector<std::uint32_t>& basis_row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the span; returns the residual (zero iff v in span)
  /// and, when in span, the coordinates w.r.t. the canonical rows.
  struct Reduction {
    bool in_span;
    std::vector<std::uint32_t> coords;
    std::vector<std::uint32_t> residual;
  };
  Reduction reduce(std::vector<std::uint32_t> v) const;

  /// Inserts v; returns true if the span grew.
  bool insert(std::vector<std::uint32_t> v);

  bool contains(const std::vector<std::uint32_t>& v) const { return reduce(v).in_span; }

  bool operator==(const EchelonSpan& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }
  bool operator!=(const EchelonSpan& o) const { return !(*this == o); }

private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;  // rref rows, pivot-ascending
  std::vector<std::size_t> pivots_;
};

}  // namespace cts

#endif
