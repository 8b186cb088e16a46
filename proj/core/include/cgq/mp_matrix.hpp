#pragma once

#include <cstddef>
#include <vector>

#include "cgq/big_real.hpp"

namespace cgq {

/// Dense row-major matrix of BigReal entries.
class MpMatrix {
 public:
  /// rows × cols zeros at the working precision.
  MpMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigReal& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigReal& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigReal> entries_;
};

/// Determinant at the working precision.
///
/// 1×1 and 2×2 use the closed form; larger matrices use Doolittle LU that
/// swaps in the first nonzero row below only when a diagonal entry is exactly
/// zero. Throws SingularMatrix only when every candidate pivot in a column is
/// exactly zero; tiny pivots are accepted.
/// The empty matrix has determinant 1.
BigReal det_lu(const MpMatrix& m);

}  // namespace cgq
