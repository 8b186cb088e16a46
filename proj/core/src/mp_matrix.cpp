#include "cgq/mp_matrix.hpp"

#include <string>
#include <utility>

#include "cgq/error.hpp"

namespace cgq {

MpMatrix::MpMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

void MpMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
  }
}

BigReal det_lu(const MpMatrix& m) {
  if (!m.square()) {
    fail(ErrorKind::InvalidArgument, "det_lu needs a square matrix, got " +
                                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) return BigReal(1);
  if (n == 1) return m(0, 0) + 0;
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

  const Precision prec = working_precision();
  MpMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).rounded(prec);
  }
  bool negate = false;
  BigReal det(1);
  BigReal factor;
  BigReal product;
  mpfr_t best;
  mpfr_init2(best, mpfr_get_prec(det.get()));
  for (std::size_t k = 0; k < n; ++k) {
    // Rows are exchanged only when the diagonal entry is exactly zero.
    // Magnitude pivoting on moment matrices, whose rows grow like factorials,
    // costs over 100 bits on the Laguerre family at n = 33.
    std::size_t pivot = k;
    mpfr_abs(best, a(k, k).get(), MPFR_RNDN);
    for (std::size_t i = k + 1; i < n && mpfr_zero_p(best); ++i) {
      if (mpfr_cmpabs(a(i, k).get(), best) > 0) {
        pivot = i;
        mpfr_abs(best, a(i, k).get(), MPFR_RNDN);
      }
    }
    if (mpfr_zero_p(best)) {
      mpfr_clear(best);
      fail(ErrorKind::SingularMatrix, "zero pivot column " + std::to_string(k));
    }
    if (pivot != k) {
      a.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      factor = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        // a(i,j) -= factor * a(k,j), each operation rounded to working precision.
        mpfr_mul(product.get(), factor.get(), a(k, j).get(), MPFR_RNDN);
        mpfr_sub(a(i, j).get(), a(i, j).get(), product.get(), MPFR_RNDN);
      }
    }
    det *= a(k, k);
  }
  mpfr_clear(best);
  return negate ? -det : det;
}

}  // namespace cgq
