#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace cohsys {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> data_;
};

/// Rank by fraction-free (Bareiss) elimination; every division is exact.
std::size_t rank(IntMatrix m);

}  // namespace cohsys
