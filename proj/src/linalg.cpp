#include "cohsys/linalg.hpp"

#include <utility>

namespace cohsys {

std::size_t rank(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    }
    const mpz_class& p = m.at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class f = m.at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = p * m.at(i, j) - f * m.at(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = std::move(v);
      }
      m.at(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

}  // namespace cohsys
