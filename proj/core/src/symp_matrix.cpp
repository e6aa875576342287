#include "mcgen/symp_matrix.hpp"

#include <ostream>
#include <utility>

#include "mcgen/error.hpp"

namespace mcgen {

bool is_symplectic(const IntMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) return false;
  const std::size_t n = m.rows();
  // Compare <M e_i, M e_j> against J_std entrywise.
  std::vector<IntVector> cols;
  cols.reserve(n);
  for (std::size_t c = 0; c < n; ++c) cols.push_back(m.column(c));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      long expected = 0;
      if (i % 2 == 0 && j == i + 1) expected = 1;
      if (symplectic_pairing(cols[i], cols[j]) != expected) return false;
    }
  }
  return true;
}

SympMatrix::SympMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!is_symplectic(m_))
    fail(ErrorKind::invalid_argument, "matrix does not preserve the standard symplectic form");
}

SympMatrix SympMatrix::identity(std::size_t genus) {
  return SympMatrix(IntMatrix::identity(2 * genus), Unchecked{});
}

SympMatrix SympMatrix::inverse() const {
  // (-J M^T J)_{rc} = sign-permuted transpose: rows/cols paired within blocks.
  const std::size_t n = m_.rows();
  IntMatrix inv(n, n);
  auto partner = [](std::size_t i) { return i ^ 1u; };
  auto sign = [](std::size_t i) { return i % 2 == 0 ? 1 : -1; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // J^{-1}(r, r^1) = -s_r and J(c^1, c) = -s_c
      inv(r, c) = sign(r) * sign(c) * m_(partner(c), partner(r));
    }
  }
  return SympMatrix(std::move(inv), Unchecked{});
}

SympMatrix SympMatrix::pow(long exponent) const {
  SympMatrix base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  SympMatrix result = identity(genus());
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

SympMatrix operator*(const SympMatrix& a, const SympMatrix& b) {
  return SympMatrix(a.m_ * b.m_, SympMatrix::Unchecked{});
}

std::ostream& operator<<(std::ostream& os, const SympMatrix& m) { return os << m.matrix(); }

}  // namespace mcgen
