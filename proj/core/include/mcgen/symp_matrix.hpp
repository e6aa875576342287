#pragma once

#include <cstddef>
#include <iosfwd>

#include "mcgen/integer_matrix.hpp"

namespace mcgen {

bool is_symplectic(const IntMatrix& m);

/// Integer 2g x 2g matrix M with M^T J_std M = J_std. The invariant is checked
/// on construction, so every SympMatrix value in the program is symplectic.
class SympMatrix {
 public:
  explicit SympMatrix(IntMatrix m);

  static SympMatrix identity(std::size_t genus);

  std::size_t genus() const noexcept { return m_.rows() / 2; }
  std::size_t dimension() const noexcept { return m_.rows(); }
  const IntMatrix& matrix() const noexcept { return m_; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  /// -J M^T J, exact for symplectic M.
  SympMatrix inverse() const;
  SympMatrix pow(long exponent) const;
  IntVector apply(const IntVector& v) const { return m_ * v; }
  bool is_identity() const { return m_.is_identity(); }

  friend SympMatrix operator*(const SympMatrix& a, const SympMatrix& b);
  friend bool operator==(const SympMatrix& a, const SympMatrix& b) { return a.m_ == b.m_; }

 private:
  struct Unchecked {};
  SympMatrix(IntMatrix m, Unchecked) : m_(std::move(m)) {}

  IntMatrix m_;
};

std::ostream& operator<<(std::ostream& os, const SympMatrix& m);

}  // namespace mcgen
