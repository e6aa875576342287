#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace mcgen {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
IntVector zero_vector(std::size_t n);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& s, const IntVector& a);
bool is_zero(const IntVector& v);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector
bool is_primitive(const IntVector& v);
std::string to_string(const IntVector& v);

/// Dense row-major matrix over Z with GMP entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector column(std::size_t c) const;
  void set_column(std::size_t c, const IntVector& v);
  IntVector row(std::size_t r) const;

  IntMatrix transpose() const;
  bool is_identity() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

Integer trace(const IntMatrix& m);
/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

// Standard skew form J_std = diag([[0,1],[-1,0]], ...) on Z^{2g}.
IntMatrix standard_form(std::size_t genus);
/// x^T J_std y, computed without materializing J_std.
Integer symplectic_pairing(const IntVector& x, const IntVector& y);
/// x^T G y for an arbitrary bilinear form G.
Integer bilinear(const IntMatrix& form, const IntVector& x, const IntVector& y);

/// Returns P unimodular with P^T * form * P == J_std. `form` must be an integer
/// skew-symmetric unimodular matrix; throws internal_consistency otherwise.
IntMatrix symplectic_basis(const IntMatrix& form);

/// Finds integer vectors w_1..w_k with <u_i, w_j> = delta_ij for the standard
/// form. Requires the u_i to span a primitive sublattice; throws
/// construction_failed when no integral solution exists.
std::vector<IntVector> dual_partners(const std::vector<IntVector>& u);

}  // namespace mcgen
