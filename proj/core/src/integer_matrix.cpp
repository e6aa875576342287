#include "mcgen/integer_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "mcgen/error.hpp"

namespace mcgen {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed_graph: return "malformed-graph";
    case ErrorKind::not_a_cycle: return "not-a-cycle";
    case ErrorKind::orientation_reversing: return "orientation-reversing";
    case ErrorKind::unsupported_genus: return "unsupported-genus";
    case ErrorKind::construction_failed: return "construction-failed";
    case ErrorKind::unknown_generator: return "unknown-generator";
    case ErrorKind::invalid_chain: return "invalid-chain";
    case ErrorKind::separating_class: return "separating-class";
    case ErrorKind::internal_consistency: return "internal-consistency";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::resource_exceeded: return "resource-exceeded";
    case ErrorKind::io_failure: return "io-failure";
  }
  return "unknown";
}

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVector operator*(const Integer& s, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::invalid_argument, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  if (columns.empty()) return {};
  IntMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, const IntVector& v) {
  if (v.size() != rows_) fail(ErrorKind::invalid_argument, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::invalid_argument, "matrix shape mismatch");
  IntMatrix m(a.rows_, b.cols_);
  Integer acc;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
    }
  }
  return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) fail(ErrorKind::invalid_argument, "matrix/vector shape mismatch");
  IntVector out(a.rows_, Integer(0));
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) out[r] += a(r, c) * v[c];
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
  return m;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = -a.data_[i];
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Integer trace(const IntMatrix& m) {
  Integer t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

Integer determinant(const IntMatrix& input) {
  if (!input.is_square()) fail(ErrorKind::invalid_argument, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix standard_form(std::size_t genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

Integer symplectic_pairing(const IntVector& x, const IntVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return s;
}

Integer bilinear(const IntMatrix& form, const IntVector& x, const IntVector& y) {
  Integer s = 0;
  for (std::size_t r = 0; r < form.rows(); ++r) {
    if (x[r] == 0) continue;
    Integer row = 0;
    for (std::size_t c = 0; c < form.cols(); ++c) row += form(r, c) * y[c];
    s += x[r] * row;
  }
  return s;
}

namespace {

// Column operations on `basis` restricted to indices [first, n) so that the
// values vals[j] = pairing(u, basis_j) collapse onto index `first`. Uses
// repeated Euclidean steps; every step is unimodular.
void collapse_onto(std::vector<IntVector>& basis, std::vector<Integer>& vals,
                   std::size_t first) {
  const std::size_t n = basis.size();
  while (true) {
    std::size_t pivot = n;
    for (std::size_t j = first; j < n; ++j) {
      if (vals[j] == 0) continue;
      if (pivot == n || abs(vals[j]) < abs(vals[pivot])) pivot = j;
    }
    if (pivot == n) return;
    bool others = false;
    for (std::size_t j = first; j < n; ++j) {
      if (j == pivot || vals[j] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), vals[j].get_mpz_t(), vals[pivot].get_mpz_t());
      basis[j] = basis[j] - q * basis[pivot];
      vals[j] -= q * vals[pivot];
      if (vals[j] != 0) others = true;
    }
    if (!others) {
      std::swap(basis[first], basis[pivot]);
      std::swap(vals[first], vals[pivot]);
      return;
    }
  }
}

}  // namespace

IntMatrix symplectic_basis(const IntMatrix& form) {
  const std::size_t n = form.rows();
  if (!form.is_square() || n % 2 != 0)
    fail(ErrorKind::internal_consistency, "intersection form must be square of even size");
  if (!(form.transpose() == -form))
    fail(ErrorKind::internal_consistency, "intersection form is not skew-symmetric");
  if (abs(determinant(form)) != 1)
    fail(ErrorKind::internal_consistency, "intersection form is not unimodular");

  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e = zero_vector(n);
    e[i] = 1;
    basis.push_back(std::move(e));
  }

  for (std::size_t k = 0; k < n; k += 2) {
    const IntVector u = basis[k];
    std::vector<Integer> vals(n, Integer(0));
    for (std::size_t j = k + 1; j < n; ++j) vals[j] = bilinear(form, u, basis[j]);
    collapse_onto(basis, vals, k + 1);
    if (abs(vals[k + 1]) != 1)
      fail(ErrorKind::internal_consistency, "no symplectic partner found during reduction");
    if (vals[k + 1] < 0) basis[k + 1] = -basis[k + 1];
    const IntVector& v = basis[k + 1];
    for (std::size_t j = k + 2; j < n; ++j) {
      const Integer c = bilinear(form, basis[j], v);
      if (c != 0) basis[j] = basis[j] - c * u;
    }
  }

  IntMatrix p = IntMatrix::from_columns(basis);
  if (!(p.transpose() * form * p == standard_form(n / 2)))
    fail(ErrorKind::internal_consistency, "symplectic reduction did not reach J_std");
  return p;
}

std::vector<IntVector> dual_partners(const std::vector<IntVector>& u) {
  const std::size_t k = u.size();
  if (k == 0) return {};
  const std::size_t n = u.front().size();
  if (k > n) fail(ErrorKind::construction_failed, "too many vectors for dual partners");

  // rows[i] . w == <u_i, w>
  std::vector<IntVector> rows(k, zero_vector(n));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c + 1 < n; c += 2) {
      rows[i][c] = -u[i][c + 1];
      rows[i][c + 1] = u[i][c];
    }
  }

  // Track column operations in `cols` (columns of a unimodular matrix C).
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e = zero_vector(n);
    e[i] = 1;
    cols.push_back(std::move(e));
  }
  auto dot = [](const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };

  for (std::size_t r = 0; r < k; ++r) {
    std::vector<Integer> vals(n, Integer(0));
    for (std::size_t j = r; j < n; ++j) vals[j] = dot(rows[r], cols[j]);
    collapse_onto(cols, vals, r);
    if (abs(vals[r]) != 1)
      fail(ErrorKind::construction_failed,
           "constraint classes do not span a primitive sublattice (pivot " +
               vals[r].get_str() + ")");
  }

  // H(i, j) = rows[i] . cols[j] is lower triangular with unit diagonal up to sign.
  std::vector<IntVector> partners;
  for (std::size_t target = 0; target < k; ++target) {
    std::vector<Integer> y(k, Integer(0));
    for (std::size_t i = 0; i < k; ++i) {
      Integer rhs = (i == target) ? 1 : 0;
      for (std::size_t j = 0; j < i; ++j) rhs -= dot(rows[i], cols[j]) * y[j];
      y[i] = rhs * dot(rows[i], cols[i]);  // diagonal is +-1, its own inverse
    }
    IntVector w = zero_vector(n);
    for (std::size_t j = 0; j < k; ++j) w = w + y[j] * cols[j];
    partners.push_back(std::move(w));
  }
  return partners;
}

}  // namespace mcgen
