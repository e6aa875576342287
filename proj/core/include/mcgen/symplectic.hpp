#pragma once

// Words to matrices: transvections, the generator table, orders with a
// cyclotomic certificate, and exact identity checks.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcgen/models.hpp"
#include "mcgen/words.hpp"

namespace mcgen {

/// a -> a + <a, v> v. Throws separating_class for v = 0 unless allow_zero, in
/// which case the identity is returned (twists about separating curves act
/// trivially on homology).
SympMatrix transvection(const IntVector& v, bool allow_zero = false);

class GeneratorTable {
 public:
  /// Twist letters resolve to transvections of the named curve classes,
  /// symmetry letters to the table matrices.
  GeneratorTable(const CurveTable& curves, const SymmetryTable& symmetries);

  std::size_t genus() const noexcept { return genus_; }
  /// Adds or replaces the value of a letter.
  void define(const Letter& letter, SympMatrix m);
  /// Defines a symmetry letter as the value of a word over existing letters.
  void define_composite(const std::string& name, const Word& w);
  /// Negative control: the twist about `curve` becomes left-handed.
  void make_left_handed(const std::string& curve);
  bool contains(const Letter& letter) const { return values_.count(letter.key()) != 0; }
  /// Throws unknown_generator.
  const SympMatrix& value(const Letter& letter) const;
  const SympMatrix& inverse_value(const Letter& letter) const;
  std::vector<std::string> keys() const;

 private:
  std::size_t genus_;
  std::map<std::string, SympMatrix> values_;
  std::map<std::string, SympMatrix> inverses_;
};

SympMatrix evaluate(const Word& w, const GeneratorTable& table);

/// Coefficients, lowest degree first, of det(x I - M).
std::vector<Integer> characteristic_polynomial(const IntMatrix& m);
/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(long n);

struct OrderResult {
  enum class Status { finite, infinite, exceeds_cap };
  Status status = Status::finite;
  long order = 0;  // valid when finite
  /// Indices n of the cyclotomic factors Phi_n of the characteristic
  /// polynomial, with multiplicity; empty when it is not such a product.
  std::vector<long> cyclotomic_factors;
  bool cyclotomic = false;
  /// lcm of the factors; the order whenever the order is finite.
  long certificate_lcm = 0;
};

std::string_view to_string(OrderResult::Status s) noexcept;

/// Default order cap, 12 g.
long default_order_cap(std::size_t genus);

/// Infinite order is certified when the characteristic polynomial is not a
/// product of cyclotomic polynomials, or when it is and M^lcm != I (a
/// nontrivial unipotent part). Otherwise the order is the lcm; exceeds_cap is
/// reported without powering when the lcm is above `cap`.
OrderResult matrix_order(const SympMatrix& m, long cap);

struct IdentityVerdict {
  std::string name;
  bool holds = false;
  /// First differing column and both columns there, on failure.
  std::optional<std::size_t> column;
  IntVector lhs_column;
  IntVector rhs_column;
  std::string error;  // set when a side could not be evaluated
};

IdentityVerdict verify_identity(const Word& lhs, const Word& rhs, const GeneratorTable& table,
                                std::string name = {});
IdentityVerdict verify_identity(const WordIdentity& id, const GeneratorTable& table);

struct CoxeterReport {
  std::vector<std::string> names;
  /// orders[i][j] is the order of s_i s_j.
  std::vector<std::vector<OrderResult>> orders;
};

CoxeterReport coxeter_probe(const std::vector<std::string>& involutions,
                            const GeneratorTable& table, long cap);

nlohmann::json to_json(const OrderResult& r);
nlohmann::json to_json(const IdentityVerdict& v);
nlohmann::json to_json(const CoxeterReport& r);
/// {"genus", "basis": "symplectic-standard", "matrix"}.
nlohmann::json matrix_report(const SympMatrix& m);

}  // namespace mcgen
