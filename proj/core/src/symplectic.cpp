#include "mcgen/symplectic.hpp"

#include <numeric>

#include "mcgen/error.hpp"

namespace mcgen {

SympMatrix transvection(const IntVector& v, bool allow_zero) {
  const std::size_t n = v.size();
  if (n == 0 || n % 2 != 0) fail(ErrorKind::invalid_argument, "class vector has odd length");
  if (is_zero(v)) {
    if (allow_zero) return SympMatrix::identity(n / 2);
    fail(ErrorKind::separating_class,
         "transvection about the zero class: the curve is separating or trivial and its "
         "twist acts trivially on homology");
  }
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    // <e_c, v>
    const Integer pc = c % 2 == 0 ? v[c + 1] : Integer(-v[c - 1]);
    if (pc == 0) continue;
    for (std::size_t r = 0; r < n; ++r) m(r, c) += pc * v[r];
  }
  return SympMatrix(std::move(m));
}

GeneratorTable::GeneratorTable(const CurveTable& curves, const SymmetryTable& symmetries)
    : genus_(static_cast<std::size_t>(curves.genus)) {
  if (symmetries.genus != curves.genus)
    fail(ErrorKind::invalid_argument, "curve and symmetry tables disagree on the genus");
  for (const auto& [name, v] : curves.classes) define(twist_letter(name), transvection(v));
  for (const auto& [name, e] : symmetries.entries) define(symmetry_letter(name), e.matrix);
}

void GeneratorTable::define(const Letter& letter, SympMatrix m) {
  if (m.genus() != genus_)
    fail(ErrorKind::invalid_argument, "letter " + letter.key() + " has the wrong dimension");
  const std::string key = letter.key();
  inverses_.insert_or_assign(key, m.inverse());
  values_.insert_or_assign(key, std::move(m));
}

void GeneratorTable::define_composite(const std::string& name, const Word& w) {
  define(symmetry_letter(name), evaluate(w, *this));
}

void GeneratorTable::make_left_handed(const std::string& curve) {
  const Letter l = twist_letter(curve);
  define(l, inverse_value(l));
}

const SympMatrix& GeneratorTable::value(const Letter& letter) const {
  auto it = values_.find(letter.key());
  if (it == values_.end())
    fail(ErrorKind::unknown_generator, "no value for letter '" + letter.key() + "'");
  return it->second;
}

const SympMatrix& GeneratorTable::inverse_value(const Letter& letter) const {
  auto it = inverses_.find(letter.key());
  if (it == inverses_.end())
    fail(ErrorKind::unknown_generator, "no value for letter '" + letter.key() + "'");
  return it->second;
}

std::vector<std::string> GeneratorTable::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_) out.push_back(k);
  return out;
}

SympMatrix evaluate(const Word& w, const GeneratorTable& table) {
  SympMatrix out = SympMatrix::identity(table.genus());
  for (const auto& s : w.syllables()) {
    const SympMatrix& base = s.exp > 0 ? table.value(s.letter) : table.inverse_value(s.letter);
    for (long i = 0; i < std::labs(s.exp); ++i) out = out * base;
  }
  return out;
}

// ---- orders ---------------------------------------------------------------------

std::vector<Integer> characteristic_polynomial(const IntMatrix& a) {
  // Faddeev-LeVerrier; every division is exact over Z.
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const Integer t = trace(a * mk);
    c[n - k] = -t / static_cast<long>(k);
  }
  return c;
}

namespace {

using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; nullopt if the remainder is nonzero.
std::optional<Poly> divide_monic(const Poly& num, const Poly& den) {
  if (num.size() < den.size()) return std::nullopt;
  Poly r = num;
  Poly q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Integer coef = r[i + den.size() - 1];
    q[i] = coef;
    if (coef != 0)
      for (std::size_t j = 0; j < den.size(); ++j) r[i + j] -= coef * den[j];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  trim(q);
  return q;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long n) {
  if (n < 1) fail(ErrorKind::invalid_argument, "cyclotomic index must be positive");
  Poly p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = *divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

std::string_view to_string(OrderResult::Status s) noexcept {
  switch (s) {
    case OrderResult::Status::finite: return "finite";
    case OrderResult::Status::infinite: return "infinite";
    case OrderResult::Status::exceeds_cap: return "exceeds_cap";
  }
  return "?";
}

long default_order_cap(std::size_t genus) { return 12 * static_cast<long>(genus); }

OrderResult matrix_order(const SympMatrix& m, long cap) {
  OrderResult out;
  Poly rest = characteristic_polynomial(m.matrix());
  const long degree = static_cast<long>(rest.size()) - 1;
  std::vector<long> factors;
  // phi(n) >= sqrt(n / 2), so n <= 2 degree^2 covers every candidate.
  for (long n = 1; n <= 2 * degree * degree && rest.size() > 1; ++n) {
    if (euler_phi(n) > degree) continue;
    const Poly phi = cyclotomic_polynomial(n);
    while (auto q = divide_monic(rest, phi)) {
      rest = *q;
      factors.push_back(n);
    }
  }
  if (rest.size() != 1 || rest[0] != 1) {
    out.status = OrderResult::Status::infinite;
    return out;
  }
  out.cyclotomic = true;
  out.cyclotomic_factors = factors;
  long l = 1;
  for (long n : factors) l = std::lcm(l, n);
  out.certificate_lcm = l;
  if (!m.pow(l).is_identity()) {
    out.status = OrderResult::Status::infinite;
    return out;
  }
  if (l > cap) {
    out.status = OrderResult::Status::exceeds_cap;
    return out;
  }
  // The order of a finite-order matrix is the lcm of its eigenvalue orders;
  // the scan below double-checks that no smaller power is trivial.
  for (long d = 1; d <= l; ++d)
    if (l % d == 0 && m.pow(d).is_identity()) {
      if (d != l) fail(ErrorKind::internal_consistency, "order below the cyclotomic lcm");
      out.order = d;
      break;
    }
  out.status = OrderResult::Status::finite;
  return out;
}

// ---- identities -------------------------------------------------------------------

IdentityVerdict verify_identity(const Word& lhs, const Word& rhs, const GeneratorTable& table,
                                std::string name) {
  IdentityVerdict v;
  v.name = std::move(name);
  try {
    const SympMatrix l = evaluate(lhs, table);
    const SympMatrix r = evaluate(rhs, table);
    v.holds = l == r;
    if (!v.holds)
      for (std::size_t c = 0; c < l.dimension(); ++c) {
        IntVector lc = l.matrix().column(c), rc = r.matrix().column(c);
        if (lc != rc) {
          v.column = c;
          v.lhs_column = std::move(lc);
          v.rhs_column = std::move(rc);
          break;
        }
      }
  } catch (const Error& e) {
    v.holds = false;
    v.error = e.what();
  }
  return v;
}

IdentityVerdict verify_identity(const WordIdentity& id, const GeneratorTable& table) {
  return verify_identity(id.lhs, id.rhs, table, id.name);
}

CoxeterReport coxeter_probe(const std::vector<std::string>& involutions,
                            const GeneratorTable& table, long cap) {
  CoxeterReport rep;
  rep.names = involutions;
  for (const auto& a : involutions) {
    std::vector<OrderResult> row;
    for (const auto& b : involutions)
      row.push_back(matrix_order(table.value(symmetry_letter(a)) * table.value(symmetry_letter(b)),
                                 cap));
    rep.orders.push_back(std::move(row));
  }
  return rep;
}

nlohmann::json to_json(const OrderResult& r) {
  nlohmann::json j{{"status", std::string(to_string(r.status))},
                   {"cyclotomic", r.cyclotomic}};
  if (r.status == OrderResult::Status::finite) j["order"] = r.order;
  if (r.cyclotomic) {
    j["cyclotomic_factors"] = r.cyclotomic_factors;
    j["lcm"] = r.certificate_lcm;
  }
  return j;
}

nlohmann::json to_json(const IdentityVerdict& v) {
  nlohmann::json j{{"name", v.name}, {"holds", v.holds}};
  if (v.column) {
    j["witness"] = {{"column", *v.column},
                    {"lhs", vector_to_json(v.lhs_column)},
                    {"rhs", vector_to_json(v.rhs_column)}};
  }
  if (!v.error.empty()) j["error"] = v.error;
  return j;
}

nlohmann::json to_json(const CoxeterReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.orders) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& o : row) {
      if (o.status == OrderResult::Status::finite)
        jr.push_back(o.order);
      else
        jr.push_back(std::string(to_string(o.status)));
    }
    rows.push_back(jr);
  }
  return {{"generators", r.names}, {"orders", rows}};
}

nlohmann::json matrix_report(const SympMatrix& m) {
  return {{"genus", m.genus()}, {"basis", "symplectic-standard"}, {"matrix", matrix_to_json(m.matrix())}};
}

}  // namespace mcgen
