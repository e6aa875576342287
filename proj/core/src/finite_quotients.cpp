#include "mcgen/finite_quotients.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <random>

#include "mcgen/error.hpp"

namespace mcgen {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Integer sp_group_order(int g, long p) {
  if (g < 1) fail(ErrorKind::invalid_argument, "genus must be at least 1");
  if (!is_prime(p)) fail(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  Integer pp = p;
  Integer order;
  mpz_pow_ui(order.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(g) * g);
  for (int i = 1; i <= g; ++i) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), pp.get_mpz_t(), 2UL * i);
    order *= t - 1;
  }
  return order;
}

// ---- ModMatrix --------------------------------------------------------------------

ModMatrix::ModMatrix(std::size_t n, unsigned p) : n_(n), p_(p), a_(n * n, 0) {
  if (p < 2 || p > 255) fail(ErrorKind::invalid_argument, "modulus must lie in 2..255");
}

ModMatrix ModMatrix::reduce(const IntMatrix& m, unsigned p) {
  if (m.rows() != m.cols()) fail(ErrorKind::invalid_argument, "matrix is not square");
  ModMatrix out(m.rows(), p);
  const Integer pp = p;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer x = m(r, c) % pp;
      if (x < 0) x += pp;
      out(r, c) = static_cast<std::uint8_t>(x.get_ui());
    }
  return out;
}

ModMatrix ModMatrix::identity(std::size_t n, unsigned p) {
  ModMatrix out(n, p);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool ModMatrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool ModMatrix::preserves_form() const {
  if (n_ % 2 != 0) return false;
  // <M e_a, M e_b> must equal <e_a, e_b> for all a < b.
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b) {
      long s = 0;
      for (std::size_t i = 0; i < n_; i += 2)
        s += static_cast<long>((*this)(i, a)) * (*this)(i + 1, b) -
             static_cast<long>((*this)(i + 1, a)) * (*this)(i, b);
      const long want = (a % 2 == 0 && b == a + 1) ? 1 : 0;
      const long p = p_;
      if (((s - want) % p + p) % p != 0) return false;
    }
  return true;
}

ModMatrix ModMatrix::symplectic_inverse() const {
  ModMatrix out(n_, p_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      const unsigned x = (*this)(c ^ 1u, r ^ 1u);
      const bool negate = (r % 2) != (c % 2);
      out(r, c) = static_cast<std::uint8_t>(negate && x != 0 ? p_ - x : x);
    }
  return out;
}

std::vector<std::uint8_t> ModMatrix::apply(const std::vector<std::uint8_t>& v) const {
  std::vector<std::uint8_t> out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    std::uint32_t s = 0;
    for (std::size_t c = 0; c < n_; ++c) s += static_cast<std::uint32_t>((*this)(r, c)) * v[c];
    out[r] = static_cast<std::uint8_t>(s % p_);
  }
  return out;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.n_ != b.n_ || a.p_ != b.p_) fail(ErrorKind::invalid_argument, "mod-p size mismatch");
  const std::size_t n = a.n_;
  ModMatrix out(n, a.p_);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::uint32_t s = 0;
      for (std::size_t k = 0; k < n; ++k)
        s += static_cast<std::uint32_t>(a.a_[r * n + k]) * b.a_[k * n + c];
      out.a_[r * n + c] = static_cast<std::uint8_t>(s % a.p_);
    }
  return out;
}

// ---- BSGS -------------------------------------------------------------------------

BSGSChain::BSGSChain(std::vector<ModMatrix> generators, std::size_t n, unsigned p,
                     const BsgsOptions& options)
    : n_(n), p_(p), options_(options), levels_(n) {
  if (n == 0 || n % 2 != 0) fail(ErrorKind::invalid_argument, "dimension must be even");
  if (static_cast<double>(n) * std::log2(static_cast<double>(p)) >= 63.0)
    fail(ErrorKind::resource_exceeded, "F_p^n does not fit the 64-bit point encoding");
  std::vector<ModMatrix> gens;
  for (auto& g : generators) {
    if (g.dimension() != n || g.prime() != p)
      fail(ErrorKind::invalid_argument, "generator has the wrong size or modulus");
    if (!g.preserves_form())
      fail(ErrorKind::invalid_argument, "generator does not preserve the symplectic form mod p");
    if (!g.is_identity()) gens.push_back(std::move(g));
  }
  for (std::size_t l = 0; l < n_; ++l) rebuild_level(l);
  for (const auto& g : gens) {
    auto [r, m] = sift(g, 0);
    if (m < n_) add_strong(r, m);
  }
  if (gens.empty() || reached_stop()) return;
  random_phase(gens, options_.seed);
  if (reached_stop()) return;
  complete();
}

std::uint64_t BSGSChain::encode(const std::vector<std::uint8_t>& v) const {
  std::uint64_t code = 0;
  for (std::size_t i = n_; i-- > 0;) code = code * p_ + v[i];
  return code;
}

std::vector<std::uint8_t> BSGSChain::column(const ModMatrix& m, std::size_t c) const {
  std::vector<std::uint8_t> v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = m(r, c);
  return v;
}

void BSGSChain::rebuild_level(std::size_t l) {
  Level level;
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < strong_.size(); ++i)
    if (depth_[i] >= l) gens.push_back(i);

  ModMatrix id = ModMatrix::identity(n_, p_);
  const std::uint64_t root = encode(column(id, l));
  level.points.push_back(root);
  level.index.emplace(root, 0);
  level.transversal.push_back(std::move(id));
  level.parent.push_back(-1);
  level.via.push_back(-1);
  for (std::size_t head = 0; head < level.points.size(); ++head) {
    for (std::size_t gi : gens) {
      ModMatrix u = strong_[gi] * level.transversal[head];
      const std::uint64_t code = encode(column(u, l));
      if (level.index.count(code)) continue;
      if (level.points.size() >= options_.orbit_budget)
        fail(ErrorKind::resource_exceeded,
             "basic orbit exceeds the orbit budget of " + std::to_string(options_.orbit_budget));
      level.index.emplace(code, static_cast<std::uint32_t>(level.points.size()));
      level.points.push_back(code);
      level.transversal.push_back(std::move(u));
      level.parent.push_back(static_cast<std::int32_t>(head));
      level.via.push_back(static_cast<std::int32_t>(gi));
    }
  }
  levels_[l] = std::move(level);
}

std::pair<ModMatrix, std::size_t> BSGSChain::sift(ModMatrix g, std::size_t from) const {
  for (std::size_t l = from; l < n_; ++l) {
    auto it = levels_[l].index.find(encode(column(g, l)));
    if (it == levels_[l].index.end()) return {std::move(g), l};
    g = levels_[l].transversal[it->second].symplectic_inverse() * g;
  }
  if (!g.is_identity())
    fail(ErrorKind::internal_consistency, "sift residue fixes the basis but is not I");
  return {std::move(g), n_};
}

void BSGSChain::add_strong(const ModMatrix& g, std::size_t depth) {
  strong_.push_back(g);
  depth_.push_back(depth);
  for (std::size_t l = 0; l <= depth; ++l) rebuild_level(l);
}

bool BSGSChain::reached_stop() const {
  return options_.stop_at != 0 && order() >= options_.stop_at;
}

void BSGSChain::random_phase(const std::vector<ModMatrix>& gens, std::uint64_t seed) {
  // Product replacement with an accumulator.
  std::mt19937_64 rng(seed);
  const std::size_t slots = std::max<std::size_t>(10, gens.size() + 1);
  std::vector<ModMatrix> state;
  for (std::size_t i = 0; i < slots; ++i) state.push_back(gens[i % gens.size()]);
  ModMatrix acc = ModMatrix::identity(n_, p_);
  auto step = [&] {
    std::uniform_int_distribution<std::size_t> pick(0, slots - 1);
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    const ModMatrix& other = rng() & 1 ? state[j] : state[j].symplectic_inverse();
    state[i] = rng() & 1 ? state[i] * other : other * state[i];
    acc = acc * state[i];
    return acc;
  };
  for (int i = 0; i < 50; ++i) step();
  int quiet = 0;
  while (quiet < 30) {
    auto [r, m] = sift(step(), 0);
    if (m == n_) {
      ++quiet;
      continue;
    }
    quiet = 0;
    add_strong(r, m);
    if (reached_stop()) return;
  }
}

void BSGSChain::complete() {
  // Every Schreier generator u_{s b}^-1 s u_b of every level must sift to I.
  std::size_t l = n_;
  while (l-- > 0) {
    bool restarted = false;
    for (std::size_t i = 0; i < levels_[l].points.size() && !restarted; ++i) {
      for (std::size_t si = 0; si < strong_.size(); ++si) {
        if (depth_[si] < l) continue;
        const Level& lev = levels_[l];
        const ModMatrix su = strong_[si] * lev.transversal[i];
        const auto it = lev.index.find(encode(column(su, l)));
        if (it == lev.index.end())
          fail(ErrorKind::internal_consistency, "basic orbit is not closed");
        if (lev.parent[it->second] == static_cast<std::int32_t>(i) &&
            lev.via[it->second] == static_cast<std::int32_t>(si))
          continue;  // tree edge, trivially I
        auto [r, m] = sift(lev.transversal[it->second].symplectic_inverse() * su, l + 1);
        if (m == n_) continue;
        add_strong(r, m);
        if (reached_stop()) return;
        l = m + 1;  // levels below m are untouched; re-check from m
        restarted = true;
        break;
      }
    }
  }
  verified_ = true;
}

Integer BSGSChain::order() const {
  Integer o = 1;
  for (const auto& l : levels_) o *= static_cast<unsigned long>(l.points.size());
  return o;
}

std::vector<std::size_t> BSGSChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.points.size());
  return out;
}

BSGSChain::Membership BSGSChain::membership(const ModMatrix& m) const {
  Membership out;
  if (m.dimension() != n_ || m.prime() != p_) return out;
  ModMatrix g = m;
  for (std::size_t l = 0; l < n_; ++l) {
    const Level& lev = levels_[l];
    auto it = lev.index.find(encode(column(g, l)));
    if (it == lev.index.end()) return out;
    // u_b = s_{via(b)} u_{parent(b)}, so walking to the root lists the
    // factors left to right.
    for (std::int32_t k = static_cast<std::int32_t>(it->second); lev.parent[k] >= 0;
         k = lev.parent[k])
      out.witness.push_back(static_cast<std::size_t>(lev.via[k]));
    g = lev.transversal[it->second].symplectic_inverse() * g;
  }
  out.member = g.is_identity();
  if (!out.member) out.witness.clear();
  return out;
}

// ---- verdicts ---------------------------------------------------------------------

GenerationVerdict generation_verdict(const GeneratingSet& set, const GeneratorTable& table,
                                     long p, const BsgsOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int g = static_cast<int>(table.genus());
  GenerationVerdict v;
  v.set = set.name;
  v.g = g;
  v.p = p;
  v.expected = set.expect_generates;
  v.full_order = sp_group_order(g, p);
  if (p > 255) fail(ErrorKind::invalid_argument, "primes above 255 are not supported");
  const double points = std::pow(static_cast<double>(p), 2.0 * g);
  if (points > static_cast<double>(options.orbit_budget))
    fail(ErrorKind::resource_exceeded,
         "p^(2g) = " + std::to_string(static_cast<long long>(points)) +
             " exceeds the orbit budget of " + std::to_string(options.orbit_budget) +
             " for g = " + std::to_string(g) + ", p = " + std::to_string(p));
  std::vector<ModMatrix> gens;
  for (const auto& e : set.elements)
    gens.push_back(ModMatrix::reduce(evaluate(e.word, table).matrix(), static_cast<unsigned>(p)));
  BsgsOptions opts = options;
  opts.stop_at = v.full_order;
  BSGSChain chain(std::move(gens), 2 * table.genus(), static_cast<unsigned>(p), opts);
  v.subgroup_order = chain.order();
  v.generates = v.subgroup_order == v.full_order;
  v.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

nlohmann::json to_json(const GenerationVerdict& v, bool include_time) {
  nlohmann::json j{{"set", v.set},
                   {"g", v.g},
                   {"p", v.p},
                   {"subgroup_order", v.subgroup_order.get_str()},
                   {"full_order", v.full_order.get_str()},
                   {"generates", v.generates}};
  if (include_time) j["ms"] = std::llround(v.ms);
  return j;
}

}  // namespace mcgen
