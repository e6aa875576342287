#pragma once

// Matrix groups over F_p (p < 256) and a base and strong generating set for
// them, used to certify that a generating set surjects onto Sp(2g, p).
//
// The base is the standard basis e_0 .. e_{2g-1}: a matrix fixing all of them
// is the identity, so sifting through every level always ends at I.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcgen/catalog.hpp"
#include "mcgen/integer_matrix.hpp"

namespace mcgen {

bool is_prime(long p);

/// p^(g^2) prod_{i=1..g} (p^(2i) - 1). Throws invalid_argument unless p is
/// prime and g >= 1.
Integer sp_group_order(int g, long p);

class ModMatrix {
 public:
  ModMatrix(std::size_t n, unsigned p);
  /// Reduces an integer matrix mod p (entries taken in 0..p-1).
  static ModMatrix reduce(const IntMatrix& m, unsigned p);
  static ModMatrix identity(std::size_t n, unsigned p);

  std::size_t dimension() const noexcept { return n_; }
  unsigned prime() const noexcept { return p_; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  bool is_identity() const;
  bool preserves_form() const;
  /// -J M^T J; valid for matrices preserving the standard form.
  ModMatrix symplectic_inverse() const;
  /// Image of basis vector e_c is column c.
  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& v) const;

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t n_;
  unsigned p_;
  std::vector<std::uint8_t> a_;
};

struct BsgsOptions {
  /// Maximum number of points in any basic orbit.
  std::uint64_t orbit_budget = 10'000'000;
  std::uint64_t seed = 0x5eed;
  /// Stop as soon as the order reaches this value (a certified upper bound
  /// for the group, e.g. |Sp(2g, p)|). Zero disables the shortcut.
  Integer stop_at = 0;
};

class BSGSChain {
 public:
  /// Builds the chain. Throws resource_exceeded when an orbit outgrows the
  /// budget and invalid_argument for non-invertible generators.
  BSGSChain(std::vector<ModMatrix> generators, std::size_t n, unsigned p,
            const BsgsOptions& options = {});

  Integer order() const;
  std::size_t dimension() const noexcept { return n_; }
  unsigned prime() const noexcept { return p_; }
  const std::vector<ModMatrix>& strong_generators() const noexcept { return strong_; }
  std::vector<std::size_t> orbit_sizes() const;
  /// True when the chain was completed by Schreier generator checks rather
  /// than by reaching stop_at.
  bool verified_complete() const noexcept { return verified_; }

  struct Membership {
    bool member = false;
    /// Strong generator indices s_1, ..., s_k with M = s_1 s_2 ... s_k.
    std::vector<std::size_t> witness;
  };
  Membership membership(const ModMatrix& m) const;

 private:
  struct Level {
    std::vector<std::uint64_t> points;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    std::vector<ModMatrix> transversal;  // transversal[i] maps e_level to points[i]
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> via;  // strong generator index used to reach the point
  };

  std::uint64_t encode(const std::vector<std::uint8_t>& v) const;
  std::vector<std::uint8_t> column(const ModMatrix& m, std::size_t c) const;
  void rebuild_level(std::size_t level);
  /// Returns the residue and the level where sifting stopped (n_ if complete).
  std::pair<ModMatrix, std::size_t> sift(ModMatrix g, std::size_t from) const;
  void add_strong(const ModMatrix& g, std::size_t depth);
  void random_phase(const std::vector<ModMatrix>& gens, std::uint64_t seed);
  bool reached_stop() const;
  void complete();

  std::size_t n_;
  unsigned p_;
  BsgsOptions options_;
  std::vector<ModMatrix> strong_;
  std::vector<std::size_t> depth_;  // first base point moved by strong_[i]
  std::vector<Level> levels_;
  bool verified_ = false;
};

struct GenerationVerdict {
  std::string set;
  int g = 0;
  long p = 0;
  Integer subgroup_order;
  Integer full_order;
  bool generates = false;
  std::optional<bool> expected = true;
  double ms = 0;
};

/// Evaluates the set's elements, reduces them mod p and compares the
/// generated order with |Sp(2g, p)|. Throws resource_exceeded when p^(2g)
/// exceeds the orbit budget.
GenerationVerdict generation_verdict(const GeneratingSet& set, const GeneratorTable& table,
                                     long p, const BsgsOptions& options = {});

/// Without the runtime when include_time is false (bit-stable exports).
nlohmann::json to_json(const GenerationVerdict& v, bool include_time = true);

}  // namespace mcgen
