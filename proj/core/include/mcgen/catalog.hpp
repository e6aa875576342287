#pragma once

// Everything needed for one genus, assembled once: the model, the lantern and
// pair swaps (g >= 3), and a generator table that resolves every letter used
// by the word constructors.

#include <optional>
#include <string>
#include <vector>

#include "mcgen/models.hpp"
#include "mcgen/symplectic.hpp"
#include "mcgen/words.hpp"

namespace mcgen {

struct SetupOptions {
  LanternOptions lantern;
  PairSwapSigns signs;
  /// Twist letters made left-handed in the table (negative control).
  std::vector<std::string> left_handed;
};

struct GenusSetup {
  int genus;
  CircularModel model;
  std::optional<Lantern> lantern;
  CurveTable curves;
  SymmetryTable symmetries;
  GeneratorTable table;
};

/// Throws unsupported_genus for g < 2. The lantern, I1, J1..J4 and K are
/// present only for g >= 3.
GenusSetup build_setup(int g, const SetupOptions& options = {});

/// Rebuilds a setup from exported tables (the ribbon model is rebuilt from g).
GeneratorTable table_from_tables(const CurveTable& curves, const SymmetryTable& symmetries);

enum class Suite { torsion, involution, all };
Suite suite_from_string(const std::string& s);
std::string_view to_string(Suite s) noexcept;

/// True when R(alpha1) = +-alpha2, the premise of the rotation variant.
bool rotation_variant_applicable(const CurveTable& curves, const SymmetryTable& symmetries);

/// Witness identities for one genus. The torsion part applies for g >= 2, the
/// involution part for g >= 3 (throws unsupported_genus when requested below).
std::vector<WordIdentity> identity_suite(int g, Suite suite, bool rotation_variant);

struct OrderClaim {
  std::string name;
  Word word;
  /// Order must divide this (0: no divisibility claim).
  long divides = 0;
  /// Order must equal this (0: no exact claim).
  long exactly = 0;
};

/// Q | 2g+2, S | 4g+2, R = g exactly, involutions exactly 2.
std::vector<OrderClaim> order_claims(int g);

struct OrderCheck {
  OrderClaim claim;
  OrderResult result;
  bool pass = false;
};

OrderCheck check_order(const OrderClaim& claim, const GeneratorTable& table, long cap);

nlohmann::json to_json(const OrderCheck& c);

}  // namespace mcgen
