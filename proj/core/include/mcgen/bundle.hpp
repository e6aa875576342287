#pragma once

// Self-contained JSON bundle: per genus the ribbon model, curve and symmetry
// tables, witness identities with their verdicts, order checks, generating
// sets and the Coxeter report. Output carries no timings, so it is bit-stable.

#include <vector>

#include <nlohmann/json.hpp>

#include "mcgen/catalog.hpp"

namespace mcgen {

struct ExportOptions {
  std::vector<int> genera{3, 4, 5};
  Suite suite = Suite::all;
  /// 0 selects default_order_cap(g).
  long order_cap = 0;
};

nlohmann::json export_bundle(const ExportOptions& options);

struct BundleCheck {
  struct Entry {
    int genus;
    IdentityVerdict verdict;
    bool recorded_holds;
  };
  std::vector<Entry> entries;
  bool all_hold = true;
  /// Every recomputed verdict equals the one stored in the bundle.
  bool matches_recorded = true;
};

/// Rebuilds generator tables from the stored matrices (re-checking that each
/// is symplectic) and re-evaluates every stored identity. Throws
/// invalid_argument for malformed bundles.
BundleCheck verify_bundle(const nlohmann::json& bundle);

}  // namespace mcgen
