#pragma once

// Concrete surface models: the circular model carrying the Lickorish curves and
// the dihedral symmetries R, rho1, rho2, plus a good lantern inside it and the
// pair-swap involutions acting on that lantern.
//
// Circular model of genus g. Take a disk in the plane with g holes placed
// symmetrically around its center and double it along its boundary circles.
// Cells:
//   vertices  o_i (outer circle), p_i / q_i (outer / inner point of hole i),
//             c_top, c_bottom (centers of the two sheets)
//   edges     K_i, W_i   counterclockwise / clockwise arc of hole i, p_i -> q_i
//             O_i        outer arc o_i -> o_{i+1}
//             tr_i, br_i radial segment o_i -> p_i on the top / bottom sheet
//             ts_i, bs_i spoke c_top -> q_i / c_bottom -> q_i
// V = 3g+2, E = 7g, F = 2g. The symmetries are literal dart permutations:
//   R      rotation carrying hole i to hole i+1
//   rho_k  rotation by pi about the in-plane axis that maps hole i to hole k-i
//          (a reflection of the disk combined with the sheet swap)
// with rho1 = rho_1 and rho2 = rho_0, so that R = rho1 o rho2 holds dart by dart.
// Curves (handle index i = 1..g, hole i-1):
//   alpha_i  tr^+ then br^-: passes through hole i on its outer side
//   beta_i   the boundary circle of hole i
//   gamma_i  through holes i and i+1 on their inner sides, via both centers
//
// Lantern (g >= 3): a1 = alpha1, a4 = gamma1, a3 = beta3 = R^2(beta1). The
// interior curve x1 separating {a1, a4} from {a2, a3} is alpha2 = rho1(alpha1).
// Boundary classes are oriented so that a1 + a2 + a3 + a4 = 0, which fixes
// a2 = -(a1 + a3 + a4); the interior classes are x1 = a1 + a4, x2 = a1 + a3,
// x3 = a1 + a2. The class of x2 is only pinned down up to this choice.

#include <array>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "mcgen/integer_matrix.hpp"
#include "mcgen/ribbon_graph.hpp"
#include "mcgen/symp_matrix.hpp"

namespace mcgen {

enum class Provenance { geometric, solved };
std::string_view to_string(Provenance p) noexcept;

struct CurveTable {
  int genus = 0;
  std::map<std::string, IntVector> classes;

  bool contains(const std::string& name) const { return classes.count(name) != 0; }
  /// Throws unknown_generator for a missing curve.
  const IntVector& at(const std::string& name) const;
};

struct SymmetryEntry {
  SympMatrix matrix;
  Provenance provenance;
};

struct SymmetryTable {
  int genus = 0;
  std::map<std::string, SymmetryEntry> entries;

  bool contains(const std::string& name) const { return entries.count(name) != 0; }
  const SympMatrix& at(const std::string& name) const;
};

struct CircularModel {
  int genus = 0;
  RibbonGraph graph;
  HomologyBasis basis;
  /// alpha1..alpha_g, beta1..beta_g, gamma1..gamma_g (gamma_g joins hole g to hole 1).
  std::map<std::string, Cycle> cycles;
  /// "R", "rho1", "rho2".
  std::map<std::string, GraphAutomorphism> automorphisms;
  /// alpha_i, beta_i, gamma_1..gamma_{g-1}.
  CurveTable curves;
  /// R, rho1, rho2, all geometric.
  SymmetryTable symmetries;
};

/// Throws unsupported_genus for g < 2.
CircularModel circular_model(int g);

struct LanternOptions {
  /// Orient a3 as -[beta3] instead of +[beta3]; this changes the class of a2.
  bool flip_a3 = false;
};

struct Lantern {
  std::array<IntVector, 4> boundary;  // a1..a4, summing to zero
  std::array<IntVector, 3> interior;  // x1..x3
  /// Model curves playing the roles of a1, a3, a4.
  std::string a1_curve = "alpha1";
  std::string a3_curve = "beta3";
  std::string a4_curve = "gamma1";
};

/// Builds the lantern inside the circular model. Throws unsupported_genus for
/// g < 3 and construction_failed if the model classes do not fit together.
Lantern good_lantern(const CircularModel& model, const LanternOptions& options = {});

/// Adds a1..a4, x1..x3 to a copy of `curves`.
CurveTable with_lantern(CurveTable curves, const Lantern& lantern);

/// Per-involution sign resolutions. Each involution is pinned down on the
/// lantern classes only up to sign; every choice here is a valid involution.
struct PairSwapSigns {
  int j1 = 1;        // J1 = j1 * (a1 <-> a2) on the lantern lattice
  int j2_swap = 1;   // J2: a1 -> j2_swap * a3
  int j2_fixed = 1;  // J2: a4 -> j2_fixed * a4
  int j3 = 1;        // J3 = j3 * (a1 <-> a2, a3 <-> a4)
};

/// Adds I1 (= rho1, geometric) and the solved pair swaps J1, J2, J3 and
/// J4 = J2 J3 J2 to a copy of the model's symmetry table. Every entry is
/// checked against its lantern constraints; violations throw construction_failed.
SymmetryTable pair_swaps(const CircularModel& model, const Lantern& lantern,
                         const PairSwapSigns& signs = {});

/// Symplectic involution J with J(u_i) = sum_m images(m, i) u_m on the span of
/// the u_i, mirrored on symplectic partners and the identity on the
/// complement. The u_i must be isotropic and span a primitive sublattice, and
/// `images` must square to the identity; otherwise throws construction_failed.
SympMatrix solve_involution(std::size_t genus, const std::vector<IntVector>& u,
                            const IntMatrix& images);

/// True when m v == w or m v == -w.
bool maps_up_to_sign(const SympMatrix& m, const IntVector& v, const IntVector& w);

nlohmann::json to_json(const CurveTable& curves, const SymmetryTable& symmetries);
CurveTable curve_table_from_json(const nlohmann::json& j);
/// Re-checks every matrix for the symplectic property; throws invalid_argument.
SymmetryTable symmetry_table_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const IntVector& v);
IntVector vector_from_json(const nlohmann::json& j);

}  // namespace mcgen
