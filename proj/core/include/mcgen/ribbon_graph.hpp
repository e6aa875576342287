#pragma once

// Combinatorial oriented surfaces.
//
// A ribbon graph is a set of darts {0..n-1} with two permutations:
//   edge_pairing     iota, a fixed-point-free involution (the two ends of an edge)
//   vertex_rotation  sigma, whose cycles are the vertices; the cyclic order of a
//                    cycle is the counterclockwise order of darts around that
//                    vertex, which fixes the orientation of the surface.
// Faces are the cycles of sigma o iota. A dart d leaves the vertex containing d
// and arrives at the vertex containing iota(d).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcgen/integer_matrix.hpp"
#include "mcgen/symp_matrix.hpp"

namespace mcgen {

using Dart = std::uint32_t;
using Permutation = std::vector<Dart>;

class RibbonGraph {
 public:
  /// Validates the permutations; throws malformed_graph on violation.
  RibbonGraph(Permutation edge_pairing, Permutation vertex_rotation,
              std::map<Dart, std::string> labels = {});

  std::size_t dart_count() const noexcept { return iota_.size(); }
  Dart pair(Dart d) const { return iota_[d]; }
  Dart rotate(Dart d) const { return sigma_[d]; }
  Dart rotate_back(Dart d) const { return sigma_inv_[d]; }
  Dart face_step(Dart d) const { return sigma_[iota_[d]]; }

  const Permutation& edge_pairing() const noexcept { return iota_; }
  const Permutation& vertex_rotation() const noexcept { return sigma_; }
  const std::map<Dart, std::string>& labels() const noexcept { return labels_; }
  /// Looks up a dart by label; throws invalid_argument if absent.
  Dart dart(const std::string& label) const;

  std::size_t vertex_of(Dart d) const { return vertex_of_[d]; }
  std::size_t face_of(Dart d) const { return face_of_[d]; }
  const std::vector<std::vector<Dart>>& vertices() const noexcept { return vertices_; }
  const std::vector<std::vector<Dart>>& faces() const noexcept { return faces_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return iota_.size() / 2; }
  std::size_t face_count() const noexcept { return faces_.size(); }
  long euler_characteristic() const noexcept {
    return static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) +
           static_cast<long>(face_count());
  }
  bool connected() const;

  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
    return a.iota_ == b.iota_ && a.sigma_ == b.sigma_ && a.labels_ == b.labels_;
  }

 private:
  Permutation iota_;
  Permutation sigma_;
  Permutation sigma_inv_;
  std::map<Dart, std::string> labels_;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::size_t> face_of_;
  std::vector<std::vector<Dart>> vertices_;
  std::vector<std::vector<Dart>> faces_;
};

/// (2 - V + E - F) / 2. Throws malformed_graph for disconnected graphs.
int genus(const RibbonGraph& rg);

/// Closed edge-path: darts[i] arrives where darts[i+1] leaves, cyclically.
struct Cycle {
  std::vector<Dart> darts;
  std::string name;
};

/// Throws not_a_cycle unless `c` is a non-empty closed edge-path.
void validate_cycle(const RibbonGraph& rg, const Cycle& c);
Cycle reversed(const RibbonGraph& rg, const Cycle& c);
Cycle face_boundary(const RibbonGraph& rg, std::size_t face);
/// Cancels backtracking pairs (d, iota(d)), including across the wrap-around.
Cycle cyclically_reduced(const RibbonGraph& rg, const Cycle& c);
/// Same closed path up to cyclic rotation of the dart sequence.
bool same_cycle(const Cycle& a, const Cycle& b);

/// Algebraic intersection number <[a],[b]> of two closed edge-paths, computed
/// by pushing b off the graph to one side and counting signed crossings with a.
Integer intersection_number(const RibbonGraph& rg, const Cycle& a, const Cycle& b);

class GraphAutomorphism {
 public:
  explicit GraphAutomorphism(Permutation map, std::string name = {});
  static GraphAutomorphism identity(std::size_t darts);

  Dart operator()(Dart d) const { return map_[d]; }
  Cycle operator()(const Cycle& c) const;
  const Permutation& map() const noexcept { return map_; }
  const std::string& name() const noexcept { return name_; }

  /// (this o other)(d) = this(other(d)).
  GraphAutomorphism compose(const GraphAutomorphism& other) const;
  GraphAutomorphism inverse() const;

  friend bool operator==(const GraphAutomorphism& a, const GraphAutomorphism& b) {
    return a.map_ == b.map_;
  }

 private:
  Permutation map_;
  std::string name_;
};

enum class Orientation { preserving, reversing };

/// Throws malformed_graph if phi does not commute with the edge pairing or
/// does not conjugate the rotation system to itself or its inverse.
Orientation classify_automorphism(const RibbonGraph& rg, const GraphAutomorphism& phi);

struct HomologyBasis {
  std::size_t genus = 0;
  /// Fundamental cycles of the non-tree, non-cotree edges, in dart order.
  std::vector<Cycle> cycles;
  /// Intersection form on `cycles`.
  IntMatrix form;
  /// Columns express the standard symplectic basis in terms of `cycles`;
  /// change_of_basis^T * form * change_of_basis == J_std.
  IntMatrix change_of_basis;
  /// Standard coordinates of each entry of `cycles`.
  std::vector<IntVector> classes;
};

/// Tree/cotree homology basis followed by integral symplectic reduction.
/// Deterministic: traversals follow increasing dart order.
HomologyBasis homology_basis(const RibbonGraph& rg);

/// Coordinates of [c] in the standard symplectic basis. A nonzero result
/// certifies that c is homologically nontrivial (hence nonseparating if simple);
/// zero does not by itself certify that c separates.
IntVector cycle_class(const RibbonGraph& rg, const HomologyBasis& basis, const Cycle& c);

/// Action of an orientation-preserving automorphism on H_1 in standard
/// coordinates. Throws orientation_reversing for reversing maps.
SympMatrix induced_map(const RibbonGraph& rg, const HomologyBasis& basis,
                       const GraphAutomorphism& phi);

nlohmann::json to_json(const RibbonGraph& rg);
RibbonGraph ribbon_graph_from_json(const nlohmann::json& j);

}  // namespace mcgen
