#include "mcgen/ribbon_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

#include "mcgen/error.hpp"

namespace mcgen {

namespace {

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (Dart d : p) {
    if (d >= p.size() || seen[d]) return false;
    seen[d] = true;
  }
  return true;
}

// Cycles of `p`, each starting at its smallest dart, ordered by that dart.
std::vector<std::vector<Dart>> cycles_of(const Permutation& p, std::vector<std::size_t>& owner) {
  std::vector<std::vector<Dart>> out;
  owner.assign(p.size(), std::numeric_limits<std::size_t>::max());
  for (Dart d = 0; d < p.size(); ++d) {
    if (owner[d] != std::numeric_limits<std::size_t>::max()) continue;
    std::vector<Dart> cyc;
    Dart x = d;
    do {
      owner[x] = out.size();
      cyc.push_back(x);
      x = p[x];
    } while (x != d);
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

RibbonGraph::RibbonGraph(Permutation edge_pairing, Permutation vertex_rotation,
                         std::map<Dart, std::string> labels)
    : iota_(std::move(edge_pairing)),
      sigma_(std::move(vertex_rotation)),
      labels_(std::move(labels)) {
  if (iota_.size() != sigma_.size())
    fail(ErrorKind::malformed_graph, "edge pairing and vertex rotation differ in size");
  if (iota_.empty() || iota_.size() % 2 != 0)
    fail(ErrorKind::malformed_graph, "dart count must be positive and even");
  if (!is_permutation(iota_) || !is_permutation(sigma_))
    fail(ErrorKind::malformed_graph, "edge pairing and vertex rotation must be permutations");
  for (Dart d = 0; d < iota_.size(); ++d) {
    if (iota_[d] == d)
      fail(ErrorKind::malformed_graph, "edge pairing fixes dart " + std::to_string(d));
    if (iota_[iota_[d]] != d)
      fail(ErrorKind::malformed_graph, "edge pairing is not an involution at dart " +
                                           std::to_string(d));
  }
  for (const auto& [d, name] : labels_) {
    if (d >= iota_.size()) fail(ErrorKind::malformed_graph, "label on nonexistent dart");
  }
  sigma_inv_.assign(sigma_.size(), 0);
  for (Dart d = 0; d < sigma_.size(); ++d) sigma_inv_[sigma_[d]] = d;

  vertices_ = cycles_of(sigma_, vertex_of_);
  Permutation phi(iota_.size());
  for (Dart d = 0; d < phi.size(); ++d) phi[d] = sigma_[iota_[d]];
  faces_ = cycles_of(phi, face_of_);
}

Dart RibbonGraph::dart(const std::string& label) const {
  for (const auto& [d, name] : labels_)
    if (name == label) return d;
  fail(ErrorKind::invalid_argument, "no dart labelled '" + label + "'");
}

bool RibbonGraph::connected() const {
  std::vector<bool> seen(vertex_count(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (Dart d : vertices_[v]) {
      const std::size_t w = vertex_of_[iota_[d]];
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == vertex_count();
}

int genus(const RibbonGraph& rg) {
  if (!rg.connected()) fail(ErrorKind::malformed_graph, "ribbon graph is not connected");
  const long chi = rg.euler_characteristic();
  if (chi > 2 || chi % 2 != 0)
    fail(ErrorKind::malformed_graph,
         "Euler characteristic " + std::to_string(chi) + " is not that of a closed surface");
  return static_cast<int>((2 - chi) / 2);
}

void validate_cycle(const RibbonGraph& rg, const Cycle& c) {
  if (c.darts.empty()) fail(ErrorKind::not_a_cycle, "empty edge-path");
  for (Dart d : c.darts)
    if (d >= rg.dart_count()) fail(ErrorKind::not_a_cycle, "edge-path uses nonexistent dart");
  for (std::size_t i = 0; i < c.darts.size(); ++i) {
    const Dart next = c.darts[(i + 1) % c.darts.size()];
    if (rg.vertex_of(rg.pair(c.darts[i])) != rg.vertex_of(next))
      fail(ErrorKind::not_a_cycle,
           "edge-path " + (c.name.empty() ? std::string("<unnamed>") : c.name) +
               " is not closed at step " + std::to_string(i));
  }
}

Cycle reversed(const RibbonGraph& rg, const Cycle& c) {
  Cycle r{{}, c.name};
  r.darts.reserve(c.darts.size());
  for (auto it = c.darts.rbegin(); it != c.darts.rend(); ++it) r.darts.push_back(rg.pair(*it));
  return r;
}

Cycle face_boundary(const RibbonGraph& rg, std::size_t face) {
  return Cycle{rg.faces().at(face), "face" + std::to_string(face)};
}

Cycle cyclically_reduced(const RibbonGraph& rg, const Cycle& c) {
  std::deque<Dart> out;
  for (Dart d : c.darts) {
    if (!out.empty() && out.back() == rg.pair(d))
      out.pop_back();
    else
      out.push_back(d);
  }
  while (out.size() >= 2 && out.back() == rg.pair(out.front())) {
    out.pop_back();
    out.pop_front();
  }
  return Cycle{std::vector<Dart>(out.begin(), out.end()), c.name};
}

bool same_cycle(const Cycle& a, const Cycle& b) {
  if (a.darts.size() != b.darts.size()) return false;
  if (a.darts.empty()) return true;
  const std::size_t n = a.darts.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a.darts[i] == b.darts[(i + shift) % n];
    if (ok) return true;
  }
  return false;
}

Integer intersection_number(const RibbonGraph& rg, const Cycle& a, const Cycle& b) {
  validate_cycle(rg, a);
  validate_cycle(rg, b);
  std::vector<long> flow(rg.dart_count(), 0);
  for (Dart d : a.darts) {
    ++flow[d];
    --flow[rg.pair(d)];
  }
  // The push-off of b sweeps each corner from its outgoing dart, in rotation
  // order, back to the incoming dart; every dart strictly inside is crossed.
  long total = 0;
  for (std::size_t i = 0; i < b.darts.size(); ++i) {
    const Dart incoming = rg.pair(b.darts[i]);
    const Dart outgoing = b.darts[(i + 1) % b.darts.size()];
    for (Dart x = rg.rotate(outgoing); x != incoming; x = rg.rotate(x)) total += flow[x];
  }
  return Integer(total);
}

GraphAutomorphism::GraphAutomorphism(Permutation map, std::string name)
    : map_(std::move(map)), name_(std::move(name)) {
  if (!is_permutation(map_))
    fail(ErrorKind::malformed_graph, "automorphism is not a permutation of darts");
}

GraphAutomorphism GraphAutomorphism::identity(std::size_t darts) {
  Permutation p(darts);
  for (Dart d = 0; d < darts; ++d) p[d] = d;
  return GraphAutomorphism(std::move(p), "id");
}

Cycle GraphAutomorphism::operator()(const Cycle& c) const {
  Cycle out{{}, c.name};
  out.darts.reserve(c.darts.size());
  for (Dart d : c.darts) out.darts.push_back(map_.at(d));
  return out;
}

GraphAutomorphism GraphAutomorphism::compose(const GraphAutomorphism& other) const {
  if (other.map_.size() != map_.size())
    fail(ErrorKind::invalid_argument, "composing automorphisms of different graphs");
  Permutation p(map_.size());
  for (Dart d = 0; d < p.size(); ++d) p[d] = map_[other.map_[d]];
  return GraphAutomorphism(std::move(p), name_ + "*" + other.name_);
}

GraphAutomorphism GraphAutomorphism::inverse() const {
  Permutation p(map_.size());
  for (Dart d = 0; d < p.size(); ++d) p[map_[d]] = d;
  return GraphAutomorphism(std::move(p), name_ + "^-1");
}

Orientation classify_automorphism(const RibbonGraph& rg, const GraphAutomorphism& phi) {
  if (phi.map().size() != rg.dart_count())
    fail(ErrorKind::malformed_graph, "automorphism acts on a different dart set");
  bool preserving = true;
  bool reversing = true;
  for (Dart d = 0; d < rg.dart_count(); ++d) {
    if (phi(rg.pair(d)) != rg.pair(phi(d)))
      fail(ErrorKind::malformed_graph, "map does not commute with the edge pairing");
    if (phi(rg.rotate(d)) != rg.rotate(phi(d))) preserving = false;
    if (phi(rg.rotate(d)) != rg.rotate_back(phi(d))) reversing = false;
  }
  if (preserving) return Orientation::preserving;
  if (reversing) return Orientation::reversing;
  fail(ErrorKind::malformed_graph, "map does not respect the rotation system");
}

namespace {

// Intersections of c with each basis cycle, then J P^T q.
IntVector standard_coordinates(const RibbonGraph& rg, const HomologyBasis& basis,
                               const Cycle& c) {
  const std::size_t n = basis.cycles.size();
  IntVector q(n);
  for (std::size_t e = 0; e < n; ++e) q[e] = intersection_number(rg, c, basis.cycles[e]);
  IntVector ptq(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t e = 0; e < n; ++e) ptq[j] += basis.change_of_basis(e, j) * q[e];
  IntVector x(n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    x[i] = ptq[i + 1];
    x[i + 1] = -ptq[i];
  }
  return x;
}

}  // namespace

HomologyBasis homology_basis(const RibbonGraph& rg) {
  const int g = genus(rg);
  const std::size_t nv = rg.vertex_count();
  const std::size_t nf = rg.face_count();
  constexpr Dart none = std::numeric_limits<Dart>::max();

  // Spanning tree by BFS from the vertex of dart 0.
  std::vector<Dart> parent_dart(nv, none);
  std::vector<bool> tree_edge(rg.dart_count(), false);
  {
    std::vector<bool> seen(nv, false);
    std::deque<std::size_t> queue{rg.vertex_of(0)};
    seen[rg.vertex_of(0)] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (Dart d : rg.vertices()[v]) {
        const std::size_t w = rg.vertex_of(rg.pair(d));
        if (seen[w]) continue;
        seen[w] = true;
        parent_dart[w] = d;
        tree_edge[d] = tree_edge[rg.pair(d)] = true;
        queue.push_back(w);
      }
    }
  }

  // Spanning tree of the dual graph avoiding tree edges.
  std::vector<bool> cotree_edge(rg.dart_count(), false);
  {
    std::vector<bool> seen(nf, false);
    std::deque<std::size_t> queue{rg.face_of(0)};
    seen[rg.face_of(0)] = true;
    while (!queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop_front();
      for (Dart d : rg.faces()[f]) {
        if (tree_edge[d]) continue;
        const std::size_t h = rg.face_of(rg.pair(d));
        if (seen[h]) continue;
        seen[h] = true;
        cotree_edge[d] = cotree_edge[rg.pair(d)] = true;
        queue.push_back(h);
      }
    }
  }

  auto path_from_root = [&](std::size_t v) {
    std::vector<Dart> path;
    while (parent_dart[v] != none) {
      path.push_back(parent_dart[v]);
      v = rg.vertex_of(parent_dart[v]);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  HomologyBasis hb;
  hb.genus = static_cast<std::size_t>(g);
  for (Dart d = 0; d < rg.dart_count(); ++d) {
    if (d > rg.pair(d) || tree_edge[d] || cotree_edge[d]) continue;
    Cycle z;
    z.name = "z" + std::to_string(hb.cycles.size());
    z.darts = path_from_root(rg.vertex_of(d));
    z.darts.push_back(d);
    const auto back = path_from_root(rg.vertex_of(rg.pair(d)));
    for (auto it = back.rbegin(); it != back.rend(); ++it) z.darts.push_back(rg.pair(*it));
    hb.cycles.push_back(cyclically_reduced(rg, z));
  }
  if (hb.cycles.size() != 2 * hb.genus)
    fail(ErrorKind::internal_consistency, "tree/cotree decomposition left " +
                                              std::to_string(hb.cycles.size()) +
                                              " edges for genus " + std::to_string(g));

  const std::size_t n = hb.cycles.size();
  hb.form = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      hb.form(i, j) = intersection_number(rg, hb.cycles[i], hb.cycles[j]);
  if (n == 0) {
    hb.change_of_basis = IntMatrix();
    return hb;
  }
  hb.change_of_basis = symplectic_basis(hb.form);
  for (const auto& z : hb.cycles) hb.classes.push_back(standard_coordinates(rg, hb, z));
  return hb;
}

IntVector cycle_class(const RibbonGraph& rg, const HomologyBasis& basis, const Cycle& c) {
  validate_cycle(rg, c);
  return standard_coordinates(rg, basis, c);
}

SympMatrix induced_map(const RibbonGraph& rg, const HomologyBasis& basis,
                       const GraphAutomorphism& phi) {
  if (classify_automorphism(rg, phi) == Orientation::reversing)
    fail(ErrorKind::orientation_reversing,
         "automorphism " + phi.name() + " reverses orientation; only orientation-preserving maps "
                                        "act on the mapping class group");
  const std::size_t n = basis.cycles.size();
  std::vector<IntVector> images;
  images.reserve(n);
  for (const auto& z : basis.cycles) images.push_back(cycle_class(rg, basis, phi(z)));
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector col = zero_vector(n);
    for (std::size_t e = 0; e < n; ++e)
      if (basis.change_of_basis(e, j) != 0) col = col + basis.change_of_basis(e, j) * images[e];
    m.set_column(j, col);
  }
  if (!is_symplectic(m))
    fail(ErrorKind::internal_consistency, "induced map of " + phi.name() + " is not symplectic");
  return SympMatrix(std::move(m));
}

nlohmann::json to_json(const RibbonGraph& rg) {
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [d, name] : rg.labels()) labels[std::to_string(d)] = name;
  return nlohmann::json{{"darts", rg.dart_count()},
                        {"edge_pairing", rg.edge_pairing()},
                        {"vertex_rotation", rg.vertex_rotation()},
                        {"labels", labels}};
}

RibbonGraph ribbon_graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("darts").get<std::size_t>();
    auto iota = j.at("edge_pairing").get<Permutation>();
    auto sigma = j.at("vertex_rotation").get<Permutation>();
    if (iota.size() != n || sigma.size() != n)
      fail(ErrorKind::malformed_graph, "dart count does not match permutation lengths");
    std::map<Dart, std::string> labels;
    if (j.contains("labels")) {
      for (const auto& [key, value] : j.at("labels").items())
        labels.emplace(static_cast<Dart>(std::stoul(key)), value.get<std::string>());
    }
    return RibbonGraph(std::move(iota), std::move(sigma), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::malformed_graph, std::string("bad ribbon graph JSON: ") + e.what());
  }
}

}  // namespace mcgen
