#include "mcgen/models.hpp"

#include <utility>

#include "mcgen/error.hpp"

namespace mcgen {

std::string_view to_string(Provenance p) noexcept {
  return p == Provenance::geometric ? "geometric" : "solved";
}

const IntVector& CurveTable::at(const std::string& name) const {
  auto it = classes.find(name);
  if (it == classes.end()) fail(ErrorKind::unknown_generator, "unknown curve '" + name + "'");
  return it->second;
}

const SympMatrix& SymmetryTable::at(const std::string& name) const {
  auto it = entries.find(name);
  if (it == entries.end()) fail(ErrorKind::unknown_generator, "unknown symmetry '" + name + "'");
  return it->second.matrix;
}

namespace {

enum EdgeKind : Dart { K = 0, W, O, TR, BR, TS, BS, kEdgeKinds };
constexpr const char* kEdgeNames[] = {"K", "W", "O", "tr", "br", "ts", "bs"};

struct Layout {
  int g;
  std::size_t hole(long i) const {
    const long m = ((i % g) + g) % g;
    return static_cast<std::size_t>(m);
  }
  // Dart at the start (+) or end (-) of edge `kind` of hole i.
  Dart start(EdgeKind kind, long i) const {
    return static_cast<Dart>(2 * (kEdgeKinds * hole(i) + kind));
  }
  Dart end(EdgeKind kind, long i) const { return start(kind, i) + 1; }
  std::size_t darts() const { return 2 * kEdgeKinds * static_cast<std::size_t>(g); }
};

RibbonGraph build_graph(const Layout& L) {
  const std::size_t n = L.darts();
  Permutation iota(n), sigma(n);
  std::map<Dart, std::string> labels;
  for (Dart d = 0; d < n; ++d) iota[d] = d ^ 1u;

  auto ring = [&](std::initializer_list<Dart> ds) {
    std::vector<Dart> v(ds);
    for (std::size_t k = 0; k < v.size(); ++k) sigma[v[k]] = v[(k + 1) % v.size()];
  };
  for (long i = 0; i < L.g; ++i) {
    ring({L.start(O, i), L.start(TR, i), L.end(O, i - 1), L.start(BR, i)});  // o_i
    ring({L.start(W, i), L.end(TR, i), L.start(K, i), L.end(BR, i)});        // p_i
    ring({L.end(K, i), L.end(TS, i), L.end(W, i), L.end(BS, i)});            // q_i
    sigma[L.start(TS, i)] = L.start(TS, i + 1);                              // c_top
    sigma[L.start(BS, i)] = L.start(BS, i - 1);                              // c_bottom
    for (Dart k = 0; k < kEdgeKinds; ++k) {
      const std::string base = kEdgeNames[k] + std::to_string(i + 1);
      labels[L.start(static_cast<EdgeKind>(k), i)] = base + "+";
      labels[L.end(static_cast<EdgeKind>(k), i)] = base + "-";
    }
  }
  return RibbonGraph(std::move(iota), std::move(sigma), std::move(labels));
}

GraphAutomorphism rotation(const Layout& L) {
  Permutation p(L.darts());
  for (long i = 0; i < L.g; ++i)
    for (Dart k = 0; k < kEdgeKinds; ++k) {
      const auto kind = static_cast<EdgeKind>(k);
      p[L.start(kind, i)] = L.start(kind, i + 1);
      p[L.end(kind, i)] = L.end(kind, i + 1);
    }
  return GraphAutomorphism(std::move(p), "R");
}

// Half-turn about the in-plane axis sending hole i to hole k - i.
GraphAutomorphism half_turn(const Layout& L, long k, std::string name) {
  Permutation p(L.darts());
  auto both = [&](EdgeKind from, long i, EdgeKind to, long j) {
    p[L.start(from, i)] = L.start(to, j);
    p[L.end(from, i)] = L.end(to, j);
  };
  for (long i = 0; i < L.g; ++i) {
    both(K, i, W, k - i);
    both(W, i, K, k - i);
    both(TR, i, BR, k - i);
    both(BR, i, TR, k - i);
    both(TS, i, BS, k - i);
    both(BS, i, TS, k - i);
    // The outer arc o_i -> o_{i+1} lands on o_{k-i} -> o_{k-i-1}, reversed.
    p[L.start(O, i)] = L.end(O, k - i - 1);
    p[L.end(O, i)] = L.start(O, k - i - 1);
  }
  return GraphAutomorphism(std::move(p), std::move(name));
}

bool plus_or_minus(const IntVector& v, const IntVector& w) { return v == w || v == -w; }

}  // namespace

CircularModel circular_model(int g) {
  if (g < 2)
    fail(ErrorKind::unsupported_genus,
         "the circular model needs g >= 2 (genus 1 is covered by SL(2,Z) directly)");
  const Layout L{g};
  RibbonGraph graph = build_graph(L);
  if (genus(graph) != g)
    fail(ErrorKind::internal_consistency, "circular model has the wrong genus");
  HomologyBasis basis = homology_basis(graph);

  std::map<std::string, Cycle> cycles;
  for (long i = 0; i < g; ++i) {
    const std::string idx = std::to_string(i + 1);
    cycles["alpha" + idx] = Cycle{{L.start(TR, i), L.end(BR, i)}, "alpha" + idx};
    cycles["beta" + idx] = Cycle{{L.start(K, i), L.end(W, i)}, "beta" + idx};
    cycles["gamma" + idx] = Cycle{
        {L.end(TS, i), L.start(TS, i + 1), L.end(BS, i + 1), L.start(BS, i)}, "gamma" + idx};
  }

  std::map<std::string, GraphAutomorphism> autos;
  autos.emplace("R", rotation(L));
  autos.emplace("rho1", half_turn(L, 1, "rho1"));
  autos.emplace("rho2", half_turn(L, 0, "rho2"));
  if (!(autos.at("rho1").compose(autos.at("rho2")) == autos.at("R")))
    fail(ErrorKind::internal_consistency, "R != rho1 o rho2 at the dart level");

  CurveTable curves{g, {}};
  for (const auto& [name, cycle] : cycles) {
    if (name == "gamma" + std::to_string(g)) continue;
    curves.classes[name] = cycle_class(graph, basis, cycle);
  }

  SymmetryTable symmetries{g, {}};
  for (const auto& [name, phi] : autos)
    symmetries.entries.emplace(name,
                               SymmetryEntry{induced_map(graph, basis, phi), Provenance::geometric});

  return CircularModel{g,
                       std::move(graph),
                       std::move(basis),
                       std::move(cycles),
                       std::move(autos),
                       std::move(curves),
                       std::move(symmetries)};
}

Lantern good_lantern(const CircularModel& model, const LanternOptions& options) {
  if (model.genus < 3)
    fail(ErrorKind::unsupported_genus,
         "good lanterns need g >= 3 (four-involution lemma hypothesis); got g = " +
             std::to_string(model.genus));
  const auto& c = model.curves;
  const IntVector& alpha1 = c.at("alpha1");
  const IntVector& alpha2 = c.at("alpha2");
  const IntVector& gamma1 = c.at("gamma1");
  const IntVector& beta1 = c.at("beta1");
  const IntVector& beta3 = c.at("beta3");

  const SympMatrix& rot = model.symmetries.at("R");
  if (!plus_or_minus(rot.pow(2).apply(beta1), beta3))
    fail(ErrorKind::construction_failed, "beta3 is not R^2(beta1) in the model");

  Lantern lan;
  lan.boundary[0] = alpha1;
  if (plus_or_minus(alpha1 + gamma1, alpha2)) {
    lan.boundary[3] = gamma1;
  } else if (plus_or_minus(alpha1 - gamma1, alpha2)) {
    lan.boundary[3] = -gamma1;
  } else {
    fail(ErrorKind::construction_failed,
         "alpha1, gamma1 and alpha2 do not cobound a pair of pants in homology");
  }
  lan.boundary[2] = options.flip_a3 ? -beta3 : beta3;
  lan.boundary[1] = -(lan.boundary[0] + lan.boundary[2] + lan.boundary[3]);
  lan.interior[0] = lan.boundary[0] + lan.boundary[3];
  lan.interior[1] = lan.boundary[0] + lan.boundary[2];
  lan.interior[2] = lan.boundary[0] + lan.boundary[1];

  for (const auto* group : {&lan.boundary[0], &lan.boundary[1], &lan.boundary[2],
                            &lan.boundary[3], &lan.interior[0], &lan.interior[1],
                            &lan.interior[2]}) {
    if (!is_primitive(*group))
      fail(ErrorKind::construction_failed, "lantern class " + to_string(*group) +
                                               " is not primitive");
  }
  std::vector<const IntVector*> all;
  for (auto& v : lan.boundary) all.push_back(&v);
  for (auto& v : lan.interior) all.push_back(&v);
  for (auto* v : all)
    for (auto* w : all)
      if (symplectic_pairing(*v, *w) != 0)
        fail(ErrorKind::construction_failed, "lantern curves must be pairwise disjoint");
  return lan;
}

CurveTable with_lantern(CurveTable curves, const Lantern& lantern) {
  for (int i = 0; i < 4; ++i) curves.classes["a" + std::to_string(i + 1)] = lantern.boundary[i];
  for (int i = 0; i < 3; ++i) curves.classes["x" + std::to_string(i + 1)] = lantern.interior[i];
  return curves;
}

bool maps_up_to_sign(const SympMatrix& m, const IntVector& v, const IntVector& w) {
  return plus_or_minus(m.apply(v), w);
}

SympMatrix solve_involution(std::size_t genus, const std::vector<IntVector>& u,
                            const IntMatrix& images) {
  const std::size_t k = u.size();
  const std::size_t n = 2 * genus;
  if (images.rows() != k || images.cols() != k)
    fail(ErrorKind::construction_failed, "image matrix does not match the constraint basis");
  if (!(images * images).is_identity())
    fail(ErrorKind::construction_failed, "prescribed action does not square to the identity");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (symplectic_pairing(u[i], u[j]) != 0)
        fail(ErrorKind::construction_failed,
             "constraint classes " + std::to_string(i) + " and " + std::to_string(j) +
                 " pair to " + symplectic_pairing(u[i], u[j]).get_str() +
                 "; the completion needs an isotropic span");

  std::vector<IntVector> v = dual_partners(u);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Integer c = symplectic_pairing(v[j], v[i]);
      if (c != 0) v[j] = v[j] - c * u[i];
    }
  }

  auto apply = [&](const IntVector& w) {
    IntVector out = w;
    for (std::size_t i = 0; i < k; ++i) {
      const Integer a = symplectic_pairing(w, v[i]);   // coefficient on u_i
      const Integer b = -symplectic_pairing(w, u[i]);  // coefficient on v_i
      if (a != 0) {
        out = out - a * u[i];
        for (std::size_t m = 0; m < k; ++m)
          if (images(m, i) != 0) out = out + (a * images(m, i)) * u[m];
      }
      if (b != 0) {
        out = out - b * v[i];
        // Partners transform by the inverse transpose, which is images^T here.
        for (std::size_t m = 0; m < k; ++m)
          if (images(i, m) != 0) out = out + (b * images(i, m)) * v[m];
      }
    }
    return out;
  };

  IntMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    IntVector e = zero_vector(n);
    e[c] = 1;
    m.set_column(c, apply(e));
  }
  if (!is_symplectic(m))
    fail(ErrorKind::internal_consistency, "completed involution is not symplectic");
  SympMatrix j(std::move(m));
  if (!(j * j).is_identity())
    fail(ErrorKind::internal_consistency, "completed involution does not square to identity");
  return j;
}

SymmetryTable pair_swaps(const CircularModel& model, const Lantern& lan,
                         const PairSwapSigns& signs) {
  const auto g = static_cast<std::size_t>(model.genus);
  const auto& a = lan.boundary;
  const auto& x = lan.interior;
  SymmetryTable table = model.symmetries;

  const SympMatrix& rho1 = model.symmetries.at("rho1");
  if (!maps_up_to_sign(rho1, x[0], a[0]))
    fail(ErrorKind::construction_failed, "rho1 does not carry x1 to a1, so it cannot serve as I1");
  table.entries.emplace("I1", SymmetryEntry{rho1, Provenance::geometric});

  // Lantern lattice basis (a1, a3, a4); a2 = -(a1 + a3 + a4).
  const std::vector<IntVector> basis{a[0], a[2], a[3]};
  auto column = [](IntMatrix& m, std::size_t c, std::initializer_list<long> vals) {
    std::size_t r = 0;
    for (long v : vals) m(r++, c) = v;
  };

  // J1: a1 <-> a2, a3 and a4 fixed.
  IntMatrix n1(3, 3);
  column(n1, 0, {-signs.j1, -signs.j1, -signs.j1});
  column(n1, 1, {0, signs.j1, 0});
  column(n1, 2, {0, 0, signs.j1});
  // J2: a1 <-> a3, a2 and a4 fixed.
  IntMatrix n2(3, 3);
  column(n2, 0, {0, signs.j2_swap, 0});
  column(n2, 1, {signs.j2_swap, 0, 0});
  column(n2, 2, {0, 0, signs.j2_fixed});
  // J3: a1 <-> a2 and a3 <-> a4.
  IntMatrix n3(3, 3);
  column(n3, 0, {-signs.j3, -signs.j3, -signs.j3});
  column(n3, 1, {0, 0, signs.j3});
  column(n3, 2, {0, signs.j3, 0});

  const SympMatrix j1 = solve_involution(g, basis, n1);
  const SympMatrix j2 = solve_involution(g, basis, n2);
  const SympMatrix j3 = solve_involution(g, basis, n3);
  const SympMatrix j4 = j2 * j3 * j2;

  struct Constraint {
    const char* name;
    const SympMatrix* m;
    const IntVector* from;
    const IntVector* to;
    const char* what;
  };
  const Constraint constraints[] = {
      {"J1", &j1, &a[0], &a[1], "a1 -> a2"}, {"J1", &j1, &x[0], &x[1], "x1 -> x2"},
      {"J2", &j2, &a[0], &a[2], "a1 -> a3"}, {"J2", &j2, &x[0], &x[2], "x1 -> x3"},
      {"J2", &j2, &a[3], &a[3], "a4 fixed"}, {"J3", &j3, &a[2], &a[3], "a3 -> a4"},
      {"J3", &j3, &x[0], &x[0], "x1 fixed"}, {"J3", &j3, &x[2], &x[2], "x3 fixed"},
      {"J4", &j4, &a[0], &a[3], "a1 -> a4"}, {"J4", &j4, &x[0], &x[0], "x1 fixed"},
  };
  for (const auto& c : constraints)
    if (!maps_up_to_sign(*c.m, *c.from, *c.to))
      fail(ErrorKind::construction_failed,
           std::string("pair swap ") + c.name + " violates " + c.what);
  if (!(j4 * j4).is_identity())
    fail(ErrorKind::internal_consistency, "J2 J3 J2 is not an involution");

  table.entries.emplace("J1", SymmetryEntry{j1, Provenance::solved});
  table.entries.emplace("J2", SymmetryEntry{j2, Provenance::solved});
  table.entries.emplace("J3", SymmetryEntry{j3, Provenance::solved});
  table.entries.emplace("J4", SymmetryEntry{j4, Provenance::solved});
  return table;
}

nlohmann::json vector_to_json(const IntVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      out.push_back(x.get_si());
    else
      out.push_back(x.get_str());
  }
  return out;
}

IntVector vector_from_json(const nlohmann::json& j) {
  IntVector v;
  for (const auto& x : j) {
    if (x.is_string())
      v.emplace_back(x.get<std::string>());
    else
      v.emplace_back(x.get<long>());
  }
  return v;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) fail(ErrorKind::invalid_argument, "ragged matrix in JSON");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

nlohmann::json to_json(const CurveTable& curves, const SymmetryTable& symmetries) {
  nlohmann::json cj = nlohmann::json::object();
  for (const auto& [name, v] : curves.classes) cj[name] = vector_to_json(v);
  nlohmann::json sj = nlohmann::json::object();
  for (const auto& [name, e] : symmetries.entries)
    sj[name] = {{"matrix", matrix_to_json(e.matrix.matrix())},
                {"provenance", std::string(to_string(e.provenance))}};
  return {{"genus", curves.genus}, {"curves", cj}, {"symmetries", sj}};
}

CurveTable curve_table_from_json(const nlohmann::json& j) {
  try {
    CurveTable t{j.at("genus").get<int>(), {}};
    for (const auto& [name, v] : j.at("curves").items()) {
      t.classes[name] = vector_from_json(v);
      if (t.classes[name].size() != static_cast<std::size_t>(2 * t.genus))
        fail(ErrorKind::invalid_argument, "curve '" + name + "' has the wrong dimension");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_argument, std::string("bad curve table JSON: ") + e.what());
  }
}

SymmetryTable symmetry_table_from_json(const nlohmann::json& j) {
  try {
    SymmetryTable t{j.at("genus").get<int>(), {}};
    for (const auto& [name, e] : j.at("symmetries").items()) {
      const auto prov = e.at("provenance").get<std::string>();
      if (prov != "geometric" && prov != "solved")
        fail(ErrorKind::invalid_argument, "unknown provenance '" + prov + "'");
      IntMatrix m = matrix_from_json(e.at("matrix"));
      if (m.rows() != static_cast<std::size_t>(2 * t.genus))
        fail(ErrorKind::invalid_argument, "symmetry '" + name + "' has the wrong dimension");
      t.entries.emplace(name, SymmetryEntry{SympMatrix(std::move(m)),
                                            prov == "geometric" ? Provenance::geometric
                                                                : Provenance::solved});
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_argument, std::string("bad symmetry table JSON: ") + e.what());
  }
}

}  // namespace mcgen
