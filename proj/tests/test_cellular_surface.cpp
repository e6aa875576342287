#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mcgen/error.hpp"
#include "mcgen/models.hpp"
#include "support.hpp"

using namespace mcgen;
using mcgen::testing::random_cycle;
using mcgen::testing::segment_sphere;
using mcgen::testing::square_torus;

namespace {

// Cycle count of a permutation, computed without the library.
std::size_t count_cycles(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++n;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return n;
}

}  // namespace

TEST(Genus, SquareTorusIsOne) {
  const RibbonGraph t = square_torus();
  EXPECT_EQ(t.vertex_count(), 1u);
  EXPECT_EQ(t.face_count(), 1u);
  EXPECT_EQ(genus(t), 1);
}

TEST(Genus, SphereIsZero) { EXPECT_EQ(genus(segment_sphere()), 0); }

TEST(Genus, CircularModelMatchesIndependentCellCount) {
  for (int g = 2; g <= 7; ++g) {
    const CircularModel m = circular_model(g);
    const Permutation& iota = m.graph.edge_pairing();
    const Permutation& sigma = m.graph.vertex_rotation();
    Permutation face_perm(iota.size());
    for (std::size_t d = 0; d < iota.size(); ++d) face_perm[d] = sigma[iota[d]];
    const long v = static_cast<long>(count_cycles(sigma));
    const long e = static_cast<long>(iota.size() / 2);
    const long f = static_cast<long>(count_cycles(face_perm));
    EXPECT_EQ(v, 3 * g + 2);
    EXPECT_EQ(e, 7 * g);
    EXPECT_EQ(f, 2 * g);
    EXPECT_EQ((2 - v + e - f) / 2, g);
    EXPECT_EQ(genus(m.graph), g);
  }
}

TEST(RibbonGraph, RejectsFixedPointInPairing) {
  try {
    RibbonGraph({0, 1}, {0, 1});
    FAIL() << "accepted a fixed point";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::malformed_graph);
  }
}

TEST(RibbonGraph, RejectsNonPermutationRotation) {
  EXPECT_THROW(RibbonGraph({1, 0}, {0, 0}), Error);
}

TEST(RibbonGraph, DisconnectedGraphHasNoGenus) {
  const RibbonGraph two({1, 0, 3, 2}, {0, 1, 2, 3});
  EXPECT_FALSE(two.connected());
  EXPECT_THROW(genus(two), Error);
}

TEST(HomologyBasis, TorusFormIsStandard) {
  const RibbonGraph t = square_torus();
  const HomologyBasis b = homology_basis(t);
  ASSERT_EQ(b.cycles.size(), 2u);
  const IntMatrix& f = b.form;
  EXPECT_EQ(f(0, 0), 0);
  EXPECT_EQ(f(1, 1), 0);
  EXPECT_EQ(abs(f(0, 1)), 1);
  EXPECT_EQ(f(0, 1), -f(1, 0));
  EXPECT_EQ(b.change_of_basis.transpose() * b.form * b.change_of_basis, standard_form(1));
}

TEST(HomologyBasis, CircularModelFormIsUnimodularSkew) {
  for (int g = 2; g <= 6; ++g) {
    const CircularModel m = circular_model(g);
    const HomologyBasis& b = m.basis;
    ASSERT_EQ(b.cycles.size(), static_cast<std::size_t>(2 * g));
    EXPECT_EQ(b.form.transpose(), -b.form);
    EXPECT_EQ(abs(determinant(b.form)), 1);
    EXPECT_EQ(determinant(b.change_of_basis) * determinant(b.change_of_basis), 1);
    EXPECT_EQ(b.change_of_basis.transpose() * b.form * b.change_of_basis,
              standard_form(static_cast<std::size_t>(g)));
    // The stored form entries are pushed-off intersection numbers.
    for (std::size_t i = 0; i < b.cycles.size(); ++i)
      for (std::size_t j = 0; j < b.cycles.size(); ++j)
        EXPECT_EQ(b.form(i, j), intersection_number(m.graph, b.cycles[i], b.cycles[j]));
  }
}

TEST(HomologyBasis, IsDeterministic) {
  const CircularModel a = circular_model(4), b = circular_model(4);
  EXPECT_EQ(a.basis.form, b.basis.form);
  EXPECT_EQ(a.basis.change_of_basis, b.basis.change_of_basis);
}

TEST(CycleClass, FaceBoundariesVanish) {
  for (int g = 2; g <= 5; ++g) {
    const CircularModel m = circular_model(g);
    for (std::size_t f = 0; f < m.graph.face_count(); ++f)
      EXPECT_TRUE(is_zero(cycle_class(m.graph, m.basis, face_boundary(m.graph, f))));
  }
}

TEST(CycleClass, ReversalNegates) {
  const CircularModel m = circular_model(3);
  for (const auto& [name, c] : m.cycles)
    EXPECT_EQ(cycle_class(m.graph, m.basis, reversed(m.graph, c)),
              -cycle_class(m.graph, m.basis, c))
        << name;
}

TEST(CycleClass, NamedCurvesArePrimitive) {
  const CircularModel m = circular_model(3);
  for (const auto& [name, v] : m.curves.classes) {
    EXPECT_FALSE(is_zero(v)) << name;
    EXPECT_EQ(content(v), 1) << name;
  }
}

TEST(CycleClass, OpenPathIsRejected) {
  const CircularModel m = circular_model(3);
  try {
    cycle_class(m.graph, m.basis, Cycle{{m.graph.dart("K1+")}, "open"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_cycle);
  }
}

TEST(Intersection, AgreesWithFormOnRandomCycles) {
  std::mt19937_64 rng(11);
  for (int g = 2; g <= 4; ++g) {
    const CircularModel m = circular_model(g);
    for (int trial = 0; trial < 60; ++trial) {
      const Cycle a = random_cycle(m.graph, rng, 6);
      const Cycle b = random_cycle(m.graph, rng, 6);
      if (a.darts.empty() || b.darts.empty()) continue;
      const IntVector ca = cycle_class(m.graph, m.basis, a);
      const IntVector cb = cycle_class(m.graph, m.basis, b);
      EXPECT_EQ(intersection_number(m.graph, a, b), symplectic_pairing(ca, cb));
    }
  }
}

TEST(InducedMap, IdentityAutomorphism) {
  const CircularModel m = circular_model(3);
  const SympMatrix id =
      induced_map(m.graph, m.basis, GraphAutomorphism::identity(m.graph.dart_count()));
  EXPECT_TRUE(id.is_identity());
}

TEST(InducedMap, HalfTurnsAreInvolutions) {
  for (int g = 2; g <= 6; ++g) {
    const CircularModel m = circular_model(g);
    for (const char* name : {"rho1", "rho2"}) {
      const SympMatrix& r = m.symmetries.at(name);
      EXPECT_TRUE((r * r).is_identity()) << name << " g=" << g;
      EXPECT_FALSE(r.is_identity());
    }
  }
}

TEST(InducedMap, RotationHasOrderExactlyG) {
  for (int g = 2; g <= 7; ++g) {
    const CircularModel m = circular_model(g);
    const SympMatrix& r = m.symmetries.at("R");
    for (int k = 1; k < g; ++k) EXPECT_FALSE(r.pow(k).is_identity()) << "g=" << g << " k=" << k;
    EXPECT_TRUE(r.pow(g).is_identity());
  }
}

TEST(InducedMap, IsAHomomorphism) {
  const CircularModel m = circular_model(4);
  const auto& autos = m.automorphisms;
  for (const auto& [an, a] : autos)
    for (const auto& [bn, b] : autos) {
      const SympMatrix lhs = induced_map(m.graph, m.basis, a.compose(b));
      EXPECT_EQ(lhs, induced_map(m.graph, m.basis, a) * induced_map(m.graph, m.basis, b))
          << an << " o " << bn;
    }
}

TEST(InducedMap, TransportsCyclesAndPreservesPairings) {
  std::mt19937_64 rng(5);
  const CircularModel m = circular_model(3);
  for (const auto& [name, phi] : m.automorphisms) {
    const SympMatrix& mat = m.symmetries.at(name);
    for (int trial = 0; trial < 40; ++trial) {
      const Cycle c = random_cycle(m.graph, rng, 5);
      const Cycle d = random_cycle(m.graph, rng, 5);
      if (c.darts.empty() || d.darts.empty()) continue;
      const IntVector vc = cycle_class(m.graph, m.basis, c);
      const IntVector vd = cycle_class(m.graph, m.basis, d);
      EXPECT_EQ(mat.apply(vc), cycle_class(m.graph, m.basis, phi(c)));
      EXPECT_EQ(symplectic_pairing(mat.apply(vc), mat.apply(vd)), symplectic_pairing(vc, vd));
    }
  }
}

TEST(InducedMap, RejectsOrientationReversal) {
  const RibbonGraph t = square_torus();
  const GraphAutomorphism swap({2, 3, 0, 1}, "swap");
  EXPECT_EQ(classify_automorphism(t, swap), Orientation::reversing);
  try {
    induced_map(t, homology_basis(t), swap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::orientation_reversing);
  }
}

TEST(Automorphisms, RotationIsProductOfHalfTurnsDartByDart) {
  for (int g = 2; g <= 7; ++g) {
    const CircularModel m = circular_model(g);
    EXPECT_EQ(m.automorphisms.at("rho1").compose(m.automorphisms.at("rho2")),
              m.automorphisms.at("R"));
  }
}

TEST(Automorphisms, HalfTurnCarriesAlpha1ToAlpha2) {
  for (int g = 2; g <= 5; ++g) {
    const CircularModel m = circular_model(g);
    const Cycle image = m.automorphisms.at("rho1")(m.cycles.at("alpha1"));
    const Cycle& a2 = m.cycles.at("alpha2");
    EXPECT_TRUE(same_cycle(image, a2) || same_cycle(image, reversed(m.graph, a2)));
  }
}

TEST(Json, RibbonGraphRoundTripIsExact) {
  for (int g = 2; g <= 4; ++g) {
    const RibbonGraph rg = circular_model(g).graph;
    const nlohmann::json j = to_json(rg);
    const RibbonGraph back = ribbon_graph_from_json(j);
    EXPECT_EQ(back, rg);
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
}

TEST(Json, MalformedGraphIsRejected) {
  nlohmann::json j = to_json(square_torus());
  j["edge_pairing"][0] = 0;
  EXPECT_THROW(ribbon_graph_from_json(j), Error);
}
