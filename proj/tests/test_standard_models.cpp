#include <gtest/gtest.h>

#include "mcgen/catalog.hpp"
#include "mcgen/error.hpp"
#include "mcgen/models.hpp"
#include "mcgen/symplectic.hpp"

using namespace mcgen;

namespace {

bool plus_minus(const IntVector& a, const IntVector& b) { return a == b || a == -b; }

// Transvection written out entry by entry, independent of the library's version.
IntMatrix transvection_oracle(const IntVector& v) {
  const std::size_t n = v.size();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    IntVector e = zero_vector(n);
    e[c] = 1;
    const Integer k = symplectic_pairing(e, v);
    for (std::size_t r = 0; r < n; ++r) m(r, c) += k * v[r];
  }
  return m;
}

std::vector<PairSwapSigns> all_sign_choices() {
  std::vector<PairSwapSigns> out;
  for (int mask = 0; mask < 16; ++mask)
    out.push_back({mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1, mask & 8 ? -1 : 1});
  return out;
}

// J2 sends x1 = a1 + a4 to +-x3 = -+(a3 + a4) only if both J2 signs agree.
bool consistent(const PairSwapSigns& s) { return s.j2_swap == s.j2_fixed; }

}  // namespace

TEST(CircularModel, GenusBelowTwoIsUnsupported) {
  try {
    circular_model(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_genus);
  }
}

TEST(CircularModel, RotationIsProductOfHalfTurnsInHomology) {
  for (int g = 2; g <= 6; ++g) {
    const CircularModel m = circular_model(g);
    EXPECT_EQ(m.symmetries.at("rho1") * m.symmetries.at("rho2"), m.symmetries.at("R"));
  }
}

TEST(CircularModel, RotationOrderThreeAtGenusThree) {
  const SympMatrix r = circular_model(3).symmetries.at("R");
  EXPECT_FALSE(r.is_identity());
  EXPECT_FALSE(r.pow(2).is_identity());
  EXPECT_TRUE(r.pow(3).is_identity());
}

TEST(CircularModel, HalfTurnSendsAlpha1ToAlpha2) {
  const CircularModel m = circular_model(4);
  EXPECT_TRUE(plus_minus(m.symmetries.at("rho1").apply(m.curves.at("alpha1")),
                         m.curves.at("alpha2")));
}

TEST(CircularModel, ChainAdjacency) {
  for (int g = 2; g <= 6; ++g) {
    const CurveTable& c = circular_model(g).curves;
    for (int i = 1; i <= g; ++i) {
      const auto s = std::to_string(i);
      EXPECT_EQ(abs(symplectic_pairing(c.at("alpha" + s), c.at("beta" + s))), 1);
      if (i < g) {
        EXPECT_EQ(abs(symplectic_pairing(c.at("beta" + s), c.at("gamma" + s))), 1);
        EXPECT_EQ(abs(symplectic_pairing(c.at("gamma" + s), c.at("beta" + std::to_string(i + 1)))), 1);
      }
    }
    EXPECT_NO_THROW(validate_chain(q_chain(g), c));
    EXPECT_NO_THROW(validate_chain(s_chain(g), c));
  }
}

TEST(CircularModel, SymmetriesPreserveTheForm) {
  for (int g = 2; g <= 6; ++g)
    for (const auto& [name, e] : circular_model(g).symmetries.entries) {
      EXPECT_TRUE(is_symplectic(e.matrix.matrix())) << name;
      EXPECT_EQ(determinant(e.matrix.matrix()), 1) << name;
      EXPECT_EQ(e.provenance, Provenance::geometric);
    }
}

TEST(GoodLantern, NeedsGenusThree) {
  const CircularModel m = circular_model(2);
  try {
    good_lantern(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_genus);
    EXPECT_NE(std::string(e.what()).find("g >= 3"), std::string::npos);
  }
}

TEST(GoodLantern, BoundaryClassesSumToZero) {
  for (int g = 3; g <= 6; ++g) {
    const Lantern l = good_lantern(circular_model(g));
    EXPECT_TRUE(is_zero(l.boundary[0] + l.boundary[1] + l.boundary[2] + l.boundary[3]));
  }
}

TEST(GoodLantern, CurvesArePairwiseDisjointInHomology) {
  for (int g = 3; g <= 6; ++g) {
    const Lantern l = good_lantern(circular_model(g));
    std::vector<IntVector> all(l.boundary.begin(), l.boundary.end());
    all.insert(all.end(), l.interior.begin(), l.interior.end());
    for (const auto& v : all)
      for (const auto& w : all) EXPECT_EQ(symplectic_pairing(v, w), 0);
  }
}

TEST(GoodLantern, AssignsModelCurves) {
  const CircularModel m = circular_model(4);
  const Lantern l = good_lantern(m);
  EXPECT_EQ(l.boundary[0], m.curves.at("alpha1"));
  EXPECT_EQ(l.boundary[2], m.curves.at("beta3"));
  EXPECT_TRUE(plus_minus(l.boundary[3], m.curves.at("gamma1")));
  // beta3 is the image of beta1 under R^2.
  EXPECT_TRUE(plus_minus(m.symmetries.at("R").pow(2).apply(m.curves.at("beta1")), l.boundary[2]));
  // x1 separates {a1, a4} from {a2, a3} and is the half-turn image of a1.
  EXPECT_TRUE(plus_minus(l.interior[0], l.boundary[0] + l.boundary[3]));
  EXPECT_TRUE(plus_minus(m.symmetries.at("rho1").apply(l.boundary[0]), l.interior[0]));
}

TEST(GoodLantern, InteriorX1IsPrimitive) {
  const Lantern l = good_lantern(circular_model(4));
  EXPECT_FALSE(is_zero(l.interior[0]));
  EXPECT_EQ(content(l.interior[0]), 1);
}

TEST(PairSwaps, ConstraintsHoldForEveryConsistentSignChoice) {
  for (int g = 3; g <= 5; ++g) {
    const CircularModel m = circular_model(g);
    const Lantern l = good_lantern(m);
    const auto& a = l.boundary;
    const auto& x = l.interior;
    for (const auto& signs : all_sign_choices()) {
      if (!consistent(signs)) {
        try {
          pair_swaps(m, l, signs);
          ADD_FAILURE() << "inconsistent signs accepted";
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::construction_failed);
        }
        continue;
      }
      const SymmetryTable t = pair_swaps(m, l, signs);
      const SympMatrix &j1 = t.at("J1"), &j2 = t.at("J2"), &j3 = t.at("J3"), &j4 = t.at("J4");
      EXPECT_TRUE(plus_minus(t.at("I1").apply(x[0]), a[0]));
      EXPECT_TRUE(plus_minus(j1.apply(a[0]), a[1]));
      EXPECT_TRUE(plus_minus(j1.apply(x[0]), x[1]));
      EXPECT_TRUE(plus_minus(j2.apply(a[0]), a[2]));
      EXPECT_TRUE(plus_minus(j2.apply(x[0]), x[2]));
      EXPECT_TRUE(plus_minus(j3.apply(a[2]), a[3]));
      EXPECT_TRUE(plus_minus(j3.apply(x[2]), x[2]));
      EXPECT_TRUE(plus_minus(j3.apply(x[0]), x[0]));
      EXPECT_TRUE(plus_minus(j4.apply(a[0]), a[3]));
      EXPECT_TRUE(plus_minus(j4.apply(x[0]), x[0]));
      for (const char* n : {"I1", "J1", "J2", "J3", "J4"}) {
        EXPECT_TRUE((t.at(n) * t.at(n)).is_identity()) << n;
        EXPECT_TRUE(is_symplectic(t.at(n).matrix())) << n;
      }
      EXPECT_EQ(j4, j2 * j3 * j2);
      EXPECT_EQ(t.entries.at("J1").provenance, Provenance::solved);
      EXPECT_EQ(t.entries.at("I1").provenance, Provenance::geometric);
    }
  }
}

TEST(PairSwaps, IdentitiesHoldForEverySignResolution) {
  // Downstream identities see the involutions only through their constraints.
  for (int g = 3; g <= 4; ++g)
    for (bool flip : {false, true})
      for (const auto& signs : all_sign_choices()) {
        if (!consistent(signs)) continue;
        SetupOptions o;
        o.lantern.flip_a3 = flip;
        o.signs = signs;
        const GenusSetup s = build_setup(g, o);
        for (const auto& id : identity_suite(g, Suite::involution, false))
          EXPECT_TRUE(verify_identity(id, s.table).holds) << id.name << " g=" << g;
      }
}

TEST(PairSwaps, ConjugationMovesTwists) {
  // M T_v M^-1 = T_w whenever M v = +-w, for every table entry and curve.
  for (int g = 3; g <= 5; ++g) {
    const GenusSetup s = build_setup(g);
    for (const auto& [name, e] : s.symmetries.entries)
      for (const auto& [cname, v] : s.curves.classes) {
        const IntMatrix lhs = e.matrix.matrix() * transvection_oracle(v) * e.matrix.inverse().matrix();
        EXPECT_EQ(lhs, transvection_oracle(e.matrix.apply(v))) << name << " on " << cname;
        EXPECT_EQ(lhs, transvection_oracle(-e.matrix.apply(v)));
      }
  }
}

TEST(SolveInvolution, RejectsNonIsotropicConstraints) {
  const CircularModel m = circular_model(3);
  const std::vector<IntVector> u{m.curves.at("alpha1"), m.curves.at("beta1")};
  IntMatrix swap{{0, 1}, {1, 0}};
  try {
    solve_involution(3, u, swap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::construction_failed);
    EXPECT_NE(std::string(e.what()).find("pair to"), std::string::npos);
  }
}

TEST(SolveInvolution, RejectsActionThatIsNotInvolutive) {
  const CircularModel m = circular_model(3);
  const std::vector<IntVector> u{m.curves.at("alpha1"), m.curves.at("alpha2")};
  IntMatrix shear{{1, 1}, {0, 1}};
  EXPECT_THROW(solve_involution(3, u, shear), Error);
}

TEST(Json, TablesRoundTrip) {
  const GenusSetup s = build_setup(4);
  const nlohmann::json j = to_json(s.curves, s.symmetries);
  const CurveTable c = curve_table_from_json(j);
  const SymmetryTable t = symmetry_table_from_json(j);
  EXPECT_EQ(c.classes, s.curves.classes);
  ASSERT_EQ(t.entries.size(), s.symmetries.entries.size());
  for (const auto& [name, e] : s.symmetries.entries) {
    EXPECT_EQ(t.at(name), e.matrix);
    EXPECT_EQ(t.entries.at(name).provenance, e.provenance);
  }
  EXPECT_EQ(to_json(c, t).dump(), j.dump());
}

TEST(Json, NonSymplecticMatrixIsRejectedOnImport) {
  const GenusSetup s = build_setup(3);
  nlohmann::json j = to_json(s.curves, s.symmetries);
  j["symmetries"]["J1"]["matrix"][0][0] = 7;
  EXPECT_THROW(symmetry_table_from_json(j), Error);
}
