#include <gtest/gtest.h>

#include <random>

#include "mcgen/error.hpp"
#include "mcgen/models.hpp"
#include "mcgen/words.hpp"

using namespace mcgen;

namespace {

Word random_word(std::mt19937_64& rng, const std::vector<std::string>& letters, int len) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> ex(-2, 2);
  std::vector<Syllable> s;
  for (int i = 0; i < len; ++i) {
    int e = ex(rng);
    if (e == 0) e = 1;
    s.push_back({letter_from_key(letters[pick(rng)]), e});
  }
  return Word::raw(std::move(s));
}

// Naive free reduction on a letter-by-letter expansion.
std::vector<std::pair<std::string, int>> expand_and_cancel(const Word& w) {
  std::vector<std::pair<std::string, int>> stack;
  for (const auto& s : w.syllables()) {
    const int step = s.exp > 0 ? 1 : -1;
    for (long i = 0; i < std::labs(s.exp); ++i) {
      if (!stack.empty() && stack.back().first == s.letter.key() && stack.back().second == -step)
        stack.pop_back();
      else
        stack.emplace_back(s.letter.key(), step);
    }
  }
  return stack;
}

}  // namespace

TEST(Reduce, CancelsInversePair) {
  EXPECT_TRUE(reduce(juxtapose({twist("alpha1"), twist("alpha1", -1)})).empty());
}

TEST(Reduce, InverseReversesOrder) {
  const Word ab = sym("A") * sym("B");
  EXPECT_EQ(inverse(ab), (Word{{symmetry_letter("B"), -1}, {symmetry_letter("A"), -1}}));
}

TEST(Reduce, ConjugateBySymmetryHasThreeSyllables) {
  EXPECT_EQ(conjugate(twist("alpha1"), sym("rho1")).size(), 3u);
  EXPECT_TRUE(conjugate(twist("alpha1"), Word{}) == twist("alpha1"));
}

TEST(Reduce, PowerMergesExponents) {
  EXPECT_EQ(power(twist("a1"), 3), twist("a1", 3));
  EXPECT_EQ(power(twist("a1"), -2), twist("a1", -2));
  EXPECT_TRUE(power(sym("R"), 0).empty());
}

TEST(Reduce, IsIdempotentAndMatchesNaiveCancellation) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> letters{"T_a1", "T_a2", "rho1", "J1"};
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng, letters, 12);
    const Word r = reduce(w);
    EXPECT_TRUE(r.is_reduced());
    EXPECT_EQ(reduce(r), r);
    EXPECT_EQ(expand_and_cancel(r), expand_and_cancel(w));
    EXPECT_TRUE(reduce(w * inverse(w)).empty());
  }
}

TEST(Reduce, ZeroExponentIsRejectedInRawWords) {
  EXPECT_THROW(Word::raw({{symmetry_letter("R"), 0}}), Error);
}

TEST(NamedWords, QAtGenusTwo) {
  const Word expected{{twist_letter("alpha2"), 1}, {twist_letter("beta2"), 1},
                      {twist_letter("gamma1"), 1}, {twist_letter("beta1"), 1},
                      {twist_letter("alpha1"), 1}};
  EXPECT_EQ(word_Q(2), expected);
}

TEST(NamedWords, LetterCounts) {
  for (int g = 2; g <= 8; ++g) {
    EXPECT_EQ(word_Q(g).letter_count(), 2 * g + 1);
    EXPECT_EQ(word_S(g).letter_count(), 2 * g);
  }
  EXPECT_EQ(word_S(3).size(), 6u);
}

TEST(NamedWords, SThenTwistIsQ) {
  for (int g = 2; g <= 6; ++g) EXPECT_EQ(word_S(g) * twist("alpha1"), word_Q(g));
}

TEST(NamedWords, U) {
  EXPECT_EQ(word_U(3), (Word{{twist_letter("alpha1"), 1}, {twist_letter("alpha2"), -1}}));
  EXPECT_EQ(word_U(3) * twist("alpha2"), twist("alpha1"));
  EXPECT_EQ(inverse(word_U(3)), (Word{{twist_letter("alpha2"), 1}, {twist_letter("alpha1"), -1}}));
}

TEST(NamedWords, GenusOneHasNoQ) {
  try {
    word_Q(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_genus);
  }
}

TEST(Birman, IdentityConjugatorGivesSInverseAndQ) {
  const Factorization f = birman_factorization("alpha1", Word{}, 3);
  EXPECT_EQ(f.first, inverse(word_S(3)));
  EXPECT_EQ(f.second, word_Q(3));
  EXPECT_EQ(f.first * f.second, twist("alpha1"));
}

TEST(Birman, ConjugatorWrapsBothFactors) {
  const Factorization f = birman_factorization("alpha2", sym("rho1"), 3);
  EXPECT_EQ(f.first * f.second, conjugate(twist("alpha1"), sym("rho1")));
}

TEST(Chains, ClosedQAndSChains) {
  for (int g = 2; g <= 5; ++g) {
    const auto [ql, qr] = chain_relation_words(q_chain(g));
    EXPECT_EQ(ql, power(word_Q(g), 2 * g + 2));
    EXPECT_TRUE(qr.empty());
    const auto [sl, sr] = chain_relation_words(s_chain(g));
    EXPECT_EQ(sl, power(word_S(g), 4 * g + 2));
    EXPECT_TRUE(sr.empty());
  }
}

TEST(Chains, SingleCurveChain) {
  const ChainSpec one{{"c"}, {"d1", "d2"}, false};
  const auto [l, r] = chain_relation_words(one);
  EXPECT_EQ(l, twist("c", 2));
  EXPECT_EQ(r, twist("d1") * twist("d2"));
  CurveTable t{1, {{"c", make_vector({1, 0})}, {"d1", make_vector({1, 0})}, {"d2", make_vector({1, 0})}}};
  EXPECT_NO_THROW(validate_chain(one, t));
}

TEST(Chains, BrokenAdjacencyIsRejected) {
  const CircularModel m = circular_model(3);
  ChainSpec bad{{"alpha1", "alpha2"}, {"d"}, true};
  try {
    validate_chain(bad, m.curves);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_chain);
  }
  // beta1 and beta2 are disjoint, so they cannot be consecutive.
  ChainSpec far{{"alpha1", "beta1", "beta2"}, {}, true};
  EXPECT_THROW(validate_chain(far, m.curves), Error);
}

TEST(Lantern, WordShapes) {
  const auto ws = lantern_words();
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[0].lhs.size(), 3u);
  EXPECT_EQ(ws[0].rhs.size(), 4u);
  EXPECT_EQ(ws[1].lhs, twist("a4"));
  // The rearranged right side does not cancel formally.
  EXPECT_EQ(reduce(ws[1].rhs).size(), 6u);
}

TEST(FourInvolutions, UsesExactlyFourInvolutionLetters) {
  const auto keys = letter_keys(four_involution_twist());
  EXPECT_EQ(keys, (std::set<std::string>{"K", "rho1", "J1", "J2"}));
}

TEST(GeneratingSets, SixInvolutionCounts) {
  for (int g = 3; g <= 6; ++g) {
    const GeneratingSet six = six_involution_generators(g);
    EXPECT_EQ(six.elements.size(), 6u);
    std::set<std::string> letters;
    for (const auto& e : six.elements) {
      EXPECT_EQ(e.word.size(), 1u);
      letters.insert(e.name);
    }
    EXPECT_EQ(letters.size(), 6u);
    // No witness mentions J4: it is always expanded.
    for (const auto& w : six.witnesses) {
      EXPECT_EQ(letter_keys(w.lhs).count("J4"), 0u);
      EXPECT_EQ(letter_keys(w.rhs).count("J4"), 0u);
    }
  }
  EXPECT_EQ(seven_involution_letters().size(), 7u);
}

TEST(GeneratingSets, SixInvolutionsNeedGenusThree) {
  try {
    six_involution_generators(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_genus);
    EXPECT_NE(std::string(e.what()).find("g >= 3"), std::string::npos);
  }
}

TEST(GeneratingSets, Cardinalities) {
  EXPECT_EQ(three_torsion_generators(3).elements.size(), 3u);
  EXPECT_EQ(three_torsion_rotation_generators(3).elements.size(), 3u);
  EXPECT_EQ(two_involutions_one_torsion(3).elements.size(), 3u);
  EXPECT_EQ(wajnryb_pair(3).elements.size(), 2u);
  EXPECT_EQ(humphries_twists(4).elements.size(), 2u * 4 + 1);
  EXPECT_EQ(lickorish_twists(4).elements.size(), 3u * 4 - 1);
  EXPECT_EQ(battery_set_names().size(), 6u);
  EXPECT_THROW(generating_set("nope", 3), Error);
}

TEST(Json, WordRoundTrip) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Word w = random_word(rng, {"T_alpha1", "rho1", "K"}, 8);
    EXPECT_EQ(word_from_json(to_json(w)), w);
  }
  const nlohmann::json j = to_json(twist("alpha1", -1));
  EXPECT_EQ(j.dump(), R"([{"exp":-1,"letter":"T_alpha1"}])");
}

TEST(Json, IdentityRoundTrip) {
  for (const auto& id : six_involution_generators(3).witnesses) {
    const WordIdentity back = word_identity_from_json(to_json(id));
    EXPECT_EQ(back.name, id.name);
    EXPECT_EQ(back.lhs, id.lhs);
    EXPECT_EQ(back.rhs, id.rhs);
  }
}
