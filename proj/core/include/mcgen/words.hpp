#pragma once

// Words over a named alphabet of twist and symmetry letters, and the
// constructors for every word, witness identity and generating set we check.
//
// Words are elements of the free group on the letters. They are never
// rewritten with surface relations; relations are verified by evaluating both
// sides (see symplectic.hpp).

#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcgen/models.hpp"

namespace mcgen {

enum class LetterKind { twist, symmetry };

struct Letter {
  LetterKind kind = LetterKind::symmetry;
  std::string name;  // curve name for twists, symmetry name otherwise

  /// "T_<curve>" for twists, the bare name for symmetries.
  std::string key() const { return kind == LetterKind::twist ? "T_" + name : name; }
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.kind == b.kind && a.name == b.name;
  }
  friend bool operator<(const Letter& a, const Letter& b) { return a.key() < b.key(); }
};

Letter twist_letter(std::string curve);
Letter symmetry_letter(std::string name);
/// Inverse of Letter::key.
Letter letter_from_key(const std::string& key);

struct Syllable {
  Letter letter;
  long exp = 1;
  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.letter == b.letter && a.exp == b.exp;
  }
};

class Word {
 public:
  Word() = default;
  /// Freely reduces the given syllables.
  Word(std::initializer_list<Syllable> syllables);
  explicit Word(Letter letter, long exp = 1);

  /// Keeps the sequence exactly as given (used to display a factorization with
  /// its bracketing intact). Zero exponents are still rejected.
  static Word raw(std::vector<Syllable> syllables);

  const std::vector<Syllable>& syllables() const noexcept { return s_; }
  std::size_t size() const noexcept { return s_.size(); }
  bool empty() const noexcept { return s_.empty(); }
  /// Sum of |exp| over syllables.
  long letter_count() const;
  bool is_reduced() const;

  /// Reduced product.
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.s_ == b.s_; }

 private:
  std::vector<Syllable> s_;
};

Word reduce(const Word& w);
Word inverse(const Word& w);
/// h w h^-1, reduced.
Word conjugate(const Word& w, const Word& h);
Word power(const Word& w, long k);
/// Concatenation without reduction.
Word juxtapose(std::initializer_list<Word> parts);
Word twist(const std::string& curve, long exp = 1);
Word sym(const std::string& name, long exp = 1);
/// Distinct letter keys.
std::set<std::string> letter_keys(const Word& w);

std::string to_string(const Word& w);
nlohmann::json to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

// ---- chains ------------------------------------------------------------------

struct ChainSpec {
  std::vector<std::string> curves;
  /// d for an even chain, d1 and d2 for an odd one.
  std::vector<std::string> boundary;
  /// On the closed surface the boundary curves bound disks and drop out.
  bool closed = true;
};

/// Checks adjacency against `curves` (algebraic pairing +-1 for neighbours,
/// 0 otherwise); throws invalid_chain on violation.
void validate_chain(const ChainSpec& chain, const CurveTable& curves);

/// (T_c1 ... T_cn)^(n+1) = T_d1 T_d2 for odd n, (T_c1 ... T_cn)^(2n+2) = T_d
/// for even n. The right side is empty for closed chains.
std::pair<Word, Word> chain_relation_words(const ChainSpec& chain);

ChainSpec q_chain(int g);
ChainSpec s_chain(int g);

// ---- named words ---------------------------------------------------------------

/// T_alpha_g T_beta_g T_gamma_{g-1} T_beta_{g-1} ... T_gamma_1 T_beta_1 T_alpha_1.
Word word_Q(int g);
/// word_Q without its final T_alpha_1.
Word word_S(int g);
/// T_alpha1 T_alpha2^-1.
Word word_U(int g);

struct Factorization {
  Word first;
  Word second;
};

/// (h S^-1 h^-1, h Q h^-1): two torsion elements whose product is the twist
/// about h(alpha_1). `target` only labels the result for reports.
Factorization birman_factorization(const std::string& target, const Word& h, int g);

/// An identity lhs == rhs to be checked by evaluation.
struct WordIdentity {
  std::string name;
  Word lhs;
  Word rhs;
  std::string note;
};

nlohmann::json to_json(const WordIdentity& id);
WordIdentity word_identity_from_json(const nlohmann::json& j);

/// The lantern relation and its rearrangement solved for A_4.
std::vector<WordIdentity> lantern_words();

/// The composite involution K = X_1 I_1 X_1^-1, expressed with rho1 for I_1.
Word k_definition();

/// [K I1][J1 K I1 J1][J2 K I1 J2], equal to the twist about a_4.
Word four_involution_twist();

// ---- generating sets -------------------------------------------------------------

struct NamedWord {
  std::string name;
  Word word;
};

struct GeneratingSet {
  std::string name;
  int genus = 0;
  std::vector<NamedWord> elements;
  std::vector<WordIdentity> witnesses;
  std::string note;
  /// Expected verdict in Sp(2g, p): true for the claimed sets, false for
  /// controls, empty where no claim is made.
  std::optional<bool> expect_generates = true;
};

/// {Q, S, rho1} with the witness for U.
GeneratingSet three_torsion_generators(int g);
/// {Q, S, R}; only meaningful when R(alpha1) = +-alpha2 in the model, which the
/// caller checks.
GeneratingSet three_torsion_rotation_generators(int g);
GeneratingSet wajnryb_pair(int g);
GeneratingSet two_involutions_one_torsion(int g);
/// {rho1, rho2, K, J1, J2, J3} with witnesses for R, T_gamma1, T_beta3 and
/// T_alpha1. Every J4 is written out as J2 J3 J2. Throws unsupported_genus for g < 3.
GeneratingSet six_involution_generators(int g);
/// The seven involutions before J4 is eliminated.
std::vector<std::string> seven_involution_letters();
GeneratingSet humphries_twists(int g);
GeneratingSet lickorish_twists(int g);

/// Names accepted by generating_set(): the six battery sets, the rotation
/// variant and the controls.
std::vector<std::string> battery_set_names();
std::vector<std::string> control_set_names();
GeneratingSet generating_set(const std::string& name, int g);

nlohmann::json to_json(const GeneratingSet& set);

}  // namespace mcgen
