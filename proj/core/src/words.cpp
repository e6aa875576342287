#include "mcgen/words.hpp"

#include <cstdlib>
#include <sstream>

#include "mcgen/error.hpp"

namespace mcgen {

Letter twist_letter(std::string curve) { return Letter{LetterKind::twist, std::move(curve)}; }
Letter symmetry_letter(std::string name) { return Letter{LetterKind::symmetry, std::move(name)}; }

Letter letter_from_key(const std::string& key) {
  if (key.empty()) fail(ErrorKind::unknown_generator, "empty letter");
  if (key.rfind("T_", 0) == 0) {
    if (key.size() == 2) fail(ErrorKind::unknown_generator, "twist letter without a curve");
    return twist_letter(key.substr(2));
  }
  return symmetry_letter(key);
}

namespace {

// Pushes a syllable onto a reduced stack, merging with the top.
void push_reduced(std::vector<Syllable>& out, const Syllable& s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().letter == s.letter) {
    out.back().exp += s.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(s);
}

}  // namespace

Word::Word(std::initializer_list<Syllable> syllables) {
  for (const auto& s : syllables) push_reduced(s_, s);
}

Word::Word(Letter letter, long exp) {
  push_reduced(s_, Syllable{std::move(letter), exp});
}

Word Word::raw(std::vector<Syllable> syllables) {
  for (const auto& s : syllables)
    if (s.exp == 0) fail(ErrorKind::invalid_argument, "zero exponent in word");
  Word w;
  w.s_ = std::move(syllables);
  return w;
}

long Word::letter_count() const {
  long n = 0;
  for (const auto& s : s_) n += std::labs(s.exp);
  return n;
}

bool Word::is_reduced() const {
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (s_[i].exp == 0) return false;
    if (i + 1 < s_.size() && s_[i].letter == s_[i + 1].letter) return false;
  }
  return true;
}

Word operator*(const Word& a, const Word& b) {
  Word out = reduce(a);
  for (const auto& s : b.s_) push_reduced(out.s_, s);
  return out;
}

Word reduce(const Word& w) {
  std::vector<Syllable> out;
  for (const auto& s : w.syllables()) push_reduced(out, s);
  return Word::raw(std::move(out));
}

Word inverse(const Word& w) {
  std::vector<Syllable> out;
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    out.push_back(Syllable{it->letter, -it->exp});
  return Word::raw(std::move(out));
}

Word conjugate(const Word& w, const Word& h) { return h * w * inverse(h); }

Word power(const Word& w, long k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < std::labs(k); ++i) out = out * base;
  return out;
}

Word juxtapose(std::initializer_list<Word> parts) {
  std::vector<Syllable> out;
  for (const auto& p : parts)
    out.insert(out.end(), p.syllables().begin(), p.syllables().end());
  return Word::raw(std::move(out));
}

Word twist(const std::string& curve, long exp) { return Word(twist_letter(curve), exp); }
Word sym(const std::string& name, long exp) { return Word(symmetry_letter(name), exp); }

std::set<std::string> letter_keys(const Word& w) {
  std::set<std::string> keys;
  for (const auto& s : w.syllables()) keys.insert(s.letter.key());
  return keys;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    os << s.letter.key();
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

nlohmann::json to_json(const Word& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : w.syllables()) out.push_back({{"letter", s.letter.key()}, {"exp", s.exp}});
  return out;
}

Word word_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorKind::invalid_argument, "word JSON must be an array");
  std::vector<Syllable> out;
  try {
    for (const auto& s : j)
      out.push_back(Syllable{letter_from_key(s.at("letter").get<std::string>()),
                             s.at("exp").get<long>()});
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_argument, std::string("bad word JSON: ") + e.what());
  }
  return Word::raw(std::move(out));
}

// ---- chains ---------------------------------------------------------------------

void validate_chain(const ChainSpec& chain, const CurveTable& curves) {
  const auto n = chain.curves.size();
  if (n == 0) fail(ErrorKind::invalid_chain, "empty chain");
  const std::size_t want_boundary = n % 2 == 1 ? 2 : 1;
  if (!chain.closed && chain.boundary.size() != want_boundary)
    fail(ErrorKind::invalid_chain, "a chain of length " + std::to_string(n) + " has " +
                                       std::to_string(want_boundary) + " boundary curve(s)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Integer p = symplectic_pairing(curves.at(chain.curves[i]), curves.at(chain.curves[j]));
      const bool adjacent = j == i + 1;
      if (adjacent ? abs(p) != 1 : p != 0)
        fail(ErrorKind::invalid_chain, chain.curves[i] + " and " + chain.curves[j] + " pair to " +
                                           p.get_str() + ", expected " +
                                           (adjacent ? "+-1" : "0"));
    }
}

std::pair<Word, Word> chain_relation_words(const ChainSpec& chain) {
  const long n = static_cast<long>(chain.curves.size());
  if (n == 0) fail(ErrorKind::invalid_chain, "empty chain");
  Word product;
  for (const auto& c : chain.curves) product = product * twist(c);
  const long exponent = n % 2 == 1 ? n + 1 : 2 * n + 2;
  Word rhs;
  if (!chain.closed)
    for (const auto& d : chain.boundary) rhs = rhs * twist(d);
  return {power(product, exponent), rhs};
}

namespace {

std::string idx(const char* base, int i) { return base + std::to_string(i); }

void require_genus(int g, int min, const std::string& why) {
  if (g < min)
    fail(ErrorKind::unsupported_genus, why + " needs g >= " + std::to_string(min) +
                                           "; got g = " + std::to_string(g));
}

}  // namespace

ChainSpec q_chain(int g) {
  require_genus(g, 2, "the Q chain");
  ChainSpec chain;
  chain.curves.push_back(idx("alpha", g));
  chain.curves.push_back(idx("beta", g));
  for (int i = g - 1; i >= 1; --i) {
    chain.curves.push_back(idx("gamma", i));
    chain.curves.push_back(idx("beta", i));
  }
  chain.curves.push_back("alpha1");
  chain.boundary = {"d1", "d2"};
  return chain;
}

ChainSpec s_chain(int g) {
  ChainSpec chain = q_chain(g);
  chain.curves.pop_back();
  chain.boundary = {"d"};
  return chain;
}

Word word_Q(int g) {
  Word w;
  for (const auto& c : q_chain(g).curves) w = w * twist(c);
  return w;
}

Word word_S(int g) {
  Word w;
  for (const auto& c : s_chain(g).curves) w = w * twist(c);
  return w;
}

Word word_U(int g) {
  require_genus(g, 2, "U");
  return twist("alpha1") * twist("alpha2", -1);
}

Factorization birman_factorization(const std::string& target, const Word& h, int g) {
  (void)target;
  return {conjugate(inverse(word_S(g)), h), conjugate(word_Q(g), h)};
}

nlohmann::json to_json(const WordIdentity& id) {
  return {{"name", id.name}, {"lhs", to_json(id.lhs)}, {"rhs", to_json(id.rhs)}, {"note", id.note}};
}

WordIdentity word_identity_from_json(const nlohmann::json& j) {
  try {
    return {j.at("name").get<std::string>(), word_from_json(j.at("lhs")),
            word_from_json(j.at("rhs")), j.value("note", std::string{})};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_argument, std::string("bad identity JSON: ") + e.what());
  }
}

std::vector<WordIdentity> lantern_words() {
  const Word x1 = twist("x1"), x2 = twist("x2"), x3 = twist("x3");
  const Word a1 = twist("a1"), a2 = twist("a2"), a3 = twist("a3"), a4 = twist("a4");
  return {
      {"lantern", juxtapose({x1, x2, x3}), juxtapose({a1, a2, a3, a4}),
       "X1 X2 X3 = A1 A2 A3 A4"},
      {"lantern_solved_for_a4", a4,
       juxtapose({x1, inverse(a1), x2, inverse(a2), x3, inverse(a3)}),
       "A4 = (X1 A1^-1)(X2 A2^-1)(X3 A3^-1)"},
  };
}

Word k_definition() { return juxtapose({twist("x1"), sym("rho1"), twist("x1", -1)}); }

namespace {

// K I1 with I1 = rho1; equal to X1 A1^-1.
Word k_rho() { return juxtapose({sym("K"), sym("rho1")}); }

Word sandwich(const Word& outer, const Word& inner) {
  return juxtapose({outer, inner, inverse(outer)});
}

}  // namespace

Word four_involution_twist() {
  return juxtapose({k_rho(), sandwich(sym("J1"), k_rho()), sandwich(sym("J2"), k_rho())});
}

GeneratingSet three_torsion_generators(int g) {
  require_genus(g, 2, "the three torsion set");
  const Word q = word_Q(g), s = word_S(g), rho = sym("rho1");
  GeneratingSet set{"three_torsion", g, {{"Q", q}, {"S", s}, {"rho1", rho}}, {}, {}, true};
  set.witnesses.push_back(
      {"u_from_torsion", word_U(g),
       juxtapose({inverse(s), q, sandwich(rho, juxtapose({inverse(q), s}))}),
       "U = [S^-1 Q][rho1 (Q^-1 S) rho1^-1]"});
  set.note = "U and S generate, and U is a product of Q, S and a conjugate by rho1";
  return set;
}

GeneratingSet three_torsion_rotation_generators(int g) {
  require_genus(g, 2, "the three torsion set");
  const Word q = word_Q(g), s = word_S(g), r = sym("R");
  GeneratingSet set{"three_torsion_rotation", g, {{"Q", q}, {"S", s}, {"R", r}}, {}, {}, true};
  set.witnesses.push_back({"u_from_torsion_rotation", word_U(g),
                           juxtapose({inverse(s), q, sandwich(r, juxtapose({inverse(q), s}))}),
                           "U = [S^-1 Q][R (Q^-1 S) R^-1]; needs R(alpha1) = alpha2"});
  set.note = "rho1 replaced by the order g rotation R (first power)";
  return set;
}

GeneratingSet wajnryb_pair(int g) {
  require_genus(g, 2, "the U, S pair");
  return {"wajnryb_pair", g, {{"U", word_U(g)}, {"S", word_S(g)}}, {}, {}, true};
}

GeneratingSet two_involutions_one_torsion(int g) {
  require_genus(g, 2, "the two involution set");
  const Word rho = sym("rho1");
  const Word conj = juxtapose({twist("alpha1"), rho, twist("alpha1", -1)});
  GeneratingSet set{"two_inv_one_torsion", g,
                    {{"rho1", rho}, {"T_alpha1 rho1 T_alpha1^-1", conj}, {"S", word_S(g)}},
                    {}, {}, true};
  set.witnesses.push_back({"u_parenthesis_shift", word_U(g), juxtapose({conj, rho}),
                           "U = (T_alpha1 rho1 T_alpha1^-1) rho1"});
  return set;
}

GeneratingSet six_involution_generators(int g) {
  require_genus(g, 3, "the six involution set (good lanterns)");
  const Word j1 = sym("J1"), j2 = sym("J2"), j3 = sym("J3");
  const Word j4 = juxtapose({j2, j3, j2});
  GeneratingSet set{"six_involutions", g,
                    {{"rho1", sym("rho1")}, {"rho2", sym("rho2")}, {"K", sym("K")},
                     {"J1", j1}, {"J2", j2}, {"J3", j3}},
                    {}, {}, true};
  set.witnesses = {
      {"rotation_from_half_turns", sym("R"), juxtapose({sym("rho1"), sym("rho2")}),
       "R = rho1 rho2"},
      {"k_is_conjugated_half_turn", sym("K"), k_definition(), "K = X1 rho1 X1^-1"},
      {"twist_gamma1_from_involutions", twist("gamma1"), four_involution_twist(),
       "A4 = [K I1][J1 K I1 J1][J2 K I1 J2]"},
      {"twist_beta3_from_involutions", twist("beta3"),
       juxtapose({k_rho(), sandwich(j1, k_rho()), sandwich(juxtapose({j3, j2}), k_rho())}),
       "A3 = (X1 A1^-1)(X2 A2^-1)[(J3 J2)(X1 A1^-1)(J2 J3)]"},
      {"twist_alpha1_from_involutions", twist("alpha1"),
       juxtapose({sandwich(j4, k_rho()), sandwich(j1, k_rho()), sandwich(j2, k_rho())}),
       "A1 = [J4 (X1 A1^-1) J4](X2 A2^-1)(X3 A3^-1), J4 = J2 J3 J2"},
  };
  set.note =
      "the lantern uses beta3 = R^2(beta1) in place of beta1; conjugating by R recovers "
      "all Lickorish twists";
  return set;
}

std::vector<std::string> seven_involution_letters() {
  return {"rho1", "rho2", "K", "J1", "J2", "J3", "J4"};
}

GeneratingSet humphries_twists(int g) {
  require_genus(g, 2, "Humphries twists");
  GeneratingSet set{"humphries_twists", g, {}, {}, {}, true};
  for (const auto& c : {std::string("alpha1"), std::string("alpha2")})
    set.elements.push_back({"T_" + c, twist(c)});
  for (int i = 1; i <= g; ++i) set.elements.push_back({"T_" + idx("beta", i), twist(idx("beta", i))});
  for (int i = 1; i < g; ++i)
    set.elements.push_back({"T_" + idx("gamma", i), twist(idx("gamma", i))});
  return set;
}

GeneratingSet lickorish_twists(int g) {
  require_genus(g, 2, "Lickorish twists");
  GeneratingSet set{"lickorish_twists", g, {}, {}, {}, true};
  for (const char* base : {"alpha", "beta"})
    for (int i = 1; i <= g; ++i) set.elements.push_back({"T_" + idx(base, i), twist(idx(base, i))});
  for (int i = 1; i < g; ++i)
    set.elements.push_back({"T_" + idx("gamma", i), twist(idx("gamma", i))});
  return set;
}

std::vector<std::string> battery_set_names() {
  return {"six_involutions",     "three_torsion",    "wajnryb_pair",
          "two_inv_one_torsion", "humphries_twists", "lickorish_twists"};
}

std::vector<std::string> control_set_names() {
  return {"rho1_only", "Q_only"};
}

GeneratingSet generating_set(const std::string& name, int g) {
  if (name == "six_involutions") return six_involution_generators(g);
  if (name == "three_torsion") return three_torsion_generators(g);
  if (name == "three_torsion_rotation") return three_torsion_rotation_generators(g);
  if (name == "wajnryb_pair") return wajnryb_pair(g);
  if (name == "two_inv_one_torsion") return two_involutions_one_torsion(g);
  if (name == "humphries_twists") return humphries_twists(g);
  if (name == "lickorish_twists") return lickorish_twists(g);
  if (name == "six_involutions_minus_J3") {
    GeneratingSet set = six_involution_generators(g);
    std::erase_if(set.elements, [](const NamedWord& e) { return e.name == "J3"; });
    set.name = name;
    set.witnesses.clear();
    set.note = "the twist witness for beta3 needs J3; generation mod p is reported as computed";
    set.expect_generates = std::nullopt;
    return set;
  }
  if (name == "rho1_only")
    return {name, g, {{"rho1", sym("rho1")}}, {}, "a single involution", false};
  if (name == "Q_only") return {name, g, {{"Q", word_Q(g)}}, {}, "a cyclic group", false};
  fail(ErrorKind::invalid_argument, "unknown generating set '" + name + "'");
}

nlohmann::json to_json(const GeneratingSet& set) {
  nlohmann::json elems = nlohmann::json::array();
  for (const auto& e : set.elements) elems.push_back({{"name", e.name}, {"word", to_json(e.word)}});
  nlohmann::json wit = nlohmann::json::array();
  for (const auto& w : set.witnesses) wit.push_back(to_json(w));
  nlohmann::json out{{"name", set.name}, {"genus", set.genus}, {"elements", elems},
                     {"witnesses", wit}, {"note", set.note}};
  if (set.expect_generates)
    out["expect_generates"] = *set.expect_generates;
  else
    out["expect_generates"] = nullptr;
  return out;
}

}  // namespace mcgen
