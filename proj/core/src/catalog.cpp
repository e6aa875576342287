#include "mcgen/catalog.hpp"

#include "mcgen/error.hpp"

namespace mcgen {

GenusSetup build_setup(int g, const SetupOptions& options) {
  CircularModel model = circular_model(g);
  std::optional<Lantern> lantern;
  CurveTable curves = model.curves;
  SymmetryTable symmetries = model.symmetries;
  if (g >= 3) {
    lantern = good_lantern(model, options.lantern);
    curves = with_lantern(curves, *lantern);
    symmetries = pair_swaps(model, *lantern, options.signs);
  }
  GeneratorTable table(curves, symmetries);
  if (g >= 3) table.define_composite("K", k_definition());
  for (const auto& c : options.left_handed) table.make_left_handed(c);
  return GenusSetup{g,
                    std::move(model),
                    std::move(lantern),
                    std::move(curves),
                    std::move(symmetries),
                    std::move(table)};
}

GeneratorTable table_from_tables(const CurveTable& curves, const SymmetryTable& symmetries) {
  GeneratorTable table(curves, symmetries);
  if (curves.contains("x1") && symmetries.contains("rho1"))
    table.define_composite("K", k_definition());
  return table;
}

Suite suite_from_string(const std::string& s) {
  if (s == "torsion") return Suite::torsion;
  if (s == "involution") return Suite::involution;
  if (s == "all") return Suite::all;
  fail(ErrorKind::invalid_argument, "unknown suite '" + s + "' (torsion, involution, all)");
}

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::torsion: return "torsion";
    case Suite::involution: return "involution";
    case Suite::all: return "all";
  }
  return "?";
}

bool rotation_variant_applicable(const CurveTable& curves, const SymmetryTable& symmetries) {
  if (!curves.contains("alpha1") || !curves.contains("alpha2") || !symmetries.contains("R"))
    return false;
  return maps_up_to_sign(symmetries.at("R"), curves.at("alpha1"), curves.at("alpha2"));
}

std::vector<WordIdentity> identity_suite(int g, Suite suite, bool rotation_variant) {
  std::vector<WordIdentity> out;
  if (suite != Suite::involution) {
    const Word q = word_Q(g), s = word_S(g);
    out.push_back({"s_times_twist_is_q", juxtapose({s, twist("alpha1")}), q, "S T_alpha1 = Q"});

    struct H {
      const char* tag;
      Word h;
      Word expected;
    };
    std::vector<H> hs{{"id", Word{}, twist("alpha1")},
                      {"rho1", sym("rho1"), twist("alpha2")},
                      {"R", sym("R"), conjugate(twist("alpha1"), sym("R"))}};
    if (rotation_variant) hs.push_back({"R_direct", sym("R"), twist("alpha2")});
    for (const auto& [tag, h, expected] : hs) {
      const Factorization f = birman_factorization("alpha1", h, g);
      out.push_back({std::string("twist_as_torsion_product_") + tag,
                     juxtapose({f.first, f.second}), expected,
                     "(h S^-1 h^-1)(h Q h^-1) = h T_alpha1 h^-1"});
    }
    for (const auto& w : three_torsion_generators(g).witnesses) out.push_back(w);
    if (rotation_variant)
      for (const auto& w : three_torsion_rotation_generators(g).witnesses) out.push_back(w);
    for (const auto& w : two_involutions_one_torsion(g).witnesses) out.push_back(w);

    const auto [ql, qr] = chain_relation_words(q_chain(g));
    out.push_back({"q_chain_relation", ql, qr, "Q^(2g+2) = 1"});
    const auto [sl, sr] = chain_relation_words(s_chain(g));
    out.push_back({"s_chain_relation", sl, sr, "S^(4g+2) = 1"});
  }
  if (suite != Suite::torsion) {
    if (g < 3)
      fail(ErrorKind::unsupported_genus,
           "the involution suite needs g >= 3 (good lanterns exist only from genus 3)");
    for (const auto& w : lantern_words()) out.push_back(w);
    for (const auto& w : six_involution_generators(g).witnesses) out.push_back(w);
    out.push_back({"j4_is_j2_j3_j2", sym("J4"), juxtapose({sym("J2"), sym("J3"), sym("J2")}),
                   "J4 = J2 J3 J2"});
  }
  return out;
}

std::vector<OrderClaim> order_claims(int g) {
  std::vector<OrderClaim> out{
      {"Q", word_Q(g), 2L * g + 2, 0},
      {"S", word_S(g), 4L * g + 2, 0},
      {"R", sym("R"), 0, g},
      {"rho1", sym("rho1"), 0, 2},
      {"rho2", sym("rho2"), 0, 2},
  };
  if (g >= 3)
    for (const char* n : {"I1", "J1", "J2", "J3", "J4", "K"}) out.push_back({n, sym(n), 0, 2});
  return out;
}

OrderCheck check_order(const OrderClaim& claim, const GeneratorTable& table, long cap) {
  OrderCheck c{claim, matrix_order(evaluate(claim.word, table), cap), false};
  if (c.result.status == OrderResult::Status::finite) {
    c.pass = true;
    if (claim.divides != 0 && claim.divides % c.result.order != 0) c.pass = false;
    if (claim.exactly != 0 && c.result.order != claim.exactly) c.pass = false;
  }
  return c;
}

nlohmann::json to_json(const OrderCheck& c) {
  nlohmann::json j{{"element", c.claim.name}, {"result", to_json(c.result)}, {"pass", c.pass}};
  if (c.claim.divides != 0) j["divides"] = c.claim.divides;
  if (c.claim.exactly != 0) j["exactly"] = c.claim.exactly;
  return j;
}

}  // namespace mcgen
