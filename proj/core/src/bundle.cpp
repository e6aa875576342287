#include "mcgen/bundle.hpp"

#include "mcgen/error.hpp"

namespace mcgen {

namespace {

constexpr const char* kFormat = "mcgen-bundle";

nlohmann::json genus_entry(int g, const ExportOptions& options) {
  const GenusSetup setup = build_setup(g);
  const long cap = options.order_cap > 0 ? options.order_cap : default_order_cap(setup.table.genus());
  const bool rotation = rotation_variant_applicable(setup.curves, setup.symmetries);
  const Suite suite = g < 3 ? Suite::torsion : options.suite;

  nlohmann::json identities = nlohmann::json::array();
  for (const auto& id : identity_suite(g, suite, rotation)) {
    nlohmann::json j = to_json(id);
    j["verdict"] = to_json(verify_identity(id, setup.table));
    identities.push_back(std::move(j));
  }
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& claim : order_claims(g)) orders.push_back(to_json(check_order(claim, setup.table, cap)));

  nlohmann::json sets = nlohmann::json::array();
  for (const auto& name : battery_set_names()) {
    if (g < 3 && name == "six_involutions") continue;
    sets.push_back(to_json(generating_set(name, g)));
  }
  if (rotation) sets.push_back(to_json(generating_set("three_torsion_rotation", g)));

  nlohmann::json entry{{"genus", g},
                       {"ribbon_graph", to_json(setup.model.graph)},
                       {"tables", to_json(setup.curves, setup.symmetries)},
                       {"rotation_variant", rotation},
                       {"identities", identities},
                       {"orders", orders},
                       {"generating_sets", sets}};
  if (g >= 3) {
    const GeneratingSet six = six_involution_generators(g);
    std::vector<std::string> names;
    for (const auto& e : six.elements) names.push_back(e.name);
    entry["coxeter"] = to_json(coxeter_probe(names, setup.table, cap));
  }
  return entry;
}

}  // namespace

nlohmann::json export_bundle(const ExportOptions& options) {
  nlohmann::json genera = nlohmann::json::array();
  for (int g : options.genera) genera.push_back(genus_entry(g, options));
  return {{"format", kFormat},
          {"version", 1},
          {"suite", std::string(to_string(options.suite))},
          {"genera", genera}};
}

BundleCheck verify_bundle(const nlohmann::json& bundle) {
  BundleCheck check;
  try {
    if (bundle.at("format").get<std::string>() != kFormat)
      fail(ErrorKind::invalid_argument, "not an mcgen bundle");
    for (const auto& entry : bundle.at("genera")) {
      const int g = entry.at("genus").get<int>();
      const RibbonGraph graph = ribbon_graph_from_json(entry.at("ribbon_graph"));
      if (genus(graph) != g)
        fail(ErrorKind::invalid_argument, "stored ribbon graph has the wrong genus");
      const CurveTable curves = curve_table_from_json(entry.at("tables"));
      const SymmetryTable symmetries = symmetry_table_from_json(entry.at("tables"));
      if (curves.genus != g) fail(ErrorKind::invalid_argument, "table genus mismatch");
      const GeneratorTable table = table_from_tables(curves, symmetries);
      for (const auto& j : entry.at("identities")) {
        const WordIdentity id = word_identity_from_json(j);
        IdentityVerdict v = verify_identity(id, table);
        const bool recorded = j.at("verdict").at("holds").get<bool>();
        check.all_hold = check.all_hold && v.holds;
        check.matches_recorded = check.matches_recorded && v.holds == recorded;
        check.entries.push_back({g, std::move(v), recorded});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_argument, std::string("bad bundle: ") + e.what());
  }
  return check;
}

}  // namespace mcgen
