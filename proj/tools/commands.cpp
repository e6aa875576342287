#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mcgen/bundle.hpp"
#include "mcgen/catalog.hpp"
#include "mcgen/error.hpp"
#include "mcgen/finite_quotients.hpp"

namespace mcgen::cli {

namespace {

using nlohmann::json;

struct InvalidConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_genera(const RunConfig& c, int min, const char* why) {
  if (c.genera.empty()) throw InvalidConfig("no genus given");
  for (int g : c.genera)
    if (g < min)
      throw InvalidConfig("genus " + std::to_string(g) + " is too small: " + why);
}

void check_common(const RunConfig& c) {
  if (c.orbit_budget == 0) throw InvalidConfig("--orbit-budget must be positive");
  if (c.order_cap < 0) throw InvalidConfig("--order-cap must be positive or auto");
  for (long p : c.primes)
    if (!is_prime(p) || p > 255)
      throw InvalidConfig(std::to_string(p) + " is not a supported prime (2..255)");
  if (!c.negative_control.empty() && c.negative_control != "flip-twist" &&
      c.negative_control != "drop-letter")
    throw InvalidConfig("unknown negative control '" + c.negative_control + "'");
}

long cap_for(const RunConfig& c, int g) {
  return c.order_cap > 0 ? c.order_cap : default_order_cap(static_cast<std::size_t>(g));
}

// Runs `body`, mapping library and config errors to exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::resource_exceeded: return kResource;
      case ErrorKind::invalid_argument:
      case ErrorKind::unsupported_genus:
      case ErrorKind::io_failure:
      case ErrorKind::unknown_generator: return kInvalidInput;
      default: return kMathFailure;
    }
  }
}

void emit(const RunConfig& c, std::ostream& out, const json& doc) {
  if (c.json) out << doc.dump(2) << '\n';
}

std::string column_text(const IdentityVerdict& v) {
  std::ostringstream os;
  if (v.column)
    os << " first differing column " << *v.column << ": lhs " << to_string(v.lhs_column)
       << " rhs " << to_string(v.rhs_column);
  if (!v.error.empty()) os << " (" << v.error << ")";
  return os.str();
}

Word drop_last(const Word& w) {
  if (w.size() < 2) return w;
  std::vector<Syllable> s = w.syllables();
  s.pop_back();
  return Word::raw(std::move(s));
}

int verify_import(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::ifstream in(c.import_path);
  if (!in) throw InvalidConfig("cannot read " + c.import_path);
  json bundle;
  try {
    in >> bundle;
  } catch (const json::exception& e) {
    throw InvalidConfig(std::string("cannot parse bundle: ") + e.what());
  }
  const BundleCheck check = verify_bundle(bundle);
  json doc{{"import", c.import_path},
           {"all_hold", check.all_hold},
           {"matches_recorded", check.matches_recorded},
           {"identities", check.entries.size()}};
  if (c.json) {
    emit(c, out, doc);
  } else {
    for (const auto& e : check.entries)
      if (!e.verdict.holds || c.verbosity > 0)
        out << (e.verdict.holds ? "holds " : "FAILS ") << "g=" << e.genus << ' ' << e.verdict.name
            << column_text(e.verdict) << '\n';
    out << "re-verified " << check.entries.size() << " identities from " << c.import_path << ": "
        << (check.all_hold ? "all hold" : "failures") << ", "
        << (check.matches_recorded ? "matching" : "NOT matching") << " the recorded verdicts\n";
  }
  (void)err;
  return check.all_hold && check.matches_recorded ? kOk : kMathFailure;
}

}  // namespace

std::vector<std::pair<int, long>> default_generate_cells() {
  return {{3, 2}, {3, 3}, {3, 5}, {4, 2}, {4, 3}, {5, 2}};
}

std::vector<std::pair<int, long>> parse_cells(const std::string& text) {
  std::vector<std::pair<int, long>> cells;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("cell '" + item + "' is not g:p");
    cells.emplace_back(std::stoi(item.substr(0, colon)), std::stol(item.substr(colon + 1)));
  }
  return cells;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(c);
    if (!c.import_path.empty()) return verify_import(c, out, err);
    const Suite suite = suite_from_string(c.suite);
    if (suite == Suite::involution)
      check_genera(c, 3, "the involution suite needs g >= 3 (good lanterns, six involutions)");
    else
      check_genera(c, 2, "the torsion suite needs g >= 2");

    bool all_hold = true;
    json doc = json::array();
    for (int g : c.genera) {
      const Suite s = g < 3 ? Suite::torsion : suite;
      SetupOptions options;
      if (c.negative_control == "flip-twist")
        options.left_handed = {s == Suite::torsion ? "alpha1" : "a1"};
      const GenusSetup setup = build_setup(g, options);
      const bool rotation = rotation_variant_applicable(setup.curves, setup.symmetries);
      std::size_t held = 0, total = 0;
      json verdicts = json::array();
      for (WordIdentity id : identity_suite(g, s, rotation)) {
        if (c.negative_control == "drop-letter") id.lhs = drop_last(id.lhs);
        const IdentityVerdict v = verify_identity(id, setup.table);
        ++total;
        held += v.holds;
        all_hold = all_hold && v.holds;
        verdicts.push_back(to_json(v));
        if (!c.json && (!v.holds || c.verbosity > 0))
          out << (v.holds ? "  holds " : "  FAILS ") << v.name << column_text(v) << '\n';
      }
      if (!c.json) {
        out << "g=" << g << " suite=" << to_string(s) << ": " << held << "/" << total
            << " identities hold";
        if (g < 3 && suite != Suite::torsion) out << " (involution suite needs g >= 3; skipped)";
        out << '\n';
      }
      doc.push_back({{"genus", g}, {"suite", std::string(to_string(s))}, {"verdicts", verdicts}});
    }
    emit(c, out, json{{"verify", doc}, {"all_hold", all_hold}});
    return all_hold ? kOk : kMathFailure;
  });
}

int cmd_orders(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(c);
    check_genera(c, 2, "torsion elements are defined for g >= 2");
    bool pass = true;
    json doc = json::array();
    for (int g : c.genera) {
      const GenusSetup setup = build_setup(g);
      json rows = json::array();
      for (const auto& claim : order_claims(g)) {
        const OrderCheck chk = check_order(claim, setup.table, cap_for(c, g));
        pass = pass && chk.pass;
        rows.push_back(to_json(chk));
        if (!c.json) {
          out << "g=" << g << ' ' << std::left << std::setw(5) << claim.name << ' ';
          if (chk.result.status == OrderResult::Status::finite)
            out << "order " << chk.result.order;
          else
            out << to_string(chk.result.status);
          if (claim.divides) out << " (must divide " << claim.divides << ")";
          if (claim.exactly) out << " (must equal " << claim.exactly << ")";
          out << (chk.pass ? "  ok" : "  FAIL") << '\n';
        }
      }
      doc.push_back({{"genus", g}, {"orders", rows}});
    }
    emit(c, out, json{{"orders", doc}, {"pass", pass}});
    return pass ? kOk : kMathFailure;
  });
}

int cmd_generate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(c);
    std::vector<std::pair<int, long>> cells = c.cells;
    if (cells.empty()) {
      if (c.genera_given || c.primes_given) {
        for (int g : c.genera)
          for (long p : c.primes) cells.emplace_back(g, p);
      } else {
        cells = default_generate_cells();
      }
    }
    for (const auto& [g, p] : cells) {
      if (g < 2) throw InvalidConfig("genus " + std::to_string(g) + " is below 2");
      if (!is_prime(p) || p > 255) throw InvalidConfig(std::to_string(p) + " is not a supported prime");
    }
    std::vector<std::string> names = c.sets;
    if (names.empty()) {
      names = battery_set_names();
      for (const auto& n : control_set_names()) names.push_back(n);
    }

    bool mismatch = false, resource = false;
    json doc = json::array();
    BsgsOptions bo;
    bo.orbit_budget = c.orbit_budget;
    bo.seed = c.seed;
    for (const auto& [g, p] : cells) {
      const double points = std::pow(static_cast<double>(p), 2.0 * g);
      if (points > static_cast<double>(c.orbit_budget)) {
        resource = true;
        err << "resource budget: g=" << g << " p=" << p << " needs orbits up to p^(2g) = "
            << std::llround(points) << " points, above --orbit-budget " << c.orbit_budget << '\n';
        doc.push_back({{"g", g}, {"p", p}, {"error", "orbit budget exceeded"}});
        continue;
      }
      const GenusSetup setup = build_setup(g);
      for (const auto& name : names) {
        if (g < 3 && name.rfind("six_involutions", 0) == 0) {
          if (!c.json) out << "g=" << g << " p=" << p << ' ' << name << ": skipped (needs g >= 3)\n";
          continue;
        }
        const GeneratingSet set = generating_set(name, g);
        try {
          const GenerationVerdict v = generation_verdict(set, setup.table, p, bo);
          const bool bad = v.expected && *v.expected != v.generates;
          mismatch = mismatch || bad;
          json j = to_json(v);
          if (v.expected) j["expected"] = *v.expected;
          doc.push_back(j);
          if (!c.json)
            out << "g=" << g << " p=" << p << ' ' << std::left << std::setw(20) << name << ' '
                << (v.generates ? "generates Sp" : "proper subgroup") << "  |H|=" << v.subgroup_order
                << (bad ? "  UNEXPECTED" : "") << '\n';
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::resource_exceeded) throw;
          resource = true;
          doc.push_back({{"set", name}, {"g", g}, {"p", p}, {"error", e.what()}});
          err << "resource budget: " << e.what() << '\n';
        }
      }
    }
    emit(c, out, json{{"verdicts", doc},
                      {"scope", "generation of Sp(2g,p) is necessary, not sufficient, for Sp(2g,Z)"}});
    if (!c.json)
      out << "note: generation mod p is a necessary condition for generating Sp(2g,Z), not a proof\n";
    if (mismatch) return kMathFailure;
    return resource ? kResource : kOk;
  });
}

int cmd_coxeter(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(c);
    check_genera(c, 3, "the six involutions need g >= 3");
    json doc = json::array();
    for (int g : c.genera) {
      const GenusSetup setup = build_setup(g);
      std::vector<std::string> names;
      for (const auto& e : six_involution_generators(g).elements) names.push_back(e.name);
      const CoxeterReport rep = coxeter_probe(names, setup.table, cap_for(c, g));
      doc.push_back({{"genus", g}, {"coxeter", to_json(rep)}});
      if (c.json) continue;
      out << "g=" << g << " orders of pairwise products (symplectic level)\n      ";
      for (const auto& n : names) out << std::setw(6) << n;
      out << '\n';
      for (std::size_t i = 0; i < names.size(); ++i) {
        out << std::setw(6) << names[i];
        for (const auto& o : rep.orders[i]) {
          if (o.status == OrderResult::Status::finite)
            out << std::setw(6) << o.order;
          else
            out << std::setw(6) << (o.status == OrderResult::Status::infinite ? "inf" : ">cap");
        }
        out << '\n';
      }
    }
    emit(c, out, json{{"coxeter", doc}});
    return kOk;
  });
}

int cmd_export(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(c);
    ExportOptions options;
    options.genera = c.genera;
    options.suite = suite_from_string(c.suite);
    options.order_cap = c.order_cap;
    check_genera(c, 2, "models need g >= 2");
    const json bundle = export_bundle(options);
    if (c.out.empty()) {
      out << bundle.dump(2) << '\n';
    } else {
      std::ofstream f(c.out);
      if (!f) throw InvalidConfig("cannot write " + c.out);
      f << bundle.dump(2) << '\n';
      if (!f) throw InvalidConfig("write to " + c.out + " failed");
      if (c.verbosity > 0) err << "wrote " << c.out << '\n';
    }
    return kOk;
  });
}

}  // namespace mcgen::cli
