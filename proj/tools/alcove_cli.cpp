// Command-line front end: group data, interval sizes by three methods,
// table generation with reference diffs, and the verification suites.
//
// Exit codes: 0 success, 1 verification/cross-check failure, 2 usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alcove/alcove.hpp"

using namespace alcove;
using nlohmann::json;

namespace {

struct OutputSink {
  std::string path;  // empty: stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + path);
    f << text;
  }
};

Weight parse_lambda(int n, const std::string& s) {
  std::vector<long long> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(std::stoll(tok));
  if ((int)c.size() != n)
    throw CLI::ValidationError("--lambda", "expected " + std::to_string(n) + " coordinates");
  return Weight(n, std::move(c));
}

std::string word_str(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += "s" + std::to_string(i) + ".";
  s.pop_back();
  return s;
}

json report_json(const Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json jc{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    jc["counterexample"] = c.passed ? json(nullptr) : json(c.counterexample);
    checks.push_back(jc);
  }
  return checks;
}

std::string render(const json& doc, const Report* rep, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::ostringstream os;
  os << doc["command"].get<std::string>();
  if (doc.contains("params")) os << " " << doc["params"].dump();
  os << "\n";
  if (doc.contains("result") && !doc["result"].is_null())
    os << "result: " << doc["result"].dump() << "\n";
  if (rep)
    for (const auto& c : rep->checks) {
      os << (c.passed ? "  [pass] " : "  [FAIL] ") << c.name;
      if (!c.passed) os << "  -- " << c.counterexample;
      os << "\n";
    }
  return os.str();
}

// --- tables -----------------------------------------------------------------

std::string zone_label(const Zone& z) {
  std::string s;
  for (int v : z.pattern) s += std::to_string(v);
  return s;
}

std::string phi_table_csv(int n) {
  auto zones = all_zones(n);
  std::ostringstream os;
  os << "root";
  for (const Zone& z : zones) os << "," << zone_label(z);
  os << "\n";
  for (const RootInterval& a : all_positive_roots(n)) {
    os << (a.lo == a.hi ? "alpha_" + std::to_string(a.lo)
                        : "alpha_" + std::to_string(a.lo) + std::to_string(a.hi));
    for (const Zone& z : zones) {
      auto phi = phi_plus(z.clamp_representative());
      bool in = std::find(phi.begin(), phi.end(), a) != phi.end();
      os << "," << (in ? "1" : "0");
    }
    os << "\n";
  }
  return os.str();
}

std::string size_table_csv(int n) {
  auto zones = all_zones(n);
  const auto& f = enumerate_F(n);
  std::ostringstream os;
  os << "a";
  for (const Zone& z : zones) os << "," << zone_label(z);
  os << "\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    os << "a_" << i + 1;
    for (const Zone& z : zones)
      os << "," << paperboat::pb_size_dominant(f[i], z.clamp_representative());
    os << "\n";
  }
  return os.str();
}

// diff of computed rank-3 tables against the embedded reference
std::vector<std::string> diff_against_reference() {
  std::vector<std::string> diffs;
  auto zones = all_zones(3);
  const auto& phi_ref = tables_a3::phi_plus_table();
  for (int z = 0; z < 27; ++z) {
    auto expect = phi_ref[z];
    std::sort(expect.begin(), expect.end());
    if (phi_plus(zones[z].clamp_representative()) != expect)
      diffs.push_back("phi_plus mismatch at zone " + zone_label(zones[z]));
  }
  const auto& f = enumerate_F(3);
  const auto& size_ref = tables_a3::cplus_table();
  for (int a = 0; a < 6; ++a)
    for (int z = 0; z < 27; ++z) {
      long long got = paperboat::pb_size_dominant(f[a], zones[z].clamp_representative());
      if (got != size_ref[a][z])
        diffs.push_back("size mismatch a_" + std::to_string(a + 1) + " zone " +
                        zone_label(zones[z]) + ": " + std::to_string(got) + " vs " +
                        std::to_string(size_ref[a][z]));
    }
  return diffs;
}

// --- verify suites -------------------------------------------------------------

Report verify_criterion(int n, int len_bound) {
  Report rep;
  rep.suite = "criterion";
  auto elems = ball_elements(n, len_bound);
  long long disagreements = 0;
  std::string first;
  for (const auto& y : elems) {
    auto closure = bruhat::subword_closure(y, len_bound);
    bruhat::SemidirectView vy(y);
    for (const auto& x : elems) {
      bool fast = bruhat::leq(bruhat::SemidirectView(x), vy);
      bool slow = closure->count(x.window) > 0;
      if (fast != slow) {
        if (disagreements == 0) first = x.str() + " vs " + y.str();
        ++disagreements;
      }
    }
  }
  rep.add("criterion agrees with subword oracle on ball(" + std::to_string(n) + "," +
              std::to_string(len_bound) + ")^2",
          disagreements == 0, first);
  return rep;
}

std::vector<Weight> dominant_box(int n, long long bound) {
  std::vector<Weight> out;
  std::vector<long long> c(n, 0);
  while (true) {
    out.emplace_back(n, c);
    int i = n - 1;
    while (i >= 0 && c[i] == bound) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

Report verify_tiling_suite(int n, long long bound) {
  Report rep;
  rep.suite = "tiling";
  for (const auto& a : enumerate_F(n))
    for (const Weight& lam : dominant_box(n, bound)) {
      auto sub = paperboat::verify_tiling(a, lam);
      rep.add("tiling a=" + a.str() + " lambda=" + lam.str(), sub.ok(), sub.first_failure());
    }
  return rep;
}

Report verify_zones_suite(int n, int reps) {
  Report rep;
  rep.suite = "zones";
  for (const auto& a : enumerate_F(n))
    for (const Zone& z : all_zones(n)) {
      auto sub = paperboat::verify_zone_constancy(a, z, paperboat::zone_representatives(z, reps));
      rep.add("zone " + z.str() + " a=" + a.str(), sub.ok(), sub.first_failure());
    }
  return rep;
}

Report verify_recurrence_suite(int n, long long bound) {
  Report rep;
  rep.suite = "recurrence";
  for (const auto& a : enumerate_F(n))
    for (const Weight& lam : dominant_box(n, bound)) {
      long long direct = paperboat::pb_size(a, lam);
      long long rec = paperboat::pb_size_via_recurrence(a, lam);
      rep.add("recurrence a=" + a.str() + " lambda=" + lam.str(), direct == rec,
              std::to_string(rec) + " vs " + std::to_string(direct));
    }
  return rep;
}

Report verify_weighted_suite(int n, long long bound) {
  Report rep;
  rep.suite = "weighted";
  for (const auto& a : enumerate_F(n)) {
    auto table = paperboat::build_zone_table(a);
    for (const Weight& lam : dominant_box(n, bound)) {
      long long weighted = paperboat::weighted_interval_size(a, lam, table);
      long long direct = (long long)bruhat::lower_interval(theta(a, lam)).size();
      rep.add("weighted a=" + a.str() + " lambda=" + lam.str(), weighted == direct,
              std::to_string(weighted) + " vs " + std::to_string(direct));
    }
  }
  return rep;
}

Report verify_geom_suite() {
  Report rep;
  rep.suite = "geom";
  const auto& f = enumerate_F(3);
  for (int a = 1; a <= 6; ++a) {
    auto table = paperboat::build_zone_table(f[a - 1]);
    auto sub = geomformula::verify_zone_identities(a, table.entries);
    rep.add("zone identities a_" + std::to_string(a), sub.ok(), sub.first_failure());
  }
  return rep;
}

Report verify_minkowski_suite(int n, long long bound) {
  Report rep;
  rep.suite = "minkowski";
  auto box = dominant_box(n, bound);
  for (const Weight& z : box)
    for (const Weight& y : box) {
      auto sub = polytopes::minkowski_check(z, y);
      rep.add("minkowski z=" + z.str() + " y=" + y.str(), sub.ok(), sub.first_failure());
    }
  return rep;
}

Report verify_cartan_suite(int n) {
  Report rep;
  rep.suite = "cartan";
  for (int k = 1; k <= n; ++k) {
    auto sub = polytopes::cartan_minors_check(k);
    rep.add("cartan minors n=" + std::to_string(k), sub.ok(), sub.first_failure());
    auto inv = polytopes::inverse_cartan_minor_check(k);
    rep.add("inverse cartan minors n=" + std::to_string(k), inv.ok(), inv.first_failure());
  }
  return rep;
}

Report verify_ehrhart_suite(int n) {
  Report rep;
  rep.suite = "ehrhart";
  {
    auto counts = polytopes::interval_dilation_counts(Rational(0), Rational(1, 2), 12);
    bool ok = true;
    for (int m = 0; m <= 12; ++m) ok = ok && counts[m] == m / 2 + 1;
    rep.add("segment [0,1/2] counts are floor(m/2)+1", ok, "");
  }
  const auto& f = enumerate_F(n);
  std::vector<paperboat::ZoneCountTable> tables;
  for (const auto& a : f) tables.push_back(paperboat::build_zone_table(a));
  std::vector<std::function<long long(const Weight&)>> fns;
  for (std::size_t i = 0; i < f.size(); ++i)
    fns.push_back([&f, &tables, i](const Weight& lam) {
      return paperboat::weighted_interval_size(f[i], lam, tables[i]);
    });
  Weight base(n, std::vector<long long>(n, 2));
  Weight dir(n, std::vector<long long>(n, 1));
  auto sub = polytopes::top_component_check(n, base, dir, fns);
  for (const auto& c : sub.checks) rep.add(c.name, c.passed, c.counterexample);
  {
    // observation only: whether the dilation quasi-polynomial of the
    // fundamental-weight permutohedron collapses to one polynomial
    Weight w1 = Weight::fundamental(n, 1);
    auto counts = polytopes::dilation_counts(w1, (n + 1) * (n + 1) + n,
                                             polytopes::CountLattice::CosetOfDilation);
    std::vector<std::pair<long long, long long>> samples;
    for (std::size_t m = 0; m < counts.size(); ++m) samples.push_back({(long long)m, counts[m]});
    auto q = polytopes::fit_quasipolynomial(samples, n + 1, n);
    rep.add(std::string("observation (not asserted): coset polynomials ") +
                (polytopes::collapses_to_polynomial(q) ? "coincide" : "differ"),
            true);
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in affine symmetric groups: Bruhat order, "
               "interval tilings, zone tables, lattice-point counts"};
  app.require_subcommand(1);
  std::string format = "text", out_path;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "write output to this path");

  // group-info
  auto* info = app.add_subcommand("group-info", "group data for one rank");
  info->fallthrough();
  int info_n = 3;
  info->add_option("--n", info_n, "rank")->check(CLI::Range(1, 6));

  // interval-size
  auto* isz = app.add_subcommand("interval-size", "size of a lower Bruhat interval");
  isz->fallthrough();
  int isz_n = 3, isz_a = 1;
  std::string isz_lambda, isz_method;
  bool cross_check = false;
  isz->add_option("--n", isz_n, "rank")->check(CLI::Range(1, 4));
  isz->add_option("--a", isz_a, "element index in F (1-based)");
  isz->add_option("--lambda", isz_lambda, "comma-separated weight coordinates")->required();
  isz->add_option("--method", isz_method, "computation path")
      ->check(CLI::IsMember({"enumerate", "weighted", "geometric"}));
  isz->add_flag("--cross-check", cross_check, "run all applicable methods and compare");

  // tables
  auto* tab = app.add_subcommand("tables", "emit cover sets and tile sizes per zone");
  tab->fallthrough();
  int tab_n = 3;
  tab->add_option("--n", tab_n, "rank")->check(CLI::Range(1, 3));

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->fallthrough();
  std::string suite;
  int ver_n = 2;
  long long len_bound = -1, coord_bound = -1;
  ver->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"criterion", "tiling", "zones", "recurrence", "weighted",
                             "geom", "minkowski", "cartan", "ehrhart"}));
  ver->add_option("--n", ver_n, "rank")->check(CLI::Range(1, 5));
  ver->add_option("--len-bound", len_bound, "length bound (criterion suite)");
  ver->add_option("--coord-bound", coord_bound, "coordinate bound (weight box suites)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  OutputSink sink{out_path};
  try {
    if (*info) {
      const auto& f = enumerate_F(info_n);
      json jf = json::array();
      for (const auto& a : f) {
        jf.push_back({{"word", word_str(reduced_word(a))},
                      {"window", a.window},
                      {"length", length(a)}});
      }
      json doc{{"command", "group-info"},
               {"params", {{"n", info_n}}},
               {"result",
                {{"finite_weyl_order", factorial(info_n + 1)},
                 {"stabilizer_order", (long long)omega_elements(info_n).size()},
                 {"zone_count", ipow(3, info_n)},
                 {"F", jf}}}};
      sink.write(render(doc, nullptr, format == "csv" ? "text" : format));
      return 0;
    }

    if (*isz) {
      const auto& f = enumerate_F(isz_n);
      if (isz_a < 1 || isz_a > (int)f.size())
        throw CLI::ValidationError("--a", "index must be in 1.." + std::to_string(f.size()));
      Weight lam = parse_lambda(isz_n, isz_lambda);
      if (!lam.is_dominant()) throw CLI::ValidationError("--lambda", "weight must be dominant");
      if (isz_method.empty())
        isz_method = isz_n <= 3 ? "weighted" : "enumerate";  // zone tables stay desk-sized
      if (isz_method == "geometric" && isz_n != 3 && !cross_check)
        throw CLI::ValidationError("--method", "geometric formula is rank 3 only");

      auto compute = [&](const std::string& method) -> long long {
        if (method == "enumerate")
          return (long long)bruhat::lower_interval(theta(f[isz_a - 1], lam)).size();
        if (method == "weighted") {
          auto table = paperboat::build_zone_table(f[isz_a - 1]);
          return paperboat::weighted_interval_size(f[isz_a - 1], lam, table);
        }
        Rational v = geomformula::eval_formula_a3(isz_a, lam);
        return polytopes::to_ll(v);
      };

      json doc{{"command", "interval-size"},
               {"params",
                {{"n", isz_n}, {"a", isz_a}, {"lambda", lam.coords}, {"method", isz_method}}}};
      Report rep;
      if (cross_check) {
        std::vector<std::string> methods{"enumerate", "weighted"};
        if (isz_n == 3) methods.push_back("geometric");
        std::vector<long long> values;
        for (const auto& m : methods) values.push_back(compute(m));
        bool agree = true;
        for (long long v : values) agree = agree && v == values[0];
        for (std::size_t i = 0; i < methods.size(); ++i)
          rep.add(methods[i], agree, std::to_string(values[i]));
        doc["result"] = values[0];
        doc["checks"] = report_json(rep);
        sink.write(render(doc, &rep, format));
        return agree ? 0 : 1;
      }
      doc["result"] = compute(isz_method);
      sink.write(render(doc, nullptr, format));
      return 0;
    }

    if (*tab) {
      std::string phi_csv = phi_table_csv(tab_n);
      std::string size_csv = size_table_csv(tab_n);
      std::vector<std::string> diffs;
      if (tab_n == 3) diffs = diff_against_reference();
      if (format == "csv" || format == "text") {
        std::ostringstream os;
        os << "# cover sets per zone\n" << phi_csv;
        os << "# dominant tile sizes per zone\n" << size_csv;
        if (tab_n == 3) {
          os << "# diff against reference: " << diffs.size() << " mismatches\n";
          for (const auto& d : diffs) os << "#   " << d << "\n";
        }
        sink.write(os.str());
      } else {
        json doc{{"command", "tables"},
                 {"params", {{"n", tab_n}}},
                 {"result",
                  {{"phi_plus_csv", phi_csv},
                   {"sizes_csv", size_csv},
                   {"diff", diffs}}}};
        sink.write(doc.dump(2) + "\n");
      }
      return diffs.empty() ? 0 : 1;
    }

    if (*ver) {
      Report rep;
      if (suite == "criterion") {
        if (len_bound < 0) len_bound = ver_n == 1 ? 8 : ver_n == 2 ? 6 : 5;
        rep = verify_criterion(ver_n, (int)len_bound);
      } else if (suite == "tiling") {
        if (coord_bound < 0) coord_bound = ver_n == 2 ? 2 : 1;
        rep = verify_tiling_suite(ver_n, coord_bound);
      } else if (suite == "zones") {
        rep = verify_zones_suite(ver_n, 3);
      } else if (suite == "recurrence") {
        if (coord_bound < 0) coord_bound = ver_n == 2 ? 2 : 1;
        rep = verify_recurrence_suite(ver_n, coord_bound);
      } else if (suite == "weighted") {
        if (coord_bound < 0) coord_bound = ver_n == 2 ? 2 : 1;
        rep = verify_weighted_suite(ver_n, coord_bound);
      } else if (suite == "geom") {
        rep = verify_geom_suite();
      } else if (suite == "minkowski") {
        if (coord_bound < 0) coord_bound = 1;
        rep = verify_minkowski_suite(ver_n, coord_bound);
      } else if (suite == "cartan") {
        rep = verify_cartan_suite(ver_n);
      } else if (suite == "ehrhart") {
        rep = verify_ehrhart_suite(ver_n);
      }
      json doc{{"command", "verify"},
               {"params", {{"suite", suite}, {"n", ver_n}}},
               {"result", rep.ok() ? "pass" : "fail"},
               {"checks", report_json(rep)}};
      sink.write(render(doc, &rep, format));
      return rep.ok() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
