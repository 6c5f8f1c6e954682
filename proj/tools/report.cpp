#include "report.hpp"

#include "mtasep/combi_r.hpp"
#include "mtasep/error.hpp"
#include "mtasep/mpf.hpp"

#include <algorithm>
#include <sstream>

namespace mtasep::report {

SteadyVector coprime(const SteadyVector& v) {
  BigInt g = 0;
  for (const auto& [sigma, w] : v.weights) g = gcd(g, w);
  SteadyVector out;
  out.sector = v.sector;
  for (const auto& [sigma, w] : v.weights) out.weights.emplace(sigma, g == 0 ? w : w / g);
  return out;
}

namespace {

ordered_json big(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

}  // namespace

ordered_json steady_json(const SteadyVector& v, const std::string& method) {
  ordered_json out;
  out["sector"] = v.sector.counts();
  out["method"] = method;
  std::map<std::string, BigInt> sorted;
  for (const auto& [sigma, w] : v.weights) sorted.emplace(sigma.compact(), w);
  ordered_json weights = ordered_json::object();
  for (const auto& [key, w] : sorted) weights[key] = big(w);
  out["weights"] = weights;
  return out;
}

ordered_json conjecture_json(const ConjectureReport& r) {
  ordered_json out;
  out["sector"] = r.sector.counts();
  out["r"] = r.r;
  out["configs"] = r.configs;
  out["states"] = r.states;
  out["carriers"] = r.carriers;
  out["failures"] = r.failures;
  out["stationary"] = r.stationary;
  out["pass"] = r.ok();
  if (!r.examples.empty()) out["examples"] = r.examples;
  return out;
}

ordered_json conjecture_sweep(int max_L, int max_n) {
  ordered_json cases = ordered_json::array();
  bool all = true;
  for (int n = 1; n <= max_n; ++n)
    for (int L = n + 1; L <= max_L; ++L)
      for (const auto& m : basic_sectors(n, L))
        for (int r = 1; r < L; ++r) {
          auto rep = conjecture_check(m, r);
          all = all && rep.ok();
          cases.push_back(conjecture_json(rep));
        }
  ordered_json out;
  out["max_L"] = max_L;
  out["max_n"] = max_n;
  out["all_pass"] = all;
  out["cases"] = cases;
  return out;
}

ordered_json rmatrix_json(const RMatrixTable& t, bool q0) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, poly] : t.entries) {
    const auto& [a, b, i, j] = key;
    std::string k = a.str() + "," + b.str() + "," + i.str() + "," + j.str();
    if (q0) {
      BigInt v = 0;
      for (const auto& [e, c] : poly.terms())
        if (e[1] == 0) v += c;  // q^0, any z power at z = 1
      if (v != 0) out[k] = big(v);
    } else {
      out[k] = poly_str(poly);
    }
  }
  return out;
}

ordered_json verify_golden(const nlohmann::json& golden) {
  ordered_json failures = ordered_json::array();
  long checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  };

  if (golden.contains("steady"))
    for (const auto& ex : golden["steady"]) {
      auto m = Multiplicity::parse(ex["mult"].get<std::string>());
      std::vector<std::pair<std::string, SteadyVector>> methods = {
          {"fm", fm_steady(m)}, {"kernel", kernel_steady(m)}};
      if (m.species() >= 2) methods.emplace_back("mpf", mpf_steady(m));
      for (const auto& [name, sv] : methods)
        for (const auto& [cfg, w] : ex["weights"].items()) {
          auto sigma = Config::parse(cfg);
          expect(sv.weight(sigma) == w.get<long long>(),
                 "steady " + m.str() + " " + name + " at " + cfg);
        }
    }
  if (golden.contains("r_apply"))
    for (const auto& ex : golden["r_apply"]) {
      auto img = r_apply(Word::parse(ex["i"].get<std::string>()), Word::parse(ex["j"].get<std::string>()));
      expect(img.b.str() == ex["b"].get<std::string>() && img.a.str() == ex["a"].get<std::string>(),
             "r_apply " + ex["i"].get<std::string>() + " " + ex["j"].get<std::string>());
    }
  if (golden.contains("ybe"))
    for (const auto& ex : golden["ybe"]) {
      auto [lhs, rhs] = ybe_sides(Word::parse(ex["x"].get<std::string>()), Word::parse(ex["y"].get<std::string>()),
                                  Word::parse(ex["z"].get<std::string>()));
      std::string top = ex["top"].get<std::string>();
      std::replace(top.begin(), top.end(), ',', ' ');
      expect(lhs == top && rhs == top, "ybe " + ex["x"].get<std::string>());
    }
  if (golden.contains("phi"))
    for (const auto& ex : golden["phi"]) {
      auto rows = phi(Config::parse(ex["config"].get<std::string>()));
      std::vector<std::string> got;
      for (const auto& w : rows) got.push_back(w.str());
      expect(got == ex["rows"].get<std::vector<std::string>>(), "phi " + ex["config"].get<std::string>());
    }
  if (golden.contains("multiline"))
    for (const auto& ex : golden["multiline"]) {
      auto s = MultilineState::parse(ex["state"].get<std::string>());
      expect(pi(s).str() == ex["pi"].get<std::string>(), "pi " + s.str());
      for (const auto& [site, want] : ex["evolve"].items())
        expect(t_evolve(s, std::stoul(site) - 1).str() == want.get<std::string>(), "T_" + site + " " + s.str());
      for (const auto& [site, want] : ex["pi_after"].items())
        expect(pi(t_evolve(s, std::stoul(site) - 1)).str() == want.get<std::string>(),
               "pi T_" + site + " " + s.str());
    }
  if (golden.contains("x_operators"))
    for (const auto& ex : golden["x_operators"]) {
      auto op = build_X(ex["i"].get<int>(), ex["n"].get<int>());
      std::map<std::string, long long> got;
      for (const auto& [t, c] : op.terms) {
        std::string key;
        for (std::size_t q = 0; q < t.size(); ++q) key += (q ? " . " : "") + t[q].str();
        got[key] = c.convert_to<long long>();
      }
      expect(got == ex["terms"].get<std::map<std::string, long long>>(),
             "X_" + std::to_string(ex["i"].get<int>()) + " n=" + std::to_string(ex["n"].get<int>()));
    }
  if (golden.contains("rmatrix"))
    for (const auto& ex : golden["rmatrix"]) {
      int l = ex["l"].get<int>(), m = ex["m"].get<int>(), L = ex["L"].get<int>();
      auto table = rmatrix_full(l, m, L);
      std::string tag = "R^{" + std::to_string(l) + "," + std::to_string(m) + "} L=" + std::to_string(L);
      expect(table.entries.size() == ex["entries"].size(), tag + " entry count");
      for (const auto& [key, want] : ex["entries"].items()) {
        std::vector<Word> w;
        std::stringstream ss(key);
        for (std::string part; std::getline(ss, part, ',');) w.push_back(Word::parse(part));
        auto it = table.entries.find(RIndex{w.at(0), w.at(1), w.at(2), w.at(3)});
        expect(it != table.entries.end() && it->second == parse_poly(want.get<std::string>()), tag + " at " + key);
      }
    }
  ordered_json out;
  out["checks"] = checks;
  out["failures"] = failures;
  return out;
}

}  // namespace mtasep::report
