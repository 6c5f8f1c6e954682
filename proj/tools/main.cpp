// mtasep: steady states, combinatorial/quantum R checks and operator dumps
// for the multi-species TASEP on a ring.

#include "CLI11.hpp"
#include "json.hpp"
#include "mtasep/combi_r.hpp"
#include "mtasep/error.hpp"
#include "mtasep/markov.hpp"
#include "mtasep/mpf.hpp"
#include "mtasep/multiline.hpp"
#include "mtasep/quantum_r.hpp"
#include "report.hpp"

#include <fstream>
#include <iostream>

using namespace mtasep;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_steady(const std::string& mult, const std::string& method, const std::string& format,
               std::uint64_t budget) {
  auto m = Multiplicity::parse(mult);
  levels_from_multiplicity(m);  // rejects non-basic sectors
  SteadyVector result;
  bool agree = true;
  if (method == "fm") {
    result = fm_steady(m, budget);
  } else if (method == "kernel") {
    result = kernel_steady(m, std::min<std::uint64_t>(budget, kKernelBudget));
  } else if (method == "mpf") {
    result = mpf_steady(m);
  } else {
    auto fm = fm_steady(m, budget);
    auto ker = kernel_steady(m, std::min<std::uint64_t>(budget, kKernelBudget));
    agree = positive_scale(fm, ker).has_value();
    if (m.species() >= 2) agree = agree && positive_scale(fm, mpf_steady(m)).has_value();
    result = fm;
  }
  result = report::coprime(result);
  if (format == "tsv") {
    for (const auto& [sigma, w] : result.weights) std::cout << sigma.compact() << '\t' << w << '\n';
  } else {
    auto j = report::steady_json(result, method);
    if (method == "all") j["agree"] = agree;
    emit(j);
  }
  if (!agree) {
    std::cerr << "steady: methods disagree on sector " << m.str() << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_verify(const std::string& mult, const std::string& golden_path, std::uint64_t budget) {
  if (!golden_path.empty()) {
    std::ifstream in(golden_path);
    if (!in) throw InvalidInput("cannot open golden file " + golden_path);
    auto golden = nlohmann::json::parse(in, nullptr, true);
    auto rep = report::verify_golden(golden);
    emit(rep);
    return rep["failures"].empty() ? kExitOk : kExitMismatch;
  }
  if (mult.empty()) throw InvalidInput("verify needs --mult or --golden");
  auto m = Multiplicity::parse(mult);
  levels_from_multiplicity(m);
  std::vector<std::pair<std::string, SteadyVector>> methods = {
      {"fm", fm_steady(m, budget)}, {"kernel", kernel_steady(m, std::min<std::uint64_t>(budget, kKernelBudget))}};
  if (m.species() >= 2) methods.emplace_back("mpf", mpf_steady(m));
  ordered_json out;
  out["sector"] = m.counts();
  ordered_json residuals = ordered_json::object();
  bool ok = true;
  for (const auto& [name, sv] : methods) {
    auto h = H_apply(sv);
    ordered_json nonzero = ordered_json::object();
    for (const auto& [sigma, c] : h.entries) nonzero[sigma.compact()] = c.str();
    residuals[name] = nonzero;
    ok = ok && h.is_zero();
  }
  out["residuals"] = residuals;
  bool agree = true;
  for (std::size_t k = 1; k < methods.size(); ++k)
    agree = agree && positive_scale(methods[0].second, methods[k].second).has_value();
  out["agree"] = agree;
  out["pass"] = ok && agree;
  emit(out);
  return ok && agree ? kExitOk : kExitMismatch;
}

int cmd_ybe(int L, bool all, int k, int l, int m, std::uint64_t samples, std::uint64_t seed, bool spectral) {
  ordered_json cases = ordered_json::array();
  bool ok = true;
  auto record = [&](int a, int b, int c, const CheckReport& rep, const char* kind) {
    ordered_json j;
    j["k"] = a;
    j["l"] = b;
    j["m"] = c;
    j["kind"] = kind;
    j["checked"] = rep.checked;
    j["pass"] = rep.ok();
    if (rep.counterexample) j["counterexample"] = *rep.counterexample;
    ok = ok && rep.ok();
    cases.push_back(j);
  };
  std::vector<std::array<int, 3>> triples;
  if (all) {
    for (int a = 1; a < L; ++a)
      for (int b = 1; b < L; ++b)
        for (int c = 1; c < L; ++c) triples.push_back({a, b, c});
  } else {
    if (k < 1 || l < 1 || m < 1 || k >= L || l >= L || m >= L)
      throw InvalidInput("ybe needs --all or 1 <= --k, --l, --m < --L");
    triples.push_back({k, l, m});
  }
  for (const auto& [a, b, c] : triples) {
    if (spectral)
      record(a, b, c, spectral_ybe_check(a, b, c, L), "spectral");
    else if (samples > 0)
      record(a, b, c, ybe_check_random(a, b, c, L, samples, seed), "random");
    else
      record(a, b, c, ybe_check(a, b, c, L), "exhaustive");
  }
  ordered_json out;
  out["L"] = L;
  out["cases"] = cases;
  out["pass"] = ok;
  emit(out);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_hat(int n) {
  if (n < 2) throw InvalidInput("hat needs --n >= 2");
  auto rep = hat_check(n);
  ordered_json out;
  out["n"] = n;
  out["pass_matrix"] = rep.pass;
  out["pass"] = rep.ok();
  if (!rep.ok()) {
    if (rep.shift_repair) {
      ordered_json shifts = ordered_json::array();
      for (const auto& c : *rep.shift_repair) shifts.push_back(c.str());
      out["shift_repair"] = shifts;
    } else {
      out["shift_repair"] = nullptr;
    }
  }
  emit(out);
  return rep.ok() ? kExitOk : kExitMismatch;
}

int cmd_rmat(int l, int m, int L, bool q0) {
  if (l < 1 || m < 1 || l >= L || m >= L) throw InvalidInput("rmat needs 1 <= --l, --m < --L");
  emit(report::rmatrix_json(rmatrix_full(l, m, L), q0));
  return kExitOk;
}

int cmd_conjecture(const std::string& mult, int r, bool sweep, int max_L, int max_n, std::uint64_t budget) {
  ordered_json out;
  bool ok;
  if (sweep) {
    out = report::conjecture_sweep(max_L, max_n);
    ok = out["all_pass"].get<bool>();
  } else {
    if (mult.empty()) throw InvalidInput("conjecture needs --mult and --r, or --sweep");
    auto rep = conjecture_check(Multiplicity::parse(mult), r, budget);
    out = report::conjecture_json(rep);
    ok = rep.ok();
  }
  emit(out);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_apply_r(const std::string& i, const std::string& j) {
  auto img = r_apply(Word::parse(i), Word::parse(j));
  std::cout << img.b.str() << ' ' << img.a.str() << '\n';
  return kExitOk;
}

int cmd_xop(int n, int i, bool hat) {
  auto op = hat ? build_Xhat(i, n) : build_X(i, n);
  std::cout << op.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-species TASEP steady states and combinatorial R"};
  app.require_subcommand(1);

  std::uint64_t budget = default_budget();
  app.add_option("--budget", budget, "Enumeration budget (default: TASEP_BUDGET or 10^7)");

  std::string mult, method = "all", format = "json", golden, word_i, word_j;
  int L = 0, k = 0, l = 0, m = 0, n = 0, r = 0, index = 0, max_L = 5, max_n = 3;
  bool all = false, q0 = false, hat = false, sweep = false, spectral = false;
  std::uint64_t samples = 0, seed = 1;

  auto* steady = app.add_subcommand("steady", "Steady state of one sector");
  steady->add_option("--mult", mult, "Multiplicity m_0,...,m_n")->required();
  steady->add_option("--method", method)->check(CLI::IsMember({"fm", "mpf", "kernel", "all"}));
  steady->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  steady->add_option("--budget", budget);

  auto* verify = app.add_subcommand("verify", "Stationarity and agreement of all methods, or golden examples");
  verify->add_option("--mult", mult);
  verify->add_option("--golden", golden, "JSON file of reference examples");
  verify->add_option("--budget", budget);

  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter equation checks");
  ybe->add_option("--L", L)->required();
  ybe->add_flag("--all", all, "Every (k,l,m) with 1 <= k,l,m < L");
  ybe->add_option("--k", k);
  ybe->add_option("--l", l);
  ybe->add_option("--m", m);
  ybe->add_option("--samples", samples, "Random triples instead of the exhaustive sweep");
  ybe->add_option("--seed", seed);
  ybe->add_flag("--spectral", spectral, "Quantum R with spectral parameters");

  auto* hatc = app.add_subcommand("hat", "Hat relation for the corner transfer matrices");
  hatc->add_option("--n", n)->required();

  auto* rmat = app.add_subcommand("rmat", "Quantum R matrix table");
  rmat->add_option("--l", l)->required();
  rmat->add_option("--m", m)->required();
  rmat->add_option("--L", L)->required();
  rmat->add_flag("--q0", q0, "Values at q = 0, z = 1");

  auto* conj = app.add_subcommand("conjecture", "Carrier dynamics single-image and stationarity check");
  conj->add_option("--mult", mult);
  conj->add_option("--r", r);
  conj->add_flag("--sweep", sweep, "All basic sectors up to --max-L, --max-n and all r");
  conj->add_option("--max-L", max_L);
  conj->add_option("--max-n", max_n);
  conj->add_option("--budget", budget);

  auto* apply = app.add_subcommand("apply-r", "Combinatorial R on one pair, printed as 'b a'");
  apply->add_option("--i", word_i)->required();
  apply->add_option("--j", word_j)->required();

  auto* xop = app.add_subcommand("xop", "Terms of X_i or X^_i");
  xop->add_option("--n", n)->required();
  xop->add_option("--i", index)->required();
  xop->add_flag("--hat", hat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*steady) return cmd_steady(mult, method, format, budget);
    if (*verify) return cmd_verify(mult, golden, budget);
    if (*ybe) return cmd_ybe(L, all, k, l, m, samples, seed, spectral);
    if (*hatc) return cmd_hat(n);
    if (*rmat) return cmd_rmat(l, m, L, q0);
    if (*conj) return cmd_conjecture(mult, r, sweep, max_L, max_n, budget);
    if (*apply) return cmd_apply_r(word_i, word_j);
    if (*xop) return cmd_xop(n, index, hat);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
