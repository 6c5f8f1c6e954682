#include "mtasep/multiline.hpp"

#include "mtasep/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

namespace mtasep {

MultilineState MultilineState::parse(const std::string& text) {
  MultilineState s;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) s.rows.push_back(Word::parse(part));
  if (s.rows.empty()) throw InvalidInput("empty multiline state");
  return s;
}

std::string MultilineState::str() const {
  std::string out;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (j) out += ',';
    out += rows[j].str();
  }
  return out;
}

void validate_state(const MultilineState& s, const Levels& levels) {
  if (s.rows.size() != levels.l.size()) throw InvalidInput("multiline state has the wrong number of rows");
  for (std::size_t j = 0; j < s.rows.size(); ++j) {
    if (s.rows[j].size() != static_cast<std::size_t>(levels.chain_length))
      throw InvalidInput("multiline row has the wrong length");
    if (s.rows[j].weight() != levels.l[j]) throw InvalidInput("multiline row has the wrong weight");
  }
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("TASEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

BigInt multiline_count(const Levels& levels) {
  BigInt n = 1;
  for (int l : levels.l) n *= binomial(levels.chain_length, l);
  return n;
}

namespace {

std::vector<std::vector<Word>> row_alphabets(const Levels& levels) {
  std::vector<std::vector<Word>> out;
  for (int l : levels.l) out.push_back(enumerate_B(l, levels.chain_length));
  return out;
}

// Visits the states whose first row index lies in [first, last).
void visit_range(const std::vector<std::vector<Word>>& alphabets, std::size_t first, std::size_t last,
                 const std::function<void(const MultilineState&)>& visit) {
  const std::size_t n = alphabets.size();
  if (n == 0 || first >= last) return;
  std::vector<std::size_t> idx(n, 0);
  idx[0] = first;
  MultilineState s;
  s.rows.resize(n);
  for (std::size_t j = 0; j < n; ++j) s.rows[j] = alphabets[j][idx[j]];
  while (true) {
    visit(s);
    std::size_t j = n;
    while (j-- > 0) {
      if (++idx[j] < (j == 0 ? last : alphabets[j].size())) {
        s.rows[j] = alphabets[j][idx[j]];
        break;
      }
      if (j == 0) return;
      idx[j] = 0;
      s.rows[j] = alphabets[j][0];
    }
  }
}

std::uint64_t checked_count(const Levels& levels, std::uint64_t budget, const char* what) {
  BigInt count = multiline_count(levels);
  if (count > budget) {
    unsigned long long shown = count > BigInt(std::numeric_limits<unsigned long long>::max())
                                   ? std::numeric_limits<unsigned long long>::max()
                                   : count.convert_to<unsigned long long>();
    throw BudgetExceeded(what, shown, budget);
  }
  return count.convert_to<std::uint64_t>();
}

unsigned worker_count(std::size_t work) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(1, work)));
}

// Runs `body(first, last, worker)` over a split of [0, total) on worker threads.
template <class Body>
void parallel_ranges(std::size_t total, unsigned workers, Body body) {
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t first = total * w / workers, last = total * (w + 1) / workers;
    pool.emplace_back([&, first, last, w] {
      try {
        body(first, last, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

void for_each_state(const Levels& levels, const std::function<void(const MultilineState&)>& visit) {
  auto alphabets = row_alphabets(levels);
  if (alphabets.empty()) return;
  visit_range(alphabets, 0, alphabets[0].size(), visit);
}

TStepResult t_step(const Word& x, std::size_t k) {
  const std::size_t L = x.size();
  if (k >= L) throw InvalidInput("t_step: site out of range");
  std::size_t next = (k + 1) % L;
  std::size_t k_out = (k + L + x[k] - 1) % L;
  auto bits = x.bits();
  std::uint8_t lo = std::min(x[k], x[next]), hi = std::max(x[k], x[next]);
  bits[k] = lo;
  bits[next] = hi;
  return {k_out, Word(std::move(bits))};
}

MultilineState t_evolve(const MultilineState& s, std::size_t k) {
  MultilineState out = s;
  for (std::size_t j = out.rows.size(); j-- > 0;) {
    auto step = t_step(out.rows[j], k);
    out.rows[j] = std::move(step.x);
    k = step.k;
  }
  return out;
}

Word pi_j(const MultilineState& s, std::size_t j) {
  if (j >= s.rows.size()) throw InvalidInput("pi_j: row index out of range");
  Word carried = s.rows[j];
  for (std::size_t r = j + 1; r < s.rows.size(); ++r) carried = r_apply(carried, s.rows[r]).a;
  return carried;
}

std::vector<Word> pi_chain(const MultilineState& s) {
  std::vector<Word> out;
  out.reserve(s.rows.size());
  for (std::size_t j = 0; j < s.rows.size(); ++j) out.push_back(pi_j(s, j));
  return out;
}

Config pi(const MultilineState& s) {
  auto chain = pi_chain(s);
  return phi_inv(chain);
}

BigInt SteadyVector::total() const {
  BigInt t = 0;
  for (const auto& [sigma, w] : weights) t += w;
  return t;
}

BigInt SteadyVector::weight(const Config& sigma) const {
  auto it = weights.find(sigma);
  return it == weights.end() ? BigInt(0) : it->second;
}

SteadyVector fm_steady(const Multiplicity& m, std::uint64_t budget) {
  Levels levels = levels_from_multiplicity(m);
  checked_count(levels, budget, "fm_steady");
  auto alphabets = row_alphabets(levels);
  const std::size_t first_rows = alphabets[0].size();
  unsigned workers = worker_count(first_rows);
  std::vector<std::map<Config, std::uint64_t>> partial(workers);
  parallel_ranges(first_rows, workers, [&](std::size_t first, std::size_t last, unsigned w) {
    auto& counts = partial[w];
    visit_range(alphabets, first, last, [&](const MultilineState& s) { ++counts[pi(s)]; });
  });
  SteadyVector out;
  out.sector = m;
  for (const auto& sigma : enumerate_sector(m)) out.weights[sigma] = 0;
  for (const auto& counts : partial)
    for (const auto& [sigma, c] : counts) {
      auto it = out.weights.find(sigma);
      if (it == out.weights.end()) throw ConsistencyError("fm_steady: pi left the sector");
      it->second += c;
    }
  return out;
}

std::pair<Word, MultilineState> carrier_evolve(const MultilineState& s, const Word& u) {
  MultilineState out = s;
  Word carrier = u;
  for (std::size_t j = out.rows.size(); j-- > 0;) {
    // R(b_j (x) u) = u' (x) b'_j
    auto img = r_apply(out.rows[j], carrier);
    carrier = std::move(img.b);
    out.rows[j] = std::move(img.a);
  }
  return {carrier, out};
}

std::pair<Word, MultilineState> carrier_unevolve(const Word& u_out, const MultilineState& s_out) {
  MultilineState out = s_out;
  Word carrier = u_out;
  for (std::size_t j = 0; j < out.rows.size(); ++j) {
    // R(u' (x) b'_j) = b_j (x) u
    auto img = r_apply(carrier, out.rows[j]);
    out.rows[j] = std::move(img.b);
    carrier = std::move(img.a);
  }
  return {carrier, out};
}

ConjectureReport conjecture_check(const Multiplicity& m, int r, std::uint64_t budget) {
  Levels levels = levels_from_multiplicity(m);
  if (r < 1 || r >= levels.chain_length) throw InvalidInput("conjecture_check: need 1 <= r < L");
  checked_count(levels, budget, "conjecture_check");

  ConjectureReport report;
  report.sector = m;
  report.r = r;

  // Preimages of every configuration, one pass over B(m).
  std::map<Config, std::vector<MultilineState>> preimage;
  for (const auto& sigma : enumerate_sector(m)) preimage[sigma];
  for_each_state(levels, [&](const MultilineState& s) {
    preimage[pi(s)].push_back(s);
    ++report.states;
  });
  report.configs = preimage.size();

  auto carriers = enumerate_B(r, levels.chain_length);
  report.carriers = carriers.size();

  std::map<Config, BigInt> weight;
  for (const auto& [sigma, pre] : preimage) weight[sigma] = pre.size();

  // image[u][sigma] = tau_u(sigma), when single valued
  std::vector<std::map<Config, Config>> image(carriers.size());
  for (std::size_t ui = 0; ui < carriers.size(); ++ui) {
    for (const auto& [sigma, pre] : preimage) {
      std::set<Config> targets;
      for (const auto& s : pre) targets.insert(pi(carrier_evolve(s, carriers[ui]).second));
      if (targets.size() == 1) {
        image[ui].emplace(sigma, *targets.begin());
      } else {
        ++report.failures;
        if (report.examples.size() < 5) {
          std::string msg = "sigma=" + sigma.str() + " u=" + carriers[ui].str() + " images:";
          for (const auto& t : targets) msg += " " + t.str();
          report.examples.push_back(msg);
        }
      }
    }
  }
  if (report.failures != 0) return report;

  // The uniform mixture over u must carry the weights onto themselves:
  // sum_u sum_{sigma : tau_u(sigma) = sigma'} P(sigma) = |B^r| P(sigma').
  std::map<Config, BigInt> pushed;
  for (const auto& per_u : image)
    for (const auto& [sigma, target] : per_u) pushed[target] += weight[sigma];
  report.stationary = true;
  const BigInt n_carriers = carriers.size();
  for (const auto& [sigma, w] : weight) {
    auto it = pushed.find(sigma);
    BigInt got = it == pushed.end() ? BigInt(0) : it->second;
    if (got != n_carriers * w) {
      report.stationary = false;
      if (report.examples.size() < 5) report.examples.push_back("not stationary at sigma=" + sigma.str());
    }
  }
  return report;
}

}  // namespace mtasep
