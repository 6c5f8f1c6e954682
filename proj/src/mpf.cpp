#include "mtasep/mpf.hpp"

#include "mtasep/error.hpp"

#include <exception>
#include <functional>
#include <thread>

namespace mtasep {

void CtmOperator::add(const CtmTerm& t, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

CtmOperator& CtmOperator::operator+=(const CtmOperator& y) {
  for (const auto& [t, c] : y.terms) add(t, c);
  return *this;
}

CtmOperator& CtmOperator::operator-=(const CtmOperator& y) {
  for (const auto& [t, c] : y.terms) add(t, -c);
  return *this;
}

std::string CtmOperator::str() const {
  std::string out;
  for (const auto& [t, c] : terms) {
    out += c.str() + " *";
    for (std::size_t q = 0; q < t.size(); ++q) out += (q ? " . " : " ") + t[q].str();
    out += '\n';
  }
  return out;
}

CtmOperator operator*(const CtmOperator& x, const CtmOperator& y) {
  if (x.n != y.n) throw InvalidInput("operator product: species counts differ");
  CtmOperator out;
  out.n = x.n;
  const std::size_t K = x.copies();
  std::vector<std::vector<std::pair<OscMonomial, int>>> per_copy(K);
  CtmTerm term(K);
  for (const auto& [tx, cx] : x.terms)
    for (const auto& [ty, cy] : y.terms) {
      bool zero = false;
      for (std::size_t q = 0; q < K && !zero; ++q) {
        per_copy[q] = osc_mul_monomials(tx[q], ty[q]);
        zero = per_copy[q].empty();
      }
      if (zero) continue;
      const BigInt base = cx * cy;
      // expand the per-copy sums
      std::function<void(std::size_t, long)> expand = [&](std::size_t q, long sign) {
        if (q == K) {
          out.add(term, base * sign);
          return;
        }
        for (const auto& [mono, c] : per_copy[q]) {
          term[q] = mono;
          expand(q + 1, sign * c);
        }
      };
      expand(0, 1);
    }
  return out;
}

CtmOperator operator*(const BigInt& c, const CtmOperator& x) {
  CtmOperator out;
  out.n = x.n;
  for (const auto& [t, v] : x.terms) out.add(t, c * v);
  return out;
}

std::size_t copy_index(int n, int r, int c) {
  if (r < 1 || c <= r || c > n) throw InvalidInput("copy_index: need 1 <= r < c <= n");
  // lines 1..r-1 hold n-1, n-2, ..., n-r+1 vertices
  std::size_t before = 0;
  for (int line = 1; line < r; ++line) before += static_cast<std::size_t>(n - line);
  return before + static_cast<std::size_t>(n - c);
}

namespace {

// Visits every admissible configuration with its term and the number of 1s
// leaving the top.
void for_each_configuration(int i, int n, const std::function<void(const CtmTerm&, int)>& visit) {
  if (n < 2) throw InvalidInput("corner transfer matrices need n >= 2");
  if (i < 0 || i > n) throw InvalidInput("operator index out of range");
  std::vector<int> gamma(static_cast<std::size_t>(n) + 1);
  for (int r = 1; r <= n; ++r) gamma[static_cast<std::size_t>(r)] = r > n - i ? 1 : 0;

  CtmTerm term(static_cast<std::size_t>(n * (n - 1) / 2));
  std::vector<int> up(static_cast<std::size_t>(n) + 1, 0);  // value on the leg of line c
  up[static_cast<std::size_t>(n)] = gamma[static_cast<std::size_t>(n)];

  // Rows are filled from the bottom (r = n-1) to the top (r = 1); inside a row
  // from the left (c = n) to the right (c = r+1).
  std::function<void(int, int, int)> step = [&](int r, int c, int h) {
    if (r == 0) {
      int alpha = 0;
      for (int line = 1; line <= n; ++line) alpha += up[static_cast<std::size_t>(line)];
      visit(term, alpha);
      return;
    }
    if (c == r) {
      if (h != gamma[static_cast<std::size_t>(r)]) return;
      up[static_cast<std::size_t>(r)] = gamma[static_cast<std::size_t>(r)];
      if (r == 1) {
        step(0, 0, 0);
      } else {
        for (int free_in = 0; free_in <= 1; ++free_in) step(r - 1, n, free_in);
      }
      return;
    }
    const int j = up[static_cast<std::size_t>(c)];
    for (int a = 0; a <= 1; ++a) {
      int b = h + j - a;
      if (b < 0 || b > 1) continue;
      auto w = five_vertex_weight(a, b, h, j);
      if (!w) continue;
      term[copy_index(n, r, c)] = *w;
      up[static_cast<std::size_t>(c)] = b;
      step(r, c - 1, a);
      up[static_cast<std::size_t>(c)] = j;
    }
  };
  for (int free_in = 0; free_in <= 1; ++free_in) step(n - 1, n, free_in);
}

}  // namespace

CtmOperator build_X(int i, int n) {
  CtmOperator out;
  out.n = n;
  for_each_configuration(i, n, [&](const CtmTerm& t, int) { out.add(t, 1); });
  return out;
}

CtmOperator build_Xhat(int i, int n) {
  CtmOperator out;
  out.n = n;
  for_each_configuration(i, n, [&](const CtmTerm& t, int alpha) { out.add(t, alpha); });
  return out;
}

BigInt ctm_trace(const CtmOperator& x) {
  // A term whose copies include an off-diagonal factor has every diagonal
  // matrix element 0, whatever the other copies are; only a term built from
  // unit and (a+)^s k (a-)^s factors with at least one unit diverges.
  BigInt total = 0;
  for (const auto& [t, c] : x.terms) {
    bool vanishes = false, has_unit = false;
    for (const auto& mono : t) {
      if (mono.is_unit())
        has_unit = true;
      else if (osc_trace(mono) == 0)
        vanishes = true;
    }
    if (vanishes) continue;
    if (has_unit) throw ConsistencyError("ctm_trace: a copy keeps the unit, the trace diverges");
    total += c;
  }
  return total;
}

namespace {

std::vector<CtmOperator> all_X(int n) {
  std::vector<CtmOperator> xs;
  for (int i = 0; i <= n; ++i) xs.push_back(build_X(i, n));
  return xs;
}

BigInt trace_with(const std::vector<CtmOperator>& xs, const Config& sigma) {
  if (sigma.size() == 0) throw InvalidInput("empty configuration");
  CtmOperator prod = xs.at(static_cast<std::size_t>(sigma[0]));
  for (std::size_t k = 1; k < sigma.size(); ++k) prod = prod * xs.at(static_cast<std::size_t>(sigma[k]));
  return ctm_trace(prod);
}

}  // namespace

BigInt prob_trace(const Config& sigma) {
  int n = sigma.species();
  if (n < 2) throw InvalidInput("prob_trace needs n >= 2");
  return trace_with(all_X(n), sigma);
}

BigInt prob_trace_fock(const Config& sigma, int cutoff) {
  const int n = sigma.species();
  if (n < 2) throw InvalidInput("prob_trace_fock needs n >= 2");
  auto xs = all_X(n);
  const std::size_t K = static_cast<std::size_t>(n * (n - 1) / 2);
  using State = std::vector<int>;
  using Vec = std::map<State, BigInt>;

  auto apply = [&](const CtmOperator& x, const Vec& v) {
    Vec out;
    for (const auto& [state, coeff] : v)
      for (const auto& [term, c] : x.terms) {
        State next(K);
        bool alive = true;
        for (std::size_t q = 0; q < K && alive; ++q) {
          auto m = fock_apply(term[q], state[q]);
          alive = m && *m <= cutoff;
          if (alive) next[q] = *m;
        }
        if (!alive) continue;
        auto& slot = out[next];
        slot += coeff * c;
      }
    return out;
  };

  BigInt total = 0;
  State start(K, 0);
  while (true) {
    Vec v{{start, BigInt(1)}};
    for (std::size_t k = sigma.size(); k-- > 0;) v = apply(xs[static_cast<std::size_t>(sigma[k])], v);
    auto it = v.find(start);
    if (it != v.end()) total += it->second;
    std::size_t q = 0;
    while (q < K && start[q] == cutoff) start[q++] = 0;
    if (q == K) break;
    ++start[q];
  }
  return total;
}

SteadyVector mpf_steady(const Multiplicity& m) {
  if (!m.is_basic()) throw NonBasicSector("mpf_steady: sector " + m.str() + " is not basic");
  const int n = m.species();
  if (n < 2) throw InvalidInput("mpf_steady needs n >= 2");
  auto xs = all_X(n);
  auto configs = enumerate_sector(m);
  std::vector<BigInt> values(configs.size());
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(configs.size())));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = w; c < configs.size(); c += workers) values[c] = trace_with(xs, configs[c]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  SteadyVector out;
  out.sector = m;
  for (std::size_t c = 0; c < configs.size(); ++c) out.weights.emplace(configs[c], values[c]);
  return out;
}

bool HatReport::ok() const {
  for (const auto& row : pass)
    for (bool p : row)
      if (!p) return false;
  return true;
}

namespace {

// lambda with d == lambda * base, if any (nullopt when none exists; 0 when both vanish)
std::optional<BigInt> multiple_of(const CtmOperator& d, const CtmOperator& base) {
  if (d.is_zero()) return BigInt(0);
  if (base.is_zero()) return std::nullopt;
  const auto& [t0, c0] = *base.terms.begin();
  auto it = d.terms.find(t0);
  if (it == d.terms.end() || it->second % c0 != 0) return std::nullopt;
  BigInt lambda = it->second / c0;
  CtmOperator diff = d;
  diff -= lambda * base;
  if (!diff.is_zero()) return std::nullopt;
  return lambda;
}

}  // namespace

HatReport hat_check(int n) {
  HatReport report;
  report.n = n;
  std::vector<CtmOperator> x, xh;
  for (int i = 0; i <= n; ++i) {
    x.push_back(build_X(i, n));
    xh.push_back(build_Xhat(i, n));
  }
  const std::size_t N = static_cast<std::size_t>(n) + 1;
  report.pass.assign(N, std::vector<bool>(N, false));
  std::vector<std::vector<CtmOperator>> defect(N, std::vector<CtmOperator>(N));
  std::vector<std::vector<CtmOperator>> xx(N, std::vector<CtmOperator>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      CtmOperator lhs = x[a] * xh[b];
      lhs -= xh[a] * x[b];
      xx[a][b] = x[a] * x[b];
      CtmOperator rhs;
      rhs.n = n;
      if (b > a) rhs += x[b] * x[a];
      if (a > b) rhs -= xx[a][b];
      report.pass[a][b] = lhs == rhs;
      defect[a][b] = lhs;
      defect[a][b] -= rhs;
    }
  if (report.ok()) return report;

  // X^_i -> X^_i + c_i X_i adds (c_b - c_a) X_a X_b to the left side, so we
  // need (c_a - c_b) X_a X_b == defect[a][b] for every pair, with c_0 = 0.
  std::vector<BigInt> c(N, 0);
  for (std::size_t a = 1; a < N; ++a) {
    auto lambda = multiple_of(defect[a][0], xx[a][0]);
    if (!lambda) return report;
    c[a] = *lambda;
  }
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      CtmOperator shifted = defect[a][b];
      shifted -= (c[a] - c[b]) * xx[a][b];
      if (!shifted.is_zero()) return report;
    }
  report.shift_repair = c;
  return report;
}

}  // namespace mtasep
