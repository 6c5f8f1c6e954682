#include "doctest.h"

#include "golden.hpp"
#include "mtasep/error.hpp"
#include "mtasep/multiline.hpp"

#include <cstdlib>

using namespace mtasep;

namespace {

MultilineState S(const char* text) { return MultilineState::parse(text); }

// (sigma_i, sigma_{i+1}) -> (min, max), cyclic
Config sort_pair(const Config& sigma, std::size_t i) {
  std::size_t j = (i + 1) % sigma.size();
  int x = sigma[i], y = sigma[j];
  return sigma.with_pair(i, std::min(x, y), j, std::max(x, y));
}

}  // namespace

TEST_CASE("pairwise exchange rule") {
  auto a = t_step(Word::parse("001011"), 2);
  CHECK(a.k == 2);
  CHECK(a.x.str() == "000111");
  auto b = t_step(Word::parse("001010"), 2);
  CHECK(b.k == 2);
  CHECK(b.x.str() == "000110");
  auto c = t_step(Word::parse("000010"), 2);
  CHECK(c.k == 1);
  CHECK(c.x.str() == "000010");
  // wrap: sites L and 1
  auto d = t_step(Word::parse("0001"), 3);
  CHECK(d.k == 3);
  CHECK(d.x.str() == "1000");
  auto e = t_step(Word::parse("1000"), 0);
  CHECK(e.k == 0);
  CHECK(e.x.str() == "0100");
}

TEST_CASE("worked example of the time evolutions and the projection") {
  auto gold = golden::load();
  for (const auto& ex : gold["multiline"]) {
    auto s = S(ex["state"].get<std::string>().c_str());
    CHECK(pi(s).str() == ex["pi"].get<std::string>());
    for (const auto& [site, expect] : ex["evolve"].items())
      CHECK(t_evolve(s, std::stoul(site) - 1).str() == expect.get<std::string>());
    for (const auto& [site, expect] : ex["pi_after"].items())
      CHECK(pi(t_evolve(s, std::stoul(site) - 1)).str() == expect.get<std::string>());
  }
  auto s = S("000010,001010,001011");
  auto chain = pi_chain(s);
  CHECK(chain[2] == s.rows[2]);
  CHECK(pi(S("0110")).str() == "0,1,1,0");
}

TEST_CASE("steady states of the worked example") {
  auto gold = golden::load();
  for (const auto& ex : gold["steady"]) {
    auto m = Multiplicity::parse(ex["mult"].get<std::string>());
    auto sv = fm_steady(m);
    CHECK(sv.weights.size() == ex["weights"].size());
    for (const auto& [cfg, w] : ex["weights"].items())
      CHECK_MESSAGE(sv.weight(Config::parse(cfg)) == w.get<long>(), ex["mult"], " ", cfg);
  }
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(fm_steady(Multiplicity({1, 1, 1, 1}), 95), BudgetExceeded);
  CHECK_NOTHROW(fm_steady(Multiplicity({1, 1, 1, 1}), 96));
  try {
    fm_steady(Multiplicity({2, 2, 2}), 10);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(std::string(e.what()).find("sector too large") != std::string::npos);
    CHECK(e.required() == 15 * 15);
  }
  CHECK_THROWS_AS(fm_steady(Multiplicity({1, 0, 2})), NonBasicSector);
}

TEST_CASE("projection properties on all small sectors") {
  for (int n = 1; n <= 3; ++n)
    for (int L = n + 1; L <= 6; ++L)
      for (const auto& m : basic_sectors(n, L)) {
        auto levels = levels_from_multiplicity(m);
        std::size_t count = 0;
        for_each_state(levels, [&](const MultilineState& s) {
          ++count;
          auto chain = pi_chain(s);
          for (std::size_t j = 0; j < chain.size(); ++j) CHECK(chain[j].weight() == levels.l[j]);
          for (std::size_t j = 1; j < chain.size(); ++j) CHECK(dominated_by(chain[j - 1], chain[j]));
          auto sigma = pi(s);
          CHECK(Multiplicity::of(sigma) == m);
          for (std::size_t k = 0; k < static_cast<std::size_t>(L); ++k) {
            // the commutative diagram pi T_k = tau_k pi
            CHECK(pi(t_evolve(s, k)) == sort_pair(sigma, k));
          }
        });
        CHECK(BigInt(count) == multiline_count(levels));

        auto sv = fm_steady(m);
        CHECK(sv.total() == multiline_count(levels));
        for (const auto& [sigma, w] : sv.weights) {
          CHECK(w > 0);
          CHECK(sv.weight(sigma.rotated(1)) == w);
        }
      }
}

TEST_CASE("single species: pi is the identity on the row") {
  auto sv = fm_steady(Multiplicity({2, 3}));
  for (const auto& [sigma, w] : sv.weights) CHECK(w == 1);
}

TEST_CASE("carrier dynamics is invertible") {
  for (int L = 3; L <= 5; ++L)
    for (const auto& m : basic_sectors(2, L)) {
      auto levels = levels_from_multiplicity(m);
      for (int r = 1; r < L; ++r) {
        auto carriers = enumerate_B(r, L);
        for_each_state(levels, [&](const MultilineState& s) {
          for (const auto& u : carriers) {
            auto [u2, s2] = carrier_evolve(s, u);
            CHECK(u2.weight() == r);
            auto [u3, s3] = carrier_unevolve(u2, s2);
            CHECK(u3 == u);
            CHECK(s3 == s);
          }
        });
      }
    }
  auto single = carrier_evolve(S("0101"), Word::parse("1000"));
  auto direct = r_apply(Word::parse("0101"), Word::parse("1000"));
  CHECK(single.first == direct.b);
  CHECK(single.second.rows[0] == direct.a);
}

TEST_CASE("carrier conjecture on small sectors") {
  auto a = conjecture_check(Multiplicity({1, 1, 1}), 1);
  CHECK(a.ok());
  for (const auto& e : a.examples) MESSAGE(e);
  CHECK(a.configs == 6);
  CHECK(a.carriers == 3);
  CHECK(conjecture_check(Multiplicity({2, 1, 1}), 2).ok());
  CHECK(conjecture_check(Multiplicity({2, 3}), 2).ok());
}
