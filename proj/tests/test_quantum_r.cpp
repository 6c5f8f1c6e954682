#include "doctest.h"

#include "mtasep/combi_r.hpp"
#include "mtasep/error.hpp"
#include "mtasep/quantum_r.hpp"

using namespace mtasep;

namespace {

// Terms are (z exponent, q exponent, coefficient).
ZQPoly P(std::initializer_list<std::tuple<int, int, int>> terms) {
  ZQPoly p;
  for (const auto& [z, q, c] : terms) p.add({z, q}, c);
  return p;
}

Word W(const char* s) { return Word::parse(s); }

struct Entry {
  const char *a, *b, *i, *j;
  ZQPoly value;
};

void check_table(int l, int m, const std::vector<Entry>& expected) {
  auto table = rmatrix_full(l, m, 3);
  CHECK(table.entries.size() == expected.size());
  for (const auto& e : expected) {
    auto key = RIndex{W(e.a), W(e.b), W(e.i), W(e.j)};
    auto it = table.entries.find(key);
    REQUIRE_MESSAGE(it != table.entries.end(), e.a, " ", e.b, " ", e.i, " ", e.j);
    CHECK_MESSAGE(it->second == e.value, e.a, " ", e.b, " ", e.i, " ", e.j, " got ", poly_str(it->second));
  }
}

}  // namespace

TEST_CASE("normalization factors") {
  CHECK(rho_bar(2, 1, 3) == P({{0, 0, 1}, {1, 3, 1}}));
  auto r = rho_factors(2, 1, 3);
  CHECK(r.q_shift == -1);
  // q^{-1}(1 + qz)(1 + q^3 z)
  CHECK(rho(2, 1, 3) == P({{0, -1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 3, 1}}));
  CHECK(rho_bar(1, 1, 4) == P({{0, 0, 1}, {1, 2, -1}}));
  CHECK(rho_bar_factors(2, 2, 3).exponents.size() == 1);
  CHECK(rho_bar_factors(2, 3, 6).exponents == std::vector<int>{5, 3});
}

TEST_CASE("R^{1,1}: the vector representation matrix") {
  for (int L = 2; L <= 4; ++L) {
    auto table = rmatrix_full(1, 1, L);
    CHECK(table.entries.size() == static_cast<std::size_t>(L + 2 * L * (L - 1)));
    for (int x = 0; x < L; ++x)
      for (int y = 0; y < L; ++y) {
        std::vector<std::uint8_t> ex(L, 0), ey(L, 0);
        ex[x] = 1;
        ey[y] = 1;
        Word ei(ex), ej(ey);
        if (x == y) {
          CHECK(table.entries.at({ei, ei, ei, ei}) == P({{0, 0, 1}, {1, 2, -1}}));
        } else {
          CHECK(table.entries.at({ei, ej, ei, ej}) == P({{0, 1, 1}, {1, 1, -1}}));
          int th = x < y ? 1 : 0;
          CHECK(table.entries.at({ej, ei, ei, ej}) == P({{th, 0, 1}, {th, 2, -1}}));
        }
      }
  }
}

TEST_CASE("R^{1,2} on three sites") {
  auto diag = P({{0, 0, 1}, {1, 3, 1}});
  auto mixed = P({{0, 1, 1}, {1, 2, 1}});
  check_table(1, 2,
              {{"100", "110", "100", "110", diag},
               {"010", "110", "010", "110", diag},
               {"100", "101", "100", "101", diag},
               {"001", "101", "001", "101", diag},
               {"010", "011", "010", "011", diag},
               {"001", "011", "001", "011", diag},
               {"001", "110", "001", "110", mixed},
               {"010", "101", "010", "101", mixed},
               {"100", "011", "100", "011", mixed},
               {"001", "110", "010", "101", P({{1, 1, -1}, {1, 3, 1}})},
               {"010", "101", "100", "011", P({{1, 1, -1}, {1, 3, 1}})},
               {"100", "011", "001", "110", P({{0, 1, -1}, {0, 3, 1}})},
               {"001", "110", "100", "011", P({{1, 0, 1}, {1, 2, -1}})},
               {"010", "101", "001", "110", P({{0, 0, 1}, {0, 2, -1}})},
               {"100", "011", "010", "101", P({{0, 0, 1}, {0, 2, -1}})}});
}

TEST_CASE("R^{2,1} on three sites") {
  auto diag = P({{0, 0, 1}, {1, 3, 1}});
  auto mixed = P({{0, 1, 1}, {1, 2, 1}});
  check_table(2, 1,
              {{"110", "100", "110", "100", diag},
               {"110", "010", "110", "010", diag},
               {"101", "100", "101", "100", diag},
               {"101", "001", "101", "001", diag},
               {"011", "010", "011", "010", diag},
               {"011", "001", "011", "001", diag},
               {"011", "100", "011", "100", mixed},
               {"101", "010", "101", "010", mixed},
               {"110", "001", "110", "001", mixed},
               {"011", "100", "101", "010", P({{1, 1, -1}, {1, 3, 1}})},
               {"101", "010", "110", "001", P({{1, 1, -1}, {1, 3, 1}})},
               {"110", "001", "011", "100", P({{0, 1, -1}, {0, 3, 1}})},
               {"011", "100", "110", "001", P({{1, 0, 1}, {1, 2, -1}})},
               {"101", "010", "011", "100", P({{0, 0, 1}, {0, 2, -1}})},
               {"110", "001", "101", "010", P({{0, 0, 1}, {0, 2, -1}})}});
}

TEST_CASE("highest weight normalization holds") {
  for (int L = 2; L <= 5; ++L)
    for (int l = 1; l < L; ++l)
      for (int m = 1; m < L; ++m) {
        auto el = Word::leading_ones(L, l), em = Word::leading_ones(L, m);
        CHECK(rmatrix_element(el, em, el, em) == rho_bar(l, m, L));
      }
}

TEST_CASE("q = 0, z = 1 reproduces the combinatorial R") {
  for (int L = 2; L <= 5; ++L)
    for (int l = 1; l < L; ++l)
      for (int m = 1; m < L; ++m) {
        if (L == 5 && l + m > 5) continue;
        auto comb = specialize_combinatorial(rmatrix_full(l, m, L));
        CHECK(BigInt(comb.size()) == binomial(L, l) * binomial(L, m));
        for (const auto& [in, img] : comb) CHECK(img == r_apply(in.first, in.second));
      }
}

TEST_CASE("spectral Yang-Baxter identity") {
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l)
      for (int m = 1; m <= 2; ++m) {
        auto rep = spectral_ybe_check(k, l, m, 3);
        CHECK_MESSAGE(rep.ok(), k, l, m, " ", rep.counterexample.value_or(""));
      }
}

TEST_CASE("polynomial text round trip") {
  auto p = P({{0, 0, 1}, {1, 3, 1}, {1, 1, -2}});
  CHECK(poly_str(p) == "1 - 2*q*z + q^3*z");
  CHECK(parse_poly(poly_str(p)) == p);
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("-q^-1 + 3*z^2") == P({{0, -1, -1}, {2, 0, 3}}));
}
