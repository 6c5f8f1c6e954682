#pragma once

// Crystal words B^l, TASEP configurations and the bijection phi between
// configurations of a basic sector and increasing chains of words.
//
// Sites are 0-based in every API; textual output uses the bare digit string
// for a Word ("1000100") and comma-separated digits for a Config ("3,0,1").

#include "mtasep/bigint.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mtasep {

/// A {0,1}-sequence of length L; an element of B^weight().
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> bits);

  static Word parse(std::string_view text);
  /// e_1 + ... + e_l, the highest element of B^l.
  static Word leading_ones(std::size_t length, std::size_t l);

  std::size_t size() const noexcept { return bits_.size(); }
  int weight() const noexcept { return weight_; }
  std::uint8_t operator[](std::size_t site) const { return bits_[site]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  std::string str() const;

  friend bool operator==(const Word& x, const Word& y) { return x.bits_ == y.bits_; }
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    return x.bits_ <=> y.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  int weight_ = 0;
};

/// x <= y componentwise (y - x has nonnegative entries).
bool dominated_by(const Word& x, const Word& y);

/// A TASEP configuration over {0,...,n} on a periodic chain.
class Config {
 public:
  Config() = default;
  Config(std::vector<std::uint8_t> entries, int n);

  /// Parses "3,0,1,2"; n defaults to the largest entry.
  static Config parse(std::string_view text, int n = -1);

  std::size_t size() const noexcept { return entries_.size(); }
  int species() const noexcept { return n_; }
  int operator[](std::size_t site) const { return entries_[site]; }
  const std::vector<std::uint8_t>& entries() const noexcept { return entries_; }

  std::string str() const;
  /// "0312" when every entry is a single digit, otherwise str().
  std::string compact() const;
  /// Same configuration shifted cyclically so that site k moves to site k+shift.
  Config rotated(std::size_t shift) const;
  /// Copy with the entries at sites a and b replaced.
  Config with_pair(std::size_t a, int va, std::size_t b, int vb) const;

  friend bool operator==(const Config& x, const Config& y) { return x.entries_ == y.entries_; }
  friend std::strong_ordering operator<=>(const Config& x, const Config& y) {
    return x.entries_ <=> y.entries_;
  }

 private:
  std::vector<std::uint8_t> entries_;
  int n_ = 0;
};

/// Particle content (m_0, ..., m_n) of a sector.
class Multiplicity {
 public:
  Multiplicity() = default;
  explicit Multiplicity(std::vector<int> counts);

  static Multiplicity parse(std::string_view text);
  static Multiplicity of(const Config& sigma);

  int species() const noexcept { return static_cast<int>(counts_.size()) - 1; }
  int chain_length() const noexcept { return length_; }
  int operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<int>& counts() const noexcept { return counts_; }
  bool is_basic() const noexcept;

  std::string str() const;
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  std::vector<int> counts_;
  int length_ = 0;
};

/// Row weights l_1 < ... < l_n of the multiline process on L sites.
struct Levels {
  std::vector<int> l;
  int chain_length = 0;

  friend bool operator==(const Levels&, const Levels&) = default;
};

/// l_i = m_{n-i+1} + ... + m_n. Throws NonBasicSector unless every m_i >= 1.
Levels levels_from_multiplicity(const Multiplicity& m);
Multiplicity multiplicity_from_levels(const Levels& levels);

/// (phi_1(sigma), ..., phi_n(sigma)), phi_j(sigma)_k = [sigma_k >= n + 1 - j].
std::vector<Word> phi(const Config& sigma);
/// Componentwise sum of a weakly increasing chain with strictly increasing weights.
Config phi_inv(std::span<const Word> chain);

BigInt binomial(int n, int k);
BigInt multinomial(const Multiplicity& m);

// Enumerations run in ascending lexicographic order of the sequences, site 1
// most significant: B^1 on 3 sites is 001, 010, 100.
void for_each_word(int l, int length, const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_B(int l, int length);
void for_each_config(const Multiplicity& m, const std::function<void(const Config&)>& visit);
std::vector<Config> enumerate_sector(const Multiplicity& m);

/// Every basic sector with n species on L sites (compositions of L into n+1 positive parts).
std::vector<Multiplicity> basic_sectors(int n, int length);

}  // namespace mtasep
