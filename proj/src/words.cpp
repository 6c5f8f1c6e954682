#include "mtasep/words.hpp"

#include "mtasep/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mtasep {

Word::Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw InvalidInput("word entries must be 0 or 1");
    weight_ += b;
  }
}

Word Word::parse(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty word");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidInput("word '" + std::string(text) + "' is not a 0/1 string");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(bits));
}

Word Word::leading_ones(std::size_t length, std::size_t l) {
  if (l > length) throw InvalidInput("weight exceeds word length");
  std::vector<std::uint8_t> bits(length, 0);
  std::fill_n(bits.begin(), l, 1);
  return Word(std::move(bits));
}

std::string Word::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t k = 0; k < bits_.size(); ++k) s[k] = static_cast<char>('0' + bits_[k]);
  return s;
}

bool dominated_by(const Word& x, const Word& y) {
  if (x.size() != y.size()) throw InvalidInput("word length mismatch");
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] > y[k]) return false;
  return true;
}

Config::Config(std::vector<std::uint8_t> entries, int n) : entries_(std::move(entries)), n_(n) {
  if (n < 0) throw InvalidInput("species count must be nonnegative");
  for (auto e : entries_)
    if (e > n) throw InvalidInput("configuration entry exceeds species count");
}

Config Config::parse(std::string_view text, int n) {
  std::vector<std::uint8_t> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(pos, comma - pos);
    if (field.empty() || field.size() > 3 ||
        !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InvalidInput("bad configuration '" + std::string(text) + "'");
    int v = std::stoi(std::string(field));
    if (v > 255) throw InvalidInput("configuration entry too large");
    entries.push_back(static_cast<std::uint8_t>(v));
    pos = comma + 1;
  }
  if (n < 0) n = entries.empty() ? 0 : *std::max_element(entries.begin(), entries.end());
  return Config(std::move(entries), n);
}

std::string Config::compact() const {
  if (n_ > 9) return str();
  std::string s(entries_.size(), '0');
  for (std::size_t k = 0; k < entries_.size(); ++k) s[k] = static_cast<char>('0' + entries_[k]);
  return s;
}

std::string Config::str() const {
  std::string s;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(entries_[k]);
  }
  return s;
}

Config Config::rotated(std::size_t shift) const {
  const std::size_t L = entries_.size();
  std::vector<std::uint8_t> out(L);
  for (std::size_t k = 0; k < L; ++k) out[(k + shift) % L] = entries_[k];
  return Config(std::move(out), n_);
}

Config Config::with_pair(std::size_t a, int va, std::size_t b, int vb) const {
  auto out = entries_;
  out[a] = static_cast<std::uint8_t>(va);
  out[b] = static_cast<std::uint8_t>(vb);
  return Config(std::move(out), n_);
}

Multiplicity::Multiplicity(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.size() < 2) throw InvalidInput("multiplicity needs at least two species counts");
  for (int c : counts_) {
    if (c < 0) throw InvalidInput("multiplicity entries must be nonnegative");
    length_ += c;
  }
}

Multiplicity Multiplicity::parse(std::string_view text) {
  std::vector<int> counts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(pos, comma - pos);
    if (field.empty() || field.size() > 6 ||
        !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InvalidInput("bad multiplicity '" + std::string(text) + "'");
    counts.push_back(std::stoi(std::string(field)));
    pos = comma + 1;
  }
  return Multiplicity(std::move(counts));
}

Multiplicity Multiplicity::of(const Config& sigma) {
  std::vector<int> counts(static_cast<std::size_t>(sigma.species()) + 1, 0);
  for (auto e : sigma.entries()) ++counts[e];
  return Multiplicity(std::move(counts));
}

bool Multiplicity::is_basic() const noexcept {
  return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c >= 1; });
}

std::string Multiplicity::str() const {
  std::string s;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(counts_[i]);
  }
  return s;
}

Levels levels_from_multiplicity(const Multiplicity& m) {
  if (!m.is_basic()) throw NonBasicSector("non-basic sector (" + m.str() + "): every m_i must be >= 1");
  const int n = m.species();
  Levels out;
  out.chain_length = m.chain_length();
  int acc = 0;
  for (int i = 1; i <= n; ++i) {
    acc += m[static_cast<std::size_t>(n - i + 1)];
    out.l.push_back(acc);
  }
  return out;
}

Multiplicity multiplicity_from_levels(const Levels& levels) {
  const int n = static_cast<int>(levels.l.size());
  if (n == 0) throw InvalidInput("empty levels");
  std::vector<int> counts(static_cast<std::size_t>(n) + 1);
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    int li = levels.l[static_cast<std::size_t>(i - 1)];
    if (li <= prev || li >= levels.chain_length)
      throw InvalidInput("levels must satisfy 0 < l_1 < ... < l_n < L");
    counts[static_cast<std::size_t>(n - i + 1)] = li - prev;
    prev = li;
  }
  counts[0] = levels.chain_length - prev;
  return Multiplicity(std::move(counts));
}

std::vector<Word> phi(const Config& sigma) {
  const int n = sigma.species();
  auto m = Multiplicity::of(sigma);
  if (!m.is_basic()) throw NonBasicSector("non-basic sector (" + m.str() + ")");
  std::vector<Word> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    std::vector<std::uint8_t> bits(sigma.size());
    for (std::size_t k = 0; k < sigma.size(); ++k) bits[k] = sigma[k] >= n + 1 - j ? 1 : 0;
    rows.emplace_back(std::move(bits));
  }
  return rows;
}

Config phi_inv(std::span<const Word> chain) {
  if (chain.empty()) throw InvalidInput("empty chain");
  const std::size_t L = chain.front().size();
  std::vector<std::uint8_t> sum(L, 0);
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (chain[j].size() != L) throw InvalidInput("word length mismatch");
    if (j > 0) {
      if (chain[j].weight() <= chain[j - 1].weight())
        throw InvalidInput("chain weights must be strictly increasing");
      if (!dominated_by(chain[j - 1], chain[j])) throw InvalidInput("chain is not in B_+ (not weakly increasing)");
    }
    for (std::size_t k = 0; k < L; ++k) sum[k] = static_cast<std::uint8_t>(sum[k] + chain[j][k]);
  }
  return Config(std::move(sum), static_cast<int>(chain.size()));
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt multinomial(const Multiplicity& m) {
  BigInt r = 1;
  int acc = 0;
  for (int c : m.counts()) {
    acc += c;
    r *= binomial(acc, c);
  }
  return r;
}

void for_each_word(int l, int length, const std::function<void(const Word&)>& visit) {
  if (length < 0 || l < 0 || l > length) return;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length), 0);
  std::fill(bits.end() - l, bits.end(), 1);
  do {
    visit(Word(bits));
  } while (std::next_permutation(bits.begin(), bits.end()));
}

std::vector<Word> enumerate_B(int l, int length) {
  std::vector<Word> out;
  for_each_word(l, length, [&](const Word& w) { out.push_back(w); });
  return out;
}

void for_each_config(const Multiplicity& m, const std::function<void(const Config&)>& visit) {
  std::vector<std::uint8_t> entries;
  for (int i = 0; i <= m.species(); ++i) entries.insert(entries.end(), static_cast<std::size_t>(m[i]), static_cast<std::uint8_t>(i));
  do {
    visit(Config(entries, m.species()));
  } while (std::next_permutation(entries.begin(), entries.end()));
}

std::vector<Config> enumerate_sector(const Multiplicity& m) {
  std::vector<Config> out;
  for_each_config(m, [&](const Config& c) { out.push_back(c); });
  return out;
}

std::vector<Multiplicity> basic_sectors(int n, int length) {
  std::vector<Multiplicity> out;
  if (n < 1 || length < n + 1) return out;
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 1);
  const int extra = length - (n + 1);
  // distribute `extra` surplus particles over n+1 slots
  std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int left) {
    if (slot == counts.size() - 1) {
      counts[slot] = 1 + left;
      out.emplace_back(counts);
      return;
    }
    for (int take = left; take >= 0; --take) {
      counts[slot] = 1 + take;
      rec(slot + 1, left - take);
    }
  };
  rec(0, extra);
  std::sort(out.begin(), out.end(), [](const Multiplicity& a, const Multiplicity& b) { return a.counts() < b.counts(); });
  return out;
}

}  // namespace mtasep
