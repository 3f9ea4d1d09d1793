#include "sld/words.hpp"

#include <bit>
#include <stdexcept>

namespace sld {

namespace {

int limb_count(int n) { return (n + 63) / 64; }

std::uint64_t tail_mask(int n) {
  const int r = n % 64;
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

void check_length(int n) {
  if (n < 1) throw std::invalid_argument("word length must be >= 1");
}

void check_same_length(int a, int b) {
  if (a != b) throw std::invalid_argument("word length mismatch");
}

}  // namespace

char to_char(Trit t) {
  switch (t) {
    case Trit::Zero: return '0';
    case Trit::One: return '1';
    default: return '*';
  }
}

BinaryWord::BinaryWord(int length) : n_(length) {
  check_length(length);
  ones_.assign(limb_count(length), 0);
}

BinaryWord BinaryWord::from_string(std::string_view bits) {
  BinaryWord w(static_cast<int>(bits.size()));
  for (int i = 0; i < w.n_; ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') throw std::invalid_argument("binary word: illegal character");
    if (c == '1') w.set_bit(i, true);
  }
  return w;
}

bool BinaryWord::bit(int i) const { return (ones_[i / 64] >> (i % 64)) & 1; }

void BinaryWord::set_bit(int i, bool value) {
  const std::uint64_t m = std::uint64_t{1} << (i % 64);
  std::uint64_t& limb = ones_[i / 64];
  if (value && !(limb & m)) {
    limb |= m;
    ++weight_;
  } else if (!value && (limb & m)) {
    limb &= ~m;
    --weight_;
  }
}

BinaryWord BinaryWord::negated() const {
  BinaryWord w(n_);
  for (size_t k = 0; k < ones_.size(); ++k) w.ones_[k] = ~ones_[k];
  w.ones_.back() &= tail_mask(n_);
  w.weight_ = n_ - weight_;
  return w;
}

std::string BinaryWord::to_string() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

TernaryWord::TernaryWord(int length, std::vector<std::uint64_t> zeros,
                         std::vector<std::uint64_t> ones)
    : n_(length), zeros_(std::move(zeros)), ones_(std::move(ones)) {}

TernaryWord::TernaryWord(const BinaryWord& b) : n_(b.length()), ones_(b.limbs()) {
  zeros_.resize(ones_.size());
  for (size_t k = 0; k < ones_.size(); ++k) zeros_[k] = ~ones_[k];
  zeros_.back() &= tail_mask(n_);
}

TernaryWord TernaryWord::all_star(int length) {
  check_length(length);
  return TernaryWord(length, std::vector<std::uint64_t>(limb_count(length), 0),
                     std::vector<std::uint64_t>(limb_count(length), 0));
}

TernaryWord TernaryWord::from_string(std::string_view s) {
  TernaryWord w = all_star(static_cast<int>(s.size()));
  for (int i = 0; i < w.n_; ++i) {
    switch (s[i]) {
      case '0': w.set_trit(i, Trit::Zero); break;
      case '1': w.set_trit(i, Trit::One); break;
      case '*': break;
      default: throw std::invalid_argument("ternary word: illegal character");
    }
  }
  return w;
}

Trit TernaryWord::trit(int i) const {
  const std::uint64_t m = std::uint64_t{1} << (i % 64);
  if (zeros_[i / 64] & m) return Trit::Zero;
  if (ones_[i / 64] & m) return Trit::One;
  return Trit::Star;
}

void TernaryWord::set_trit(int i, Trit t) {
  const std::uint64_t m = std::uint64_t{1} << (i % 64);
  zeros_[i / 64] &= ~m;
  ones_[i / 64] &= ~m;
  if (t == Trit::Zero) zeros_[i / 64] |= m;
  if (t == Trit::One) ones_[i / 64] |= m;
}

bool TernaryWord::star_free() const {
  for (size_t k = 0; k < ones_.size(); ++k) {
    std::uint64_t known = zeros_[k] | ones_[k];
    if (k + 1 == ones_.size()) known |= ~tail_mask(n_);
    if (~known) return false;
  }
  return true;
}

std::string TernaryWord::to_string() const {
  std::string s(n_, '*');
  for (int i = 0; i < n_; ++i) s[i] = to_char(trit(i));
  return s;
}

BinaryWord disjunctive_sum(const BinaryWord& u, const BinaryWord& v) {
  check_same_length(u.length(), v.length());
  BinaryWord out(u.length());
  int weight = 0;
  for (size_t k = 0; k < out.ones_.size(); ++k) {
    out.ones_[k] = u.limbs()[k] | v.limbs()[k];
    weight += std::popcount(out.ones_[k]);
  }
  out.weight_ = weight;
  return out;
}

bool covers(const BinaryWord& u, const BinaryWord& v) {
  check_same_length(u.length(), v.length());
  for (size_t k = 0; k < u.limbs().size(); ++k)
    if (v.limbs()[k] & ~u.limbs()[k]) return false;
  return true;
}

TernaryWord symmetric_sum(const TernaryWord& x, const TernaryWord& y) {
  check_same_length(x.length(), y.length());
  std::vector<std::uint64_t> zeros(x.zeros_), ones(x.ones_);
  for (size_t k = 0; k < zeros.size(); ++k) {
    zeros[k] &= y.zeros_[k];
    ones[k] &= y.ones_[k];
  }
  return TernaryWord(x.length(), std::move(zeros), std::move(ones));
}

bool sym_covers(const TernaryWord& u, const TernaryWord& v) {
  check_same_length(u.length(), v.length());
  // u sym_sum v == u  iff  u's zero positions are zero in v and
  // u's one positions are one in v.
  for (size_t k = 0; k < u.zero_limbs().size(); ++k) {
    if (u.zero_limbs()[k] & ~v.zero_limbs()[k]) return false;
    if (u.one_limbs()[k] & ~v.one_limbs()[k]) return false;
  }
  return true;
}

bool sym_covers(const TernaryWord& u, const BinaryWord& v) {
  check_same_length(u.length(), v.length());
  for (size_t k = 0; k < u.zero_limbs().size(); ++k) {
    if (u.zero_limbs()[k] & v.limbs()[k]) return false;   // u=0 where v=1
    if (u.one_limbs()[k] & ~v.limbs()[k]) return false;   // u=1 where v=0
  }
  return true;
}

}  // namespace sld
