#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sld {

/// Ternary symbol: 0, 1 or * (erasure).
enum class Trit : std::uint8_t { Zero = 0, One = 1, Star = 2 };

/// Symbol-level symmetric disjunctive sum: 0 if both inputs are 0,
/// 1 if both are 1, * otherwise. * is absorbing.
constexpr Trit sym_sum(Trit a, Trit b) { return a == b ? a : Trit::Star; }

char to_char(Trit t);

/// Binary column of fixed length N >= 1, bits packed into 64-bit limbs,
/// weight (number of ones) cached.
class BinaryWord {
 public:
  explicit BinaryWord(int length);
  static BinaryWord from_string(std::string_view bits);  // '0'/'1' characters

  int length() const { return n_; }
  int weight() const { return weight_; }
  bool bit(int i) const;
  void set_bit(int i, bool value);

  /// Bitwise complement within the word length.
  BinaryWord negated() const;

  const std::vector<std::uint64_t>& limbs() const { return ones_; }
  std::string to_string() const;

  bool operator==(const BinaryWord& o) const { return n_ == o.n_ && ones_ == o.ones_; }

 private:
  int n_;
  int weight_ = 0;
  std::vector<std::uint64_t> ones_;
  friend BinaryWord disjunctive_sum(const BinaryWord&, const BinaryWord&);
};

/// Ternary column over {0,1,*}. Stored as two parallel bitmasks (positions
/// holding 0, positions holding 1); a position in neither mask holds *.
/// With this encoding the symmetric sum is two ANDs per limb.
class TernaryWord {
 public:
  explicit TernaryWord(const BinaryWord& b);     // Star-free embedding
  static TernaryWord all_star(int length);
  static TernaryWord from_string(std::string_view s);  // '0'/'1'/'*'

  int length() const { return n_; }
  Trit trit(int i) const;
  void set_trit(int i, Trit t);
  bool star_free() const;

  const std::vector<std::uint64_t>& zero_limbs() const { return zeros_; }
  const std::vector<std::uint64_t>& one_limbs() const { return ones_; }
  std::string to_string() const;

  bool operator==(const TernaryWord& o) const {
    return n_ == o.n_ && zeros_ == o.zeros_ && ones_ == o.ones_;
  }

 private:
  TernaryWord(int length, std::vector<std::uint64_t> zeros, std::vector<std::uint64_t> ones);
  int n_;
  std::vector<std::uint64_t> zeros_, ones_;
  friend TernaryWord symmetric_sum(const TernaryWord&, const TernaryWord&);
};

/// Componentwise OR. Throws std::invalid_argument on length mismatch.
BinaryWord disjunctive_sum(const BinaryWord& u, const BinaryWord& v);

/// u covers v  iff  u | v == u, i.e. v <= u componentwise.
bool covers(const BinaryWord& u, const BinaryWord& v);

/// Componentwise symmetric disjunctive sum.
TernaryWord symmetric_sum(const TernaryWord& x, const TernaryWord& y);

/// u symmetrically covers v  iff  u sym_sum v == u, i.e. at every position
/// u is * or u equals v.
bool sym_covers(const TernaryWord& u, const TernaryWord& v);
bool sym_covers(const TernaryWord& u, const BinaryWord& v);

}  // namespace sld
