#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sld/words.hpp"

namespace sld {

/// Marks a code whose columns all have the same weight w, 1 <= w <= N-1.
struct ConstantWeightTag {
  int weight_w;
};

/// Binary N x t matrix with one codeword per column. Immutable after
/// construction. Columns are the unit of algebra; a packed row mirror is
/// kept as well since verification-style scans want fast row access.
class Code {
 public:
  Code(int length, std::vector<BinaryWord> columns);

  int length() const { return n_; }
  int size() const { return t_; }
  const BinaryWord& column(int j) const { return cols_[j]; }
  const std::vector<BinaryWord>& columns() const { return cols_; }
  /// Row i as a t-bit word.
  const BinaryWord& row(int i) const { return rows_[i]; }
  bool bit(int i, int j) const { return rows_[i].bit(j); }

  double rate() const;  // log2(t) / N

  /// Present iff every column has the same weight w with 1 <= w <= N-1.
  std::optional<ConstantWeightTag> constant_weight() const;

 private:
  int n_, t_;
  std::vector<BinaryWord> cols_;
  std::vector<BinaryWord> rows_;
};

/// Text format: header "N t", then N rows of t characters from {0,1}.
Code load_code(std::istream& in);
Code load_code_file(const std::string& path);
void save_code(std::ostream& out, const Code& code);
std::string code_to_string(const Code& code);

/// Stack a code on top of its bitwise negation: length doubles, every
/// output column has weight exactly N.
Code negate_stack(const Code& code);

/// Drop column j0 and every row where that column has a 1. Requires the
/// dropped column to have weight < N so at least one row survives.
Code puncture(const Code& code, int j0);

/// t columns drawn i.i.d. uniformly from all weight-floor(QN) words.
/// Column j is generated from substream j of the seed, so the result is
/// reproducible regardless of generation order.
Code sample_constant_weight_code(int length, int size, double q, std::uint64_t seed);

}  // namespace sld
