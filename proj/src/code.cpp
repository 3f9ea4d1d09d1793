#include "sld/code.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sld/rng.hpp"

namespace sld {

Code::Code(int length, std::vector<BinaryWord> columns)
    : n_(length), t_(static_cast<int>(columns.size())), cols_(std::move(columns)) {
  if (n_ < 1) throw std::invalid_argument("code length must be >= 1");
  if (t_ < 1) throw std::invalid_argument("code must have at least one column");
  for (const auto& c : cols_)
    if (c.length() != n_) throw std::invalid_argument("code column length mismatch");
  rows_.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    BinaryWord r(t_);
    for (int j = 0; j < t_; ++j)
      if (cols_[j].bit(i)) r.set_bit(j, true);
    rows_.push_back(std::move(r));
  }
}

double Code::rate() const { return std::log2(static_cast<double>(t_)) / n_; }

std::optional<ConstantWeightTag> Code::constant_weight() const {
  const int w = cols_[0].weight();
  if (w < 1 || w > n_ - 1) return std::nullopt;
  for (const auto& c : cols_)
    if (c.weight() != w) return std::nullopt;
  return ConstantWeightTag{w};
}

Code load_code(std::istream& in) {
  int n = 0, t = 0;
  if (!(in >> n >> t)) throw std::invalid_argument("code file: missing 'N t' header");
  if (n < 1 || t < 1) throw std::invalid_argument("code file: N and t must be >= 1");
  std::vector<BinaryWord> cols(t, BinaryWord(n));
  std::string line;
  for (int i = 0; i < n; ++i) {
    if (!(in >> line)) throw std::invalid_argument("code file: missing row " + std::to_string(i + 1));
    if (static_cast<int>(line.size()) != t)
      throw std::invalid_argument("code file: row length != t at row " + std::to_string(i + 1));
    for (int j = 0; j < t; ++j) {
      if (line[j] == '1')
        cols[j].set_bit(i, true);
      else if (line[j] != '0')
        throw std::invalid_argument("code file: illegal character at row " + std::to_string(i + 1));
    }
  }
  return Code(n, std::move(cols));
}

Code load_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open code file: " + path);
  return load_code(f);
}

void save_code(std::ostream& out, const Code& code) {
  out << code.length() << ' ' << code.size() << '\n';
  for (int i = 0; i < code.length(); ++i) out << code.row(i).to_string() << '\n';
}

std::string code_to_string(const Code& code) {
  std::ostringstream os;
  save_code(os, code);
  return os.str();
}

Code negate_stack(const Code& code) {
  const int n = code.length();
  std::vector<BinaryWord> cols;
  cols.reserve(code.size());
  for (int j = 0; j < code.size(); ++j) {
    BinaryWord c(2 * n);
    for (int i = 0; i < n; ++i) {
      const bool b = code.column(j).bit(i);
      c.set_bit(i, b);
      c.set_bit(n + i, !b);
    }
    cols.push_back(std::move(c));
  }
  return Code(2 * n, std::move(cols));
}

Code puncture(const Code& code, int j0) {
  if (j0 < 0 || j0 >= code.size()) throw std::invalid_argument("puncture: column index out of range");
  if (code.size() < 2) throw std::invalid_argument("puncture: code needs at least two columns");
  const BinaryWord& dropped = code.column(j0);
  const int n_out = code.length() - dropped.weight();
  if (n_out < 1) throw std::invalid_argument("puncture: dropped column has full weight, no rows left");

  std::vector<int> keep_rows;
  keep_rows.reserve(n_out);
  for (int i = 0; i < code.length(); ++i)
    if (!dropped.bit(i)) keep_rows.push_back(i);

  std::vector<BinaryWord> cols;
  cols.reserve(code.size() - 1);
  for (int j = 0; j < code.size(); ++j) {
    if (j == j0) continue;
    BinaryWord c(n_out);
    for (int k = 0; k < n_out; ++k) c.set_bit(k, code.column(j).bit(keep_rows[k]));
    cols.push_back(std::move(c));
  }
  return Code(n_out, std::move(cols));
}

Code sample_constant_weight_code(int length, int size, double q, std::uint64_t seed) {
  if (length < 1 || size < 1) throw std::invalid_argument("sample: N and t must be >= 1");
  if (!(q > 0.0 && q <= 0.5)) throw std::invalid_argument("sample: Q must be in (0, 1/2]");
  const int w = static_cast<int>(std::floor(q * length));
  if (w < 1) throw std::invalid_argument("sample: floor(QN) must be >= 1");
  if (w >= length) throw std::invalid_argument("sample: floor(QN) must be < N");

  std::vector<BinaryWord> cols;
  cols.reserve(size);
  std::vector<int> idx(length);
  for (int j = 0; j < size; ++j) {
    SplitMix64 g(stream_seed(seed, static_cast<std::uint64_t>(j)));
    std::iota(idx.begin(), idx.end(), 0);
    BinaryWord c(length);
    // partial Fisher-Yates: the first w slots are a uniform w-subset
    for (int k = 0; k < w; ++k) {
      const int r = k + static_cast<int>(g.below(static_cast<std::uint64_t>(length - k)));
      std::swap(idx[k], idx[r]);
      c.set_bit(idx[k], true);
    }
    cols.push_back(std::move(c));
  }
  return Code(length, std::move(cols));
}

}  // namespace sld
