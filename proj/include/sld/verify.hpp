#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sld/code.hpp"

namespace sld {

/// LD: plain disjunctive sums and covering. SLD: symmetric sums and
/// symmetric covering.
enum class Mode { LD, SLD };

struct VerifyQuery {
  int s;       // strength, >= 2
  int list_l;  // list size, >= 1
  Mode mode;
};

/// Certificate of failure: the sum over set_s (symmetrically) covers every
/// column in covered, and |covered| >= L.
struct Witness {
  std::vector<int> set_s;    // sorted ascending, |set_s| = s
  std::vector<int> covered;  // disjoint from set_s
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// C(t, s). Throws std::invalid_argument if the value exceeds 2^62
/// (instance too large to enumerate).
std::uint64_t subset_count(int t, int s);

/// Colex enumeration of s-subsets of [t]: subsets ordered by
/// rank(S) = sum_i C(S_i, i+1). colex_next advances in place and returns
/// false after the last subset; colex_unrank writes the subset of a rank.
bool colex_next(std::vector<int>& idx, int t);
void colex_unrank(std::uint64_t rank, int s, std::vector<int>& out);

TernaryWord sym_sum_over_set(const Code& code, std::span<const int> set);
BinaryWord disj_sum_over_set(const Code& code, std::span<const int> set);

/// All columns outside `set` that the (mode-dependent) sum over `set`
/// covers. Sorted ascending.
std::vector<int> covered_others(const Code& code, std::span<const int> set, Mode mode);

/// Empty result: the code is an (S)LD s_L-code, i.e. every s-subset sum
/// covers at most L-1 other columns. Otherwise the witness with the
/// colex-smallest violating subset. Subsets are scanned in fixed-size
/// chunks across OpenMP threads; the reported witness does not depend on
/// the thread count. Throws std::invalid_argument when s >= t.
std::optional<Witness> verify(const Code& code, const VerifyQuery& query);

/// Single-threaded reference scan, same contract as verify().
std::optional<Witness> verify_serial(const Code& code, const VerifyQuery& query);

struct SearchResult {
  int length, s, list_l;
  Mode mode;
  int best_t;
  Code example;          // a code of size best_t with the property
  std::uint64_t nodes;   // DFS nodes visited
};

/// Exact maximal code size at a given length by depth-first search over
/// strictly increasing column values (as integers), with incremental
/// verification pruning. Codes of size <= s hold the property vacuously.
/// Throws BudgetExceeded once more than `budget` nodes are expanded.
SearchResult max_size_search(int length, int s, int list_l, Mode mode,
                             std::uint64_t budget = 50'000'000);

}  // namespace sld
