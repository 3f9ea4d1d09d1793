#include "sld/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>

namespace sld {

namespace {

constexpr std::uint64_t kBinomCap = std::uint64_t{1} << 62;

std::uint64_t binom_capped(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const unsigned __int128 p = static_cast<unsigned __int128>(r) * (n - k + i);
    const unsigned __int128 q = p / i;  // exact: r is C(n-k+i-1, i-1) scaled
    if (q >= kBinomCap) return kBinomCap;
    r = static_cast<std::uint64_t>(q);
  }
  return r;
}

}  // namespace

std::uint64_t subset_count(int t, int s) {
  const std::uint64_t c = binom_capped(t, s);
  if (c >= kBinomCap) throw std::invalid_argument("subset_count: C(t,s) too large to enumerate");
  return c;
}

bool colex_next(std::vector<int>& idx, int t) {
  const int s = static_cast<int>(idx.size());
  for (int i = 0; i < s; ++i) {
    const int limit = (i + 1 < s) ? idx[i + 1] : t;
    if (idx[i] + 1 < limit) {
      ++idx[i];
      for (int k = 0; k < i; ++k) idx[k] = k;
      return true;
    }
  }
  return false;
}

void colex_unrank(std::uint64_t rank, int s, std::vector<int>& out) {
  out.resize(s);
  for (int i = s; i >= 1; --i) {
    int c = i - 1;
    while (binom_capped(c + 1, i) <= rank) ++c;
    out[i - 1] = c;
    rank -= binom_capped(c, i);
  }
}

TernaryWord sym_sum_over_set(const Code& code, std::span<const int> set) {
  if (set.empty()) throw std::invalid_argument("sum over empty set");
  TernaryWord acc(code.column(set[0]));
  for (size_t k = 1; k < set.size(); ++k)
    acc = symmetric_sum(acc, TernaryWord(code.column(set[k])));
  return acc;
}

BinaryWord disj_sum_over_set(const Code& code, std::span<const int> set) {
  if (set.empty()) throw std::invalid_argument("sum over empty set");
  BinaryWord acc = code.column(set[0]);
  for (size_t k = 1; k < set.size(); ++k) acc = disjunctive_sum(acc, code.column(set[k]));
  return acc;
}

std::vector<int> covered_others(const Code& code, std::span<const int> set, Mode mode) {
  std::vector<int> out;
  if (mode == Mode::SLD) {
    const TernaryWord y = sym_sum_over_set(code, set);
    for (int j = 0; j < code.size(); ++j) {
      if (std::find(set.begin(), set.end(), j) != set.end()) continue;
      if (sym_covers(y, code.column(j))) out.push_back(j);
    }
  } else {
    const BinaryWord u = disj_sum_over_set(code, set);
    for (int j = 0; j < code.size(); ++j) {
      if (std::find(set.begin(), set.end(), j) != set.end()) continue;
      if (covers(u, code.column(j))) out.push_back(j);
    }
  }
  return out;
}

namespace {

// Flat snapshot of a code's columns as limb arrays, for the subset scan.
struct PackedCode {
  int t, nlimbs;
  std::vector<std::uint64_t> ones;   // column-major, t * nlimbs
  std::vector<std::uint64_t> zeros;  // complement within length

  explicit PackedCode(const Code& code)
      : t(code.size()), nlimbs(static_cast<int>(code.column(0).limbs().size())) {
    ones.resize(static_cast<size_t>(t) * nlimbs);
    zeros.resize(ones.size());
    const int n = code.length();
    const std::uint64_t tail =
        (n % 64 == 0) ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;
    for (int j = 0; j < t; ++j) {
      for (int k = 0; k < nlimbs; ++k) {
        const std::uint64_t o = code.column(j).limbs()[k];
        ones[static_cast<size_t>(j) * nlimbs + k] = o;
        std::uint64_t z = ~o;
        if (k + 1 == nlimbs) z &= tail;
        zeros[static_cast<size_t>(j) * nlimbs + k] = z;
      }
    }
  }

  const std::uint64_t* col_ones(int j) const { return &ones[static_cast<size_t>(j) * nlimbs]; }
  const std::uint64_t* col_zeros(int j) const { return &zeros[static_cast<size_t>(j) * nlimbs]; }
};

// Checks one subset; on violation fills `covered` with every covered other
// column and returns true.
bool subset_violates(const PackedCode& pc, const std::vector<int>& set, Mode mode, int list_l,
                     std::vector<std::uint64_t>& accz, std::vector<std::uint64_t>& acco,
                     std::vector<int>& covered) {
  const int nl = pc.nlimbs;
  if (mode == Mode::SLD) {
    std::copy_n(pc.col_zeros(set[0]), nl, accz.begin());
    std::copy_n(pc.col_ones(set[0]), nl, acco.begin());
    for (size_t i = 1; i < set.size(); ++i) {
      const std::uint64_t* z = pc.col_zeros(set[i]);
      const std::uint64_t* o = pc.col_ones(set[i]);
      for (int k = 0; k < nl; ++k) {
        accz[k] &= z[k];
        acco[k] &= o[k];
      }
    }
  } else {
    std::fill_n(acco.begin(), nl, 0);
    for (size_t i = 0; i < set.size(); ++i) {
      const std::uint64_t* o = pc.col_ones(set[i]);
      for (int k = 0; k < nl; ++k) acco[k] |= o[k];
    }
  }

  covered.clear();
  int si = 0;
  for (int j = 0; j < pc.t; ++j) {
    if (si < static_cast<int>(set.size()) && set[si] == j) {
      ++si;
      continue;
    }
    bool cov = true;
    const std::uint64_t* o = pc.col_ones(j);
    if (mode == Mode::SLD) {
      for (int k = 0; k < nl; ++k) {
        if ((accz[k] & o[k]) | (acco[k] & ~o[k])) {
          cov = false;
          break;
        }
      }
    } else {
      for (int k = 0; k < nl; ++k) {
        if (o[k] & ~acco[k]) {
          cov = false;
          break;
        }
      }
    }
    if (cov) covered.push_back(j);
  }
  return static_cast<int>(covered.size()) >= list_l;
}

void check_query(const Code& code, const VerifyQuery& q) {
  if (q.s < 2) throw std::invalid_argument("verify: s must be >= 2");
  if (q.list_l < 1) throw std::invalid_argument("verify: L must be >= 1");
  if (q.s >= code.size()) throw std::invalid_argument("verify: s must be < t");
  if (q.mode != Mode::LD && q.mode != Mode::SLD) throw std::invalid_argument("verify: bad mode");
}

}  // namespace

std::optional<Witness> verify_serial(const Code& code, const VerifyQuery& query) {
  check_query(code, query);
  const PackedCode pc(code);
  std::vector<int> set(query.s);
  for (int i = 0; i < query.s; ++i) set[i] = i;
  std::vector<std::uint64_t> accz(pc.nlimbs), acco(pc.nlimbs);
  std::vector<int> covered;
  do {
    if (subset_violates(pc, set, query.mode, query.list_l, accz, acco, covered))
      return Witness{set, covered};
  } while (colex_next(set, code.size()));
  return std::nullopt;
}

std::optional<Witness> verify(const Code& code, const VerifyQuery& query) {
  check_query(code, query);
  const PackedCode pc(code);
  const std::uint64_t total = subset_count(code.size(), query.s);
  constexpr std::uint64_t kChunk = 2048;
  const std::uint64_t nchunks = (total + kChunk - 1) / kChunk;

  std::atomic<std::uint64_t> best_rank{total};
  Witness best;
  std::mutex best_mutex;

#pragma omp parallel
  {
    std::vector<int> set;
    std::vector<std::uint64_t> accz(pc.nlimbs), acco(pc.nlimbs);
    std::vector<int> covered;
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
      const std::uint64_t start = static_cast<std::uint64_t>(c) * kChunk;
      if (start >= best_rank.load(std::memory_order_relaxed)) continue;
      const std::uint64_t stop = std::min(start + kChunk, total);
      colex_unrank(start, query.s, set);
      for (std::uint64_t r = start; r < stop; ++r) {
        if (r >= best_rank.load(std::memory_order_relaxed)) break;
        if (subset_violates(pc, set, query.mode, query.list_l, accz, acco, covered)) {
          std::lock_guard<std::mutex> lock(best_mutex);
          if (r < best_rank.load(std::memory_order_relaxed)) {
            best_rank.store(r, std::memory_order_relaxed);
            best = Witness{set, covered};
          }
          break;  // later ranks in this chunk cannot beat r
        }
        colex_next(set, code.size());
      }
    }
  }

  if (best_rank.load() < total) return best;
  return std::nullopt;
}

namespace {

// Incremental DFS state for max_size_search. Columns are uint64 masks over
// N <= 30 bits, kept strictly increasing. For every s-subset of the current
// columns (colex-ranked) we cache its sum and the count of covered others.
struct SearchState {
  int n, s, list_l;
  Mode mode;
  std::uint64_t full;  // low-N-bits mask

  std::vector<std::uint64_t> cols;
  std::vector<std::uint64_t> sum_z, sum_o;  // per subset rank (sum_z unused for LD)
  std::vector<int> cnt;                     // covered-others count per subset

  struct UndoFrame {
    size_t old_subsets;
    std::vector<std::uint32_t> bumped;  // ranks whose cnt was incremented
  };

  bool covered_by(std::uint64_t z, std::uint64_t o, std::uint64_t col) const {
    if (mode == Mode::SLD) return (z & col) == 0 && (o & ~col) == 0;
    return (col & ~o) == 0;
  }

  // Attempts to append column c; on success pushes an undo frame.
  bool try_add(std::uint64_t c, std::vector<UndoFrame>& undo) {
    const int m = static_cast<int>(cols.size());
    UndoFrame frame;
    frame.old_subsets = cnt.size();

    // existing subset sums may now cover the new column
    for (size_t r = 0; r < cnt.size(); ++r) {
      if (covered_by(sum_z[r], sum_o[r], c)) {
        if (cnt[r] + 1 > list_l - 1) return false;
        frame.bumped.push_back(static_cast<std::uint32_t>(r));
      }
    }

    // subsets that include the new column
    std::vector<std::uint64_t> new_z, new_o;
    std::vector<int> new_cnt;
    if (m >= s - 1) {
      std::vector<int> sub(s - 1);
      for (int i = 0; i < s - 1; ++i) sub[i] = i;
      bool more = (s - 1 > 0);
      while (more) {
        std::uint64_t z, o;
        if (mode == Mode::SLD) {
          z = ~c & full;
          o = c;
          for (int i = 0; i < s - 1; ++i) {
            z &= ~cols[sub[i]] & full;
            o &= cols[sub[i]];
          }
        } else {
          z = 0;
          o = c;
          for (int i = 0; i < s - 1; ++i) o |= cols[sub[i]];
        }
        int count = 0;
        int si = 0;
        for (int j = 0; j < m; ++j) {
          if (si < s - 1 && sub[si] == j) {
            ++si;
            continue;
          }
          if (covered_by(z, o, cols[j])) ++count;
        }
        if (count > list_l - 1) return false;
        new_z.push_back(z);
        new_o.push_back(o);
        new_cnt.push_back(count);
        std::vector<int> tmp = sub;
        more = colex_next(tmp, m);
        sub = tmp;
      }
    }

    for (const auto r : frame.bumped) ++cnt[r];
    sum_z.insert(sum_z.end(), new_z.begin(), new_z.end());
    sum_o.insert(sum_o.end(), new_o.begin(), new_o.end());
    cnt.insert(cnt.end(), new_cnt.begin(), new_cnt.end());
    cols.push_back(c);
    undo.push_back(std::move(frame));
    return true;
  }

  void pop(std::vector<UndoFrame>& undo) {
    const UndoFrame& frame = undo.back();
    for (const auto r : frame.bumped) --cnt[r];
    sum_z.resize(frame.old_subsets);
    sum_o.resize(frame.old_subsets);
    cnt.resize(frame.old_subsets);
    cols.pop_back();
    undo.pop_back();
  }
};

}  // namespace

SearchResult max_size_search(int length, int s, int list_l, Mode mode, std::uint64_t budget) {
  if (length < 1 || length > 30)
    throw std::invalid_argument("max_size_search: length must be in [1, 30]");
  if (s < 2) throw std::invalid_argument("max_size_search: s must be >= 2");
  if (list_l < 1) throw std::invalid_argument("max_size_search: L must be >= 1");

  SearchState st;
  st.n = length;
  st.s = s;
  st.list_l = list_l;
  st.mode = mode;
  st.full = (length == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;

  const std::uint64_t ncols = st.full + 1;
  std::vector<std::uint64_t> best_cols{0};  // single column is always valid
  std::uint64_t nodes = 0;
  std::vector<SearchState::UndoFrame> undo;

  // DFS over strictly increasing column values.
  auto dfs = [&](auto&& self, std::uint64_t next_min) -> void {
    if (++nodes > budget) throw BudgetExceeded("max_size_search: node budget exceeded");
    if (st.cols.size() > best_cols.size()) best_cols = st.cols;
    for (std::uint64_t c = next_min; c < ncols; ++c) {
      if (st.cols.size() + (ncols - c) <= best_cols.size()) break;  // cannot improve
      if (st.try_add(c, undo)) {
        self(self, c + 1);
        st.pop(undo);
      }
    }
  };
  dfs(dfs, 0);

  std::vector<BinaryWord> cols;
  for (const auto mask : best_cols) {
    BinaryWord w(length);
    for (int i = 0; i < length; ++i)
      if ((mask >> i) & 1) w.set_bit(i, true);
    cols.push_back(std::move(w));
  }
  return SearchResult{length,
                      s,
                      list_l,
                      mode,
                      static_cast<int>(best_cols.size()),
                      Code(length, std::move(cols)),
                      nodes};
}

}  // namespace sld
