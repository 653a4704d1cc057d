#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "parking/core.hpp"
#include "parking/count.hpp"

namespace parking {

// ---- closed forms ----

inline Count count_pf_closed(int n, int m) {
  if (m < 1 || n < 1) throw InvalidInput("count_pf_closed needs 1 <= m <= n");
  if (m > n) throw InvalidInput("count_pf_closed: more cars than spots");
  return Count(static_cast<std::uint64_t>(n - m + 1)) * power(n + 1, m - 1);
}

// ---- recursions ----

// Memo tables for every recursion. One instance is shared per process behind a
// mutex; tables only grow.
class CountTables {
 public:
  Count pf(int n) {
    if (n < 0) throw InvalidInput("negative length");
    if (n == 0) return 1;
    if (auto it = pf_.find(n); it != pf_.end()) return it->second;
    Count total;
    for (int j = 0; j <= n - 1; ++j)
      total += binomial(n - 1, j) * Count(static_cast<std::uint64_t>(j + 1)) * pf(j) * pf(n - j - 1);
    return pf_[n] = total;
  }

  Count knap(int n, int k) {
    if (n < 0 || k < 1) throw InvalidInput("knap needs n >= 0 and k >= 1");
    if (n == 0) return 1;
    if (auto it = knap_.find({n, k}); it != knap_.end()) return it->second;
    // |PF_{n,k}| with n = N+1: sum over the size i of the block ahead of the last car.
    const int big = n - 1;
    Count total;
    for (int i = 0; i <= big; ++i) {
      const int choices = std::min(i + 1 + k, big + 1);
      total += binomial(big, i) * Count(static_cast<std::uint64_t>(choices)) * knap(i, k) *
               power(big - i + 1, big - i - 1);
    }
    return knap_[{n, k}] = total;
  }

  Count vartheta(int n, int k, int m, int h) {
    if (n < 1 || k < 0) throw InvalidInput("vartheta needs n >= 1 and k >= 0");
    if (m < 1 || m > n || h < 1 || h > n) return 0;
    if (k == 0) {
      if (h != 1) return 0;
      return binomial(n - 1, m - 1) * power(n, n - m);
    }
    if (k >= n || h > k + 1 || h == 1) return 0;
    if (h == k + 1 && m < k + 1) return 0;
    if (h <= k && m >= h) return 0;
    const auto key = std::make_tuple(n, k, m, h);
    if (auto it = vartheta_.find(key); it != vartheta_.end()) return it->second;
    Count v;
    if (m == 1) {
      Count inner;
      for (int hp = h; hp <= n - 1; ++hp)
        for (int mp = 1; mp <= n - 1; ++mp) inner += vartheta(n - 1, k - 1, mp, hp);
      v = Count(static_cast<std::uint64_t>(n)) * inner;
    } else {
      v = (Count(static_cast<std::uint64_t>(n)) * vartheta(n - 1, k - 1, m - 1, h - 1))
              .exact_div(Count(static_cast<std::uint64_t>(m)));
    }
    return vartheta_[key] = v;
  }

  Count theta_eq(int n, int k) {
    if (n < 0 || k < 1) throw InvalidInput("theta_eq needs n >= 0 and k >= 1");
    if (n <= 1 || k >= n) return 0;
    Count total;
    for (int h = 2; h <= k; ++h)
      for (int m = 1; m <= h - 1; ++m) total += vartheta(n, k, m, h);
    for (int m = k + 1; m <= n; ++m) total += vartheta(n, k, m, k + 1);
    return total;
  }

  Count theta_leq(int n, int k) {
    if (n < 0 || k < 0) throw InvalidInput("theta_leq needs n >= 0 and k >= 0");
    Count total;
    for (int i = 1; i <= k; ++i) total += theta_eq(n, i);
    return total;
  }

  Count t(int n, int k) {
    if (n < 0 || k < 0) throw InvalidInput("t needs n >= 0 and k >= 0");
    if (n == 0) return 1;
    if (n == 1) return 0;
    if (auto it = t_.find({n, k}); it != t_.end()) return it->second;
    Count total;
    for (int i = 1; i <= n; ++i) total += binomial(n, i) * theta_leq(i, k) * t(n - i, k);
    return t_[{n, k}] = total;
  }

  Count big_t(int n, int k) {
    if (n < 0 || k < 0) throw InvalidInput("T needs n >= 0 and k >= 0");
    Count total;
    for (int i = 0; i <= n; ++i) total += binomial(n, i) * power(i + 1, i - 1) * t(n - i, k);
    return total;
  }

  Count upsilon0(int n, int k) {
    if (n < 2 || k < 1) throw InvalidInput("upsilon0 needs n >= 2 and k >= 1");
    return upsilon0_raw(n, k);
  }

 private:
  // Counts complete k-Naples functions of length n; the recursion bottoms out at
  // small n where completeness is automatic up to the n-1 bound.
  Count upsilon0_raw(int n, int k) {
    if (n <= k + 1) return power(n - 1, n - 1);
    if (auto it = upsilon_.find({n, k}); it != upsilon_.end()) return it->second;
    Count total;
    for (int i = 1; i <= k; ++i)
      total += binomial(n - 1, i - 1) * power(i, i - 2) * Count(static_cast<std::uint64_t>(k - i + 1)) *
               upsilon0_raw(n - i, k);
    return upsilon_[{n, k}] = total;
  }

  std::map<int, Count> pf_;
  std::map<std::pair<int, int>, Count> knap_;
  std::map<std::tuple<int, int, int, int>, Count> vartheta_;
  std::map<std::pair<int, int>, Count> t_;
  std::map<std::pair<int, int>, Count> upsilon_;
};

namespace detail {
inline CountTables& shared_tables() {
  static CountTables tables;
  return tables;
}
inline std::mutex& shared_tables_mutex() {
  static std::mutex m;
  return m;
}
template <class F>
Count with_tables(F&& f) {
  std::lock_guard lock(shared_tables_mutex());
  return f(shared_tables());
}
}  // namespace detail

inline Count count_pf_recursive(int n) {
  return detail::with_tables([&](CountTables& t) { return t.pf(n); });
}
inline Count count_knap_recursive(int n, int k) {
  if (k < 1 || n < 0) throw InvalidInput("count_knap_recursive needs n >= 0 and k >= 1");
  return detail::with_tables([&](CountTables& t) { return t.knap(n, k); });
}
inline Count vartheta(int n, int k, int m, int h) {
  return detail::with_tables([&](CountTables& t) { return t.vartheta(n, k, m, h); });
}

enum class ThetaKind { eq, leq };

inline Count theta(int n, int k, ThetaKind kind) {
  return detail::with_tables([&](CountTables& t) {
    return kind == ThetaKind::eq ? t.theta_eq(n, k) : t.theta_leq(n, k);
  });
}

enum class InvariantKind { t, T };

inline Count invariant_counts(int n, int k, InvariantKind kind) {
  return detail::with_tables([&](CountTables& t) { return kind == InvariantKind::t ? t.t(n, k) : t.big_t(n, k); });
}

inline Count upsilon0(int n, int k) {
  return detail::with_tables([&](CountTables& t) { return t.upsilon0(n, k); });
}

// ---- census ----

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t estimate, std::uint64_t budget)
      : std::runtime_error("census of about " + std::to_string(estimate) +
                           " iterations exceeds budget of " + std::to_string(budget)),
        estimate_(estimate),
        budget_(budget) {}
  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

// Default budget covers [1,8]^8.
inline constexpr std::uint64_t kDefaultCensusBudget = 16777216;

struct CensusOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultCensusBudget;
};

// n^m, saturating at UINT64_MAX.
inline std::uint64_t census_size(int n, int m) {
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) {
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(n), &r)) return UINT64_MAX;
  }
  return r;
}

inline void check_budget(std::uint64_t estimate, std::uint64_t budget) {
  if (estimate > budget) throw BudgetExceeded(estimate, budget);
}

// Visits every sequence in [1,n]^m in lexicographic order within each leading
// value. Leading values are handed out to workers; per-value partial results
// are merged in increasing leading value, so the result does not depend on the
// worker count as long as merge is associative.
template <class Acc, class Visit, class Merge>
Acc census_reduce(int n, int m, const CensusOptions& opt, Acc init, Visit visit, Merge merge) {
  if (n < 1 || m < 0) throw InvalidInput("census needs n >= 1 and m >= 0");
  check_budget(census_size(n, m), opt.budget);
  if (m == 0) {
    Acc acc = init;
    std::vector<int> empty;
    visit(acc, std::span<const int>(empty));
    return acc;
  }

  std::vector<Acc> parts(static_cast<std::size_t>(n), init);
  auto run_leading = [&](int lead) {
    Acc& acc = parts[static_cast<std::size_t>(lead - 1)];
    std::vector<int> seq(static_cast<std::size_t>(m), 1);
    seq[0] = lead;
    while (true) {
      visit(acc, std::span<const int>(seq));
      int pos = m - 1;
      while (pos >= 1 && seq[static_cast<std::size_t>(pos)] == n) seq[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 1) break;
      ++seq[static_cast<std::size_t>(pos)];
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(opt.workers, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (int lead = 1; lead <= n; ++lead) run_leading(lead);
  } else {
    std::atomic<int> next{1};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (int lead = next++; lead <= n; lead = next++) run_leading(lead);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  Acc total = init;
  for (auto& p : parts) total = merge(std::move(total), std::move(p));
  return total;
}

// Counts classical preferences of length n (n cars, n spots) passing the filter.
inline Count census_count(int n, const std::function<bool(const Preference&)>& filter,
                          const CensusOptions& opt = {}) {
  return census_reduce(
      n, n, opt, Count(0),
      [&](Count& acc, std::span<const int> seq) {
        if (filter(Preference(std::vector<int>(seq.begin(), seq.end()), n))) acc += 1;
      },
      [](Count a, Count b) { return a + b; });
}

}  // namespace parking
