#pragma once

// Brute-force cross-validation. Every check compares a structural answer or a
// recursion value against exhaustive simulation over small lots.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "parking/characterize.hpp"
#include "parking/core.hpp"
#include "parking/count.hpp"
#include "parking/enumerate.hpp"
#include "parking/simulate.hpp"
#include "parking/strategize.hpp"

namespace parking::oracle {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void append(const Report& r) { checks.insert(checks.end(), r.checks.begin(), r.checks.end()); }
  std::string text() const {
    std::string out;
    for (const auto& c : checks) out += (c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    return out;
  }
};

// Largest number of (preference, rule vector) pairs an exhaustive strategy search may visit.
inline constexpr std::uint64_t kDefaultSearchBudget = 100000000;

struct Options {
  unsigned workers = 1;
  std::uint64_t census_budget = kDefaultCensusBudget;
  std::uint64_t search_budget = kDefaultSearchBudget;
  std::uint64_t seed = 20240601;

  CensusOptions census() const { return {workers, census_budget}; }
};

namespace detail {

inline std::string seq_text(std::span<const int> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + ")";
}

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string example;
};

// Named pass/fail counters merged across census partitions.
class Tallies {
 public:
  template <class Describe>
  void record(const std::string& name, bool ok, Describe&& describe) {
    auto& t = map_[name];
    ++t.checked;
    if (!ok) {
      if (t.failed == 0) t.example = describe();
      ++t.failed;
    }
  }

  friend Tallies merge(Tallies a, Tallies b) {
    for (auto& [k, v] : b.map_) {
      auto& t = a.map_[k];
      if (t.failed == 0 && v.failed != 0) t.example = v.example;
      t.checked += v.checked;
      t.failed += v.failed;
    }
    return a;
  }

  CheckResult result(const std::string& name, const std::string& scope) const {
    auto it = map_.find(name);
    if (it == map_.end()) return {name, false, "no cases visited (" + scope + ")"};
    const auto& t = it->second;
    if (t.failed == 0)
      return {name, true, std::to_string(t.checked) + " cases agree (" + scope + ")"};
    return {name, false,
            std::to_string(t.failed) + " of " + std::to_string(t.checked) + " cases disagree; first " + t.example};
  }

 private:
  std::map<std::string, Tally> map_;
};

// Runs one simulation, recording total backward and forward steps. Returns false if a car fails.
inline bool park_steps(std::span<const int> prefs, std::span<const int> limits, int spots, long long& back,
                       long long& fwd) {
  std::uint64_t taken = 0;
  back = fwd = 0;
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    const int a = prefs[i];
    int spot = 0;
    if (!(taken >> a & 1U)) {
      spot = a;
    } else {
      const int lo = std::max(1, a - limits[i]);
      for (int p = a - 1; p >= lo && spot == 0; --p)
        if (!(taken >> p & 1U)) spot = p;
      for (int p = a + 1; p <= spots && spot == 0; ++p)
        if (!(taken >> p & 1U)) spot = p;
    }
    if (spot == 0) return false;
    taken |= std::uint64_t{1} << spot;
    if (spot < a)
      back += a - spot;
    else
      fwd += spot - a;
  }
  return true;
}

// Advances an odometer over [0,hi]^m; returns false after the last vector.
inline bool next_vector(std::vector<int>& v, int hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < hi) {
      ++v[i];
      return true;
    }
    v[i] = 0;
  }
  return false;
}

// Same over R_n = {0} x [0,1] x ... x [0,n-1].
inline bool next_normalized(std::vector<int>& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < static_cast<int>(i)) {
      ++v[i];
      return true;
    }
    v[i] = 0;
  }
  return false;
}

inline std::vector<int> profile_raw(std::span<const int> prefs, int s) {
  std::vector<int> mult(static_cast<std::size_t>(s) + 2, 0);
  for (int a : prefs) ++mult[static_cast<std::size_t>(a)];
  std::vector<int> u(static_cast<std::size_t>(s) + 1, 0);  // u[j], j in [1,s]
  int tail = 0;
  for (int j = s; j >= 2; --j) {
    tail += mult[static_cast<std::size_t>(j)];
    u[static_cast<std::size_t>(j)] = tail - (s - j + 1);
  }
  return u;
}

inline std::string range_text(int lo, int hi) {
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// counts

struct CountCensus {
  int n = 0;
  std::uint64_t standard = 0;
  std::vector<std::uint64_t> knap;          // [k], k in [0, n]
  std::vector<std::uint64_t> theta_eq;      // [k]: U = [2, k+1]
  std::vector<std::uint64_t> perminv;       // [k]: all maximal intervals of length <= k
  std::vector<std::uint64_t> complete_knap; // [k]
  std::vector<std::uint64_t> pf_by_ones;    // [m]: parking functions with m ones
  // vartheta census: [k][m][h]
  std::vector<std::vector<std::vector<std::uint64_t>>> vartheta;

  explicit CountCensus(int n_ = 0) : n(n_) {
    const auto sz = static_cast<std::size_t>(n) + 2;
    knap.assign(sz, 0);
    theta_eq.assign(sz, 0);
    perminv.assign(sz, 0);
    complete_knap.assign(sz, 0);
    pf_by_ones.assign(sz, 0);
    vartheta.assign(sz, std::vector<std::vector<std::uint64_t>>(sz, std::vector<std::uint64_t>(sz, 0)));
  }

  friend CountCensus merge(CountCensus a, const CountCensus& b) {
    a.standard += b.standard;
    auto add = [](std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    };
    add(a.knap, b.knap);
    add(a.theta_eq, b.theta_eq);
    add(a.perminv, b.perminv);
    add(a.complete_knap, b.complete_knap);
    add(a.pf_by_ones, b.pf_by_ones);
    for (std::size_t k = 0; k < a.vartheta.size(); ++k)
      for (std::size_t m = 0; m < a.vartheta[k].size(); ++m) add(a.vartheta[k][m], b.vartheta[k][m]);
    return a;
  }
};

inline CountCensus count_census(int n, const CensusOptions& opt) {
  CountCensus init(n);
  return census_reduce(
      n, n, opt, init,
      [n](CountCensus& c, std::span<const int> a) {
        const auto u = detail::profile_raw(a, n);
        int ones = 0, lo = n + 1;
        std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
        for (int x : a) {
          ones += x == 1;
          lo = std::min(lo, x);
          ++mult[static_cast<std::size_t>(x)];
        }
        // U as a sorted list of maximal intervals
        int maxlen = 0, intervals = 0, first_lo = 0, first_hi = 0;
        for (int j = 2; j <= n; ++j) {
          if (u[static_cast<std::size_t>(j)] < 1) continue;
          int hi = j;
          while (hi + 1 <= n && u[static_cast<std::size_t>(hi + 1)] >= 1) ++hi;
          if (intervals == 0) {
            first_lo = j;
            first_hi = hi;
          }
          ++intervals;
          maxlen = std::max(maxlen, hi - j + 1);
          j = hi;
        }
        const bool empty_u = intervals == 0;
        const bool complete = n >= 2 && intervals == 1 && first_lo == 2 && first_hi == n;
        if (empty_u) {
          ++c.standard;
          ++c.pf_by_ones[static_cast<std::size_t>(ones)];
          ++c.vartheta[0][static_cast<std::size_t>(mult[static_cast<std::size_t>(lo)])][static_cast<std::size_t>(lo)];
        }
        if (intervals == 1 && first_lo == 2) {
          const int k = first_hi - 1;
          ++c.theta_eq[static_cast<std::size_t>(k)];
          ++c.vartheta[static_cast<std::size_t>(k)][static_cast<std::size_t>(mult[static_cast<std::size_t>(lo)])]
                      [static_cast<std::size_t>(lo)];
        }
        for (int k = 0; k <= n; ++k) {
          const bool ok = parks_all_constant(a, k, n);
          if (ok) ++c.knap[static_cast<std::size_t>(k)];
          if (ok && complete) ++c.complete_knap[static_cast<std::size_t>(k)];
          if (maxlen <= k) ++c.perminv[static_cast<std::size_t>(k)];
        }
      },
      [](CountCensus a, CountCensus b) { return merge(std::move(a), b); });
}

// Abel's identity (z+w+m)^m = sum_j C(m,j) w (w+m-j)^{m-j-1} (z+j)^j over an integer grid.
inline CheckResult check_abel(int mmax, int range) {
  using I = __int128;
  auto ipow = [](I b, int e) {
    I r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  int cases = 0;
  for (int m = 0; m <= mmax; ++m)
    for (int z = -range; z <= range; ++z)
      for (int w = -range; w <= range; ++w) {
        I rhs = 0;
        for (int j = 0; j <= m; ++j) {
          I c = static_cast<I>(binomial(m, j).raw());
          // w (w+m-j)^{m-j-1} is the polynomial 1 when j = m
          I wterm = j == m ? I(1) : I(w) * ipow(I(w + m - j), m - j - 1);
          rhs += c * wterm * ipow(I(z + j), j);
        }
        ++cases;
        if (ipow(I(z + w + m), m) != rhs)
          return {"abel identity", false,
                  "mismatch at m=" + std::to_string(m) + " z=" + std::to_string(z) + " w=" + std::to_string(w)};
      }
  return {"abel identity", true,
          std::to_string(cases) + " grid points, m<=" + std::to_string(mmax) + ", z,w in [-" +
              std::to_string(range) + "," + std::to_string(range) + "]"};
}

// Circular lot with n spots and m < n cars: preferences leaving spot n empty.
inline CheckResult check_circular_count(int nmax, const CensusOptions& opt) {
  for (int n = 2; n <= nmax; ++n)
    for (int m = 1; m < n; ++m) {
      Count got = census_reduce(
          n, m, opt, Count(0),
          [n](Count& acc, std::span<const int> a) {
            std::uint64_t taken = 0;
            for (int x : a) {
              int p = x;
              while (taken >> p & 1U) p = p == n ? 1 : p + 1;
              taken |= std::uint64_t{1} << p;
            }
            if (!(taken >> n & 1U)) acc += 1;
          },
          [](Count x, Count y) { return x + y; });
      Count want = Count(static_cast<std::uint64_t>(n - m)) * power(n, m - 1);
      if (got != want)
        return {"circular count", false,
                "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": census " + got.str() + ", formula " +
                    want.str()};
    }
  return {"circular count", true, "(n-m) n^(m-1) for " + detail::range_text(2, nmax) + ", all m < n"};
}

inline CheckResult check_pf_partial(int nmax, const CensusOptions& opt) {
  for (int n = 1; n <= nmax; ++n)
    for (int m = 1; m <= n; ++m) {
      Count got = census_reduce(
          n, m, opt, Count(0),
          [n](Count& acc, std::span<const int> a) {
            std::vector<int> zero(a.size(), 0);
            if (parks_all(a, zero, n)) acc += 1;
          },
          [](Count x, Count y) { return x + y; });
      if (got != count_pf_closed(n, m))
        return {"partial pf census = closed form", false,
                "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": census " + got.str() + ", closed " +
                    count_pf_closed(n, m).str()};
    }
  return {"partial pf census = closed form", true, detail::range_text(1, nmax) + ", all m <= n"};
}

inline CheckResult check_pf_recursive(int nmax) {
  for (int n = 0; n <= nmax; ++n) {
    Count want = n == 0 ? Count(1) : count_pf_closed(n, n);
    if (count_pf_recursive(n) != want)
      return {"pf recursion = closed form", false, "n=" + std::to_string(n) + ": " + count_pf_recursive(n).str()};
  }
  return {"pf recursion = closed form", true, detail::range_text(0, nmax)};
}

inline CheckResult check_theta_symmetry(int nmax) {
  for (int n = 2; n <= nmax; ++n)
    for (int k = 1; k < n; ++k)
      if (theta(n, k, ThetaKind::eq) != theta(n, n - k, ThetaKind::eq))
        return {"theta symmetry", false, "n=" + std::to_string(n) + " k=" + std::to_string(k)};
  return {"theta symmetry", true, "theta_eq(n,k) = theta_eq(n,n-k) for " + detail::range_text(2, nmax)};
}

inline CheckResult check_upsilon_closed(int nmax) {
  for (int n = 3; n <= nmax; ++n) {
    Count want = power(n - 1, n - 1) - power(n, n - 2);
    if (upsilon0(n, n - 2) != want)
      return {"upsilon0(n,n-2) closed form", false, "n=" + std::to_string(n) + ": " + upsilon0(n, n - 2).str()};
  }
  return {"upsilon0(n,n-2) closed form", true, "(n-1)^(n-1) - n^(n-2) for " + detail::range_text(3, nmax)};
}

inline CheckResult check_theta_leq_conjecture(int nmax) {
  for (int n = 2; n <= nmax; ++n) {
    Count want = Count(static_cast<std::uint64_t>(n - 1)) * power(n + 1, n - 2);
    if (theta(n, n - 1, ThetaKind::leq) != want)
      return {"conjecture theta_leq(n,n-1) = (n-1)(n+1)^(n-2)", false,
              "n=" + std::to_string(n) + ": " + theta(n, n - 1, ThetaKind::leq).str()};
  }
  return {"conjecture theta_leq(n,n-1) = (n-1)(n+1)^(n-2)", true,
          "holds numerically for " + detail::range_text(2, nmax) + " (conjecture check, not a proof)"};
}

inline Report counts_suite(int nmax, const Options& o = {}) {
  Report r;
  const auto opt = o.census();
  check_budget(census_size(nmax, nmax), opt.budget);
  std::vector<CountCensus> cen;
  for (int n = 1; n <= nmax; ++n) cen.push_back(count_census(n, opt));
  auto at = [&](int n) -> const CountCensus& { return cen[static_cast<std::size_t>(n - 1)]; };
  const std::string scope = detail::range_text(1, nmax);

  auto run = [&](const std::string& name, auto&& body) {
    std::string fail;
    int cases = 0;
    body(fail, cases);
    r.add({name, fail.empty(), fail.empty() ? std::to_string(cases) + " values agree (" + scope + ")" : fail});
  };
  auto mismatch = [](std::string& fail, const std::string& where, Count got, Count want) {
    if (fail.empty() && got != want) fail = where + ": recursion " + got.str() + ", census " + want.str();
  };

  run("pf census = closed form", [&](std::string& fail, int& cases) {
    for (int n = 1; n <= nmax; ++n, ++cases)
      mismatch(fail, "n=" + std::to_string(n), count_pf_closed(n, n), Count(at(n).standard));
  });
  r.add(check_pf_partial(std::min(nmax, 6), opt));
  r.add(check_pf_recursive(12));
  run("knap recursion = census", [&](std::string& fail, int& cases) {
    for (int n = 1; n <= nmax; ++n)
      for (int k = 1; k <= n; ++k, ++cases) {
        const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        mismatch(fail, where, count_knap_recursive(n, k), Count(at(n).knap[static_cast<std::size_t>(k)]));
        if (k >= n - 1) mismatch(fail, where + " (n^n)", count_knap_recursive(n, k), power(n, n));
      }
  });
  run("theta_eq recursion = census", [&](std::string& fail, int& cases) {
    for (int n = 2; n <= nmax; ++n)
      for (int k = 1; k < n; ++k, ++cases)
        mismatch(fail, "n=" + std::to_string(n) + " k=" + std::to_string(k), theta(n, k, ThetaKind::eq),
                 Count(at(n).theta_eq[static_cast<std::size_t>(k)]));
  });
  run("theta census symmetry", [&](std::string& fail, int& cases) {
    for (int n = 2; n <= nmax; ++n)
      for (int k = 1; k < n; ++k, ++cases)
        mismatch(fail, "n=" + std::to_string(n) + " k=" + std::to_string(k),
                 Count(at(n).theta_eq[static_cast<std::size_t>(k)]),
                 Count(at(n).theta_eq[static_cast<std::size_t>(n - k)]));
  });
  r.add(check_theta_symmetry(std::max(nmax, 9)));
  run("vartheta recursion = census", [&](std::string& fail, int& cases) {
    for (int n = 1; n <= nmax; ++n)
      for (int k = 0; k < std::max(n, 1); ++k)
        for (int m = 1; m <= n; ++m)
          for (int h = 1; h <= n; ++h, ++cases)
            mismatch(fail,
                     "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                         " h=" + std::to_string(h),
                     vartheta(n, k, m, h),
                     Count(at(n).vartheta[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]
                                         [static_cast<std::size_t>(h)]));
  });
  run("T recursion = census", [&](std::string& fail, int& cases) {
    for (int n = 1; n <= nmax; ++n)
      for (int k = 0; k <= n; ++k, ++cases)
        mismatch(fail, "n=" + std::to_string(n) + " k=" + std::to_string(k), invariant_counts(n, k, InvariantKind::T),
                 Count(at(n).perminv[static_cast<std::size_t>(k)]));
  });
  run("upsilon0 recursion = census", [&](std::string& fail, int& cases) {
    for (int n = 2; n <= nmax; ++n)
      for (int k = 1; k < n; ++k, ++cases)
        mismatch(fail, "n=" + std::to_string(n) + " k=" + std::to_string(k), upsilon0(n, k),
                 Count(at(n).complete_knap[static_cast<std::size_t>(k)]));
  });
  r.add(check_upsilon_closed(10));
  r.add(check_theta_leq_conjecture(9));
  run("pf split by ones = binomial terms", [&](std::string& fail, int& cases) {
    for (int n = 1; n <= nmax; ++n) {
      Count sum;
      for (int m = 1; m <= n; ++m, ++cases) {
        Count term = binomial(n - 1, m - 1) * power(n, n - m);
        sum += term;
        mismatch(fail, "n=" + std::to_string(n) + " m=" + std::to_string(m), term,
                 Count(at(n).pf_by_ones[static_cast<std::size_t>(m)]));
      }
      mismatch(fail, "n=" + std::to_string(n) + " total", sum, power(n + 1, n - 1));
    }
  });
  r.add(check_abel(12, 3));
  r.add(check_circular_count(std::min(nmax, 6), opt));
  return r;
}

// ---------------------------------------------------------------------------
// characterize

namespace detail {

inline void characterize_one(Tallies& t, std::span<const int> seq, int n) {
  const Preference alpha(std::vector<int>(seq.begin(), seq.end()), n);
  const auto prof = deficiency_profile(alpha);
  const bool complete = n >= 2 && static_cast<int>(prof.u_set().size()) == n - 1;
  auto show = [&] { return seq_text(seq); };

  for (int k = 0; k <= n; ++k) {
    const bool sim = parks_all_constant(seq, k, n);
    auto showk = [&] { return seq_text(seq) + " k=" + std::to_string(k); };

    const auto st = decide_knaples_structural(alpha, k);
    t.record("structural = simulation", st.member == sim, showk);
    for (const auto& v : st.intervals) {
      if (!v.passed) continue;
      t.record("witnesses verify", v.witness && verify_witness(alpha, k, v.interval, v.witness->positions), showk);
    }

    t.record("necessity: max u <= k", !sim || prof.max_u() <= k, showk);

    if (complete) {
      const auto rtl = complete_membership_rtl(alpha, k);
      t.record("rtl = simulation on complete", rtl.member == sim, showk);
      t.record("rtl gap precheck is necessary", !sim || rtl.gap_precheck, showk);
      if (k >= 1) {
        t.record("condition on last car = h matches simulation", complete_condition_last_equal(alpha, k) == sim, showk);
        t.record("condition on last car >= h matches simulation", complete_condition_last_at_least(alpha, k) == sim,
                 showk);
      }
      if (sim) {
        const auto out = park(alpha, k);
        // lambda_j = a_j - psi(c_j) - u(a_j) turns the RTL inequality into an equality
        bool eq = true;
        for (int j : rtl_maxima(alpha)) {
          const int a = alpha.at(j), ua = prof.u(a);
          const int lambda = a - *out.spot(j) - ua;
          if (lambda < 0 || lambda > k - ua) eq = false;
          else if (parking::detail::count_before(alpha, j, a - ua - lambda, a - 1) != lambda) eq = false;
        }
        t.record("rtl lambda equality from trace", eq, showk);

        // trace laws for complete preferences
        bool laws = true;
        std::vector<int> by_spot(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 1; i <= n; ++i) {
          by_spot[static_cast<std::size_t>(*out.spot(i))] = i;
          if (*out.spot(i) > alpha.at(i)) laws = false;
        }
        for (int j = 1; j <= n; ++j)
          if (alpha.at(by_spot[static_cast<std::size_t>(j)]) < j) laws = false;
        if (*out.spot(n) != 1) laws = false;
        for (int j = 1; j <= n; ++j) {
          int below = 0;
          for (int i = 1; i <= n; ++i)
            if (alpha.at(i) >= j && *out.spot(i) < j) ++below;
          if (below != prof.u(j)) laws = false;
        }
        t.record("complete trace laws", laws, showk);
      }
      // at most u(j) cars preferring >= j end below j, parked or not
      {
        const auto out = park(alpha, k);
        bool most = true;
        for (int j = 1; j <= n; ++j) {
          int below = 0;
          for (int i = 1; i <= n; ++i)
            if (alpha.at(i) >= j && out.spot(i) && *out.spot(i) < j) ++below;
          if (below > prof.u(j)) most = false;
        }
        t.record("complete upper bound on backward crossings", most, showk);
      }
    }

    if (k >= 1) {
      // a car driving forward onto j blocks every car preferring >= j from [1, j]
      const auto out = park(alpha, k);
      bool valve = true;
      for (int i = 1; i <= n; ++i) {
        if (!out.spot(i) || *out.spot(i) <= alpha.at(i)) continue;
        const int j = *out.spot(i);
        for (int c = 1; c <= n; ++c)
          if (alpha.at(c) >= j && out.spot(c) && *out.spot(c) <= j) valve = false;
        if (sim && prof.u(j) > -1) valve = false;
      }
      t.record("valve law", valve, showk);

      if (sim) {
        bool least = true;
        for (int j : prof.u_set()) {
          int below = 0;
          for (int c = 1; c <= n; ++c)
            if (alpha.at(c) >= j && *out.spot(c) < j) ++below;
          if (below < prof.u(j)) least = false;
        }
        t.record("lower bound on backward crossings", least, showk);
      }
    }
  }

  const bool one_sim = parks_all_constant(seq, 1, n);
  t.record("1-Naples chains = simulation", one_naples_membership(alpha) == one_sim, show);
  if (prof.max_u() <= 1 && !prof.intervals().empty()) {
    // block decomposition: cars preferring [p_i - 1, p_{i+1} - 2]
    const auto& ivs = prof.intervals();
    bool all_blocks = true;
    for (std::size_t b = 0; b < ivs.size(); ++b) {
      const int lo = ivs[b].lo - 1;
      const int hi = b + 1 < ivs.size() ? ivs[b + 1].lo - 2 : n;
      std::vector<int> block;
      for (int a : seq)
        if (a >= lo && a <= hi) block.push_back(a - (lo - 1));
      const int spots = static_cast<int>(block.size());
      if (spots != hi - lo + 1 || !parks_all_constant(block, 1, spots)) all_blocks = false;
    }
    t.record("1-Naples block decomposition", all_blocks == one_sim, show);
  }
  t.record("sorted test = standard rule", is_parking_function_sorted(alpha) == parks_all_constant(seq, 0, n), show);
  t.record("empty U = standard rule", prof.u_set().empty() == parks_all_constant(seq, 0, n), show);
  {
    const int m = prof.max_u();
    const auto desc = sort_desc(alpha);
    t.record("descending order succeeds at k = max u", is_strategy(desc, m), show);
  }
}

}  // namespace detail

// Exhaustive permutation check of the interval-length criterion.
inline CheckResult check_permutation_invariance(int nmax, const CensusOptions& opt) {
  detail::Tallies total;
  for (int n = 1; n <= nmax; ++n) {
    auto t = census_reduce(
        n, n, opt, detail::Tallies{},
        [n](detail::Tallies& acc, std::span<const int> seq) {
          const Preference alpha(std::vector<int>(seq.begin(), seq.end()), n);
          std::vector<int> perm(seq.begin(), seq.end());
          std::sort(perm.begin(), perm.end());
          for (int k = 0; k <= n; ++k) {
            bool all = true;
            std::vector<int> p = perm;
            do {
              if (!parks_all_constant(p, k, n)) all = false;
            } while (all && std::next_permutation(p.begin(), p.end()));
            acc.record("permutation invariance = interval lengths", is_permutation_invariant(alpha, k) == all,
                       [&] { return detail::seq_text(seq) + " k=" + std::to_string(k); });
          }
        },
        [](detail::Tallies a, detail::Tallies b) { return merge(std::move(a), std::move(b)); });
    total = merge(std::move(total), std::move(t));
  }
  return total.result("permutation invariance = interval lengths", detail::range_text(1, nmax) + ", all k");
}

// (2,2,3) with limits (0,0,2) parks, yet no complete restriction of it parks under the restricted limits.
inline CheckResult check_non_generalization_guard() {
  const Preference alpha({2, 2, 3});
  const RuleVector rho({0, 0, 2});
  if (!is_strategy(alpha, rho)) return {"restriction counterexample", false, "(2,2,3) with (0,0,2) does not park"};
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<int> a, r;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) {
        a.push_back(alpha.values()[static_cast<std::size_t>(i)]);
        r.push_back(rho.values()[static_cast<std::size_t>(i)]);
      }
    const int m = static_cast<int>(a.size());
    if (*std::max_element(a.begin(), a.end()) > m || m < 2) continue;
    const Preference sub(a, m);
    if (is_complete(sub) && is_strategy(sub, RuleVector(r)))
      return {"restriction counterexample", false, "found complete parking restriction " + detail::seq_text(a)};
  }
  return {"restriction counterexample", true, "(2,2,3) with (0,0,2) parks but no complete restriction does"};
}

// Partial lots: all m < s cars park iff the 1-padded preference parks, same constant rule.
inline CheckResult check_padding(int nmax, const CensusOptions& opt) {
  detail::Tallies total;
  for (int n = 2; n <= nmax; ++n)
    for (int m = 1; m < n; ++m) {
      auto t = census_reduce(
          n, m, opt, detail::Tallies{},
          [n, m](detail::Tallies& acc, std::span<const int> seq) {
            std::vector<int> padded(seq.begin(), seq.end());
            padded.resize(static_cast<std::size_t>(n), 1);
            const Preference part(std::vector<int>(seq.begin(), seq.end()), n);
            const Preference full(padded, n);
            const auto pu = deficiency_profile(part), fu = deficiency_profile(full);
            for (int k = 0; k <= n; ++k)
              acc.record("padding preserves success", parks_all_constant(seq, k, n) == parks_all_constant(padded, k, n),
                         [&] { return detail::seq_text(seq) + "@" + std::to_string(n) + " k=" + std::to_string(k); });
            bool same = true;
            for (int j = 2; j <= n; ++j) same = same && pu.u(j) == fu.u(j);
            acc.record("padding preserves u", same, [&] { return detail::seq_text(seq) + "@" + std::to_string(n) + " m=" + std::to_string(m); });
          },
          [](detail::Tallies a, detail::Tallies b) { return merge(std::move(a), std::move(b)); });
      total = merge(std::move(total), std::move(t));
    }
  auto a = total.result("padding preserves success", detail::range_text(2, nmax));
  auto b = total.result("padding preserves u", detail::range_text(2, nmax));
  return {"padding", a.passed && b.passed, a.detail + "; " + b.detail};
}

inline Report characterize_suite(int nmax, const Options& o = {}) {
  const auto opt = o.census();
  check_budget(census_size(nmax, nmax), opt.budget);
  detail::Tallies total;
  for (int n = 1; n <= nmax; ++n) {
    auto t = census_reduce(
        n, n, opt, detail::Tallies{}, [n](detail::Tallies& acc, std::span<const int> seq) { detail::characterize_one(acc, seq, n); },
        [](detail::Tallies a, detail::Tallies b) { return merge(std::move(a), std::move(b)); });
    total = merge(std::move(total), std::move(t));
  }
  Report r;
  const std::string scope = detail::range_text(1, nmax) + ", k=0..n";
  for (const char* name :
       {"structural = simulation", "witnesses verify", "rtl = simulation on complete", "rtl gap precheck is necessary",
        "condition on last car = h matches simulation", "condition on last car >= h matches simulation",
        "rtl lambda equality from trace", "complete trace laws", "complete upper bound on backward crossings",
        "valve law", "lower bound on backward crossings", "necessity: max u <= k", "1-Naples chains = simulation",
        "1-Naples block decomposition", "sorted test = standard rule", "empty U = standard rule",
        "descending order succeeds at k = max u"})
    r.add(total.result(name, scope));
  r.add(check_permutation_invariance(std::min(nmax, 5), opt));
  r.add(check_non_generalization_guard());
  r.add(check_padding(std::min(nmax, 6), opt));
  return r;
}

// ---------------------------------------------------------------------------
// strategies

// Exhaustive search over [0,n]^n for every preference of length n.
inline Report step_optimality_check(int nmax, const Options& o = {}) {
  for (int n = 1; n <= nmax; ++n) {
    const std::uint64_t pairs = census_size(n, n) * census_size(n + 1, n);
    check_budget(pairs, o.search_budget);
  }
  detail::Tallies total;
  for (int n = 1; n <= nmax; ++n) {
    auto t = census_reduce(
        n, n, CensusOptions{o.workers, UINT64_MAX}, detail::Tallies{},
        [n](detail::Tallies& acc, std::span<const int> seq) {
          const Preference alpha(std::vector<int>(seq.begin(), seq.end()), n);
          const auto prof = deficiency_profile(alpha);
          long long want_rank = 0;
          for (int j : prof.u_set()) want_rank += prof.u(j);
          auto show = [&] { return detail::seq_text(seq); };

          long long best_rank = -1, best_steps = -1;
          std::set<std::vector<int>> minimizers;
          std::vector<int> rho(static_cast<std::size_t>(n), 0);
          do {
            long long back = 0, fwd = 0;
            if (!detail::park_steps(seq, rho, n, back, fwd)) continue;
            long long rank = 0;
            for (int v : rho) rank += v;
            if (best_rank < 0 || rank < best_rank) {
              best_rank = rank;
              minimizers.clear();
            }
            if (rank == best_rank) minimizers.insert(rho);
            if (best_steps < 0 || back + fwd < best_steps) best_steps = back + fwd;
            if (n <= 4) {
              const RuleVector r(rho);
              const auto norm = normalize_strategy(alpha, r);
              acc.record("normalized strategy is in R_n, below, same outcome",
                         in_normalized_space(norm) && norm.leq(r) && park(alpha, norm).assignment == park(alpha, r).assignment,
                         [&] { return detail::seq_text(seq) + " rho=" + detail::seq_text(rho); });
            }
          } while (detail::next_vector(rho, n));

          acc.record("min rank = sum of u over U", best_rank == want_rank, show);
          acc.record("minimizer count = binomial product", Count(minimizers.size()) == count_min_step_strategies(alpha),
                     show);
          acc.record("min total steps = sum |u|", best_steps == min_total_steps(alpha), show);

          const auto plans = enumerate_min_step_strategies(alpha);
          std::set<std::vector<int>> listed;
          for (const auto& p : plans.plans) listed.insert(p.rho.values());
          acc.record("enumerated minimizers = exhaustive minimizers", listed == minimizers, show);

          const auto plan = min_step_strategy(alpha);
          long long back = 0, fwd = 0;
          const bool ok = detail::park_steps(seq, plan.rho.limits(), n, back, fwd);
          acc.record("step plan parks with total = sum u and optimal steps",
                     ok && plan.total == want_rank && back + fwd == min_total_steps(alpha) &&
                         fwd == min_forward_steps(alpha),
                     show);

          // reflection: b = n+1-a, r' = forward steps where r = 0
          {
            const auto out = park(alpha, plan.rho);
            std::vector<int> b, rp;
            for (int i = 1; i <= n; ++i) {
              b.push_back(n + 1 - alpha.at(i));
              rp.push_back(plan.rho.at(i) != 0 ? 0 : *out.spot(i) - alpha.at(i));
            }
            const auto ref = park(Preference(b, n), RuleVector(rp));
            bool mirrored = ref.all_parked();
            for (int i = 1; i <= n && mirrored; ++i) mirrored = *ref.spot(i) == n + 1 - *out.spot(i);
            mirrored = mirrored && ref.total_backward() == out.total_forward() &&
                       ref.total_forward() == out.total_backward();
            acc.record("reflection swaps backward and forward steps", mirrored, show);
          }

          const auto sorted = sort_asc(alpha);
          acc.record("optima invariant under rearrangement",
                     min_total_steps(sorted) == min_total_steps(alpha) &&
                         count_min_step_strategies(sorted) == count_min_step_strategies(alpha),
                     show);

          // fewest unlimited cars over {0,n}^n
          int best_cars = n + 1;
          for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> r(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i)
              if (mask >> i & 1) r[static_cast<std::size_t>(i)] = n;
            if (parks_all(seq, r, n)) best_cars = std::min(best_cars, __builtin_popcount(static_cast<unsigned>(mask)));
          }
          const auto cars = min_cars_strategy(alpha);
          acc.record("min unlimited cars = |T~|",
                     best_cars == static_cast<int>(cars.tilde_t.size()) && is_strategy(alpha, cars.rho), show);
        },
        [](detail::Tallies a, detail::Tallies b) { return merge(std::move(a), std::move(b)); });
    total = merge(std::move(total), std::move(t));
  }
  Report r;
  const std::string scope = detail::range_text(1, nmax) + ", rho in [0,n]^n";
  for (const char* name :
       {"min rank = sum of u over U", "minimizer count = binomial product", "min total steps = sum |u|",
        "enumerated minimizers = exhaustive minimizers", "step plan parks with total = sum u and optimal steps",
        "reflection swaps backward and forward steps", "optima invariant under rearrangement",
        "min unlimited cars = |T~|"})
    r.add(total.result(name, scope));
  r.add(total.result("normalized strategy is in R_n, below, same outcome", detail::range_text(1, std::min(nmax, 4))));
  return r;
}

// Exhaustive {0,1}^n rule vectors.
inline Report zero_one_rules_check(int nmax, const Options& o = {}) {
  for (int n = 1; n <= nmax; ++n) check_budget(census_size(n, n) * census_size(2, n), o.search_budget);
  detail::Tallies total;
  for (int n = 1; n <= nmax; ++n) {
    auto t = census_reduce(
        n, n, CensusOptions{o.workers, UINT64_MAX}, detail::Tallies{},
        [n](detail::Tallies& acc, std::span<const int> seq) {
          const Preference alpha(std::vector<int>(seq.begin(), seq.end()), n);
          int best = -1;
          for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> r(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = mask >> i & 1;
            const bool sim = parks_all(seq, r, n);
            acc.record("{0,1} chain criterion = simulation", one_naples_rule_check(alpha, RuleVector(r)) == sim,
                       [&] { return detail::seq_text(seq) + " rho=" + detail::seq_text(r); });
            const int ones = __builtin_popcount(static_cast<unsigned>(mask));
            if (sim && (best < 0 || ones < best)) best = ones;
          }
          if (best >= 0) {
            const auto rho = min_ones_strategy(alpha);
            acc.record("min_ones_strategy = exhaustive {0,1} minimum", is_strategy(alpha, rho) && rho.rank() == best,
                       [&] { return detail::seq_text(seq); });
          }
        },
        [](detail::Tallies a, detail::Tallies b) { return merge(std::move(a), std::move(b)); });
    total = merge(std::move(total), std::move(t));
  }
  Report r;
  const std::string scope = detail::range_text(1, nmax) + ", rho in {0,1}^n";
  r.add(total.result("{0,1} chain criterion = simulation", scope));
  r.add(total.result("min_ones_strategy = exhaustive {0,1} minimum", scope));
  return r;
}

inline Report strategies_suite(int nmax, const Options& o = {}) {
  Report r = step_optimality_check(nmax, o);
  r.append(zero_one_rules_check(nmax, o));
  return r;
}

// ---------------------------------------------------------------------------
// posets

inline CheckResult check_principal_filter(int nmax) {
  int cases = 0;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<int> rho(static_cast<std::size_t>(n), 0);
    do {
      const RuleVector base(rho);
      const auto alpha = principal_filter_preference(base);
      std::vector<int> other(static_cast<std::size_t>(n), 0);
      do {
        ++cases;
        const RuleVector r(other);
        if (is_strategy(alpha, r) != base.leq(r))
          return {"principal filter", false,
                  "rho=" + detail::seq_text(rho) + " rho'=" + detail::seq_text(other)};
      } while (detail::next_vector(other, n));
    } while (detail::next_normalized(rho));
  }
  return {"principal filter", true,
          std::to_string(cases) + " pairs, strategies of n+1-i+r_i are exactly the vectors above r, " +
              detail::range_text(1, nmax)};
}

namespace detail {
// Strategy set of alpha restricted to R_n, as a sorted list.
inline std::set<std::vector<int>> normalized_strategies(std::span<const int> seq, int n) {
  std::set<std::vector<int>> out;
  std::vector<int> rho(static_cast<std::size_t>(n), 0);
  do {
    if (parks_all(seq, rho, n)) out.insert(rho);
  } while (next_normalized(rho));
  return out;
}

inline bool some_preference_induces(int n, const std::set<std::vector<int>>& target) {
  bool found = false;
  std::vector<int> seq(static_cast<std::size_t>(n), 1);
  do {
    std::vector<int> s1 = seq;
    for (int& x : s1) ++x;
    if (normalized_strategies(s1, n) == target) found = true;
  } while (!found && next_vector(seq, n - 1));
  return found;
}
}  // namespace detail

// The up-set of R_3 generated by (0,1,1) and (0,0,2) is no preference's strategy set.
inline CheckResult check_nonrepresentable_n3() {
  std::set<std::vector<int>> target;
  std::vector<int> rho(3, 0);
  do {
    const RuleVector r(rho);
    if (RuleVector({0, 1, 1}).leq(r) || RuleVector({0, 0, 2}).leq(r)) target.insert(rho);
  } while (detail::next_normalized(rho));
  const std::set<std::vector<int>> expect{{0, 1, 1}, {0, 0, 2}, {0, 1, 2}};
  if (target != expect) return {"non-representable up-set n=3", false, "generated up-set is not {011,002,012}"};
  if (detail::some_preference_induces(3, target))
    return {"non-representable up-set n=3", false, "some preference induces {011,002,012}"};
  return {"non-representable up-set n=3", true, "no preference in [1,3]^3 induces {011,002,012}"};
}

// For each n, the up-set of all rank >= n(n-1)/2 - 1 vectors of R_n is no preference's strategy set.
inline CheckResult check_rank_upsets(const std::vector<int>& ns) {
  std::string done;
  for (int n : ns) {
    const int top = n * (n - 1) / 2;
    std::set<std::vector<int>> target;
    std::vector<int> rho(static_cast<std::size_t>(n), 0);
    do {
      int rank = 0;
      for (int v : rho) rank += v;
      if (rank >= top - 1) target.insert(rho);
    } while (detail::next_normalized(rho));
    if (detail::some_preference_induces(n, target))
      return {"rank up-sets not induced", false, "n=" + std::to_string(n) + " has an inducing preference"};
    done += (done.empty() ? "" : ",") + std::to_string(n);
  }
  return {"rank up-sets not induced", true, "no preference induces the rank >= n(n-1)/2-1 up-set for n in {" + done + "}"};
}

inline CheckResult check_monotonicity_random(int trials, int nmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int implications = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = std::uniform_int_distribution<int>(1, nmax)(rng);
    std::uniform_int_distribution<int> pref(1, n), lim(0, n), bump(0, 2);
    std::vector<int> a(static_cast<std::size_t>(n)), r(static_cast<std::size_t>(n)), r2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      a[static_cast<std::size_t>(i)] = pref(rng);
      r[static_cast<std::size_t>(i)] = lim(rng);
      r2[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] + bump(rng);
    }
    if (!parks_all(a, r, n)) continue;
    ++implications;
    if (!parks_all(a, r2, n))
      return {"monotonicity", false, detail::seq_text(a) + " " + detail::seq_text(r) + " <= " + detail::seq_text(r2)};
  }
  return {"monotonicity", true,
          std::to_string(trials) + " random triples, " + std::to_string(implications) + " with a strategy below"};
}

inline CheckResult check_valve_random(int trials, int nmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = std::uniform_int_distribution<int>(2, nmax)(rng);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    std::uniform_int_distribution<int> pref(1, n);
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int& x : a) x = pref(rng);
    const Preference alpha(a, n);
    const auto out = park(alpha, k);
    const auto prof = deficiency_profile(alpha);
    for (int i = 1; i <= n; ++i) {
      if (!out.spot(i) || *out.spot(i) <= alpha.at(i)) continue;
      const int j = *out.spot(i);
      for (int c = 1; c <= n; ++c)
        if (alpha.at(c) >= j && out.spot(c) && *out.spot(c) <= j)
          return {"valve law", false, detail::seq_text(a) + " k=" + std::to_string(k)};
      if (out.all_parked() && prof.u(j) > -1)
        return {"valve law", false, detail::seq_text(a) + " k=" + std::to_string(k) + " u(j) > -1"};
    }
  }
  return {"valve law", true, std::to_string(trials) + " random traces up to n=" + std::to_string(nmax)};
}

// Complete preferences only, exhaustive, every k in [1, n].
inline CheckResult check_complete_trace_laws(int nmax, const CensusOptions& opt) {
  detail::Tallies total;
  for (int n = 2; n <= nmax; ++n) {
    auto t = census_reduce(
        n, n, opt, detail::Tallies{},
        [n](detail::Tallies& acc, std::span<const int> seq) {
          const Preference alpha(std::vector<int>(seq.begin(), seq.end()), n);
          const auto prof = deficiency_profile(alpha);
          if (static_cast<int>(prof.u_set().size()) != n - 1) return;
          for (int k = 1; k <= n; ++k) {
            const auto out = park(alpha, k);
            if (!out.all_parked()) continue;
            bool ok = *out.spot(n) == 1;
            for (int i = 1; i <= n; ++i) ok = ok && *out.spot(i) <= alpha.at(i);
            for (int j = 1; j <= n; ++j) {
              int below = 0;
              for (int i = 1; i <= n; ++i) {
                if (*out.spot(i) == j) ok = ok && alpha.at(i) >= j;
                if (alpha.at(i) >= j && *out.spot(i) < j) ++below;
              }
              ok = ok && below == prof.u(j);
            }
            acc.record("complete trace laws", ok, [&] { return detail::seq_text(seq) + " k=" + std::to_string(k); });
          }
        },
        [](detail::Tallies a, detail::Tallies b) { return merge(std::move(a), std::move(b)); });
    total = merge(std::move(total), std::move(t));
  }
  return total.result("complete trace laws", "all complete parking traces, " + detail::range_text(2, nmax));
}

inline Report posets_suite(int nmax, const Options& o = {}) {
  Report r;
  r.add(check_principal_filter(std::min(nmax, 4)));
  if (nmax >= 3) r.add(check_nonrepresentable_n3());
  std::vector<int> ns;
  for (int n = 3; n <= std::min(nmax, 5); ++n) ns.push_back(n);
  if (!ns.empty()) r.add(check_rank_upsets(ns));
  r.add(check_monotonicity_random(20000, std::max(nmax, 2), o.seed));
  r.add(check_valve_random(20000, std::max(nmax, 2), o.seed + 1));
  return r;
}

}  // namespace parking::oracle
