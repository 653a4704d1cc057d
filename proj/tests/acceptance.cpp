// Prints one PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "parking/oracle.hpp"

using namespace parking;
using namespace parking::oracle;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const CheckResult& r) { require(r.passed, r.name + ": " + r.detail); }
};

using Table = std::vector<std::vector<std::uint64_t>>;

const Table kTheta{{1},
                   {4, 4},
                   {27, 21, 27},
                   {256, 176, 176, 256},
                   {3125, 1995, 1765, 1995, 3125},
                   {46656, 28344, 23304, 23304, 28344, 46656},
                   {823543, 482825, 378007, 351337, 378007, 482825, 823543}};

const Table kT{{4},
               {23, 27},
               {192, 229, 256},
               {2077, 2558, 2869, 3125},
               {27808, 35154, 40000, 43531, 46656},
               {444411, 572470, 662519, 726668, 776887, 823543},
               {8266240, 10815697, 12693504, 14055341, 15097600, 15953673, 16777216}};

const Table kUpsilon{{1},
                     {1, 4},
                     {1, 11, 27},
                     {1, 38, 131, 256},
                     {1, 131, 783, 1829, 3125},
                     {1, 490, 5136, 15634, 29849, 46656},
                     {1, 1897, 34623, 148321, 332869, 561399, 823543},
                     {1, 7714, 251817, 1505148, 4102015, 7735566, 11994247, 16777216}};

void require_table(Verdict& v, const Table& t, const std::string& name, const std::function<Count(int, int)>& f) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    const int n = static_cast<int>(r) + 2;
    for (int k = 1; k < n; ++k) {
      const Count got = f(n, k);
      v.require(got == Count(t[r][static_cast<std::size_t>(k - 1)]),
                name + "(" + std::to_string(n) + "," + std::to_string(k) + ") = " + got.str());
    }
  }
}

std::string fmt(const std::vector<std::optional<int>>& a) {
  std::string s;
  for (const auto& x : a) s += (s.empty() ? "" : " ") + (x ? std::to_string(*x) : std::string("-"));
  return s;
}

void require_trace(Verdict& v, const Preference& a, const RuleVector& r, const std::string& want) {
  const std::string got = fmt(park(a, r).assignment);
  v.require(got == want, format_preference(a) + " under " + format_rules(r) + " gives " + got);
}

}  // namespace

int main() {
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  const CensusOptions census{workers, kDefaultCensusBudget};
  Options opt;
  opt.workers = workers;

  std::vector<CountCensus> cen;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 7; ++n) cen.push_back(count_census(n, census));
  const double census_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto at = [&](int n) -> const CountCensus& { return cen[static_cast<std::size_t>(n - 1)]; };

  std::vector<std::pair<std::string, std::function<Verdict()>>> criteria;

  criteria.emplace_back("closed-form pf counts", [&] {
    Verdict v;
    const std::vector<std::uint64_t> want{1, 3, 16, 125, 1296, 16807, 262144};
    for (int n = 1; n <= 7; ++n) {
      v.require(at(n).standard == want[static_cast<std::size_t>(n - 1)], "census at n=" + std::to_string(n));
      v.require(Count(at(n).standard) == power(n + 1, n - 1), "closed form at n=" + std::to_string(n));
    }
    v.require(census_seconds < 60, "census too slow");
    if (v.ok) v.detail = "n=1..7 census, " + std::to_string(census_seconds) + " s for all seven censuses";
    return v;
  });

  criteria.emplace_back("partial pf counts", [&] {
    Verdict v;
    v.require(check_pf_partial(6, census));
    if (v.ok) v.detail = "n<=6, all m<=n";
    return v;
  });

  criteria.emplace_back("recursive pf counts", [&] {
    Verdict v;
    v.require(check_pf_recursive(12));
    if (v.ok) v.detail = "n<=12";
    return v;
  });

  criteria.emplace_back("k-Naples recursion", [&] {
    Verdict v;
    for (int n = 1; n <= 7; ++n)
      for (int k = 1; k <= n; ++k) {
        const Count rec = count_knap_recursive(n, k);
        const std::string at_nk = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
        v.require(rec == Count(at(n).knap[static_cast<std::size_t>(k)]), "census mismatch at " + at_nk);
        if (k >= n - 1) v.require(rec == power(n, n), "n^n fails at " + at_nk);
      }
    if (v.ok) v.detail = "recursion = census for n<=7, k=1..n";
    return v;
  });

  criteria.emplace_back("theta_eq table", [&] {
    Verdict v;
    require_table(v, kTheta, "theta_eq", [](int n, int k) { return theta(n, k, ThetaKind::eq); });
    for (int n = 2; n <= 7; ++n)
      for (int k = 1; k < n; ++k)
        v.require(theta(n, k, ThetaKind::eq) == Count(at(n).theta_eq[static_cast<std::size_t>(k)]),
                  "census mismatch at n=" + std::to_string(n));
    v.require(check_theta_symmetry(9));
    if (v.ok) v.detail = "table n=2..8, census n<=7, symmetry n<=9";
    return v;
  });

  criteria.emplace_back("T table", [&] {
    Verdict v;
    require_table(v, kT, "T", [](int n, int k) { return invariant_counts(n, k, InvariantKind::T); });
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= n; ++k)
        v.require(invariant_counts(n, k, InvariantKind::T) == Count(at(n).perminv[static_cast<std::size_t>(k)]),
                  "census mismatch at n=" + std::to_string(n));
    if (v.ok) v.detail = "table n=2..8, census n<=6";
    return v;
  });

  criteria.emplace_back("upsilon0 table", [&] {
    Verdict v;
    require_table(v, kUpsilon, "upsilon0", [](int n, int k) { return upsilon0(n, k); });
    for (int n = 2; n <= 7; ++n)
      for (int k = 1; k < n; ++k)
        v.require(upsilon0(n, k) == Count(at(n).complete_knap[static_cast<std::size_t>(k)]),
                  "census mismatch at n=" + std::to_string(n));
    v.require(check_upsilon_closed(10));
    const auto conj = check_theta_leq_conjecture(9);
    v.require(conj);
    if (v.ok) v.detail = "table n=2..9, census n<=7, closed form n<=10; " + conj.name + " " + conj.detail;
    return v;
  });

  criteria.emplace_back("characterization oracle", [&] {
    Verdict v;
    const auto rep = characterize_suite(6, opt);
    for (const char* name : {"structural = simulation", "witnesses verify", "rtl = simulation on complete"})
      v.require(*rep.find(name));
    if (v.ok) v.detail = rep.find("structural = simulation")->detail + "; " + rep.find("rtl = simulation on complete")->detail;
    return v;
  });

  criteria.emplace_back("permutation invariance", [&] {
    Verdict v;
    const auto r = check_permutation_invariance(5, census);
    v.require(r);
    if (v.ok) v.detail = r.detail;
    return v;
  });

  criteria.emplace_back("strategy optimality", [&] {
    Verdict v;
    const auto rep = step_optimality_check(5, opt);
    for (const char* name : {"min rank = sum of u over U", "minimizer count = binomial product",
                             "min unlimited cars = |T~|", "min total steps = sum |u|"})
      v.require(*rep.find(name));
    if (v.ok) v.detail = "exhaustive over [0,n]^n, " + rep.find("min rank = sum of u over U")->detail;
    return v;
  });

  criteria.emplace_back("{0,1} rules", [&] {
    Verdict v;
    const auto rep = zero_one_rules_check(6, opt);
    for (const auto& c : rep.checks) v.require(c);
    if (v.ok) v.detail = rep.checks.front().detail;
    return v;
  });

  criteria.emplace_back("golden traces", [&] {
    Verdict v;
    require_trace(v, Preference({5, 3, 3, 5, 4}), RuleVector::constant(5, 3), "5 3 2 4 1");
    const Preference eight({7, 8, 7, 5, 8, 4, 5, 2});
    require_trace(v, eight, RuleVector::constant(8, 2), "7 8 6 5 - 4 3 2");
    require_trace(v, eight, RuleVector::constant(8, 4), "7 8 6 5 4 3 2 1");
    const Preference five({4, 3, 3, 4, 1});
    require_trace(v, five, RuleVector({1, 1, 0, 1, 1}), "4 3 5 - 1");
    require_trace(v, five, RuleVector({0, 0, 1, 0, 0}), "4 3 2 5 1");
    require_trace(v, five, RuleVector({0, 0, 0, 2, 0}), "4 3 5 2 1");
    const Preference ten({4, 9, 5, 9, 5, 8, 7, 9, 4, 6});
    require_trace(v, ten, RuleVector({0, 0, 0, 0, 2, 0, 0, 3, 2, 5}), "4 9 5 10 3 8 7 6 2 1");
    require_trace(v, ten, min_cars_strategy(ten).rho, "4 9 5 10 6 8 7 3 2 1");
    const auto all = enumerate_min_step_strategies(ten);
    v.require(all.count == Count(2) && all.plans.size() == 2, "expected two minimizers");
    for (const auto& p : all.plans) {
      const auto out = park(ten, p.rho);
      v.require(out.all_parked() && p.total == 12 && out.total_backward() == 12,
                "minimizer " + format_rules(p.rho) + " is not optimal");
    }
    const Preference thirteen({5, 10, 11, 1, 5, 11, 10, 4, 3, 9, 10, 8, 3});
    require_trace(v, thirteen, RuleVector::constant(13, 1), "5 10 11 1 4 12 9 3 2 8 13 7 6");
    require_trace(v, thirteen, RuleVector({0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1}), "5 10 11 1 6 12 9 4 3 8 13 7 2");
    require_trace(v, Preference({8, 4, 7, 1, 6, 8, 7, 5, 10, 1}), RuleVector::constant(10, 2), "8 4 7 1 6 9 5 3 10 2");
    if (v.ok) v.detail = "11 traces bit-exact; both minimizers of (4,9,5,9,5,8,7,9,4,6) park with |rho| = 12";
    return v;
  });

  criteria.emplace_back("property suites", [&] {
    Verdict v;
    v.require(check_monotonicity_random(50000, 9, 7));
    v.require(check_valve_random(50000, 10, 11));
    v.require(check_complete_trace_laws(6, census));
    v.require(check_abel(12, 3));
    v.require(check_principal_filter(4));
    v.require(check_nonrepresentable_n3());
    v.require(check_rank_upsets({3, 4, 5}));
    if (v.ok) v.detail = "monotonicity, valve law, complete trace laws, Abel, principal filter, up-set negatives";
    return v;
  });

  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += v.ok ? 0 : 1;
    std::printf("%s %2d %s: %s\n", v.ok ? "PASS" : "FAIL", index, name.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
