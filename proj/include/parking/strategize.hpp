#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "parking/characterize.hpp"
#include "parking/core.hpp"
#include "parking/count.hpp"
#include "parking/simulate.hpp"

namespace parking {

struct StepPlan {
  std::map<int, std::vector<int>> sets;  // j -> T_j (1-based car positions, increasing)
  RuleVector rho;
  long long total = 0;
};

struct CarPlan {
  std::vector<int> tilde_t;  // increasing, 1-based
  RuleVector rho;
};

namespace detail {

inline std::vector<int> last_n(std::vector<int> v, int count) {
  std::sort(v.begin(), v.end());
  if (static_cast<int>(v.size()) < count) throw std::logic_error("step plan set too small");
  return {v.end() - count, v.end()};
}

inline std::vector<int> positions_with(const Preference& alpha, int value) {
  std::vector<int> out;
  for (int i = 1; i <= alpha.cars(); ++i)
    if (alpha.at(i) == value) out.push_back(i);
  return out;
}

// Fills T_q, then T_{q-1} .. T_p, given the chosen T_q for each interval.
inline StepPlan build_step_plan(const Preference& alpha, const DeficiencyProfile& prof,
                                const std::vector<std::vector<int>>& top_sets) {
  StepPlan plan;
  std::vector<int> rho(static_cast<std::size_t>(alpha.cars()), 0);
  const auto& ivs = prof.intervals();
  for (std::size_t k = 0; k < ivs.size(); ++k) {
    const auto& iv = ivs[k];
    std::vector<int> cur = top_sets[k];
    std::sort(cur.begin(), cur.end());
    plan.sets[iv.hi] = cur;
    for (int j = iv.hi - 1; j >= iv.lo; --j) {
      auto cand = positions_with(alpha, j);
      cand.insert(cand.end(), cur.begin(), cur.end());
      cur = last_n(std::move(cand), prof.u(j));
      plan.sets[j] = cur;
    }
  }
  for (const auto& [j, set] : plan.sets)
    for (int i : set) ++rho[static_cast<std::size_t>(i - 1)];
  plan.rho = RuleVector(std::move(rho));
  plan.total = plan.rho.rank();
  return plan;
}

}  // namespace detail

inline StepPlan min_step_strategy(const Preference& alpha) {
  detail::require_classical(alpha, "min_step_strategy");
  const auto prof = deficiency_profile(alpha);
  std::vector<std::vector<int>> tops;
  for (const auto& iv : prof.intervals())
    tops.push_back(detail::last_n(detail::positions_with(alpha, iv.hi), prof.u(iv.hi)));
  return detail::build_step_plan(alpha, prof, tops);
}

inline Count count_min_step_strategies(const Preference& alpha) {
  detail::require_classical(alpha, "count_min_step_strategies");
  const auto prof = deficiency_profile(alpha);
  Count c(1);
  for (const auto& iv : prof.intervals()) c *= binomial(alpha.multiplicity(iv.hi) - 1, prof.u(iv.hi));
  return c;
}

inline constexpr std::uint64_t kMaxMaterializedPlans = 1000000;

struct StepPlanList {
  std::vector<StepPlan> plans;
  Count count;
};

// Every minimizer of the total limit: T_q ranges over u(q)-subsets of the
// cars preferring q other than the first one.
inline StepPlanList enumerate_min_step_strategies(const Preference& alpha) {
  StepPlanList res;
  res.count = count_min_step_strategies(alpha);
  if (res.count > Count(kMaxMaterializedPlans))
    throw InvalidInput("refusing to materialize " + res.count.str() + " plans");
  const auto prof = deficiency_profile(alpha);
  const auto& ivs = prof.intervals();

  // Per-interval list of candidate T_q sets, in lexicographic order.
  std::vector<std::vector<std::vector<int>>> options;
  for (const auto& iv : ivs) {
    auto pool = detail::positions_with(alpha, iv.hi);
    pool.erase(pool.begin());
    const int take = prof.u(iv.hi);
    std::vector<std::vector<int>> opts;
    std::vector<int> idx(static_cast<std::size_t>(take));
    for (int i = 0; i < take; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int size = static_cast<int>(pool.size());
    while (true) {
      std::vector<int> pick;
      for (int i : idx) pick.push_back(pool[static_cast<std::size_t>(i)]);
      opts.push_back(std::move(pick));
      int pos = take - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == size - take + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < take; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    options.push_back(std::move(opts));
  }

  std::vector<std::size_t> choice(ivs.size(), 0);
  while (true) {
    std::vector<std::vector<int>> tops;
    for (std::size_t k = 0; k < ivs.size(); ++k) tops.push_back(options[k][choice[k]]);
    res.plans.push_back(detail::build_step_plan(alpha, prof, tops));
    std::size_t k = ivs.size();
    while (k > 0 && choice[k - 1] + 1 == options[k - 1].size()) choice[--k] = 0;
    if (k == 0) break;
    ++choice[k - 1];
  }
  return res;
}

inline long long min_total_steps(const Preference& alpha) {
  detail::require_classical(alpha, "min_total_steps");
  long long t = 0;
  const auto prof = deficiency_profile(alpha);
  for (int v : prof.values()) t += v < 0 ? -v : v;
  return t;
}

// Forward share of the optimum: minus the sum of u(j) over j outside U.
inline long long min_forward_steps(const Preference& alpha) {
  detail::require_classical(alpha, "min_forward_steps");
  long long t = 0;
  const auto prof = deficiency_profile(alpha);
  for (int v : prof.values())
    if (v < 1) t -= v;
  return t;
}

inline CarPlan min_cars_strategy(const Preference& alpha) {
  detail::require_classical(alpha, "min_cars_strategy");
  const auto prof = deficiency_profile(alpha);
  std::vector<char> mark(static_cast<std::size_t>(alpha.cars()) + 1, 0);
  for (int j : prof.u_set()) {
    int need = prof.u(j);
    for (int i = alpha.cars(); i >= 1 && need > 0; --i)
      if (alpha.at(i) >= j) {
        mark[static_cast<std::size_t>(i)] = 1;
        --need;
      }
  }
  CarPlan plan;
  std::vector<int> rho(static_cast<std::size_t>(alpha.cars()), 0);
  for (int i = 1; i <= alpha.cars(); ++i)
    if (mark[static_cast<std::size_t>(i)]) {
      plan.tilde_t.push_back(i);
      rho[static_cast<std::size_t>(i - 1)] = alpha.spots();
    }
  plan.rho = RuleVector(std::move(rho));
  return plan;
}

inline bool in_normalized_space(const RuleVector& rho) {
  for (int i = 1; i <= rho.size(); ++i)
    if (rho.at(i) > i - 1) return false;
  return true;
}

// a_i = n + 1 - i + r_i: the preference whose strategies are exactly the vectors above rho.
inline Preference principal_filter_preference(const RuleVector& rho) {
  if (rho.size() < 1) throw InvalidInput("principal filter needs at least one car");
  if (!in_normalized_space(rho)) throw InvalidInput("rule vector must satisfy r_i <= i-1");
  const int n = rho.size();
  std::vector<int> a;
  for (int i = 1; i <= n; ++i) a.push_back(n + 1 - i + rho.at(i));
  return Preference(std::move(a), n);
}

inline RuleVector normalize_strategy(const Preference& alpha, const RuleVector& rho) {
  const auto out = park(alpha, rho);
  if (!out.all_parked()) throw InvalidInput("rule vector is not a parking strategy");
  return RuleVector(out.backward_steps);
}

// Minimal {0,1} strategy for a 1-Naples preference: per interval, the shortest
// chain, taking earliest positions, with r = 1 on every chain car after the head.
inline RuleVector min_ones_strategy(const Preference& alpha) {
  detail::require_classical(alpha, "min_ones_strategy");
  const auto prof = deficiency_profile(alpha);
  if (prof.max_u() > 1 || !one_naples_membership(alpha))
    throw PreconditionError("min_ones_strategy requires a 1-Naples parking function");
  std::vector<int> rho(static_cast<std::size_t>(alpha.cars()), 0);
  for (const auto& iv : prof.intervals()) {
    bool done = false;
    for (int v = iv.hi; v <= alpha.spots() && !done; ++v) {
      std::vector<int> chain;
      int from = 1;
      // head pair (v, v), then v-1 .. p, each at the earliest position available
      std::vector<int> wanted{v};
      for (int x = v; x >= iv.lo; --x) wanted.push_back(x);
      for (int x : wanted) {
        int found = 0;
        for (int i = from; i <= alpha.cars() && found == 0; ++i)
          if (alpha.at(i) == x) found = i;
        if (found == 0) break;
        chain.push_back(found);
        from = found + 1;
      }
      if (chain.size() != wanted.size()) continue;
      for (std::size_t c = 1; c < chain.size(); ++c) rho[static_cast<std::size_t>(chain[c] - 1)] = 1;
      done = true;
    }
    if (!done) throw std::logic_error("no chain found for a 1-Naples interval");
  }
  return RuleVector(std::move(rho));
}

}  // namespace parking
