#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "parking/core.hpp"
#include "parking/simulate.hpp"

namespace parking {

// Raised when an operation's documented precondition does not hold.
class PreconditionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

namespace detail {
inline void require_classical(const Preference& alpha, const char* op) {
  if (!alpha.classical())
    throw PreconditionError(std::string(op) + " requires as many cars as spots");
}

// |{i < before : a_i in [lo, hi]}|, positions 1-based, `before` exclusive.
inline int count_before(const Preference& alpha, int before, int lo, int hi) {
  int c = 0;
  for (int i = 1; i < before; ++i) {
    int a = alpha.at(i);
    if (a >= lo && a <= hi) ++c;
  }
  return c;
}
}  // namespace detail

inline bool is_parking_function_sorted(const Preference& alpha) {
  detail::require_classical(alpha, "is_parking_function_sorted");
  std::vector<int> b(alpha.values());
  std::sort(b.begin(), b.end());
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] > static_cast<int>(j) + 1) return false;
  return true;
}

inline int min_naples_k(const Preference& alpha) {
  detail::require_classical(alpha, "min_naples_k");
  return deficiency_profile(alpha).max_u();
}

inline bool is_complete(const Preference& alpha) {
  detail::require_classical(alpha, "is_complete");
  if (alpha.spots() < 2) throw PreconditionError("completeness needs at least 2 spots");
  return static_cast<int>(deficiency_profile(alpha).u_set().size()) == alpha.spots() - 1;
}

// ---- complete preferences ----

struct RtlWitness {
  int position = 0;  // 1-based car index of the RTL-maximum
  int value = 0;
  std::optional<int> lambda;
  std::optional<int> eta;  // lambda + u(value)
};

struct RtlResult {
  bool member = false;
  bool gap_precheck = false;  // necessary condition on consecutive RTL-maxima
  std::vector<RtlWitness> witnesses;  // right to left
};

// Strict right-to-left maxima, listed right to left (1-based positions).
inline std::vector<int> rtl_maxima(const Preference& alpha) {
  std::vector<int> out;
  int best = 0;
  for (int j = alpha.cars(); j >= 1; --j) {
    if (alpha.at(j) > best) {
      out.push_back(j);
      best = alpha.at(j);
    }
  }
  return out;
}

inline RtlResult complete_membership_rtl(const Preference& alpha, int k) {
  if (k < 0) throw InvalidInput("k must be nonnegative");
  if (!is_complete(alpha)) throw PreconditionError("rtl test requires a complete preference");
  const auto prof = deficiency_profile(alpha);
  RtlResult res;
  const auto maxima = rtl_maxima(alpha);

  res.gap_precheck = alpha.at(maxima.front()) <= k + 1;
  for (std::size_t i = 0; i + 1 < maxima.size(); ++i)
    if (alpha.at(maxima[i + 1]) - alpha.at(maxima[i]) > k) res.gap_precheck = false;

  res.member = true;
  for (int j : maxima) {
    RtlWitness w{j, alpha.at(j), std::nullopt, std::nullopt};
    const int a = w.value;
    const int ua = prof.u(a);
    // The precheck is necessary, so once it fails no lambda search can rescue membership;
    // the search still runs so every witness reports what it found.
    for (int lambda = 0; lambda <= k - ua; ++lambda) {
      if (detail::count_before(alpha, j, a - ua - lambda, a - 1) <= lambda) {
        w.lambda = lambda;
        w.eta = lambda + ua;
        break;
      }
    }
    if (!w.lambda) res.member = false;
    res.witnesses.push_back(w);
  }
  if (!res.gap_precheck) res.member = false;
  return res;
}

// The two index-based conditions for complete preferences. `over_last_at_least`
// selects the variant quantified over every h with the last car preferring >= h
// and demanding equality; otherwise h ranges over used values with the last car
// preferring exactly h and an upper bound.
inline bool complete_condition(const Preference& alpha, int k, bool over_last_at_least) {
  if (k < 1) throw InvalidInput("condition defined for k >= 1");
  if (!is_complete(alpha)) throw PreconditionError("condition requires a complete preference");
  const auto prof = deficiency_profile(alpha);
  const int n = alpha.cars();
  for (int h = 1; h <= n; ++h) {
    int j = 0;
    if (over_last_at_least) {
      for (int i = n; i >= 1 && j == 0; --i)
        if (alpha.at(i) >= h) j = i;
    } else {
      if (alpha.multiplicity(h) == 0) continue;
      for (int i = n; i >= 1 && j == 0; --i)
        if (alpha.at(i) == h) j = i;
    }
    const int uh = prof.u(h);
    bool ok = false;
    for (int lambda = 0; lambda <= k - uh && !ok; ++lambda) {
      int c = detail::count_before(alpha, j, h - uh - lambda, h - 1);
      ok = over_last_at_least ? c == lambda : c <= lambda;
    }
    if (!ok) return false;
  }
  return true;
}

inline bool complete_condition_last_equal(const Preference& alpha, int k) {
  return complete_condition(alpha, k, false);
}
inline bool complete_condition_last_at_least(const Preference& alpha, int k) {
  return complete_condition(alpha, k, true);
}

// ---- general preferences: critical spots and witnesses ----

struct CompleteWitness {
  Interval interval;
  std::vector<int> positions;  // J, increasing, 1-based
  Preference translated;       // tau_{p-2}(alpha|_J) on |J| spots
};

struct IntervalVerdict {
  Interval interval;
  bool passed = false;
  bool by_length = false;  // accepted because the interval has length <= k
  std::optional<CompleteWitness> witness;
};

struct StructuralResult {
  bool member = false;
  std::vector<IntervalVerdict> intervals;

  std::vector<CompleteWitness> witnesses() const {
    std::vector<CompleteWitness> out;
    for (const auto& v : intervals)
      if (v.witness) out.push_back(*v.witness);
    return out;
  }
};

inline bool verify_witness(const Preference& alpha, int k, Interval iv, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  if (positions.empty() || std::adjacent_find(positions.begin(), positions.end()) != positions.end())
    return false;
  const int size = static_cast<int>(positions.size());
  if (size < iv.length() + 1 || size < 2) return false;
  std::vector<int> tr;
  for (int j : positions) {
    if (j < 1 || j > alpha.cars()) return false;
    const int a = alpha.at(j);
    if (a < iv.lo - 1 || a > iv.lo - 2 + size) return false;
    tr.push_back(a - (iv.lo - 2));
  }
  Preference t(std::move(tr), size);
  return is_complete(t) && is_strategy(t, k);
}

namespace detail {

// Cars preferring >= p-1, shifted down by p-2 onto s-p+2 spots. Returns the
// translated preference and the original positions of its cars.
inline std::pair<Preference, std::vector<int>> critical_subproblem(const Preference& alpha, int p) {
  std::vector<int> prefs, pos;
  for (int i = 1; i <= alpha.cars(); ++i) {
    if (alpha.at(i) >= p - 1) {
      prefs.push_back(alpha.at(i) - (p - 2));
      pos.push_back(i);
    }
  }
  return {Preference(std::move(prefs), alpha.spots() - (p - 2)), std::move(pos)};
}

inline std::optional<CompleteWitness> extract_witness(const Preference& alpha, int k, Interval iv) {
  auto [sub, pos] = critical_subproblem(alpha, iv.lo);
  const auto out = park(sub, k);
  const int s = sub.spots();
  std::vector<int> parked_by(static_cast<std::size_t>(s) + 1, 0);  // spot -> sub car (1-based)
  for (int c = 1; c <= sub.cars(); ++c)
    if (auto sp = out.spot(c)) parked_by[static_cast<std::size_t>(*sp)] = c;

  for (int m = 1; m <= s; ++m) {
    const int c = parked_by[static_cast<std::size_t>(m)];
    if (c == 0) return std::nullopt;
    bool closed = true;
    for (int x = 1; x <= m && closed; ++x)
      if (sub.at(parked_by[static_cast<std::size_t>(x)]) > m) closed = false;
    if (!closed || m < 2) continue;
    CompleteWitness w;
    w.interval = iv;
    std::vector<int> tr;
    for (int x = 1; x <= m; ++x) w.positions.push_back(pos[static_cast<std::size_t>(parked_by[static_cast<std::size_t>(x)] - 1)]);
    std::sort(w.positions.begin(), w.positions.end());
    for (int j : w.positions) tr.push_back(alpha.at(j) - (iv.lo - 2));
    w.translated = Preference(std::move(tr), m);
    return w;
  }
  return std::nullopt;
}

}  // namespace detail

// Decides k-Naples membership interval by interval: an interval of length <= k
// always passes; a longer one passes when its critical spot p-1 is reached by
// the cars preferring >= p.
inline StructuralResult decide_knaples_structural(const Preference& alpha, int k) {
  detail::require_classical(alpha, "decide_knaples_structural");
  if (k < 0) throw InvalidInput("k must be nonnegative");
  StructuralResult res;
  res.member = true;
  const auto prof = deficiency_profile(alpha);
  for (const auto& iv : prof.intervals()) {
    IntervalVerdict v;
    v.interval = iv;
    if (iv.length() <= k) {
      v.passed = v.by_length = true;
    } else {
      auto [sub, pos] = detail::critical_subproblem(alpha, iv.lo);
      const auto out = park(sub, k);
      v.passed = std::any_of(out.assignment.begin(), out.assignment.end(),
                             [](const auto& sp) { return sp == 1; });
    }
    if (v.passed) v.witness = detail::extract_witness(alpha, k, iv);
    res.member = res.member && v.passed;
    res.intervals.push_back(std::move(v));
  }
  return res;
}

inline bool is_permutation_invariant(const Preference& alpha, int k) {
  detail::require_classical(alpha, "is_permutation_invariant");
  const auto prof = deficiency_profile(alpha);
  for (const auto& iv : prof.intervals())
    if (iv.length() > k) return false;
  return true;
}

// ---- 1-Naples chains ----

struct OneNaplesChain {
  Interval interval;
  std::vector<int> positions;  // j_1 < ... < j_m, 1-based
};

struct OneNaplesResult {
  bool member = false;
  std::vector<OneNaplesChain> chains;
};

namespace detail {

// Right-to-left scan for a chain a_{j1} = a_{j2} = v, then v-1, ..., p with v >= q.
// `ones` marks cars allowed to back up; null means every car may.
// Among all completable chains, returns the one whose head j_1 is latest.
inline std::optional<std::vector<int>> find_chain(const Preference& alpha, Interval iv,
                                                  const std::vector<int>* ones) {
  std::vector<int> tail;  // positions for p, p+1, ... (decreasing)
  std::optional<std::vector<int>> best;
  int best_head = 0;
  int bound = alpha.cars() + 1;
  for (int need = iv.lo; need <= alpha.spots(); ++need) {
    int found = 0;
    for (int i = bound - 1; i >= 1 && found == 0; --i)
      if (alpha.at(i) == need && (ones == nullptr || (*ones)[static_cast<std::size_t>(i - 1)] == 1))
        found = i;
    if (found == 0) break;
    tail.push_back(found);
    bound = found;
    if (need < iv.hi) continue;
    for (int i = found - 1; i >= 1; --i) {
      if (alpha.at(i) != need) continue;
      if (i > best_head) {
        best_head = i;
        std::vector<int> chain{i};
        chain.insert(chain.end(), tail.rbegin(), tail.rend());
        best = std::move(chain);
      }
      break;
    }
  }
  return best;
}

inline OneNaplesResult one_naples_chains(const Preference& alpha, const std::vector<int>* ones) {
  OneNaplesResult res;
  res.member = true;
  const auto prof = deficiency_profile(alpha);
  for (const auto& iv : prof.intervals()) {
    auto chain = find_chain(alpha, iv, ones);
    if (!chain) {
      res.member = false;
      continue;
    }
    res.chains.push_back({iv, std::move(*chain)});
  }
  return res;
}

}  // namespace detail

inline OneNaplesResult one_naples_check(const Preference& alpha) {
  detail::require_classical(alpha, "one_naples_membership");
  return detail::one_naples_chains(alpha, nullptr);
}

inline bool one_naples_membership(const Preference& alpha) { return one_naples_check(alpha).member; }

inline OneNaplesResult one_naples_rule_check_detail(const Preference& alpha, const RuleVector& rho) {
  detail::require_classical(alpha, "one_naples_rule_check");
  detail::require_same_length(alpha, rho.limits());
  for (int r : rho.limits())
    if (r != 0 && r != 1) throw InvalidInput("rule vector entries must be 0 or 1");
  return detail::one_naples_chains(alpha, &rho.values());
}

inline bool one_naples_rule_check(const Preference& alpha, const RuleVector& rho) {
  return one_naples_rule_check_detail(alpha, rho).member;
}

}  // namespace parking
