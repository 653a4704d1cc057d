#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parking/core.hpp"

namespace parking {

// Per-car backward limits. Values of s-1 and above all mean "back up to spot 1".
class RuleVector {
 public:
  RuleVector() = default;
  explicit RuleVector(std::vector<int> limits) : limits_(std::move(limits)) {
    for (int r : limits_)
      if (r < 0) throw InvalidInput("rule limits must be nonnegative");
  }

  static RuleVector constant(int cars, int k) {
    return RuleVector(std::vector<int>(static_cast<std::size_t>(cars), k));
  }
  static RuleVector zeros(int cars) { return constant(cars, 0); }

  std::span<const int> limits() const { return limits_; }
  const std::vector<int>& values() const { return limits_; }
  int size() const { return static_cast<int>(limits_.size()); }
  // r_i, 1-based.
  int at(int i) const { return limits_.at(static_cast<std::size_t>(i - 1)); }

  long long rank() const {
    long long r = 0;
    for (int v : limits_) r += v;
    return r;
  }

  bool leq(const RuleVector& o) const {
    if (o.size() != size()) return false;
    for (std::size_t i = 0; i < limits_.size(); ++i)
      if (limits_[i] > o.limits_[i]) return false;
    return true;
  }

  friend bool operator==(const RuleVector&, const RuleVector&) = default;
  friend auto operator<=>(const RuleVector&, const RuleVector&) = default;

 private:
  std::vector<int> limits_;
};

struct Outcome {
  std::vector<std::optional<int>> assignment;
  std::vector<int> backward_steps;
  std::vector<int> forward_steps;

  bool all_parked() const {
    return std::all_of(assignment.begin(), assignment.end(), [](const auto& p) { return p.has_value(); });
  }
  // Spot of car i (1-based), or nullopt when it failed to park.
  std::optional<int> spot(int i) const { return assignment.at(static_cast<std::size_t>(i - 1)); }
  long long total_backward() const {
    long long t = 0;
    for (int v : backward_steps) t += v;
    return t;
  }
  long long total_forward() const {
    long long t = 0;
    for (int v : forward_steps) t += v;
    return t;
  }
};

namespace detail {
inline void require_same_length(const Preference& alpha, std::span<const int> limits) {
  if (static_cast<int>(limits.size()) != alpha.cars())
    throw InvalidInput("rule vector has " + std::to_string(limits.size()) + " entries for " +
                       std::to_string(alpha.cars()) + " cars");
}
}  // namespace detail

inline Outcome park(const Preference& alpha, const RuleVector& rho) {
  detail::require_same_length(alpha, rho.limits());
  const int s = alpha.spots();
  const int m = alpha.cars();
  std::vector<char> taken(static_cast<std::size_t>(s) + 1, 0);
  Outcome out;
  out.assignment.assign(static_cast<std::size_t>(m), std::nullopt);
  out.backward_steps.assign(static_cast<std::size_t>(m), 0);
  out.forward_steps.assign(static_cast<std::size_t>(m), 0);

  for (int i = 0; i < m; ++i) {
    const int a = alpha.prefs()[static_cast<std::size_t>(i)];
    const int r = rho.limits()[static_cast<std::size_t>(i)];
    int spot = 0;
    if (!taken[static_cast<std::size_t>(a)]) {
      spot = a;
    } else {
      const int lo = std::max(1, a - r);
      for (int p = a - 1; p >= lo && spot == 0; --p)
        if (!taken[static_cast<std::size_t>(p)]) spot = p;
      for (int p = a + 1; p <= s && spot == 0; ++p)
        if (!taken[static_cast<std::size_t>(p)]) spot = p;
    }
    if (spot == 0) continue;
    taken[static_cast<std::size_t>(spot)] = 1;
    out.assignment[static_cast<std::size_t>(i)] = spot;
    if (spot < a)
      out.backward_steps[static_cast<std::size_t>(i)] = a - spot;
    else
      out.forward_steps[static_cast<std::size_t>(i)] = spot - a;
  }
  return out;
}

inline Outcome park(const Preference& alpha, int k) {
  return park(alpha, RuleVector::constant(alpha.cars(), k));
}

// Allocation-free success test on raw data; the census loops call this directly.
inline bool parks_all(std::span<const int> prefs, std::span<const int> limits, int spots) {
  if (spots <= 63) {
    std::uint64_t taken = 0;
    for (std::size_t i = 0; i < prefs.size(); ++i) {
      const int a = prefs[i];
      if (!(taken >> a & 1U)) {
        taken |= std::uint64_t{1} << a;
        continue;
      }
      const int lo = std::max(1, a - limits[i]);
      int spot = 0;
      for (int p = a - 1; p >= lo; --p)
        if (!(taken >> p & 1U)) {
          spot = p;
          break;
        }
      if (spot == 0)
        for (int p = a + 1; p <= spots; ++p)
          if (!(taken >> p & 1U)) {
            spot = p;
            break;
          }
      if (spot == 0) return false;
      taken |= std::uint64_t{1} << spot;
    }
    return true;
  }
  std::vector<char> taken(static_cast<std::size_t>(spots) + 1, 0);
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    const int a = prefs[i];
    int spot = 0;
    if (!taken[static_cast<std::size_t>(a)]) {
      spot = a;
    } else {
      const int lo = std::max(1, a - limits[i]);
      for (int p = a - 1; p >= lo && spot == 0; --p)
        if (!taken[static_cast<std::size_t>(p)]) spot = p;
      for (int p = a + 1; p <= spots && spot == 0; ++p)
        if (!taken[static_cast<std::size_t>(p)]) spot = p;
    }
    if (spot == 0) return false;
    taken[static_cast<std::size_t>(spot)] = 1;
  }
  return true;
}

// Same as parks_all with every limit equal to k.
inline bool parks_all_constant(std::span<const int> prefs, int k, int spots) {
  if (spots > 63) {
    std::vector<int> limits(prefs.size(), k);
    return parks_all(prefs, limits, spots);
  }
  std::uint64_t taken = 0;
  for (int a : prefs) {
    if (!(taken >> a & 1U)) {
      taken |= std::uint64_t{1} << a;
      continue;
    }
    const int lo = std::max(1, a - k);
    int spot = 0;
    for (int p = a - 1; p >= lo; --p)
      if (!(taken >> p & 1U)) {
        spot = p;
        break;
      }
    if (spot == 0)
      for (int p = a + 1; p <= spots; ++p)
        if (!(taken >> p & 1U)) {
          spot = p;
          break;
        }
    if (spot == 0) return false;
    taken |= std::uint64_t{1} << spot;
  }
  return true;
}

inline bool is_strategy(const Preference& alpha, const RuleVector& rho) {
  detail::require_same_length(alpha, rho.limits());
  return parks_all(alpha.prefs(), rho.limits(), alpha.spots());
}

inline bool is_strategy(const Preference& alpha, int k) {
  return parks_all_constant(alpha.prefs(), k, alpha.spots());
}

struct CircularOutcome {
  std::vector<int> occupied;  // sorted
  std::vector<int> assignment;
};

// Forward-only parking on a circular lot. With fewer cars than spots every car parks.
inline CircularOutcome park_circular(const Preference& alpha) {
  const int s = alpha.spots();
  if (alpha.cars() >= s) throw InvalidInput("circular parking needs fewer cars than spots");
  std::vector<char> taken(static_cast<std::size_t>(s) + 1, 0);
  CircularOutcome out;
  for (int a : alpha.prefs()) {
    int p = a;
    while (taken[static_cast<std::size_t>(p)]) p = p == s ? 1 : p + 1;
    taken[static_cast<std::size_t>(p)] = 1;
    out.assignment.push_back(p);
  }
  for (int p = 1; p <= s; ++p)
    if (taken[static_cast<std::size_t>(p)]) out.occupied.push_back(p);
  return out;
}

// "0,1,2", "k=3", "inf", or a list mixing integers and "inf". inf means r = s.
inline RuleVector parse_rules(std::string_view text, int cars, int spots) {
  text = detail::trim(text);
  if (text.rfind("k=", 0) == 0) {
    auto rest = detail::trim(text.substr(2));
    int k = rest == "inf" ? spots : detail::parse_int(rest, "rule constant");
    if (k < 0) throw InvalidInput("rule constant must be nonnegative");
    return RuleVector::constant(cars, k);
  }
  if (text == "inf") return RuleVector::constant(cars, spots);
  std::vector<int> limits;
  if (!text.empty()) {
    for (auto tok : detail::split(text, ',')) {
      tok = detail::trim(tok);
      int r = tok == "inf" ? spots : detail::parse_int(tok, "rule limit");
      if (r < 0) throw InvalidInput("rule limits must be nonnegative");
      limits.push_back(r);
    }
  }
  if (static_cast<int>(limits.size()) != cars)
    throw InvalidInput("rule vector has " + std::to_string(limits.size()) + " entries for " +
                       std::to_string(cars) + " cars");
  return RuleVector(std::move(limits));
}

inline std::string format_rules(const RuleVector& rho) {
  std::string out;
  for (int i = 1; i <= rho.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(rho.at(i));
  }
  return out;
}

}  // namespace parking
