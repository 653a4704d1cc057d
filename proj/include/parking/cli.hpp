#pragma once

// Command bodies behind the `parking` executable. Each returns a status and a
// payload so the commands can be tested without spawning a process.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "parking/characterize.hpp"
#include "parking/core.hpp"
#include "parking/count.hpp"
#include "parking/enumerate.hpp"
#include "parking/oracle.hpp"
#include "parking/simulate.hpp"
#include "parking/strategize.hpp"

namespace parking::cli {

enum class Status { ok = 0, membership_false = 1, invalid_input = 2, budget_exceeded = 3 };

struct CommandResult {
  Status status = Status::ok;
  std::string payload;

  int exit_code() const { return static_cast<int>(status); }
};

enum class Format { text, csv, json };
enum class CheckMode { simulate, structural, rtl, perminv, ones };
enum class TableKind { theta_eq, theta_leq, T, upsilon0, pf, knap };
enum class Goal { steps, cars, ones };
enum class Suite { counts, characterize, strategies, posets };

// Tables stop here; 128-bit counts overflow well before this anyway.
inline constexpr int kMaxTableN = 64;

namespace detail {

template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return {Status::budget_exceeded, std::string("budget exceeded: ") + e.what() + "\n"};
  } catch (const OverflowError& e) {
    return {Status::budget_exceeded, std::string("budget exceeded: ") + e.what() + "\n"};
  } catch (const InvalidInput& e) {
    return {Status::invalid_input, std::string("invalid input: ") + e.what() + "\n"};
  }
}

inline std::string spot_text(const std::optional<int>& s) { return s ? std::to_string(*s) : "-"; }

inline nlohmann::json spot_json(const std::optional<int>& s) {
  return s ? nlohmann::json(*s) : nlohmann::json("unparked");
}

inline std::string trace_line(const Outcome& out) {
  std::string line;
  for (std::size_t i = 0; i < out.assignment.size(); ++i) {
    if (i) line += ' ';
    line += spot_text(out.assignment[i]);
  }
  return line;
}

inline std::string join(const std::vector<int>& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace detail

inline CommandResult run_park(const std::string& prefs, const std::string& rules, Format format = Format::text) {
  return detail::guarded([&]() -> CommandResult {
    const auto alpha = parse_preference(prefs);
    const auto rho = parse_rules(rules, alpha.cars(), alpha.spots());
    const auto out = park(alpha, rho);
    const Status st = out.all_parked() ? Status::ok : Status::membership_false;
    if (format == Format::json) {
      nlohmann::json j;
      j["prefs"] = alpha.values();
      j["spots"] = alpha.spots();
      j["rules"] = rho.values();
      auto& a = j["assignment"] = nlohmann::json::array();
      for (const auto& s : out.assignment) a.push_back(detail::spot_json(s));
      j["backward_steps"] = out.backward_steps;
      j["forward_steps"] = out.forward_steps;
      j["total_backward"] = out.total_backward();
      j["total_forward"] = out.total_forward();
      j["strategy"] = out.all_parked();
      return {st, j.dump(2) + "\n"};
    }
    if (format == Format::csv) throw InvalidInput("park supports text and json output");
    std::string s = detail::trace_line(out) + "\n";
    s += "backward " + std::to_string(out.total_backward()) + " forward " + std::to_string(out.total_forward()) + "\n";
    s += std::string("strategy ") + (out.all_parked() ? "yes" : "no") + "\n";
    return {st, s};
  });
}

inline CommandResult run_check(const std::string& prefs, int k, CheckMode mode) {
  return detail::guarded([&]() -> CommandResult {
    const auto alpha = parse_preference(prefs);
    if (k < 0) throw InvalidInput("k must be nonnegative");
    std::ostringstream os;
    bool member = false;
    switch (mode) {
      case CheckMode::simulate: {
        const auto out = park(alpha, k);
        member = out.all_parked();
        os << "trace " << detail::trace_line(out) << "\n";
        break;
      }
      case CheckMode::structural: {
        parking::detail::require_classical(alpha, "structural check");
        const auto res = decide_knaples_structural(alpha, k);
        member = res.member;
        for (const auto& v : res.intervals) {
          os << "interval [" << v.interval.lo << "," << v.interval.hi << "] ";
          if (!v.passed) {
            os << "fails\n";
            continue;
          }
          os << (v.by_length ? "passes by length" : "passes");
          if (v.witness)
            os << " witness J=" << detail::join(v.witness->positions) << " translated "
               << format_preference(v.witness->translated);
          os << "\n";
        }
        break;
      }
      case CheckMode::rtl: {
        parking::detail::require_classical(alpha, "rtl check");
        if (alpha.spots() < 2 || !is_complete(alpha))
          throw PreconditionError("rtl check requires a complete preference (U = [2,n])");
        const auto res = complete_membership_rtl(alpha, k);
        member = res.member;
        os << "gap precheck " << (res.gap_precheck ? "passes" : "fails") << "\n";
        for (const auto& w : res.witnesses) {
          os << "maximum at " << w.position << " value " << w.value << " lambda ";
          os << (w.lambda ? std::to_string(*w.lambda) : "none") << "\n";
        }
        break;
      }
      case CheckMode::perminv:
        parking::detail::require_classical(alpha, "perminv check");
        member = is_permutation_invariant(alpha, k);
        break;
      case CheckMode::ones: {
        parking::detail::require_classical(alpha, "ones check");
        if (k != 1) throw PreconditionError("ones mode decides the k=1 rule; pass --k 1");
        const auto res = one_naples_check(alpha);
        member = res.member;
        for (const auto& c : res.chains)
          os << "interval [" << c.interval.lo << "," << c.interval.hi << "] chain " << detail::join(c.positions)
             << "\n";
        break;
      }
    }
    std::string head = std::string("member ") + (member ? "yes" : "no") + "\n";
    return {member ? Status::ok : Status::membership_false, head + os.str()};
  });
}

struct TableRow {
  std::string kind;
  int n = 0;
  std::optional<int> k;
  Count value;
};

inline std::string table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::theta_eq: return "theta_eq";
    case TableKind::theta_leq: return "theta_leq";
    case TableKind::T: return "T";
    case TableKind::upsilon0: return "upsilon0";
    case TableKind::pf: return "pf";
    case TableKind::knap: return "knap";
  }
  return "";
}

inline std::vector<TableRow> table_rows(TableKind kind, int nmax) {
  if (nmax < 1) throw InvalidInput("nmax must be at least 1");
  if (nmax > kMaxTableN) throw BudgetExceeded(static_cast<std::uint64_t>(nmax), kMaxTableN);
  const auto name = table_kind_name(kind);
  std::vector<TableRow> rows;
  for (int n = 1; n <= nmax; ++n) {
    switch (kind) {
      case TableKind::pf: rows.push_back({name, n, std::nullopt, count_pf_recursive(n)}); break;
      case TableKind::knap:
        for (int k = 1; k <= n; ++k) rows.push_back({name, n, k, count_knap_recursive(n, k)});
        break;
      default:
        for (int k = 1; k < n; ++k) {
          Count v;
          if (kind == TableKind::theta_eq) v = theta(n, k, ThetaKind::eq);
          if (kind == TableKind::theta_leq) v = theta(n, k, ThetaKind::leq);
          if (kind == TableKind::T) v = invariant_counts(n, k, InvariantKind::T);
          if (kind == TableKind::upsilon0) v = upsilon0(n, k);
          rows.push_back({name, n, k, v});
        }
    }
  }
  return rows;
}

inline std::string render_table(const std::vector<TableRow>& rows, Format format) {
  std::string out;
  if (format == Format::csv) {
    out = "kind,n,k,value\n";
    for (const auto& r : rows)
      out += r.kind + "," + std::to_string(r.n) + "," + (r.k ? std::to_string(*r.k) : "") + "," + r.value.str() + "\n";
    return out;
  }
  if (format == Format::json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j;
      j["kind"] = r.kind;
      j["n"] = r.n;
      if (r.k) j["k"] = *r.k;
      j["value"] = r.value.str();
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  // text: one line per n, values aligned in columns of k
  std::size_t width = 1;
  for (const auto& r : rows) width = std::max(width, r.value.str().size());
  auto pad = [&](const std::string& s) { return std::string(width + 1 - std::min(width, s.size()), ' ') + s; };
  if (!rows.empty()) out = rows.front().kind + "\n";
  int cur = -1;
  for (const auto& r : rows) {
    if (r.n != cur) {
      if (cur != -1) out += "\n";
      cur = r.n;
      out += "n=" + std::to_string(r.n) + (r.n < 10 ? " " : "") + " |";
    }
    out += pad(r.value.str());
  }
  if (!rows.empty()) out += "\n";
  return out;
}

inline CommandResult run_table(TableKind kind, int nmax, Format format = Format::text) {
  return detail::guarded([&]() -> CommandResult { return {Status::ok, render_table(table_rows(kind, nmax), format)}; });
}

inline CommandResult run_strategy(const std::string& prefs, Goal goal, bool all = false) {
  return detail::guarded([&]() -> CommandResult {
    const auto alpha = parse_preference(prefs);
    parking::detail::require_classical(alpha, "strategy");
    std::ostringstream os;
    auto trace = [&](const RuleVector& rho) {
      const auto out = park(alpha, rho);
      os << "trace " << detail::trace_line(out) << "\n";
      os << "steps backward " << out.total_backward() << " forward " << out.total_forward() << "\n";
    };
    switch (goal) {
      case Goal::steps: {
        os << "minimum total limit " << min_step_strategy(alpha).total << "\n";
        os << "minimum total steps " << min_total_steps(alpha) << "\n";
        if (all) {
          const auto list = enumerate_min_step_strategies(alpha);
          os << "optimal vectors " << list.count.str() << "\n";
          for (const auto& p : list.plans) {
            os << "rho " << format_rules(p.rho) << "\n";
            trace(p.rho);
          }
        } else {
          const auto plan = min_step_strategy(alpha);
          os << "rho " << format_rules(plan.rho) << "\n";
          trace(plan.rho);
        }
        break;
      }
      case Goal::cars: {
        const auto plan = min_cars_strategy(alpha);
        os << "unlimited cars " << plan.tilde_t.size() << " at " << detail::join(plan.tilde_t) << "\n";
        os << "rho " << format_rules(plan.rho) << "\n";
        trace(plan.rho);
        break;
      }
      case Goal::ones: {
        const auto rho = min_ones_strategy(alpha);
        os << "ones " << rho.rank() << "\n";
        os << "rho " << format_rules(rho) << "\n";
        trace(rho);
        break;
      }
    }
    return {Status::ok, os.str()};
  });
}

// Census budget from PARKING_MAX_N (largest n whose n^n census is allowed), or the default.
inline std::uint64_t budget_for_max_n(int max_n) {
  if (max_n < 1) throw InvalidInput("max-n must be at least 1");
  return census_size(max_n, max_n);
}

inline std::optional<int> env_max_n() {
  const char* v = std::getenv("PARKING_MAX_N");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return parking::detail::parse_int(v, "PARKING_MAX_N");
}

inline CommandResult run_oracle(Suite suite, int nmax, unsigned workers = 1,
                                std::optional<int> max_n = std::nullopt) {
  return detail::guarded([&]() -> CommandResult {
    if (nmax < 1) throw InvalidInput("nmax must be at least 1");
    oracle::Options opt;
    opt.workers = std::max(1U, workers);
    if (!max_n) max_n = env_max_n();
    if (max_n) opt.census_budget = budget_for_max_n(*max_n);
    oracle::Report rep;
    switch (suite) {
      case Suite::counts: rep = oracle::counts_suite(nmax, opt); break;
      case Suite::characterize: rep = oracle::characterize_suite(nmax, opt); break;
      case Suite::strategies: rep = oracle::strategies_suite(nmax, opt); break;
      case Suite::posets: rep = oracle::posets_suite(nmax, opt); break;
    }
    return {rep.passed() ? Status::ok : Status::membership_false, rep.text()};
  });
}

}  // namespace parking::cli
