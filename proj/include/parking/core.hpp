#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace parking {

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Spots and car positions are 1-based everywhere in the public API.
// Internally prefs()[0] is car 1.
class Preference {
 public:
  Preference() = default;

  Preference(std::vector<int> prefs, int spots) : prefs_(std::move(prefs)), spots_(spots) {
    if (spots_ < 0 || (spots_ == 0 && !prefs_.empty()))
      throw InvalidInput("lot size must be at least 1");
    if (prefs_.size() > static_cast<std::size_t>(spots_))
      throw InvalidInput("more cars (" + std::to_string(prefs_.size()) + ") than spots (" +
                         std::to_string(spots_) + ")");
    mult_.assign(static_cast<std::size_t>(spots_) + 1, 0);
    for (int a : prefs_) {
      if (a < 1 || a > spots_)
        throw InvalidInput("preference " + std::to_string(a) + " out of range [1," +
                           std::to_string(spots_) + "]");
      ++mult_[static_cast<std::size_t>(a)];
    }
  }

  // Classical shape: as many cars as spots.
  explicit Preference(std::vector<int> prefs)
      : Preference(prefs, static_cast<int>(prefs.size())) {}

  std::span<const int> prefs() const { return prefs_; }
  const std::vector<int>& values() const { return prefs_; }
  int cars() const { return static_cast<int>(prefs_.size()); }
  int spots() const { return spots_; }
  bool classical() const { return cars() == spots_; }

  // Preference of car i, 1-based.
  int at(int i) const { return prefs_.at(static_cast<std::size_t>(i - 1)); }

  // |alpha|_i: number of cars preferring spot i.
  int multiplicity(int i) const {
    if (i < 1 || i > spots_) return 0;
    return mult_[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const Preference& a, const Preference& b) {
    return a.spots_ == b.spots_ && a.prefs_ == b.prefs_;
  }

 private:
  std::vector<int> prefs_;
  int spots_ = 0;
  std::vector<int> mult_;
};

inline Preference make_preference(std::vector<int> prefs, int spots) {
  if (spots < 1) throw InvalidInput("lot size must be at least 1");
  return Preference(std::move(prefs), spots);
}

struct Interval {
  int lo = 0;
  int hi = 0;
  int length() const { return hi - lo + 1; }
  bool contains(int j) const { return lo <= j && j <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

class DeficiencyProfile {
 public:
  DeficiencyProfile() = default;
  DeficiencyProfile(std::vector<int> u, int spots) : u_(std::move(u)), spots_(spots) {
    for (int j = 2; j <= spots_; ++j) {
      if (u_[static_cast<std::size_t>(j - 1)] < 1) continue;
      u_set_.push_back(j);
      if (!intervals_.empty() && intervals_.back().hi == j - 1)
        intervals_.back().hi = j;
      else
        intervals_.push_back({j, j});
    }
  }

  int spots() const { return spots_; }
  // u(j) for j in [1, s].
  int u(int j) const { return u_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& values() const { return u_; }
  const std::vector<int>& u_set() const { return u_set_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  bool in_u(int j) const { return j >= 2 && j <= spots_ && u(j) >= 1; }
  int max_u() const {
    int m = 0;
    for (int v : u_) m = std::max(m, v);
    return m;
  }

 private:
  std::vector<int> u_;
  int spots_ = 0;
  std::vector<int> u_set_;
  std::vector<Interval> intervals_;
};

// u(j) = sum_{i>=j} |alpha|_i - (s-j+1) for j >= 2. For partial preferences this
// is the value on the 1-padded preference, which only differs at j = 1, and
// there u(1) = 0 in the padded problem.
inline DeficiencyProfile deficiency_profile(const Preference& alpha) {
  const int s = alpha.spots();
  std::vector<int> u(static_cast<std::size_t>(s), 0);
  int tail = 0;
  for (int j = s; j >= 2; --j) {
    tail += alpha.multiplicity(j);
    u[static_cast<std::size_t>(j - 1)] = tail - (s - j + 1);
  }
  return DeficiencyProfile(std::move(u), s);
}

// ---- transforms ----

inline Preference translate(const Preference& alpha, int w) {
  if (w < 0) throw InvalidInput("translation amount must be nonnegative");
  int lo = alpha.spots();
  for (int a : alpha.prefs()) lo = std::min(lo, a);
  if (w > 0 && w >= lo)
    throw InvalidInput("translation by " + std::to_string(w) + " would push a preference below 1");
  std::vector<int> out(alpha.values());
  for (int& a : out) a -= w;
  return Preference(std::move(out), alpha.spots() - w);
}

// Keeps cars at the given 1-based positions, in their original order.
inline Preference restrict_to(const Preference& alpha, std::span<const int> positions) {
  std::vector<int> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("restriction positions must be distinct");
  std::vector<int> out;
  out.reserve(sorted.size());
  for (int j : sorted) {
    if (j < 1 || j > alpha.cars()) throw InvalidInput("restriction position out of range");
    out.push_back(alpha.at(j));
  }
  return Preference(std::move(out), alpha.spots());
}

// a -> s - a + 2, an involution on preferences avoiding spot 1.
inline Preference reflect_theta(const Preference& alpha) {
  if (alpha.multiplicity(1) != 0) throw InvalidInput("reflect_theta needs no car preferring spot 1");
  std::vector<int> out(alpha.values());
  for (int& a : out) a = alpha.spots() - a + 2;
  return Preference(std::move(out), alpha.spots());
}

// a -> s + 1 - a.
inline Preference complement(const Preference& alpha) {
  std::vector<int> out(alpha.values());
  for (int& a : out) a = alpha.spots() + 1 - a;
  return Preference(std::move(out), alpha.spots());
}

inline Preference sort_asc(const Preference& alpha) {
  std::vector<int> out(alpha.values());
  std::sort(out.begin(), out.end());
  return Preference(std::move(out), alpha.spots());
}

inline Preference sort_desc(const Preference& alpha) {
  std::vector<int> out(alpha.values());
  std::sort(out.begin(), out.end(), std::greater<>());
  return Preference(std::move(out), alpha.spots());
}

namespace transform_kind {
struct Translate { int w; };
struct Restrict { std::vector<int> positions; };
struct ReflectTheta {};
struct Complement {};
struct SortAsc {};
struct SortDesc {};
}  // namespace transform_kind

using Transform = std::variant<transform_kind::Translate, transform_kind::Restrict,
                               transform_kind::ReflectTheta, transform_kind::Complement,
                               transform_kind::SortAsc, transform_kind::SortDesc>;

inline Preference transform(const Preference& alpha, const Transform& kind) {
  using namespace transform_kind;
  struct Visitor {
    const Preference& a;
    Preference operator()(const Translate& t) const { return translate(a, t.w); }
    Preference operator()(const Restrict& r) const { return restrict_to(a, r.positions); }
    Preference operator()(const ReflectTheta&) const { return reflect_theta(a); }
    Preference operator()(const Complement&) const { return complement(a); }
    Preference operator()(const SortAsc&) const { return sort_asc(a); }
    Preference operator()(const SortDesc&) const { return sort_desc(a); }
  };
  return std::visit(Visitor{alpha}, kind);
}

// ---- text encodings ----

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view tok, const char* what) {
  tok = trim(tok);
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
    throw InvalidInput(std::string("cannot parse ") + what + " '" + std::string(tok) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

// "5,3,3,5,4" or "2,2@5".
inline Preference parse_preference(std::string_view text) {
  text = detail::trim(text);
  std::string_view body = text;
  int spots = -1;
  if (auto at = text.find('@'); at != std::string_view::npos) {
    body = text.substr(0, at);
    spots = detail::parse_int(text.substr(at + 1), "lot size");
    if (spots < 1) throw InvalidInput("lot size must be at least 1");
  }
  std::vector<int> prefs;
  if (!detail::trim(body).empty()) {
    for (auto tok : detail::split(body, ',')) prefs.push_back(detail::parse_int(tok, "preference"));
  }
  if (spots < 0) {
    if (prefs.empty()) throw InvalidInput("empty preference needs an explicit @s lot size");
    spots = static_cast<int>(prefs.size());
  }
  return make_preference(std::move(prefs), spots);
}

inline std::string format_preference(const Preference& alpha) {
  std::string out;
  for (int i = 0; i < alpha.cars(); ++i) {
    if (i) out += ',';
    out += std::to_string(alpha.prefs()[static_cast<std::size_t>(i)]);
  }
  if (!alpha.classical()) out += "@" + std::to_string(alpha.spots());
  return out;
}

}  // namespace parking
