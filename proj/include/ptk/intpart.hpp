#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ptk/error.hpp"
#include "ptk/limits.hpp"
#include "ptk/order/poset.hpp"

namespace ptk::intpart {

/// Integer partition of n stored as non-increasing positive parts.
class IntPartition {
public:
  IntPartition() = default;

  /// Sorts the given parts into canonical (non-increasing) order.
  explicit IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw ValidationError("integer partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    if (parts_.empty()) throw ValidationError("integer partition must have at least one part");
  }

  int n() const noexcept { return n_; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  int height() const noexcept { return static_cast<int>(parts_.size()); }
  int width() const noexcept { return parts_.front(); }
  int rank() const noexcept { return width() - height(); }

  friend bool operator==(const IntPartition&, const IntPartition&) = default;
  friend std::strong_ordering operator<=>(const IntPartition& a, const IntPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int n_ = 0;
};

inline int height(const IntPartition& x) { return x.height(); }
inline int width(const IntPartition& x) { return x.width(); }
inline int rank(const IntPartition& x) { return x.rank(); }

/// {n}
inline IntPartition top(int n) { return IntPartition({n}); }
/// {1,...,1}
inline IntPartition bottom(int n) { return IntPartition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

inline void check_n(int n, int cap, const char* what) {
  if (n < 1 || n > cap) throw SizeCapError(std::string(what) + " for n=" + std::to_string(n), static_cast<std::size_t>(cap),
                                           static_cast<std::size_t>(std::max(n, 0)));
}

/// All partitions of n, reverse-lexicographic ({n} first, {1,...,1} last).
inline std::vector<IntPartition> enumerate_intpartitions(int n) {
  check_n(n, Limits::max_intpart_n, "integer partition enumeration");
  std::vector<IntPartition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Number of partitions of n.
inline std::uint64_t partition_count(int n) {
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(n)];
}

/// Transposed Young diagram.
inline IntPartition conjugate(const IntPartition& x) {
  std::vector<int> out(static_cast<std::size_t>(x.width()), 0);
  for (int p : x.parts())
    for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
  return IntPartition(std::move(out));
}

/// True iff the parts of `v` can be grouped so that the group sums are exactly the parts of `x`.
/// Decided by placing v's parts (largest first) into x's parts as bins that must be filled exactly.
inline bool refines_int(const IntPartition& v, const IntPartition& x) {
  if (v.n() != x.n()) throw ValidationError("refines_int: partitions of different n (" + std::to_string(v.n()) + " vs " +
                                            std::to_string(x.n()) + ")");
  if (v.height() < x.height() || v.width() > x.width()) return false;
  const auto& items = v.parts();
  std::set<std::pair<std::size_t, std::vector<int>>> dead;
  auto place = [&](auto&& self, std::size_t i, std::vector<int>& caps) -> bool {
    if (i == items.size()) return true;
    std::vector<int> key = caps;
    std::sort(key.begin(), key.end());
    if (dead.count({i, key})) return false;
    const int item = items[i];
    int last_tried = -1;
    for (std::size_t b = 0; b < caps.size(); ++b) {
      if (caps[b] < item || caps[b] == last_tried) continue;
      last_tried = caps[b];
      caps[b] -= item;
      // a bin left with less room than the smallest remaining item can never be closed
      bool ok = caps[b] == 0 || caps[b] >= items.back();
      if (ok && self(self, i + 1, caps)) return true;
      caps[b] += item;
    }
    dead.insert({i, std::move(key)});
    return false;
  };
  std::vector<int> caps = x.parts();
  return place(place, 0, caps);
}

/// P-bar_I(n): integer partitions of n under refinement.
inline order::Poset<IntPartition> refinement_poset(int n) {
  check_n(n, Limits::max_intpart_pairs_n, "integer partition pairwise order");
  return order::build_poset(enumerate_intpartitions(n), refines_int);
}

/// Covering pairs (finer, coarser) of the refinement order on partitions of n.
inline std::vector<std::pair<IntPartition, IntPartition>> covers(int n) {
  auto p = refinement_poset(n);
  std::vector<std::pair<IntPartition, IntPartition>> out;
  for (auto [lo, hi] : order::hasse_edges(p)) out.emplace_back(p.element(lo), p.element(hi));
  return out;
}

struct BoundCheck {
  bool h_by_w = false;
  bool w_by_h = false;
  bool r_by_h = false;
  bool r_by_w = false;
  bool h_by_r = false;
  bool w_by_r = false;
  bool all() const noexcept { return h_by_w && w_by_h && r_by_h && r_by_w && h_by_r && w_by_r; }
};

namespace detail {
/// sqrt(d) <= t, exactly, for integer t and d >= 0.
inline bool sqrt_le(long long d, long long t) { return t >= 0 && d <= t * t; }
} // namespace detail

/// Evaluates the six height/width/rank double inequalities in exact integer arithmetic.
inline BoundCheck bound_check(const IntPartition& x) {
  const long long n = x.n(), h = x.height(), w = x.width(), r = x.rank();
  const long long d = r * r + 4 * n;
  BoundCheck b;
  b.h_by_w = n <= h * w && h <= n + 1 - w;
  b.w_by_h = n <= w * h && w <= n + 1 - h;
  b.r_by_h = n <= h * (r + h) && r <= n + 1 - 2 * h;
  b.r_by_w = -(n + 1) + 2 * w <= r && r * w <= w * w - n;
  b.h_by_r = detail::sqrt_le(d, 2 * h + r) && 2 * h <= n + 1 - r;
  b.w_by_r = detail::sqrt_le(d, 2 * w - r) && 2 * w <= n + 1 + r;
  return b;
}

inline long long ceil_div(long long a, long long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}
inline long long floor_div(long long a, long long b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

/// Smallest integer t with t*t >= d (d >= 0).
inline long long ceil_sqrt(long long d) {
  long long t = 0;
  while (t * t < d) ++t;
  return t;
}

/// Which bound of each inequality is attained, after integer strengthening
/// (ceil of a non-integer lower bound, floor of a non-integer upper bound).
struct Saturation {
  // index: 0 h_by_w, 1 w_by_h, 2 r_by_h, 3 r_by_w, 4 h_by_r, 5 w_by_r
  std::array<bool, 6> lower{};
  std::array<bool, 6> upper{};
};

inline Saturation saturation(const IntPartition& x) {
  const long long n = x.n(), h = x.height(), w = x.width(), r = x.rank();
  Saturation st;
  st.lower[0] = ceil_div(n, w) == h;
  st.upper[0] = n + 1 - w == h;
  st.lower[1] = ceil_div(n, h) == w;
  st.upper[1] = n + 1 - h == w;
  st.lower[2] = ceil_div(n, h) - h == r;
  st.upper[2] = n + 1 - 2 * h == r;
  st.lower[3] = -(n + 1) + 2 * w == r;
  st.upper[3] = w - ceil_div(n, w) == r;
  // ceil((sqrt(d) -/+ r)/2): smallest integer t with 2t >= sqrt(d) -/+ r
  auto ceil_half_sqrt = [&](long long shift) {
    long long t = -n - 2;
    while (!detail::sqrt_le(r * r + 4 * n, 2 * t + shift)) ++t;
    return t;
  };
  st.lower[4] = ceil_half_sqrt(r) == h;
  st.upper[4] = floor_div(n + 1 - r, 2) == h;
  st.lower[5] = ceil_half_sqrt(-r) == w;
  st.upper[5] = floor_div(n + 1 + r, 2) == w;
  return st;
}

inline std::string to_string(const IntPartition& x) {
  std::string out;
  for (std::size_t i = 0; i < x.parts().size(); ++i) {
    if (i) out += '+';
    out += std::to_string(x.parts()[i]);
  }
  return out;
}

inline std::string to_label(const IntPartition& x) { return to_string(x); }

/// Multiset notation, e.g. "{2,1,1}".
inline std::string to_set_string(const IntPartition& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x.parts()[i]);
  }
  return out + "}";
}

/// One row of '#' per part.
inline std::string young_diagram(const IntPartition& x) {
  std::string out;
  for (int p : x.parts()) out += std::string(static_cast<std::size_t>(p), '#') + '\n';
  return out;
}

/// Accepts "2+1+1", "2,1,1" or "{2,1,1}".
inline IntPartition parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '{' && c != '}') s += (c == ',' ? '+' : c);
  if (s.empty()) throw ValidationError("empty integer partition string");
  if (s.back() == '+') throw ValidationError("malformed integer partition '" + text + "'");
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("malformed integer partition '" + text + "'");
    parts.push_back(std::stoi(tok));
  }
  return IntPartition(std::move(parts));
}

} // namespace ptk::intpart
