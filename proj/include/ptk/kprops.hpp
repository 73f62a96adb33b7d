#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ptk/error.hpp"
#include "ptk/intpart.hpp"
#include "ptk/order/lattice.hpp"
#include "ptk/order/poset.hpp"

namespace ptk::kprops {

using intpart::IntPartition;

enum class Kind { partitionability, producibility, stretchability };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::partitionability: return "part";
    case Kind::producibility: return "prod";
    case Kind::stretchability: return "str";
  }
  return "?";
}

inline Kind parse_kind(const std::string& s) {
  if (s == "part" || s == "partitionability") return Kind::partitionability;
  if (s == "prod" || s == "producibility") return Kind::producibility;
  if (s == "str" || s == "stretch" || s == "stretchability") return Kind::stretchability;
  throw ValidationError("unknown property kind '" + s + "' (expected part, prod or str)");
}

/// A threshold that may be a half-integer, stored as twice its value.
struct HalfInt {
  long long twice = 0;
  static HalfInt whole(long long v) { return {2 * v}; }
  bool is_integer() const { return twice % 2 == 0; }
  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
  friend bool operator==(HalfInt, HalfInt) = default;
};

/// Membership of a partition in the property ideal with the given (possibly half-integer) threshold:
/// height >= t, width <= t, or rank <= t.
inline bool satisfies(const IntPartition& x, Kind kind, HalfInt t) {
  switch (kind) {
    case Kind::partitionability: return 2LL * x.height() >= t.twice;
    case Kind::producibility: return 2LL * x.width() <= t.twice;
    case Kind::stretchability: return 2LL * x.rank() <= t.twice;
  }
  return false;
}

inline std::pair<int, int> k_range(int n, Kind kind) {
  if (kind == Kind::stretchability) return {-(n - 1), n - 1};
  return {1, n};
}

struct KPropertyIdeal {
  int n = 0;
  Kind kind = Kind::partitionability;
  int k = 0;
  std::vector<IntPartition> members; // reverse-lexicographic order

  bool contains(const IntPartition& x) const { return std::find(members.begin(), members.end(), x) != members.end(); }
  bool subset_of(const KPropertyIdeal& o) const {
    return std::all_of(members.begin(), members.end(), [&](const auto& x) { return o.contains(x); });
  }
};

inline std::vector<IntPartition> members_with(int n, Kind kind, HalfInt t) {
  std::vector<IntPartition> out;
  for (auto& x : intpart::enumerate_intpartitions(n))
    if (satisfies(x, kind, t)) out.push_back(x);
  return out;
}

inline KPropertyIdeal property_ideal(int n, Kind kind, int k) {
  auto [lo, hi] = k_range(n, kind);
  if (n < 1 || k < lo || k > hi)
    throw ValidationError(std::string(kind_name(kind)) + " property needs " + std::to_string(lo) + " <= k <= " +
                          std::to_string(hi) + " for n=" + std::to_string(n) + ", got k=" + std::to_string(k));
  return KPropertyIdeal{n, kind, k, members_with(n, kind, HalfInt::whole(k))};
}

/// Partitions with at least k parts.
inline KPropertyIdeal kpart_ideal(int n, int k) { return property_ideal(n, Kind::partitionability, k); }
/// Partitions with no part above k.
inline KPropertyIdeal kprod_ideal(int n, int k) { return property_ideal(n, Kind::producibility, k); }
/// Partitions of rank at most k.
inline KPropertyIdeal kstr_ideal(int n, int k) { return property_ideal(n, Kind::stretchability, k); }

/// Maximal elements of a property ideal under refinement.
inline std::vector<IntPartition> maximal_members(const KPropertyIdeal& ideal) {
  std::vector<IntPartition> out;
  for (const auto& x : ideal.members) {
    bool dominated = false;
    for (const auto& y : ideal.members)
      if (!(y == x) && intpart::refines_int(x, y)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(x);
  }
  return out;
}

/// Partitionability ideals shrink as k grows; producibility and stretchability ideals grow.
inline bool chain_check(int n, Kind kind) {
  auto [lo, hi] = k_range(n, kind);
  for (int k = lo; k < hi; ++k) {
    auto a = property_ideal(n, kind, k), b = property_ideal(n, kind, k + 1);
    const bool ok = kind == Kind::partitionability ? b.subset_of(a) : a.subset_of(b);
    if (!ok) return false;
  }
  return true;
}

/// The six inclusions between property ideals implied by the height/width/rank bounds.
struct BoundRelation {
  const char* name;
  Kind from;
  Kind to;
};

inline constexpr std::array<BoundRelation, 6> bound_relations{{
    {"part->prod", Kind::partitionability, Kind::producibility},
    {"part->str", Kind::partitionability, Kind::stretchability},
    {"prod->part", Kind::producibility, Kind::partitionability},
    {"prod->str", Kind::producibility, Kind::stretchability},
    {"str->part", Kind::stretchability, Kind::partitionability},
    {"str->prod", Kind::stretchability, Kind::producibility},
}};

/// Target threshold of relation `r` for source parameter k: k-part in (n+1-k)-prod, (n+1-2k)-str;
/// k-prod in ceil(n/k)-part, (k-ceil(n/k))-str; k-str in ((ceil sqrt(k^2+4n))-k)/2-part, (n+1+k)/2-prod.
inline HalfInt bound_target(int n, std::size_t relation, int k) {
  const long long N = n, K = k;
  switch (relation) {
    case 0: return HalfInt::whole(N + 1 - K);
    case 1: return HalfInt::whole(N + 1 - 2 * K);
    case 2: return HalfInt::whole(intpart::ceil_div(N, K));
    case 3: return HalfInt::whole(K - intpart::ceil_div(N, K));
    case 4: return HalfInt{intpart::ceil_sqrt(K * K + 4 * N) - K};
    case 5: return HalfInt{N + 1 + K};
  }
  throw ValidationError("unknown bound relation");
}

struct BoundEntry {
  int k = 0;
  HalfInt target;
  bool holds = true;
  std::optional<IntPartition> violator;
  /// A member of the source ideal sitting on the boundary of the target ideal, if any.
  std::optional<IntPartition> tight;
};

struct BoundFamily {
  std::string name;
  bool holds = true;
  std::vector<BoundEntry> entries;
};

struct DualityReport {
  int n = 0;
  std::array<BoundFamily, 6> families;
  bool holds() const {
    return std::all_of(families.begin(), families.end(), [](const auto& f) { return f.holds; });
  }
};

namespace detail {
inline bool on_boundary(const IntPartition& x, Kind kind, HalfInt t) {
  // the next stricter integer threshold would exclude x
  switch (kind) {
    case Kind::partitionability: return 2LL * x.height() < t.twice + 2;
    case Kind::producibility: return 2LL * x.width() > t.twice - 2;
    case Kind::stretchability: return 2LL * x.rank() > t.twice - 2;
  }
  return false;
}
} // namespace detail

inline DualityReport duality_bounds(int n) {
  if (n < 1 || n > Limits::max_intpart_n)
    throw SizeCapError("duality bounds for n=" + std::to_string(n), Limits::max_intpart_n, static_cast<std::size_t>(std::max(n, 0)));
  const auto all = intpart::enumerate_intpartitions(n);
  DualityReport rep;
  rep.n = n;
  for (std::size_t r = 0; r < bound_relations.size(); ++r) {
    const auto& rel = bound_relations[r];
    auto& fam = rep.families[r];
    fam.name = rel.name;
    auto [lo, hi] = k_range(n, rel.from);
    for (int k = lo; k <= hi; ++k) {
      BoundEntry e;
      e.k = k;
      e.target = bound_target(n, r, k);
      for (const auto& x : all) {
        if (!satisfies(x, rel.from, HalfInt::whole(k))) continue;
        if (!satisfies(x, rel.to, e.target)) {
          e.holds = false;
          if (!e.violator) e.violator = x;
        } else if (!e.tight && detail::on_boundary(x, rel.to, e.target)) {
          e.tight = x;
        }
      }
      fam.holds = fam.holds && e.holds;
      fam.entries.push_back(std::move(e));
    }
  }
  return rep;
}

/// {m,1,...,1} and {m,...,m, n-(ceil(n/m)-1)m}.
inline std::pair<IntPartition, IntPartition> saturation_witnesses(int n, int m) {
  if (m < 1 || m > n) throw ValidationError("saturation witnesses need 1 <= m <= n");
  std::vector<int> a{m};
  a.insert(a.end(), static_cast<std::size_t>(n - m), 1);
  const long long copies = intpart::ceil_div(n, m) - 1;
  std::vector<int> b(static_cast<std::size_t>(copies), m);
  b.push_back(n - static_cast<int>(copies) * m);
  return {IntPartition(std::move(a)), IntPartition(std::move(b))};
}

/// Which designated bounds each witness attains.
/// The hook-shaped witness is designated for the upper bounds of every inequality except
/// rank-by-width, where it is designated for the lower bound; the block-shaped witness the reverse.
struct SaturationCheck {
  IntPartition hook;
  IntPartition blocks;
  std::array<bool, 6> hook_saturates{};
  std::array<bool, 6> blocks_saturates{};
  bool hook_ok() const { return std::all_of(hook_saturates.begin(), hook_saturates.end(), [](bool b) { return b; }); }
  bool blocks_ok() const { return std::all_of(blocks_saturates.begin(), blocks_saturates.end(), [](bool b) { return b; }); }
};

inline SaturationCheck saturation_check(int n, int m) {
  auto [a, b] = saturation_witnesses(n, m);
  SaturationCheck c{a, b, {}, {}};
  auto sa = intpart::saturation(a), sb = intpart::saturation(b);
  for (std::size_t i = 0; i < 6; ++i) {
    c.hook_saturates[i] = i == 3 ? sa.lower[i] : sa.upper[i];
    c.blocks_saturates[i] = i == 3 ? sb.upper[i] : sb.lower[i];
  }
  return c;
}

inline constexpr int max_strict_filter_n = 8;

/// Principal up-set of the property ideal inside the lattice of down-sets of integer partitions.
inline order::OrderFilter<order::OrderIdeal<IntPartition>> strict_class_filter(int n, Kind kind, int k) {
  if (n < 1 || n > max_strict_filter_n)
    throw SizeCapError("strict class filter for n=" + std::to_string(n), max_strict_filter_n, static_cast<std::size_t>(std::max(n, 0)));
  auto ideal = property_ideal(n, kind, k);
  auto p1 = std::make_shared<const order::Poset<IntPartition>>(intpart::refinement_poset(n));
  auto q = order::ideal_lattice(p1);
  Bitset m(p1->size());
  for (const auto& x : ideal.members) m.set(*p1->index_of(x));
  auto idx = q->index_of(order::OrderIdeal<IntPartition>(p1, m));
  if (!idx) throw ValidationError("property set is not a down-set");
  return order::OrderFilter<order::OrderIdeal<IntPartition>>::principal(q, *idx);
}

/// CSV rows: n,kind,k,size,maximal elements (space separated),trivial,bounds_ok.
/// A row is trivial when its ideal holds every integer partition of n.
inline std::string kprops_csv(int n) {
  const bool bounds_ok = duality_bounds(n).holds();
  const auto total = intpart::partition_count(n);
  std::ostringstream os;
  os << "n,kind,k,size,maximal,trivial,bounds_ok\n";
  for (Kind kind : {Kind::partitionability, Kind::producibility, Kind::stretchability}) {
    auto [lo, hi] = k_range(n, kind);
    for (int k = lo; k <= hi; ++k) {
      auto ideal = property_ideal(n, kind, k);
      os << n << ',' << kind_name(kind) << ',' << k << ',' << ideal.members.size() << ',';
      auto mx = maximal_members(ideal);
      for (std::size_t i = 0; i < mx.size(); ++i) os << (i ? " " : "") << intpart::to_string(mx[i]);
      os << ',' << (ideal.members.size() == total ? "true" : "false") << ',' << (bounds_ok ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

} // namespace ptk::kprops
