#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ptk/error.hpp"
#include "ptk/intpart.hpp"
#include "ptk/limits.hpp"
#include "ptk/order/poset.hpp"

namespace ptk::setpart {

/// Partition of the sites {0..n-1}, held as a restricted-growth string.
class SetPartition {
public:
  static constexpr int max_sites = 16;

  SetPartition() = default;

  /// Canonicalizes an arbitrary block assignment (labels may be any small integers).
  static SetPartition from_assignment(const std::vector<int>& block_of) {
    const int n = static_cast<int>(block_of.size());
    if (n < 1 || n > max_sites)
      throw ValidationError("set partition needs 1.." + std::to_string(max_sites) + " sites, got " + std::to_string(n));
    SetPartition x;
    x.n_ = n;
    std::vector<std::pair<int, int>> seen;
    for (int i = 0; i < n; ++i) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](auto& p) { return p.first == block_of[i]; });
      if (it == seen.end()) {
        seen.emplace_back(block_of[i], static_cast<int>(seen.size()));
        x.rgs_[i] = static_cast<std::uint8_t>(seen.size() - 1);
      } else {
        x.rgs_[i] = static_cast<std::uint8_t>(it->second);
      }
    }
    x.blocks_ = static_cast<int>(seen.size());
    return x;
  }

  /// Accepts only an already-canonical restricted-growth string.
  static SetPartition from_rgs(const std::vector<int>& rgs) {
    int mx = -1;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      if (rgs[i] < 0 || rgs[i] > mx + 1)
        throw ValidationError("sequence is not a restricted-growth string at position " + std::to_string(i));
      mx = std::max(mx, rgs[i]);
    }
    return from_assignment(rgs);
  }

  int n() const noexcept { return n_; }
  int block_count() const noexcept { return blocks_; }
  int block_of(int site) const noexcept { return rgs_[static_cast<std::size_t>(site)]; }
  std::vector<int> rgs() const { return std::vector<int>(rgs_.begin(), rgs_.begin() + n_); }

  /// Bitmask of sites per block, blocks ordered by least element.
  std::vector<std::uint32_t> block_masks() const {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(blocks_), 0);
    for (int i = 0; i < n_; ++i) out[rgs_[static_cast<std::size_t>(i)]] |= (1U << i);
    return out;
  }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
    for (int i = 0; i < n_; ++i) out[rgs_[static_cast<std::size_t>(i)]].push_back(i);
    return out;
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) noexcept {
    return a.n_ == b.n_ && a.rgs_ == b.rgs_;
  }
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rgs_ <=> b.rgs_;
  }

private:
  std::array<std::uint8_t, max_sites> rgs_{};
  int n_ = 0;
  int blocks_ = 0;
};

inline void require_same_n(const SetPartition& a, const SetPartition& b, const char* op) {
  if (a.n() != b.n())
    throw DimensionError(std::string(op) + ": partitions of " + std::to_string(a.n()) + " and " + std::to_string(b.n()) +
                         " sites");
}

/// All singletons.
inline SetPartition bottom(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 0);
  return SetPartition::from_assignment(a);
}

/// One block.
inline SetPartition top(int n) { return SetPartition::from_assignment(std::vector<int>(static_cast<std::size_t>(n), 0)); }

inline std::uint64_t bell_number(int n) {
  // Bell triangle
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

/// Every partition of {0..n-1} in lexicographic restricted-growth order.
inline std::vector<SetPartition> enumerate_partitions(int n) {
  if (n < 1 || n > Limits::max_setpart_n)
    throw SizeCapError("set partition enumeration for n=" + std::to_string(n),
                       static_cast<std::size_t>(Limits::max_setpart_n), static_cast<std::size_t>(std::max(n, 0)));
  std::vector<SetPartition> out;
  out.reserve(bell_number(n));
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      out.push_back(SetPartition::from_assignment(a));
      return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(mx, b));
    }
  };
  rec(rec, 1, 0);
  return out;
}

/// Every block of `v` lies inside a block of `x`.
inline bool refines(const SetPartition& v, const SetPartition& x) {
  require_same_n(v, x, "refines");
  // a block of v sits inside one block of x iff the map v-block -> x-block is well defined
  std::array<int, SetPartition::max_sites> target;
  target.fill(-1);
  for (int i = 0; i < v.n(); ++i) {
    int& t = target[static_cast<std::size_t>(v.block_of(i))];
    if (t == -1)
      t = x.block_of(i);
    else if (t != x.block_of(i))
      return false;
  }
  return true;
}

/// Finest common coarsening.
inline SetPartition join(const SetPartition& v, const SetPartition& x) {
  require_same_n(v, x, "join");
  const int n = v.n();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const SetPartition* p : {&v, &x}) {
    std::array<int, SetPartition::max_sites> first;
    first.fill(-1);
    for (int i = 0; i < n; ++i) {
      int& f = first[static_cast<std::size_t>(p->block_of(i))];
      if (f == -1)
        f = i;
      else
        unite(f, i);
    }
  }
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = find(i);
  return SetPartition::from_assignment(a);
}

/// Blockwise intersections.
inline SetPartition meet(const SetPartition& v, const SetPartition& x) {
  require_same_n(v, x, "meet");
  std::vector<int> a(static_cast<std::size_t>(v.n()));
  for (int i = 0; i < v.n(); ++i) a[static_cast<std::size_t>(i)] = v.block_of(i) * SetPartition::max_sites + x.block_of(i);
  return SetPartition::from_assignment(a);
}

/// Image of `x` under the site relabelling i -> perm[i].
inline SetPartition apply_permutation(const std::vector<int>& perm, const SetPartition& x) {
  if (static_cast<int>(perm.size()) != x.n())
    throw ValidationError("permutation of size " + std::to_string(perm.size()) + " applied to " + std::to_string(x.n()) +
                          " sites");
  std::vector<int> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= x.n() || seen[static_cast<std::size_t>(p)]++)
      throw ValidationError("permutation is not a bijection on the sites");
  }
  std::vector<int> a(perm.size());
  for (int i = 0; i < x.n(); ++i) a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = x.block_of(i);
  return SetPartition::from_assignment(a);
}

/// Multiset of block sizes.
inline intpart::IntPartition type_of(const SetPartition& x) {
  std::vector<int> sizes(static_cast<std::size_t>(x.block_count()), 0);
  for (int i = 0; i < x.n(); ++i) ++sizes[static_cast<std::size_t>(x.block_of(i))];
  return intpart::IntPartition(std::move(sizes));
}

/// All set partitions of the given type, in restricted-growth order.
inline std::vector<SetPartition> preimage_of_type(const intpart::IntPartition& t) {
  const int n = t.n();
  if (n < 1 || n > Limits::max_setpart_n)
    throw SizeCapError("preimage of type " + intpart::to_string(t), static_cast<std::size_t>(Limits::max_setpart_n),
                       static_cast<std::size_t>(n));
  // Distribute block sizes: the block holding the smallest unassigned site takes one of the
  // remaining sizes (each distinct size once), then fills with a subset of the later sites.
  std::vector<int> sizes = t.parts();
  std::vector<int> a(static_cast<std::size_t>(n), -1);
  std::vector<SetPartition> out;
  auto rec = [&](auto&& self, int block, std::vector<int>& remaining) -> void {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (a[static_cast<std::size_t>(i)] == -1) {
        first = i;
        break;
      }
    if (first == -1) {
      out.push_back(SetPartition::from_assignment(a));
      return;
    }
    for (std::size_t si = 0; si < remaining.size(); ++si) {
      if (si > 0 && remaining[si] == remaining[si - 1]) continue;
      const int size = remaining[si];
      std::vector<int> rest = remaining;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(si));
      a[static_cast<std::size_t>(first)] = block;
      auto choose = [&](auto&& me, int from, int need) -> void {
        if (need == 0) {
          self(self, block + 1, rest);
          return;
        }
        for (int i = from; i < n; ++i) {
          if (a[static_cast<std::size_t>(i)] != -1) continue;
          a[static_cast<std::size_t>(i)] = block;
          me(me, i + 1, need - 1);
          a[static_cast<std::size_t>(i)] = -1;
        }
      };
      choose(choose, first + 1, size - 1);
      a[static_cast<std::size_t>(first)] = -1;
    }
  };
  rec(rec, 0, sizes);
  std::sort(out.begin(), out.end());
  return out;
}

/// P_I(n): set partitions under refinement.
inline order::Poset<SetPartition> refinement_poset(int n) {
  return order::build_poset(enumerate_partitions(n), refines);
}

/// Display form: 1-based labels, blocks by least element, separated by '|'.
/// Labels are concatenated for n <= 9 ("12|3") and comma separated above ("1,10|2,...").
inline std::string to_string(const SetPartition& x) {
  const bool commas = x.n() > 9;
  std::string out;
  auto bl = x.blocks();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    if (b) out += '|';
    for (std::size_t k = 0; k < bl[b].size(); ++k) {
      if (k && commas) out += ',';
      out += std::to_string(bl[b][k] + 1);
    }
  }
  return out;
}

inline std::string to_label(const SetPartition& x) { return to_string(x); }

/// Parses the display form; n is the largest label seen unless given explicitly.
inline SetPartition parse(const std::string& text, int n = 0) {
  std::vector<std::vector<int>> blocks(1);
  const bool commas = text.find(',') != std::string::npos;
  std::string num;
  auto flush = [&]() {
    if (!num.empty()) {
      blocks.back().push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (c == '|') {
      flush();
      blocks.emplace_back();
    } else if (c == ',') {
      flush();
    } else if (c >= '0' && c <= '9') {
      if (commas)
        num += c;
      else
        blocks.back().push_back(c - '0');
    } else {
      throw ValidationError("unexpected character '" + std::string(1, c) + "' in partition '" + text + "'");
    }
  }
  flush();
  int mx = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw ValidationError("empty block in partition '" + text + "'");
    for (int l : b) mx = std::max(mx, l);
  }
  if (n == 0) n = mx;
  if (n < 1 || n > SetPartition::max_sites) throw ValidationError("partition '" + text + "' has an unsupported size");
  std::vector<int> a(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int l : blocks[b]) {
      if (l < 1 || l > n) throw ValidationError("label " + std::to_string(l) + " out of range 1.." + std::to_string(n));
      if (a[static_cast<std::size_t>(l - 1)] != -1)
        throw ValidationError("label " + std::to_string(l) + " appears twice in '" + text + "'");
      a[static_cast<std::size_t>(l - 1)] = static_cast<int>(b);
    }
  for (int i = 0; i < n; ++i)
    if (a[static_cast<std::size_t>(i)] == -1)
      throw ValidationError("label " + std::to_string(i + 1) + " missing from '" + text + "'");
  return SetPartition::from_assignment(a);
}

} // namespace ptk::setpart
