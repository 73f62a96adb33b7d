#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ptk/bitset.hpp"
#include "ptk/error.hpp"
#include "ptk/limits.hpp"

namespace ptk::order {

/// Finite partially ordered set with the full reachability relation materialized.
/// Payloads are opaque apart from needing a total order (`<=>`) for lookup.
template <class T>
class Poset {
public:
  using value_type = T;

  std::size_t size() const noexcept { return elems_.size(); }
  const T& element(std::size_t i) const { return elems_[i]; }
  const std::vector<T>& elements() const noexcept { return elems_; }

  bool leq(std::size_t i, std::size_t j) const noexcept { return down_[j].test(i); }
  bool less(std::size_t i, std::size_t j) const noexcept { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const noexcept { return leq(i, j) || leq(j, i); }

  /// {j : j <= i}
  const Bitset& down(std::size_t i) const { return down_[i]; }
  /// {j : i <= j}
  const Bitset& up(std::size_t i) const { return up_[i]; }

  std::optional<std::size_t> index_of(const T& x) const {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x,
                               [&](std::size_t a, const T& v) { return elems_[a] < v; });
    if (it == sorted_.end() || !(elems_[*it] == x)) return std::nullopt;
    return *it;
  }

  Bitset empty_set() const { return Bitset(size()); }
  Bitset full_set() const {
    Bitset b(size());
    b.set_all();
    return b;
  }

  Bitset down_closure(const Bitset& s) const {
    Bitset out(size());
    s.for_each([&](std::size_t i) { out |= down_[i]; });
    return out;
  }
  Bitset up_closure(const Bitset& s) const {
    Bitset out(size());
    s.for_each([&](std::size_t i) { out |= up_[i]; });
    return out;
  }
  bool is_down_set(const Bitset& s) const { return down_closure(s) == s; }
  bool is_up_set(const Bitset& s) const { return up_closure(s) == s; }

  std::vector<std::size_t> maximal_of(const Bitset& s) const {
    std::vector<std::size_t> out;
    s.for_each([&](std::size_t i) {
      Bitset above = up_[i] & s;
      if (above.count() == 1) out.push_back(i);
    });
    return out;
  }
  std::vector<std::size_t> minimal_of(const Bitset& s) const {
    std::vector<std::size_t> out;
    s.for_each([&](std::size_t i) {
      Bitset below = down_[i] & s;
      if (below.count() == 1) out.push_back(i);
    });
    return out;
  }

  template <class U, class Leq>
  friend Poset<U> build_poset(std::vector<U> elements, Leq&& leq);
  template <class U>
  friend Poset<U> poset_from_down_sets(std::vector<U> elements, std::vector<Bitset> down);

private:
  void finish() {
    const std::size_t n = elems_.size();
    up_.assign(n, Bitset(n));
    for (std::size_t j = 0; j < n; ++j) down_[j].for_each([&](std::size_t i) { up_[i].set(j); });
    sorted_.resize(n);
    for (std::size_t i = 0; i < n; ++i) sorted_[i] = i;
    std::sort(sorted_.begin(), sorted_.end(), [&](std::size_t a, std::size_t b) { return elems_[a] < elems_[b]; });
    for (std::size_t k = 1; k < n; ++k)
      if (elems_[sorted_[k - 1]] == elems_[sorted_[k]])
        throw AxiomError("uniqueness", "duplicate element payload at indices " + std::to_string(sorted_[k - 1]) +
                                           " and " + std::to_string(sorted_[k]));
  }

  void validate() const {
    const std::size_t n = elems_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (!down_[i].test(i)) throw AxiomError("reflexivity", "element " + std::to_string(i) + " is not related to itself");
    for (std::size_t i = 0; i < n; ++i) {
      bool bad = false;
      std::size_t witness = 0;
      down_[i].for_each([&](std::size_t j) {
        if (!bad && j != i && down_[j].test(i)) {
          bad = true;
          witness = j;
        }
      });
      if (bad)
        throw AxiomError("antisymmetry", "elements " + std::to_string(witness) + " and " + std::to_string(i) +
                                             " are mutually related");
    }
    for (std::size_t i = 0; i < n; ++i) {
      down_[i].for_each([&](std::size_t j) {
        if (!down_[j].is_subset_of(down_[i])) {
          std::size_t k = Bitset(down_[j]).subtract(down_[i]).first();
          throw AxiomError("transitivity", std::to_string(k) + " <= " + std::to_string(j) + " <= " + std::to_string(i) +
                                               " but not " + std::to_string(k) + " <= " + std::to_string(i));
        }
      });
    }
  }

  static void check_cells(std::size_t n) {
    const double cells = static_cast<double>(n) * static_cast<double>(n);
    if (cells > static_cast<double>(Limits::max_cells()))
      throw SizeCapError("relation matrix exceeds the cell cap", Limits::max_cells(), static_cast<std::size_t>(cells));
  }

  std::vector<T> elems_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::vector<std::size_t> sorted_;
};

template <class T>
using PosetPtr = std::shared_ptr<const Poset<T>>;

/// Materializes `leq` on all pairs and validates the partial-order axioms.
template <class T, class Leq>
Poset<T> build_poset(std::vector<T> elements, Leq&& leq) {
  Poset<T> p;
  const std::size_t n = elements.size();
  Poset<T>::check_cells(n);
  p.elems_ = std::move(elements);
  p.down_.assign(n, Bitset(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (leq(p.elems_[i], p.elems_[j])) p.down_[j].set(i);
  p.finish();
  p.validate();
  return p;
}

/// Builds a poset from precomputed down-sets (`down[j]` = indices below j); still validated.
template <class T>
Poset<T> poset_from_down_sets(std::vector<T> elements, std::vector<Bitset> down) {
  Poset<T> p;
  Poset<T>::check_cells(elements.size());
  if (down.size() != elements.size()) throw DimensionError("down-set table does not match element count");
  p.elems_ = std::move(elements);
  p.down_ = std::move(down);
  p.finish();
  p.validate();
  return p;
}

template <class T, class Leq>
PosetPtr<T> make_poset(std::vector<T> elements, Leq&& leq) {
  return std::make_shared<const Poset<T>>(build_poset(std::move(elements), std::forward<Leq>(leq)));
}

/// Covering pairs (lower, upper).
template <class T>
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Poset<T>& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    Bitset strict = p.down(j);
    strict.reset(j);
    // i is covered by j iff nothing in strict-below(j) sits strictly above i
    strict.for_each([&](std::size_t i) {
      Bitset between = p.up(i) & strict;
      if (between.count() == 1) out.emplace_back(i, j);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
bool isomorphic_by(const Poset<T>& a, const Poset<T>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> map(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.index_of(a.element(i));
    if (!j) return false;
    map[i] = *j;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a.leq(i, k) != b.leq(map[i], map[k])) return false;
  return true;
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
} // namespace detail

/// Graphviz digraph with one node per element (in index order) and covers drawn toward the coarser element.
template <class T>
std::string to_dot(const Poset<T>& p, const std::string& name = "poset") {
  std::ostringstream os;
  os << "digraph \"" << detail::dot_escape(name) << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << detail::dot_escape(to_label(p.element(i))) << "\"];\n";
  for (auto [lo, hi] : hasse_edges(p)) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace ptk::order
