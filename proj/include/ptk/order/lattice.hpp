#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ptk/bitset.hpp"
#include "ptk/error.hpp"
#include "ptk/limits.hpp"
#include "ptk/order/poset.hpp"

namespace ptk::order {

enum class Closure { down, up };

/// Nonempty down-set (ideal) or up-set (filter) of a parent poset.
template <class T, Closure C>
class OrderSet {
public:
  using element_type = T;

  OrderSet() = default;

  /// Validates closure and nonemptiness.
  OrderSet(PosetPtr<T> parent, Bitset members) : parent_(std::move(parent)), members_(std::move(members)) {
    if (members_.size() != parent_->size()) throw DimensionError("member set does not match the parent poset");
    if (members_.none()) throw ValidationError(std::string(kind()) + " must be nonempty");
    const bool closed = C == Closure::down ? parent_->is_down_set(members_) : parent_->is_up_set(members_);
    if (!closed) throw ValidationError(std::string("member set is not ") + (C == Closure::down ? "downward" : "upward") + " closed");
    generators_ = C == Closure::down ? parent_->maximal_of(members_) : parent_->minimal_of(members_);
  }

  /// Closure of the given elements.
  static OrderSet generated_by(PosetPtr<T> parent, const Bitset& gens) {
    Bitset m = C == Closure::down ? parent->down_closure(gens) : parent->up_closure(gens);
    return OrderSet(std::move(parent), std::move(m));
  }

  static OrderSet principal(PosetPtr<T> parent, std::size_t i) {
    Bitset m = C == Closure::down ? parent->down(i) : parent->up(i);
    return OrderSet(std::move(parent), std::move(m));
  }

  static constexpr const char* kind() { return C == Closure::down ? "order ideal" : "order filter"; }

  const PosetPtr<T>& parent() const noexcept { return parent_; }
  const Bitset& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.count(); }
  bool contains(std::size_t i) const noexcept { return members_.test(i); }

  /// Maximal elements of an ideal, minimal elements of a filter.
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& maximal_elements() const noexcept
    requires(C == Closure::down)
  {
    return generators_;
  }
  const std::vector<std::size_t>& minimal_elements() const noexcept
    requires(C == Closure::up)
  {
    return generators_;
  }

  std::vector<T> member_values() const {
    std::vector<T> out;
    members_.for_each([&](std::size_t i) { out.push_back(parent_->element(i)); });
    return out;
  }

  friend bool operator==(const OrderSet& a, const OrderSet& b) noexcept { return a.members_ == b.members_; }
  friend std::strong_ordering operator<=>(const OrderSet& a, const OrderSet& b) noexcept {
    return a.members_ <=> b.members_;
  }

private:
  PosetPtr<T> parent_;
  Bitset members_;
  std::vector<std::size_t> generators_;
};

template <class T>
using OrderIdeal = OrderSet<T, Closure::down>;
template <class T>
using OrderFilter = OrderSet<T, Closure::up>;

/// Labels a down-set by its maximal elements and an up-set by its minimal elements.
template <class T, Closure C>
std::string to_label(const OrderSet<T, C>& s) {
  std::string out = C == Closure::down ? "v{" : "^{";
  bool first = true;
  for (std::size_t i : s.generators()) {
    if (!first) out += ", ";
    first = false;
    out += to_label(s.parent()->element(i));
  }
  return out + "}";
}

/// All nonempty down-sets of `p`, as member bitsets, in (size, members) order.
/// Branches on the first undecided element: either its down-set joins the ideal
/// or its up-set is excluded, so every leaf is a distinct down-set.
template <class T>
std::vector<Bitset> enumerate_down_sets(const Poset<T>& p, std::size_t cap = Limits::max_ideals()) {
  std::vector<Bitset> out;
  const std::size_t n = p.size();
  auto rec = [&](auto&& self, Bitset& in, Bitset& decided) -> void {
    std::size_t e = 0;
    while (e < n && decided.test(e)) ++e;
    if (e == n) {
      if (in.any()) {
        if (out.size() >= cap) throw SizeCapError("down-set enumeration", cap, out.size() + 1);
        out.push_back(in);
      }
      return;
    }
    {
      Bitset in2 = in | p.down(e);
      Bitset dec2 = decided | p.down(e);
      self(self, in2, dec2);
    }
    {
      Bitset dec2 = decided | p.up(e);
      self(self, in, dec2);
    }
  };
  Bitset in(n), decided(n);
  rec(rec, in, decided);
  std::sort(out.begin(), out.end());
  return out;
}

/// All nonempty up-sets of `p`, in (size, members) order.
template <class T>
std::vector<Bitset> enumerate_up_sets(const Poset<T>& p, std::size_t cap = Limits::max_ideals()) {
  std::vector<Bitset> out;
  const std::size_t n = p.size();
  auto rec = [&](auto&& self, Bitset& in, Bitset& decided) -> void {
    std::size_t e = 0;
    while (e < n && decided.test(e)) ++e;
    if (e == n) {
      if (in.any()) {
        if (out.size() >= cap) throw SizeCapError("up-set enumeration", cap, out.size() + 1);
        out.push_back(in);
      }
      return;
    }
    {
      Bitset in2 = in | p.up(e);
      Bitset dec2 = decided | p.up(e);
      self(self, in2, dec2);
    }
    {
      Bitset dec2 = decided | p.down(e);
      self(self, in, dec2);
    }
  };
  Bitset in(n), decided(n);
  rec(rec, in, decided);
  std::sort(out.begin(), out.end());
  return out;
}

/// Poset of the given member sets ordered by inclusion.
template <class S>
Poset<S> inclusion_poset(std::vector<S> sets) {
  const std::size_t n = sets.size();
  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (sets[i].members().is_subset_of(sets[j].members())) down[j].set(i);
  return poset_from_down_sets(std::move(sets), std::move(down));
}

/// Nonempty down-sets of `p` ordered by inclusion.
template <class T>
PosetPtr<OrderIdeal<T>> ideal_lattice(const PosetPtr<T>& p) {
  auto sets = enumerate_down_sets(*p);
  const double cells = static_cast<double>(sets.size()) * static_cast<double>(sets.size());
  if (cells > static_cast<double>(Limits::max_cells()))
    throw SizeCapError("ideal lattice relation", Limits::max_cells(), static_cast<std::size_t>(cells));
  std::vector<OrderIdeal<T>> ideals;
  ideals.reserve(sets.size());
  for (auto& s : sets) ideals.emplace_back(p, std::move(s));
  return std::make_shared<const Poset<OrderIdeal<T>>>(inclusion_poset(std::move(ideals)));
}

/// Nonempty up-sets of `p` ordered by inclusion.
template <class T>
PosetPtr<OrderFilter<T>> filter_lattice(const PosetPtr<T>& p) {
  auto sets = enumerate_up_sets(*p);
  const double cells = static_cast<double>(sets.size()) * static_cast<double>(sets.size());
  if (cells > static_cast<double>(Limits::max_cells()))
    throw SizeCapError("filter lattice relation", Limits::max_cells(), static_cast<std::size_t>(cells));
  std::vector<OrderFilter<T>> filters;
  filters.reserve(sets.size());
  for (auto& s : sets) filters.emplace_back(p, std::move(s));
  return std::make_shared<const Poset<OrderFilter<T>>>(inclusion_poset(std::move(filters)));
}

/// Index of the join (union) and meet (intersection) inside a lattice of order sets, if present.
template <class S>
std::optional<std::size_t> union_index(const Poset<S>& lat, std::size_t a, std::size_t b) {
  const auto& x = lat.element(a);
  return lat.index_of(S(x.parent(), x.members() | lat.element(b).members()));
}
template <class S>
std::optional<std::size_t> intersection_index(const Poset<S>& lat, std::size_t a, std::size_t b) {
  const auto& x = lat.element(a);
  Bitset m = x.members() & lat.element(b).members();
  if (m.none()) return std::nullopt;
  return lat.index_of(S(x.parent(), std::move(m)));
}

} // namespace ptk::order
