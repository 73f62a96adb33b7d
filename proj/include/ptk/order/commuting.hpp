#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ptk/bitset.hpp"
#include "ptk/error.hpp"
#include "ptk/intpart.hpp"
#include "ptk/order/coarsen.hpp"
#include "ptk/order/lattice.hpp"
#include "ptk/order/poset.hpp"
#include "ptk/setpart.hpp"

namespace ptk::order {

struct CheckResult {
  std::string name;
  int n = 0;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
};

struct DiagramReport {
  int n = 0;
  std::vector<CheckResult> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Elementwise image of one lattice level into the next, with the class map it induces.
struct Lift {
  bool image_closed = true;   // every image is a member of the target lattice
  bool surjective = true;     // every target member is hit
  bool relation_equal = true; // the image relation equals the target order
  ConditionReport conditions;
  std::vector<std::size_t> class_of;
  std::string failure;
};

/// Lifts `base_map` (source base index -> target base index) to the lattices `src` and `dst`
/// of order sets over those bases, and compares the image with `dst`.
template <class S, class S2>
Lift lift_level(const Poset<S>& src, const Poset<S2>& dst, const std::vector<std::size_t>& base_map) {
  Lift out;
  out.class_of.assign(src.size(), 0);
  std::vector<bool> hit(dst.size(), false);
  const std::size_t target_base = dst.size() ? dst.element(0).members().size() : 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    Bitset img(target_base);
    src.element(i).members().for_each([&](std::size_t b) { img.set(base_map[b]); });
    std::optional<std::size_t> j;
    try {
      j = dst.index_of(S2(dst.element(0).parent(), img));
    } catch (const ValidationError&) {
      j.reset();
    }
    if (!j) {
      out.image_closed = false;
      if (out.failure.empty()) out.failure = "image of source element " + std::to_string(i) + " is not in the target lattice";
      return out;
    }
    out.class_of[i] = *j;
    hit[*j] = true;
  }
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (!hit[j]) {
      out.surjective = false;
      if (out.failure.empty()) out.failure = "target element " + std::to_string(j) + " has no preimage";
    }
  if (!out.surjective) return out;
  out.conditions = check_conditions(src, out.class_of, dst.size());
  auto induced = induced_down_sets(src, out.class_of, dst.size());
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (!(induced[j] == dst.down(j))) {
      out.relation_equal = false;
      if (out.failure.empty()) out.failure = "image relation differs from inclusion below target element " + std::to_string(j);
    }
  if (out.failure.empty() && !out.conditions.all()) out.failure = "coarsening conditions fail on the lifted map";
  return out;
}

inline bool lift_ok(const Lift& l) {
  return l.image_closed && l.surjective && l.relation_equal && l.conditions.all();
}

namespace detail {
inline CheckResult make_check(std::string name, int n) {
  CheckResult c;
  c.name = std::move(name);
  c.n = n;
  return c;
}
inline void fail(CheckResult& c, const std::string& why) {
  if (c.passed) c.detail = why;
  c.passed = false;
}
} // namespace detail

/// Largest general Level II (all down-sets of set partitions) the verifier materializes.
inline constexpr int max_general_level2_n = 4;
/// Largest general Level III (up-sets of those down-sets) the verifier materializes.
inline constexpr int max_general_level3_n = 3;
/// Largest n for the permutation-invariant legs and identities.
inline constexpr int max_barred_n = 5;

/// Exhaustive check that the type map commutes with the down-set / up-set constructions,
/// plus the principal-ideal and label identities, for one n.
inline DiagramReport verify_commuting_diagram(int n) {
  using setpart::SetPartition;
  using intpart::IntPartition;
  if (n < 1 || n > max_barred_n)
    throw SizeCapError("commuting diagram verification for n=" + std::to_string(n), max_barred_n,
                       static_cast<std::size_t>(std::max(n, 0)));
  DiagramReport rep;
  rep.n = n;

  auto p1 = std::make_shared<const Poset<SetPartition>>(setpart::refinement_poset(n));
  auto p1bar = std::make_shared<const Poset<IntPartition>>(intpart::refinement_poset(n));

  // Level I: the coarsened set-partition order equals the integer-partition refinement order.
  auto c = coarsen(*p1, setpart::type_of);
  {
    auto chk = detail::make_check("level I coarsening", n);
    chk.cases = p1->size();
    if (!c.conditions.all()) detail::fail(chk, "coarsening conditions fail for the type map");
    if (!isomorphic_by(*c.image, *p1bar)) detail::fail(chk, "coarsened order differs from integer refinement");
    rep.checks.push_back(chk);
  }
  // index maps between the coarsened image and p1bar (same payloads, possibly different order)
  std::vector<std::size_t> type_idx(p1->size());
  for (std::size_t i = 0; i < p1->size(); ++i) type_idx[i] = *p1bar->index_of(setpart::type_of(p1->element(i)));
  std::vector<Bitset> fiber(p1bar->size(), Bitset(p1->size()));
  for (std::size_t i = 0; i < p1->size(); ++i) fiber[type_idx[i]].set(i);
  auto embed = [&](const Bitset& bar_subset) {
    Bitset out(p1->size());
    bar_subset.for_each([&](std::size_t j) { out |= fiber[j]; });
    return out;
  };
  auto image = [&](const Bitset& subset) {
    Bitset out(p1bar->size());
    subset.for_each([&](std::size_t i) { out.set(type_idx[i]); });
    return out;
  };

  auto q1bar = ideal_lattice(p1bar);
  PosetPtr<OrderIdeal<SetPartition>> q1;

  // General Level II and III.
  if (n <= max_general_level2_n) {
    q1 = ideal_lattice(p1);
    auto lift2 = lift_level(*q1, *q1bar, type_idx);
    auto chk = detail::make_check("level II commutes", n);
    chk.cases = q1->size();
    if (!lift_ok(lift2)) detail::fail(chk, lift2.failure);
    rep.checks.push_back(chk);

    if (n <= max_general_level3_n && lift_ok(lift2)) {
      auto r1 = filter_lattice(q1);
      auto r1bar = filter_lattice(q1bar);
      auto lift3 = lift_level(*r1, *r1bar, lift2.class_of);
      auto chk3 = detail::make_check("level III commutes", n);
      chk3.cases = r1->size();
      if (!lift_ok(lift3)) detail::fail(chk3, lift3.failure);
      rep.checks.push_back(chk3);
    }
  }

  // Permutation-invariant legs through the embedding of barred ideals into set-partition ideals.
  std::vector<OrderIdeal<SetPartition>> pinv;
  {
    auto chk = detail::make_check("barred level II embedding", n);
    chk.cases = q1bar->size();
    for (std::size_t k = 0; k < q1bar->size(); ++k) {
      const Bitset& abar = q1bar->element(k).members();
      Bitset e = embed(abar);
      if (!p1->is_down_set(e) || e.none()) {
        detail::fail(chk, "union of fibers is not a nonempty down-set for barred ideal " + std::to_string(k));
        continue;
      }
      if (!(image(e) == abar)) detail::fail(chk, "image of the embedding differs for barred ideal " + std::to_string(k));
      // largest down-set whose image stays inside abar, found through principal ideals
      Bitset largest(p1->size());
      for (std::size_t a = 0; a < p1->size(); ++a)
        if (image(p1->down(a)).is_subset_of(abar)) largest.set(a);
      if (!(largest == e)) detail::fail(chk, "embedding is not the largest preimage ideal for barred ideal " + std::to_string(k));
      if (q1) {
        // definitional join of all set-partition ideals whose image is abar
        Bitset joined(p1->size());
        bool any = false;
        for (const auto& I : q1->elements())
          if (image(I.members()) == abar) {
            joined |= I.members();
            any = true;
          }
        if (!any || !(joined == e)) detail::fail(chk, "embedding differs from the join of the preimage for barred ideal " + std::to_string(k));
      }
      pinv.emplace_back(p1, std::move(e));
    }
    for (std::size_t a = 0; a < q1bar->size() && chk.passed; ++a)
      for (std::size_t b = 0; b < q1bar->size(); ++b)
        if (q1bar->leq(b, a) != pinv[b].members().is_subset_of(pinv[a].members())) {
          detail::fail(chk, "embedding is not an order embedding at barred ideals " + std::to_string(b) + ", " + std::to_string(a));
          break;
        }
    rep.checks.push_back(chk);
  }
  if (rep.checks.back().passed) {
    // P-bar_III against the up-sets of the embedded barred ideals.
    auto chk = detail::make_check("barred level III embedding", n);
    auto pinv_poset = std::make_shared<const Poset<OrderIdeal<SetPartition>>>(inclusion_poset(pinv));
    auto r1bar = filter_lattice(q1bar);
    auto rpinv = filter_lattice(pinv_poset);
    chk.cases = r1bar->size();
    std::vector<std::size_t> to_pinv(q1bar->size());
    for (std::size_t k = 0; k < q1bar->size(); ++k) to_pinv[k] = *pinv_poset->index_of(pinv[k]);
    auto lift = lift_level(*r1bar, *rpinv, to_pinv);
    if (!lift_ok(lift)) detail::fail(chk, lift.failure);
    if (r1bar->size() != rpinv->size()) detail::fail(chk, "filter lattices differ in size");
    rep.checks.push_back(chk);
  }

  // Principal-ideal identities.
  {
    auto chk = detail::make_check("principal ideals map to principal ideals", n);
    chk.cases = p1->size();
    for (std::size_t a = 0; a < p1->size(); ++a)
      if (!(image(p1->down(a)) == p1bar->down(type_idx[a])))
        detail::fail(chk, "image of the principal ideal of " + setpart::to_string(p1->element(a)) + " is not principal");
    rep.checks.push_back(chk);
  }
  {
    auto chk = detail::make_check("embedded principal ideal is the down-closure of the type preimage", n);
    chk.cases = p1bar->size();
    for (std::size_t j = 0; j < p1bar->size(); ++j) {
      Bitset pre(p1->size());
      for (const auto& x : setpart::preimage_of_type(p1bar->element(j))) pre.set(*p1->index_of(x));
      if (!(embed(p1bar->down(j)) == p1->down_closure(pre)))
        detail::fail(chk, "identity fails for type " + intpart::to_string(p1bar->element(j)));
    }
    for (std::size_t a = 0; a < p1bar->size() && chk.passed; ++a)
      for (std::size_t b = 0; b < p1bar->size(); ++b)
        if (p1bar->leq(b, a) != embed(p1bar->down(b)).is_subset_of(embed(p1bar->down(a))))
          detail::fail(chk, "embedded principal ideals do not reflect the order");
    rep.checks.push_back(chk);
  }
  {
    auto chk = detail::make_check("embedded ideal is the union of down-closed type preimages", n);
    chk.cases = q1bar->size();
    for (std::size_t k = 0; k < q1bar->size(); ++k) {
      Bitset u(p1->size());
      q1bar->element(k).members().for_each([&](std::size_t j) {
        Bitset pre(p1->size());
        for (const auto& x : setpart::preimage_of_type(p1bar->element(j))) pre.set(*p1->index_of(x));
        u |= p1->down_closure(pre);
      });
      if (!(u == embed(q1bar->element(k).members()))) detail::fail(chk, "identity fails for barred ideal " + to_label(q1bar->element(k)));
    }
    rep.checks.push_back(chk);
  }
  return rep;
}

} // namespace ptk::order
