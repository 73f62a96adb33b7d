#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ptk/bitset.hpp"
#include "ptk/error.hpp"
#include "ptk/order/lattice.hpp"
#include "ptk/order/poset.hpp"

namespace ptk::order {

/// Three source indices illustrating a failed condition.
struct Witness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t third = 0;
};

/// Outcome of the three coarsening conditions for a poset and a map given by class labels.
///
/// densd: whenever some b in f^-1(b') lies below some element of f^-1(a'), every a in f^-1(a')
///        has some b in f^-1(b') below it. witness = (b0, a0, a) with b0 <= a0 and a stranded.
/// densu: dually, every b in f^-1(b') has some a in f^-1(a') above it. witness = (b0, a0, b).
/// sol:   c <= b <= a with f(c) = f(a) forces f(b) = f(a). witness = (c, b, a).
struct ConditionReport {
  bool densd = true;
  bool densu = true;
  bool sol = true;
  std::optional<Witness> densd_witness;
  std::optional<Witness> densu_witness;
  std::optional<Witness> sol_witness;

  bool all() const noexcept { return densd && densu && sol; }
  /// The image relation is a partial order when these hold.
  bool image_is_poset() const noexcept { return sol && (densd || densu); }
};

class ConditionError : public Error {
public:
  ConditionError(std::string condition, Witness w)
      : Error("coarsening condition " + condition + " fails at source elements (" + std::to_string(w.first) + ", " +
              std::to_string(w.second) + ", " + std::to_string(w.third) + ")"),
        condition_(std::move(condition)), witness_(w) {}
  const std::string& condition() const noexcept { return condition_; }
  const Witness& witness() const noexcept { return witness_; }

private:
  std::string condition_;
  Witness witness_;
};

/// Source members of each class.
inline std::vector<Bitset> fibers_of(const std::vector<std::size_t>& class_of, std::size_t classes) {
  std::vector<Bitset> out(classes, Bitset(class_of.size()));
  for (std::size_t i = 0; i < class_of.size(); ++i) out[class_of[i]].set(i);
  return out;
}

template <class T>
ConditionReport check_conditions(const Poset<T>& p, const std::vector<std::size_t>& class_of, std::size_t classes) {
  if (class_of.size() != p.size()) throw DimensionError("class map does not cover the poset");
  const auto fib = fibers_of(class_of, classes);
  ConditionReport rep;
  const std::size_t n = p.size();
  for (std::size_t a0 = 0; a0 < n; ++a0) {
    p.down(a0).for_each([&](std::size_t b0) {
      const std::size_t bc = class_of[b0], ac = class_of[a0];
      if (rep.densd) {
        fib[ac].for_each([&](std::size_t a) {
          if (rep.densd && !p.down(a).intersects(fib[bc])) {
            rep.densd = false;
            rep.densd_witness = Witness{b0, a0, a};
          }
        });
      }
      if (rep.densu) {
        fib[bc].for_each([&](std::size_t b) {
          if (rep.densu && !p.up(b).intersects(fib[ac])) {
            rep.densu = false;
            rep.densu_witness = Witness{b0, a0, b};
          }
        });
      }
      if (rep.sol && bc == ac) {
        Bitset between = p.up(b0) & p.down(a0);
        if (!between.is_subset_of(fib[ac])) {
          rep.sol = false;
          rep.sol_witness = Witness{b0, Bitset(between).subtract(fib[ac]).first(), a0};
        }
      }
    });
  }
  return rep;
}

/// Image relation f(<=) as down-sets over classes: a' covers every class reached from below its fiber.
template <class T>
std::vector<Bitset> induced_down_sets(const Poset<T>& p, const std::vector<std::size_t>& class_of, std::size_t classes) {
  std::vector<Bitset> down(classes, Bitset(classes));
  for (std::size_t a = 0; a < p.size(); ++a)
    p.down(a).for_each([&](std::size_t b) { down[class_of[a]].set(class_of[b]); });
  return down;
}

template <class U>
struct Coarsening {
  PosetPtr<U> image;
  std::vector<std::size_t> index_map;
  std::vector<Bitset> fibers;
  ConditionReport conditions;
};

/// Coarsens `p` along `f`, requiring the conditions that make the image a poset.
template <class T, class F>
auto coarsen(const Poset<T>& p, F&& f) {
  using U = std::decay_t<decltype(f(p.element(0)))>;
  std::vector<U> images;
  images.reserve(p.size());
  for (const auto& x : p.elements()) images.push_back(f(x));
  std::vector<U> distinct = images;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Coarsening<U> c;
  c.index_map.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    c.index_map[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), images[i]) - distinct.begin());
  c.conditions = check_conditions(p, c.index_map, distinct.size());
  if (!c.conditions.sol) throw ConditionError("sol", *c.conditions.sol_witness);
  if (!c.conditions.densd && !c.conditions.densu) throw ConditionError("densd", *c.conditions.densd_witness);
  auto down = induced_down_sets(p, c.index_map, distinct.size());
  c.fibers = fibers_of(c.index_map, distinct.size());
  c.image = std::make_shared<const Poset<U>>(poset_from_down_sets(std::move(distinct), std::move(down)));
  return c;
}

/// Elementwise image of a subset of the source.
template <class U>
Bitset elementwise_image(const Coarsening<U>& c, const Bitset& source_subset) {
  Bitset out(c.image->size());
  source_subset.for_each([&](std::size_t i) { out.set(c.index_map[i]); });
  return out;
}

template <class T, class U, Closure C>
OrderSet<U, C> elementwise_image(const Coarsening<U>& c, const OrderSet<T, C>& s) {
  return OrderSet<U, C>(c.image, elementwise_image(c, s.members()));
}

/// Largest subset of the source mapped into the given image subset: the union of its fibers.
template <class U>
Bitset embed_subset(const Coarsening<U>& c, const Bitset& image_subset) {
  Bitset out(c.index_map.size());
  image_subset.for_each([&](std::size_t j) { out |= c.fibers[j]; });
  return out;
}

template <class T, class U>
OrderIdeal<T> embed_ideal(const PosetPtr<T>& source, const Coarsening<U>& c, const OrderIdeal<U>& image_ideal) {
  return OrderIdeal<T>(source, embed_subset(c, image_ideal.members()));
}

} // namespace ptk::order
