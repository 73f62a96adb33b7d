#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ptk/error.hpp"
#include "ptk/intpart.hpp"
#include "ptk/kprops.hpp"
#include "ptk/order/lattice.hpp"
#include "ptk/quantum/density.hpp"
#include "ptk/setpart.hpp"

namespace ptk::quantum {

using setpart::SetPartition;
using intpart::IntPartition;

struct MeasureResult {
  double value = 0.0; // nats
  SetPartition minimizing_partition;
  bool finite = true;
};

/// Marginal entropies keyed by site mask, computed on demand.
class EntropyCache {
public:
  explicit EntropyCache(const DensityMatrix& r) : r_(r) {}

  const DensityMatrix& state() const noexcept { return r_; }

  double total() {
    const std::uint32_t all = r_.sites() >= 32 ? ~0U : ((1U << r_.sites()) - 1U);
    return of(all);
  }

  double of(std::uint32_t mask) {
    if (auto it = cache_.find(mask); it != cache_.end()) return it->second;
    const std::uint32_t all = (1U << r_.sites()) - 1U;
    double s;
    if (mask == all) {
      s = vn_entropy(r_);
    } else {
      Matrix m = partial_trace_matrix(r_.data(), r_.dims(), sites_of_mask(mask));
      Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
      s = entropy_of_spectrum(es.eigenvalues());
    }
    cache_.emplace(mask, s);
    return s;
  }

private:
  const DensityMatrix& r_;
  std::unordered_map<std::uint32_t, double> cache_;
};

inline void check_sites(const DensityMatrix& r, const SetPartition& x) {
  if (x.n() != r.sites())
    throw DimensionError("partition of " + std::to_string(x.n()) + " sites applied to a state of " + std::to_string(r.sites()) +
                         " sites");
}

/// Sum of block marginal entropies minus the total entropy.
inline double corr_xi_value(EntropyCache& cache, const SetPartition& x) {
  double s = -cache.total();
  for (std::uint32_t m : x.block_masks()) s += cache.of(m);
  return std::max(0.0, s);
}

inline MeasureResult corr_xi(const DensityMatrix& r, const SetPartition& x) {
  check_sites(r, x);
  EntropyCache cache(r);
  return MeasureResult{corr_xi_value(cache, x), x, true};
}

/// Minimum of the correlation over the given candidate partitions.
inline MeasureResult min_corr(EntropyCache& cache, const std::vector<SetPartition>& candidates) {
  if (candidates.empty()) throw ValidationError("correlation minimum over an empty set of partitions");
  MeasureResult best{std::numeric_limits<double>::infinity(), candidates.front(), true};
  for (const auto& x : candidates) {
    check_sites(cache.state(), x);
    const double v = corr_xi_value(cache, x);
    if (v < best.value) best = MeasureResult{v, x, true};
  }
  return best;
}

/// Minimum over an ideal of set partitions, evaluated on its maximal elements.
inline MeasureResult corr_ideal(const DensityMatrix& r, const order::OrderIdeal<SetPartition>& ideal) {
  EntropyCache cache(r);
  std::vector<SetPartition> cands;
  for (std::size_t i : ideal.maximal_elements()) cands.push_back(ideal.parent()->element(i));
  return min_corr(cache, cands);
}

/// Every set partition whose type is one of the given integer partitions.
inline std::vector<SetPartition> preimages(const std::vector<IntPartition>& types) {
  std::vector<SetPartition> out;
  for (const auto& t : types) {
    auto pre = setpart::preimage_of_type(t);
    out.insert(out.end(), pre.begin(), pre.end());
  }
  return out;
}

/// Minimum over the set partitions whose type lies in an ideal of integer partitions,
/// evaluated on the preimages of its maximal elements.
inline MeasureResult corr_ideal(const DensityMatrix& r, const order::OrderIdeal<IntPartition>& ideal) {
  EntropyCache cache(r);
  std::vector<IntPartition> mx;
  for (std::size_t i : ideal.maximal_elements()) mx.push_back(ideal.parent()->element(i));
  return min_corr(cache, preimages(mx));
}

/// Correlation with respect to a (possibly half-integer) property threshold.
inline MeasureResult corr_property(EntropyCache& cache, kprops::Kind kind, kprops::HalfInt t) {
  const int n = cache.state().sites();
  auto members = kprops::members_with(n, kind, t);
  if (members.empty()) throw ValidationError("property ideal is empty");
  kprops::KPropertyIdeal ideal{n, kind, 0, std::move(members)};
  return min_corr(cache, preimages(kprops::maximal_members(ideal)));
}

inline MeasureResult corr_property(const DensityMatrix& r, kprops::Kind kind, int k) {
  kprops::property_ideal(r.sites(), kind, k); // range check
  EntropyCache cache(r);
  return corr_property(cache, kind, kprops::HalfInt::whole(k));
}

inline MeasureResult corr_kpart(const DensityMatrix& r, int k) { return corr_property(r, kprops::Kind::partitionability, k); }
inline MeasureResult corr_kprod(const DensityMatrix& r, int k) { return corr_property(r, kprops::Kind::producibility, k); }
inline MeasureResult corr_kstr(const DensityMatrix& r, int k) { return corr_property(r, kprops::Kind::stretchability, k); }

/// Sum of block marginal entropies of a pure state.
inline double pure_ent_xi(const DensityMatrix& p, const SetPartition& x) {
  check_sites(p, x);
  if (p.purity() < 1.0 - Tolerance::purity)
    throw ValidationError("purity invariant violated: Tr rho^2 = " + std::to_string(p.purity()) + " < 1");
  EntropyCache cache(p);
  double s = 0.0;
  for (std::uint32_t m : x.block_masks()) s += cache.of(m);
  return s;
}

inline bool is_xi_uncorrelated(const DensityMatrix& r, const SetPartition& x, double tol = Tolerance::product) {
  return corr_xi(r, x).value <= tol;
}

/// Finest partition over whose blocks the state factorizes: the meet of every bipartition cut that is product.
inline SetPartition finest_product_structure(const DensityMatrix& r, double tol = Tolerance::product) {
  const int n = r.sites();
  if (n > SetPartition::max_sites) throw ValidationError("too many sites for product-structure detection");
  EntropyCache cache(r);
  SetPartition acc = setpart::top(n);
  const std::uint32_t all = (1U << n) - 1U;
  // cuts {X, rest} with site 0 in rest, each unordered cut once
  for (std::uint32_t x = 2; x <= all; x += 2) {
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = (x >> i) & 1U;
    auto cut = SetPartition::from_assignment(a);
    if (corr_xi_value(cache, cut) <= tol) acc = setpart::meet(acc, cut);
  }
  return acc;
}

/// Type of the finest product structure.
inline IntPartition perminv_class_of(const DensityMatrix& r, double tol = Tolerance::product) {
  return setpart::type_of(finest_product_structure(r, tol));
}

} // namespace ptk::quantum
