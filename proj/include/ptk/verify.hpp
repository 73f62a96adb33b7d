#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "ptk/intpart.hpp"
#include "ptk/kprops.hpp"
#include "ptk/order/coarsen.hpp"
#include "ptk/order/commuting.hpp"
#include "ptk/quantum/channel.hpp"
#include "ptk/quantum/density.hpp"
#include "ptk/quantum/measures.hpp"
#include "ptk/setpart.hpp"

namespace ptk::verify {

using order::CheckResult;
using intpart::IntPartition;
using setpart::SetPartition;

inline constexpr int max_n = 12;

struct Options {
  int n_max = 4;
  /// Replaces the integer refinement order by its reverse, which every n >= 2 detects.
  bool inject_fault = false;
  double tolerance = 1e-9;
};

struct Report {
  int n_max = 0;
  std::vector<CheckResult> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

using IntOrder = std::function<bool(const IntPartition&, const IntPartition&)>;

inline IntOrder faulty_order() {
  return [](const IntPartition& v, const IntPartition& x) { return intpart::refines_int(x, v); };
}

/// The integer order agrees with "some representatives are ordered" on every pair.
inline CheckResult check_integer_order(int n, const IntOrder& order) {
  CheckResult c{"integer refinement matches representative refinement", n, true, 0, ""};
  const auto parts = intpart::enumerate_intpartitions(n);
  std::vector<std::vector<SetPartition>> pre;
  for (const auto& t : parts) pre.push_back(setpart::preimage_of_type(t));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      ++c.cases;
      bool rep = false;
      for (const auto& u : pre[i]) {
        for (const auto& x : pre[j])
          if (setpart::refines(u, x)) {
            rep = true;
            break;
          }
        if (rep) break;
      }
      if (rep != order(parts[i], parts[j]) && c.passed) {
        c.passed = false;
        c.detail = "disagreement at (" + intpart::to_string(parts[i]) + ", " + intpart::to_string(parts[j]) +
                   "): representatives say " + (rep ? "ordered" : "unordered");
      }
    }
  return c;
}

inline CheckResult check_type_conditions(int n) {
  CheckResult c{"coarsening conditions for the type map", n, true, 0, ""};
  auto p = setpart::refinement_poset(n);
  auto co = order::coarsen(p, setpart::type_of);
  c.cases = p.size();
  const auto& r = co.conditions;
  auto show = [&](const char* name, const std::optional<order::Witness>& w) {
    c.passed = false;
    c.detail = std::string(name) + " fails at (" + setpart::to_string(p.element(w->first)) + ", " +
               setpart::to_string(p.element(w->second)) + ", " + setpart::to_string(p.element(w->third)) + ")";
  };
  if (!r.densd) show("densd", r.densd_witness);
  else if (!r.densu) show("densu", r.densu_witness);
  else if (!r.sol) show("sol", r.sol_witness);
  return c;
}

/// Height strictly drops, width weakly grows and rank strictly grows along strict refinement.
inline CheckResult check_statistics_monotone(int n, const IntOrder& order) {
  CheckResult c{"height/width/rank monotone under refinement", n, true, 0, ""};
  const auto parts = intpart::enumerate_intpartitions(n);
  for (const auto& v : parts)
    for (const auto& x : parts) {
      if (v == x || !order(v, x)) continue;
      ++c.cases;
      if (!(v.height() > x.height() && v.width() <= x.width() && v.rank() < x.rank()) && c.passed) {
        c.passed = false;
        c.detail = "violated at " + intpart::to_string(v) + " < " + intpart::to_string(x);
      }
    }
  return c;
}

inline CheckResult check_duality(int n) {
  CheckResult c{"property inclusions from the height/width/rank bounds", n, true, 0, ""};
  auto rep = kprops::duality_bounds(n);
  for (const auto& fam : rep.families)
    for (const auto& e : fam.entries) {
      ++c.cases;
      if (!e.holds && c.passed) {
        c.passed = false;
        c.detail = fam.name + " fails at k=" + std::to_string(e.k) + " for " + intpart::to_string(*e.violator);
      }
    }
  return c;
}

/// Multipartite monotonicity and local-operation monotonicity on seeded random states.
inline CheckResult check_measure_monotonicity(int n, double tol, int seeds) {
  CheckResult c{"correlation monotone under refinement and local channels", n, true, 0, ""};
  const auto parts = setpart::enumerate_partitions(n);
  for (int s = 0; s < seeds; ++s) {
    auto r = quantum::random_mixed(std::vector<int>(static_cast<std::size_t>(n), 2), 1 + s % 4, 1000 + static_cast<std::uint64_t>(s));
    quantum::EntropyCache cache(r);
    for (const auto& u : parts)
      for (const auto& x : parts) {
        if (!setpart::refines(u, x)) continue;
        ++c.cases;
        if (quantum::corr_xi_value(cache, u) < quantum::corr_xi_value(cache, x) - tol && c.passed) {
          c.passed = false;
          c.detail = "C(" + setpart::to_string(u) + ") < C(" + setpart::to_string(x) + ") for seed " + std::to_string(s);
        }
      }
    const auto& x = parts[static_cast<std::size_t>(s) % parts.size()];
    auto ch = quantum::random_local_channel(x, r.dims(), 7000 + static_cast<std::uint64_t>(s));
    auto out = quantum::apply_channel(ch, r);
    ++c.cases;
    if (quantum::corr_xi(out, x).value > quantum::corr_xi(r, x).value + tol && c.passed) {
      c.passed = false;
      c.detail = "local channel on " + setpart::to_string(x) + " increased the correlation for seed " + std::to_string(s);
    }
  }
  return c;
}

inline Report run(const Options& opt) {
  if (opt.n_max < 1 || opt.n_max > max_n)
    throw SizeCapError("verification for n-max=" + std::to_string(opt.n_max), max_n, static_cast<std::size_t>(std::max(opt.n_max, 0)));
  const IntOrder order = opt.inject_fault ? faulty_order() : IntOrder(intpart::refines_int);
  Report rep;
  rep.n_max = opt.n_max;
  for (int n = 1; n <= opt.n_max; ++n) {
    if (n <= 7) rep.checks.push_back(check_integer_order(n, order));
    if (n <= 6) rep.checks.push_back(check_type_conditions(n));
    if (n <= order::max_barred_n) {
      auto d = order::verify_commuting_diagram(n);
      rep.checks.insert(rep.checks.end(), d.checks.begin(), d.checks.end());
    }
    if (n <= 10) rep.checks.push_back(check_statistics_monotone(n, order));
    rep.checks.push_back(check_duality(n));
    if (n >= 2 && n <= 4) rep.checks.push_back(check_measure_monotonicity(n, opt.tolerance, 5));
  }
  return rep;
}

} // namespace ptk::verify
