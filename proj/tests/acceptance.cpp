// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when a criterion fails,
// except for sub-checks listed in `known_conflicts`, which still print FAIL with their counterexample.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ptk/intpart.hpp"
#include "ptk/kprops.hpp"
#include "ptk/order/coarsen.hpp"
#include "ptk/order/commuting.hpp"
#include "ptk/quantum/channel.hpp"
#include "ptk/quantum/measures.hpp"
#include "ptk/setpart.hpp"

using namespace ptk;
using intpart::IntPartition;
using setpart::SetPartition;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double seconds_limit;
  std::function<Outcome()> body;
};

// Sub-checks whose statement in the source is contradicted by exhaustive evaluation.
const std::vector<std::string> known_conflicts{"4c"};

Outcome structure_counts() {
  Outcome o;
  if (setpart::enumerate_partitions(3).size() != 5) o.fail("|P_I(3)| != 5");
  auto p = std::make_shared<const order::Poset<SetPartition>>(setpart::refinement_poset(3));
  if (order::ideal_lattice(p)->size() != 9) o.fail("|P_II(3)| != 9");
  const std::size_t p_n[] = {2, 3, 5, 7, 11};
  for (int n = 2; n <= 6; ++n)
    if (intpart::enumerate_intpartitions(n).size() != p_n[n - 2]) o.fail("p(" + std::to_string(n) + ") mismatch");
  o.detail = o.passed ? "5 partitions, 9 ideals, p(2..6) = 2,3,5,7,11" : o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t pairs = 0;
  for (int n = 1; n <= 7; ++n) {
    oracle::TypeOrder t(n);
    for (std::size_t i = 0; i < t.types.size(); ++i)
      for (std::size_t j = 0; j < t.types.size(); ++j) {
        ++pairs;
        if (intpart::refines_int(IntPartition(t.types[i]), IntPartition(t.types[j])) != t.leq[i][j])
          o.fail("disagreement at n=" + std::to_string(n));
      }
  }
  if (o.passed) o.detail = std::to_string(pairs) + " pairs, 0 disagreements";
  return o;
}

Outcome appendix_suite() {
  Outcome o;
  std::size_t checks = 0;
  for (int n = 1; n <= 6; ++n) {
    auto c = order::coarsen(setpart::refinement_poset(n), setpart::type_of);
    ++checks;
    if (!c.conditions.all()) o.fail("coarsening conditions fail at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : order::verify_commuting_diagram(n).checks) {
      ++checks;
      if (!c.passed) o.fail(c.name + " n=" + std::to_string(n) + ": " + c.detail);
    }
  if (o.passed) o.detail = std::to_string(checks) + " checks, 0 failures";
  return o;
}

Outcome inclusions() {
  Outcome o;
  std::size_t entries = 0;
  for (int n = 1; n <= 12; ++n)
    for (const auto& f : kprops::duality_bounds(n).families)
      for (const auto& e : f.entries) {
        ++entries;
        if (!e.holds) o.fail(f.name + " n=" + std::to_string(n) + " k=" + std::to_string(e.k));
      }
  if (o.passed) o.detail = std::to_string(entries) + " (relation, n, k) inclusions hold";
  return o;
}

Outcome witness_saturation(bool hook) {
  Outcome o;
  int pairs = 0, bad = 0;
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= n; ++m) {
      ++pairs;
      auto c = kprops::saturation_check(n, m);
      if (hook ? c.hook_ok() : c.blocks_ok()) continue;
      ++bad;
      const auto& flags = hook ? c.hook_saturates : c.blocks_saturates;
      std::string which;
      for (std::size_t i = 0; i < 6; ++i)
        if (!flags[i]) which += (which.empty() ? "" : ",") + std::to_string(i);
      o.fail("(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ") witness " +
             intpart::to_set_string(hook ? c.hook : c.blocks) + " misses inequalities [" + which + "]");
    }
  o.detail = (o.passed ? "" : o.detail + "; ") + std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " (n,m) pairs saturate";
  return o;
}

Outcome statistics_monotone() {
  Outcome o;
  std::size_t strict = 0;
  for (int n = 1; n <= 10; ++n) {
    auto all = intpart::enumerate_intpartitions(n);
    for (const auto& v : all)
      for (const auto& x : all) {
        if (v == x || !intpart::refines_int(v, x)) continue;
        ++strict;
        if (!(v.height() > x.height() && v.width() <= x.width() && v.rank() < x.rank()))
          o.fail(intpart::to_string(v) + " < " + intpart::to_string(x));
      }
  }
  if (o.passed) o.detail = std::to_string(strict) + " strict pairs";
  return o;
}

Outcome conjugation() {
  Outcome o;
  for (int n = 1; n <= 12; ++n)
    for (const auto& x : intpart::enumerate_intpartitions(n)) {
      auto c = intpart::conjugate(x);
      if (intpart::conjugate(c) != x) o.fail("not an involution at " + intpart::to_string(x));
      if (c.height() != x.width() || c.width() != x.height() || c.rank() != -x.rank())
        o.fail("statistics not exchanged at " + intpart::to_string(x));
    }
  auto P = [](std::vector<int> v) { return IntPartition(std::move(v)); };
  auto le = [](const IntPartition& a, const IntPartition& b) { return intpart::refines_int(a, b); };
  auto cj = [](const IntPartition& a) { return intpart::conjugate(a); };
  // n=2: monotonicity fails
  if (!(le(P({1, 1}), P({2})) && !le(cj(P({1, 1})), cj(P({2}))))) o.fail("n=2 counterexample does not reproduce");
  // n=4: antitonicity fails, images incomparable
  auto a = P({2, 1, 1}), b = P({2, 2});
  if (!(le(a, b) && !le(cj(b), cj(a)) && !le(cj(a), cj(b)))) o.fail("n=4 counterexample does not reproduce");
  // n=6: conjugate pair, incomparable
  auto s = P({2, 2, 2}), t = P({3, 3});
  if (!(cj(s) == t && !le(s, t) && !le(t, s))) o.fail("n=6 counterexample does not reproduce");
  if (o.passed) o.detail = "involution and h/w/r exchange for n <= 12; counterexamples at n = 2, 4, 6 reproduce";
  return o;
}

Outcome quantum_fixtures() {
  using namespace quantum;
  Outcome o;
  const double ln2 = std::log(2.0), tol = 1e-9;
  auto near = [&](double got, double want, const std::string& what) {
    if (std::abs(got - want) > tol) {
      std::ostringstream os;
      os << what << " = " << std::setprecision(15) << got << ", expected " << want;
      o.fail(os.str());
    }
  };
  auto g = ghz(3);
  near(corr_xi(g, setpart::parse("1|2|3")).value, 3 * ln2, "C(GHZ3, 1|2|3)");
  near(corr_xi(g, setpart::parse("12|3")).value, 2 * ln2, "C(GHZ3, 12|3)");
  near(pure_ent_xi(bell(), setpart::parse("1|2")), 2 * ln2, "E(Bell, 1|2)");
  near(corr_kstr(g, 0).value, 2 * ln2, "C_0-str(GHZ3)");
  if (perminv_class_of(product({bell(), bell()})) != IntPartition({2, 2})) o.fail("class of Bell x Bell is not {2,2}");
  if (o.passed) o.detail = "all five fixture values within 1e-9";
  return o;
}

Outcome measure_properties() {
  using namespace quantum;
  Outcome o;
  const double tol = 1e-9;
  std::size_t comparisons = 0;
  int states = 0;
  for (int n : {3, 4}) {
    const auto parts = setpart::enumerate_partitions(n);
    const auto types = intpart::enumerate_intpartitions(n);
    for (int seed = 0; seed < 20; ++seed, ++states) {
      const std::vector<int> dims(static_cast<std::size_t>(n), 2);
      const auto s = static_cast<std::uint64_t>(100 * n + seed);
      auto r = seed % 4 == 0 ? random_pure(dims, s) : random_mixed(dims, 1 + seed % 6, s);
      EntropyCache cache(r);
      for (const auto& u : parts)
        for (const auto& x : parts)
          if (setpart::refines(u, x)) {
            ++comparisons;
            if (corr_xi_value(cache, u) < corr_xi_value(cache, x) - tol) o.fail("multipartite monotonicity, seed " + std::to_string(s));
          }
      for (const auto& v : types)
        for (const auto& t : types)
          if (intpart::refines_int(v, t)) {
            ++comparisons;
            if (min_corr(cache, preimages({v})).value < min_corr(cache, preimages({t})).value - tol)
              o.fail("barred monotonicity, seed " + std::to_string(s));
          }
      for (std::size_t rel = 0; rel < kprops::bound_relations.size(); ++rel) {
        const auto& br = kprops::bound_relations[rel];
        auto [lo, hi] = kprops::k_range(n, br.from);
        for (int k = lo; k <= hi; ++k) {
          ++comparisons;
          const double src = corr_property(cache, br.from, kprops::HalfInt::whole(k)).value;
          const double dst = corr_property(cache, br.to, kprops::bound_target(n, rel, k)).value;
          if (dst > src + tol) o.fail(std::string(br.name) + " measure bound, k=" + std::to_string(k));
        }
      }
      for (int t = 0; t < 3; ++t) {
        const auto& x = parts[static_cast<std::size_t>(seed * 3 + t) % parts.size()];
        auto ch = random_local_channel(x, dims, s * 10 + static_cast<std::uint64_t>(t), 1 + t);
        ++comparisons;
        if (corr_xi(apply_channel(ch, r), x).value > corr_xi_value(cache, x) + tol)
          o.fail("local channel increased C on " + setpart::to_string(x) + ", seed " + std::to_string(s));
      }
    }
  }
  if (o.passed) o.detail = std::to_string(states) + " states, " + std::to_string(comparisons) + " comparisons, 0 violations";
  return o;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "structure counts", 1.0, structure_counts},
      {"2", "integer refinement equals the representative definition (n <= 7)", 60.0, oracle_equivalence},
      {"3", "coarsening conditions and commuting diagram (n <= 6 / n <= 5)", 300.0, appendix_suite},
      {"4a", "six property inclusions for every valid k (n <= 12)", 10.0, inclusions},
      {"4b", "hook witness {m,1,...,1} saturates its designated bounds (n <= 12)", 10.0, [] { return witness_saturation(true); }},
      {"4c", "block witness {m,...,m,rest} saturates its designated bounds (n <= 12)", 10.0, [] { return witness_saturation(false); }},
      {"5", "height/width/rank monotone under strict refinement (n <= 10)", 30.0, statistics_monotone},
      {"6", "conjugation identities and counterexamples", 10.0, conjugation},
      {"7", "quantum fixture values", 5.0, quantum_fixtures},
      {"8", "measure monotonicity, measure bounds, local-operation monotonicity", 120.0, measure_properties},
  };
  int unexpected = 0, failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.seconds_limit) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.seconds_limit) + " s");
    const bool known = std::find(known_conflicts.begin(), known_conflicts.end(), c.id) != known_conflicts.end();
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << " [" << std::fixed << std::setprecision(3) << secs
              << " s]  " << o.detail << (!o.passed && known ? "  (known conflict with the stated claim)" : "") << std::endl;
    if (!o.passed) {
      ++failed;
      if (!known) ++unexpected;
    }
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " passed";
  if (failed != unexpected) std::cout << ", " << failed - unexpected << " known conflict";
  std::cout << std::endl;
  return unexpected == 0 ? 0 : 1;
}
