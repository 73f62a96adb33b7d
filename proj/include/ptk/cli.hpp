#pragma once

#include <cmath>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptk/error.hpp"
#include "ptk/intpart.hpp"
#include "ptk/kprops.hpp"
#include "ptk/order/lattice.hpp"
#include "ptk/order/poset.hpp"
#include "ptk/quantum/io.hpp"
#include "ptk/quantum/measures.hpp"
#include "ptk/setpart.hpp"
#include "ptk/verify.hpp"

namespace ptk::cli {

using nlohmann::json;

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2, size_cap = 3 };

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string fixed(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << std::fixed << v;
  return os.str();
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (auto& t : quantum::detail::split(s, ';'))
    if (!t.empty()) out.push_back(t);
  if (out.empty()) throw ValidationError("empty generator list '" + s + "'");
  return out;
}

template <class T>
void render_poset(const order::Poset<T>& p, const std::string& level, bool barred, int n, const std::string& format,
                  std::ostream& out) {
  const auto edges = order::hasse_edges(p);
  if (format == "dot") {
    out << order::to_dot(p, "P" + level + (barred ? "bar" : "") + "_" + std::to_string(n));
  } else if (format == "json") {
    json els = json::array();
    for (const auto& e : p.elements()) els.push_back(to_label(e));
    json es = json::array();
    for (auto [a, b] : edges) es.push_back({a, b});
    out << json{{"level", level}, {"barred", barred}, {"n", n}, {"elements", els}, {"edges", es}}.dump(2) << '\n';
  } else if (format == "csv") {
    out << "lower,upper\n";
    for (auto [a, b] : edges) out << csv_field(to_label(p.element(a))) << ',' << csv_field(to_label(p.element(b))) << '\n';
  } else {
    out << "level " << level << (barred ? " (permutation invariant)" : "") << ", n=" << n << ": " << p.size()
        << " elements, " << edges.size() << " covering pairs\n";
    for (std::size_t i = 0; i < p.size(); ++i) out << "  [" << i << "] " << to_label(p.element(i)) << '\n';
    for (auto [a, b] : edges) out << "  " << a << " < " << b << '\n';
  }
}

template <class T>
void render_levels(order::PosetPtr<T> p1, const std::string& level, bool barred, int n, const std::string& format,
                   std::ostream& out) {
  if (level == "I") return render_poset(*p1, level, barred, n, format, out);
  auto p2 = order::ideal_lattice(p1);
  if (level == "II") return render_poset(*p2, level, barred, n, format, out);
  auto p3 = order::filter_lattice(p2);
  render_poset(*p3, level, barred, n, format, out);
}

inline void emit_measure(const quantum::MeasureResult& r, const std::string& label, bool bits, double tol,
                         const std::string& format, std::ostream& out) {
  const double b = r.value / std::log(2.0);
  if (format == "json") {
    json j{{"measure", label},
           {"value_nats", r.value},
           {"minimizing_partition", setpart::to_string(r.minimizing_partition)},
           {"finite", r.finite},
           {"uncorrelated", r.value <= tol}};
    if (bits) j["value_bits"] = b;
    out << j.dump(2) << '\n';
    return;
  }
  out << label << " = " << fixed(r.value) << " nats";
  if (bits) out << " (" << fixed(b) << " bits)";
  out << "\nminimizing partition: " << setpart::to_string(r.minimizing_partition) << "\nfinite: " << (r.finite ? "yes" : "no")
      << '\n';
}

} // namespace detail

/// Runs the command line `args` (without the program name); returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition-order toolkit: refinement lattices, k-properties and correlation measures"};
  app.name("ptk");
  app.require_subcommand(1);

  std::string level = "I", format, state, partition, ideal, types, kind_flag;
  bool barred = false, bits = false, pure = false, inject_fault = false;
  int n = 0, n_max = 4;
  std::optional<int> kpart, kprod, kstr;
  double tol = quantum::Tolerance::product;

  auto* poset = app.add_subcommand("poset", "Print a level of the classification poset");
  poset->add_option("--level", level, "I, II or III")->check(CLI::IsMember({"I", "II", "III"}));
  poset->add_flag("--barred", barred, "Permutation-invariant version (integer partitions)");
  poset->add_option("--n", n, "Number of parties")->required();
  poset->add_option("--format", format, "text, json, csv or dot")->check(CLI::IsMember({"text", "json", "csv", "dot"}));

  auto* kprops_cmd = app.add_subcommand("kprops", "Table of k-partitionability, k-producibility and k-stretchability ideals");
  std::string table_word;
  kprops_cmd->add_option("table", table_word, "Optional literal 'table'")->check(CLI::IsMember({"table"}));
  kprops_cmd->add_option("--n", n, "Number of parties")->required();
  kprops_cmd->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));

  auto* measure = app.add_subcommand("measure", "Evaluate a correlation or entanglement measure");
  measure->add_option("--state", state, "Fixture (bell, ghz:m:d, w:m, zero:m, mixed:m, random:m:seed, randpure:m:seed; '*' for products) or JSON file")
      ->required();
  auto* o_part = measure->add_option("--partition", partition, "Set partition, e.g. 12|3");
  auto* o_ideal = measure->add_option("--ideal", ideal, "Ideal of set partitions given by ';'-separated generators");
  auto* o_types = measure->add_option("--types", types, "Ideal of integer partitions given by ';'-separated generators");
  auto* o_kpart = measure->add_option("--kpart", kpart, "k-partitionability");
  auto* o_kprod = measure->add_option("--kprod", kprod, "k-producibility");
  auto* o_kstr = measure->add_option("--kstr", kstr, "k-stretchability");
  measure->add_flag("--pure", pure, "Pure-state entanglement for --partition");
  measure->add_flag("--bits", bits, "Also print the value in bits");
  measure->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
  measure->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  for (auto* o : {o_part, o_ideal, o_types, o_kpart, o_kprod, o_kstr})
    for (auto* other : {o_part, o_ideal, o_types, o_kpart, o_kprod, o_kstr})
      if (o != other) o->excludes(other);

  auto* classify = app.add_subcommand("classify", "Finest product structure and the k-properties a state has");
  classify->add_option("--state", state, "State fixture or JSON file")->required();
  classify->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
  classify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive structural checks");
  verify_cmd->add_option("--n-max", n_max, "Largest n checked");
  verify_cmd->add_flag("--inject-fault", inject_fault, "Replace the integer refinement order by a wrong one");
  verify_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> argv_store{"ptk"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*poset) {
      if (format.empty()) format = "text";
      if (barred)
        detail::render_levels(std::make_shared<const order::Poset<intpart::IntPartition>>(intpart::refinement_poset(n)), level,
                              barred, n, format, out);
      else
        detail::render_levels(std::make_shared<const order::Poset<setpart::SetPartition>>(setpart::refinement_poset(n)), level,
                              barred, n, format, out);
      return ok;
    }

    if (*kprops_cmd) {
      if (format.empty()) format = "csv";
      if (format == "csv") {
        out << kprops::kprops_csv(n);
        return ok;
      }
      auto rep = kprops::duality_bounds(n);
      if (format == "json") {
        json rows = json::array();
        for (auto kind : {kprops::Kind::partitionability, kprops::Kind::producibility, kprops::Kind::stretchability}) {
          auto [lo, hi] = kprops::k_range(n, kind);
          for (int k = lo; k <= hi; ++k) {
            auto id = kprops::property_ideal(n, kind, k);
            json mx = json::array();
            for (const auto& x : kprops::maximal_members(id)) mx.push_back(intpart::to_string(x));
            rows.push_back({{"kind", kprops::kind_name(kind)}, {"k", k}, {"size", id.members.size()}, {"maximal", mx}});
          }
        }
        json bounds = json::object();
        for (const auto& f : rep.families) bounds[f.name] = f.holds;
        out << json{{"n", n}, {"rows", rows}, {"bounds", bounds}, {"bounds_ok", rep.holds()}}.dump(2) << '\n';
      } else {
        out << kprops::kprops_csv(n);
        for (const auto& f : rep.families) out << f.name << ": " << (f.holds ? "holds" : "FAILS") << '\n';
      }
      return ok;
    }

    if (*measure) {
      if (format.empty()) format = "text";
      auto r = quantum::load_state(state);
      quantum::EntropyCache cache(r);
      const int sites = r.sites();
      if (pure) {
        if (partition.empty()) throw ValidationError("--pure needs --partition");
        auto x = setpart::parse(partition, sites);
        quantum::MeasureResult m{quantum::pure_ent_xi(r, x), x, true};
        detail::emit_measure(m, "E(" + setpart::to_string(x) + ")", bits, tol, format, out);
        return ok;
      }
      quantum::MeasureResult m;
      std::string label;
      if (!partition.empty()) {
        auto x = setpart::parse(partition, sites);
        m = quantum::min_corr(cache, {x});
        label = "C(" + setpart::to_string(x) + ")";
      } else if (!ideal.empty()) {
        std::vector<setpart::SetPartition> gens;
        for (const auto& g : detail::split_list(ideal)) gens.push_back(setpart::parse(g, sites));
        m = quantum::min_corr(cache, gens);
        label = "C(ideal " + ideal + ")";
      } else if (!types.empty()) {
        std::vector<intpart::IntPartition> gens;
        for (const auto& g : detail::split_list(types)) {
          gens.push_back(intpart::parse(g));
          if (gens.back().n() != sites) throw DimensionError("type " + g + " does not partition " + std::to_string(sites) + " sites");
        }
        m = quantum::min_corr(cache, quantum::preimages(gens));
        label = "C(types " + types + ")";
      } else if (kpart || kprod || kstr) {
        const auto kind = kpart ? kprops::Kind::partitionability : kprod ? kprops::Kind::producibility : kprops::Kind::stretchability;
        const int k = kpart ? *kpart : kprod ? *kprod : *kstr;
        m = quantum::corr_property(r, kind, k);
        label = std::string("C(") + std::to_string(k) + "-" + kprops::kind_name(kind) + ")";
      } else {
        throw ValidationError("measure needs one of --partition, --ideal, --types, --kpart, --kprod, --kstr");
      }
      detail::emit_measure(m, label, bits, tol, format, out);
      return ok;
    }

    if (*classify) {
      if (format.empty()) format = "text";
      auto r = quantum::load_state(state);
      auto finest = quantum::finest_product_structure(r, tol);
      auto type = setpart::type_of(finest);
      json props = json::object();
      quantum::EntropyCache cache(r);
      for (auto kind : {kprops::Kind::partitionability, kprops::Kind::producibility, kprops::Kind::stretchability}) {
        json ks = json::array();
        auto [lo, hi] = kprops::k_range(r.sites(), kind);
        for (int k = lo; k <= hi; ++k)
          if (quantum::corr_property(cache, kind, kprops::HalfInt::whole(k)).value <= tol) ks.push_back(k);
        props[kprops::kind_name(kind)] = ks;
      }
      if (format == "json") {
        out << json{{"finest_product_partition", setpart::to_string(finest)},
                    {"type", intpart::to_set_string(type)},
                    {"uncorrelated", props}}
                   .dump(2)
            << '\n';
      } else {
        out << "finest product partition: " << setpart::to_string(finest) << "\ntype: " << intpart::to_set_string(type) << '\n';
        for (const char* name : {"part", "prod", "str"}) {
          out << "uncorrelated for k-" << name << ":";
          for (const auto& k : props[name]) out << ' ' << k.get<int>();
          out << '\n';
        }
      }
      return ok;
    }

    if (*verify_cmd) {
      if (format.empty()) format = "json";
      auto rep = verify::run({n_max, inject_fault, quantum::Tolerance::product});
      if (format == "json") {
        json checks = json::array();
        for (const auto& c : rep.checks) {
          json jc{{"name", c.name}, {"n", c.n}, {"passed", c.passed}, {"cases", c.cases}};
          if (!c.passed) jc["counterexample"] = c.detail;
          checks.push_back(std::move(jc));
        }
        out << json{{"n_max", rep.n_max}, {"passed", rep.passed()}, {"checks", checks}}.dump(2) << '\n';
      } else {
        for (const auto& c : rep.checks)
          out << (c.passed ? "PASS " : "FAIL ") << c.name << " n=" << c.n << " (" << c.cases << " cases)"
              << (c.passed ? "" : ": " + c.detail) << '\n';
      }
      return rep.passed() ? ok : verification_failed;
    }
  } catch (const SizeCapError& e) {
    err << "size cap: " << e.what() << '\n';
    return size_cap;
  } catch (const AxiomError& e) {
    err << "invalid order (" << e.axiom() << "): " << e.what() << '\n';
    return input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

} // namespace ptk::cli
