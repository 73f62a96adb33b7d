#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptk/error.hpp"
#include "ptk/quantum/density.hpp"

namespace ptk::quantum {

/// State from JSON of the form {"dims":[d1,...], "matrix":[[[re,im],...],...]} (row-major).
inline DensityMatrix state_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("dims") || !j.contains("matrix"))
      throw ValidationError("state JSON needs \"dims\" and \"matrix\"");
    auto dims = j.at("dims").get<std::vector<int>>();
    const auto D = static_cast<Eigen::Index>(total_dim(dims));
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != D)
      throw DimensionError("matrix must have " + std::to_string(D) + " rows");
    Matrix m(D, D);
    for (Eigen::Index a = 0; a < D; ++a) {
      const auto& row = rows[static_cast<std::size_t>(a)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != D)
        throw DimensionError("matrix row " + std::to_string(a) + " must have " + std::to_string(D) + " entries");
      for (Eigen::Index b = 0; b < D; ++b) {
        const auto& e = row[static_cast<std::size_t>(b)];
        if (e.is_number()) {
          m(a, b) = Complex(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2) {
          m(a, b) = Complex(e[0].get<double>(), e[1].get<double>());
        } else {
          throw ValidationError("matrix entries must be [re, im] pairs");
        }
      }
    }
    return DensityMatrix(std::move(dims), std::move(m));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed state JSON: ") + e.what());
  }
}

inline nlohmann::json state_to_json(const DensityMatrix& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index a = 0; a < r.dim(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index b = 0; b < r.dim(); ++b) row.push_back({r.data()(a, b).real(), r.data()(a, b).imag()});
    rows.push_back(std::move(row));
  }
  return {{"dims", r.dims()}, {"matrix", std::move(rows)}};
}

namespace detail {
inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline int to_int(const std::string& s, const std::string& ctx) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("expected a positive integer in '" + ctx + "'");
  return std::stoi(s);
}

inline DensityMatrix single_fixture(const std::string& text) {
  const auto f = split(text, ':');
  const std::string& name = f[0];
  auto arg = [&](std::size_t i, int fallback) { return f.size() > i ? to_int(f[i], text) : fallback; };
  if (name == "bell" && f.size() == 1) return bell();
  if (name == "ghz" && f.size() <= 3) return ghz(arg(1, 3), arg(2, 2));
  if (name == "w" && f.size() <= 2) return w_state(arg(1, 3));
  if (name == "zero" && f.size() <= 3) return basis_zero(std::vector<int>(static_cast<std::size_t>(arg(1, 1)), arg(2, 2)));
  if (name == "mixed" && f.size() <= 3) return maximally_mixed(std::vector<int>(static_cast<std::size_t>(arg(1, 1)), arg(2, 2)));
  if (name == "random" && f.size() <= 3)
    return random_mixed(std::vector<int>(static_cast<std::size_t>(arg(1, 3)), 2), 2, static_cast<std::uint64_t>(arg(2, 1)));
  if (name == "randpure" && f.size() <= 3)
    return random_pure(std::vector<int>(static_cast<std::size_t>(arg(1, 3)), 2), static_cast<std::uint64_t>(arg(2, 1)));
  throw ValidationError("unknown state fixture '" + text + "'");
}
} // namespace detail

inline bool is_fixture(const std::string& source) {
  static const char* names[] = {"bell", "ghz", "w", "zero", "mixed", "random", "randpure"};
  for (const auto& part : detail::split(source, '*')) {
    const auto head = detail::split(part, ':').front();
    bool known = false;
    for (const char* n : names) known = known || head == n;
    if (!known) return false;
  }
  return true;
}

/// Named fixtures ("bell", "ghz:m:d", "w:m", "zero:m", "mixed:m", "random:m:seed", "randpure:m:seed"),
/// tensor products of them joined by '*', or a path to a state JSON file.
inline DensityMatrix load_state(const std::string& source) {
  if (source.empty()) throw ValidationError("empty state source");
  if (is_fixture(source)) {
    std::vector<DensityMatrix> parts;
    for (const auto& p : detail::split(source, '*')) parts.push_back(detail::single_fixture(p));
    return parts.size() == 1 ? parts.front() : product(parts);
  }
  std::ifstream in(source);
  if (!in) throw ValidationError("cannot open state file '" + source + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("state file '" + source + "' is not valid JSON: " + e.what());
  }
  return state_from_json(j);
}

} // namespace ptk::quantum
