#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "ptk/error.hpp"
#include "ptk/quantum/density.hpp"
#include "ptk/setpart.hpp"

namespace ptk::quantum {

/// Tensor product of one channel per block of a partition, each given by Kraus operators
/// on the sites of that block (ascending site order).
struct LocalChannel {
  setpart::SetPartition blocks;
  std::vector<int> dims;
  std::vector<std::vector<Matrix>> kraus; // kraus[b] acts on block b

  /// Max deviation of sum K^dagger K from the identity over all blocks.
  double completeness_error() const {
    double err = 0.0;
    for (const auto& ks : kraus) {
      if (ks.empty()) return std::numeric_limits<double>::infinity();
      Matrix s = Matrix::Zero(ks.front().cols(), ks.front().cols());
      for (const auto& k : ks) s += k.adjoint() * k;
      err = std::max(err, (s - Matrix::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff());
    }
    return err;
  }

  void validate() const {
    if (blocks.n() != static_cast<int>(dims.size())) throw DimensionError("channel partition does not match the site count");
    if (static_cast<int>(kraus.size()) != blocks.block_count()) throw ValidationError("one Kraus set per block is required");
    const auto bl = blocks.blocks();
    for (std::size_t b = 0; b < bl.size(); ++b) {
      Eigen::Index d = 1;
      for (int s : bl[b]) d *= dims[static_cast<std::size_t>(s)];
      for (const auto& k : kraus[b])
        if (k.rows() != d || k.cols() != d) throw DimensionError("Kraus operator does not match its block dimension");
    }
    if (completeness_error() > Tolerance::kraus)
      throw ValidationError("Kraus completeness violated (error " + std::to_string(completeness_error()) + ")");
  }
};

namespace detail {
inline Eigen::Index block_dim(const std::vector<int>& dims, const std::vector<int>& sites) {
  Eigen::Index d = 1;
  for (int s : sites) d *= dims[static_cast<std::size_t>(s)];
  return d;
}

/// Columns of a Haar-random isometry from C^d into C^(d*r).
inline Matrix random_isometry(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  Matrix g(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) g.col(c) = gaussian_vector(rows, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  return q;
}
} // namespace detail

/// Random channel on each block (Stinespring isometry with `kraus_rank` outputs); deterministic for a seed.
inline LocalChannel random_local_channel(const setpart::SetPartition& x, const std::vector<int>& dims, std::uint64_t seed,
                                         int kraus_rank = 2) {
  if (kraus_rank < 1) throw ValidationError("Kraus rank must be positive");
  std::mt19937_64 rng(seed);
  LocalChannel ch{x, dims, {}};
  for (const auto& sites : x.blocks()) {
    const Eigen::Index d = detail::block_dim(dims, sites);
    Matrix v = detail::random_isometry(d * kraus_rank, d, rng);
    std::vector<Matrix> ks;
    for (int k = 0; k < kraus_rank; ++k) ks.push_back(v.block(k * d, 0, d, d));
    ch.kraus.push_back(std::move(ks));
  }
  ch.validate();
  return ch;
}

inline LocalChannel identity_channel(const setpart::SetPartition& x, const std::vector<int>& dims) {
  LocalChannel ch{x, dims, {}};
  for (const auto& sites : x.blocks()) {
    const Eigen::Index d = detail::block_dim(dims, sites);
    ch.kraus.push_back({Matrix::Identity(d, d)});
  }
  ch.validate();
  return ch;
}

/// Random unitary on each block.
inline LocalChannel local_unitary(const setpart::SetPartition& x, const std::vector<int>& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LocalChannel ch{x, dims, {}};
  for (const auto& sites : x.blocks()) {
    const Eigen::Index d = detail::block_dim(dims, sites);
    ch.kraus.push_back({detail::random_isometry(d, d, rng)});
  }
  ch.validate();
  return ch;
}

/// rho_X -> (1-p) rho_X + p I/d on each block.
inline LocalChannel depolarizing(const setpart::SetPartition& x, const std::vector<int>& dims, double p) {
  if (p < 0.0 || p > 1.0) throw ValidationError("depolarizing strength must lie in [0,1]");
  LocalChannel ch{x, dims, {}};
  for (const auto& sites : x.blocks()) {
    const Eigen::Index d = detail::block_dim(dims, sites);
    std::vector<Matrix> ks{std::sqrt(1.0 - p) * Matrix::Identity(d, d)};
    // p I/d = sum_{ij} (sqrt(p/d) |i><j|) rho (sqrt(p/d) |j><i|)
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        Matrix k = Matrix::Zero(d, d);
        k(i, j) = std::sqrt(p / static_cast<double>(d));
        ks.push_back(std::move(k));
      }
    ch.kraus.push_back(std::move(ks));
  }
  ch.validate();
  return ch;
}

/// Operator acting as `op` on `sites` (ascending) and as the identity elsewhere.
inline Matrix embed_operator(const Matrix& op, const std::vector<int>& dims, const std::vector<int>& sites) {
  const int n = static_cast<int>(dims.size());
  const auto rest = detail::complement(n, sites);
  const auto so = detail::offsets(dims, sites);
  const auto ro = detail::offsets(dims, rest);
  const auto D = static_cast<Eigen::Index>(so.size() * ro.size());
  Matrix out = Matrix::Zero(D, D);
  for (std::size_t t : ro)
    for (std::size_t a = 0; a < so.size(); ++a)
      for (std::size_t b = 0; b < so.size(); ++b)
        out(static_cast<Eigen::Index>(so[a] + t), static_cast<Eigen::Index>(so[b] + t)) =
            op(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  return out;
}

/// Applies the block channels one after another; they act on disjoint sites, so this is their tensor product.
inline DensityMatrix apply_channel(const LocalChannel& ch, const DensityMatrix& r) {
  ch.validate();
  if (ch.dims != r.dims()) throw DimensionError("channel and state have different site dimensions");
  Matrix m = r.data();
  const auto bl = ch.blocks.blocks();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    Matrix next = Matrix::Zero(m.rows(), m.cols());
    for (const auto& k : ch.kraus[b]) {
      Matrix full = embed_operator(k, ch.dims, bl[b]);
      next += full * m * full.adjoint();
    }
    m = std::move(next);
  }
  return DensityMatrix(r.dims(), std::move(m));
}

} // namespace ptk::quantum
