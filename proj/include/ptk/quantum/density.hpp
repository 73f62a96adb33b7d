#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ptk/error.hpp"

namespace ptk::quantum {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct Tolerance {
  static constexpr double hermitian = 1e-10;
  static constexpr double trace = 1e-10;
  static constexpr double negative_eigenvalue = 1e-10;
  /// Eigenvalues below this are treated as zero before taking logarithms.
  static constexpr double clip = 1e-12;
  static constexpr double purity = 1e-9;
  static constexpr double kraus = 1e-10;
  /// Default threshold (nats) below which a correlation counts as zero.
  static constexpr double product = 1e-9;
};

inline constexpr std::size_t max_total_dim = 4096;

inline std::size_t total_dim(const std::vector<int>& dims) {
  std::size_t d = 1;
  for (int x : dims) {
    if (x < 2) throw ValidationError("every site dimension must be at least 2, got " + std::to_string(x));
    d *= static_cast<std::size_t>(x);
    if (d > max_total_dim)
      throw SizeCapError("total Hilbert space dimension", max_total_dim, d);
  }
  return d;
}

/// Hermitian, positive semidefinite, unit-trace matrix over a tensor product of sites.
class DensityMatrix {
public:
  DensityMatrix(std::vector<int> dims, Matrix data) : dims_(std::move(dims)), data_(std::move(data)) {
    if (dims_.empty()) throw ValidationError("a state needs at least one site");
    const auto d = static_cast<Eigen::Index>(total_dim(dims_));
    if (data_.rows() != d || data_.cols() != d)
      throw DimensionError("matrix is " + std::to_string(data_.rows()) + "x" + std::to_string(data_.cols()) +
                           " but the site dimensions multiply to " + std::to_string(d));
    if ((data_ - data_.adjoint()).cwiseAbs().maxCoeff() > Tolerance::hermitian)
      throw ValidationError("density matrix invariant violated: not Hermitian");
    if (std::abs(data_.trace() - Complex(1.0, 0.0)) > Tolerance::trace)
      throw ValidationError("density matrix invariant violated: trace is not 1");
    data_ = (0.5 * (data_ + data_.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(data_, Eigen::EigenvaluesOnly);
    eig_ = es.eigenvalues();
    if (eig_.minCoeff() < -Tolerance::negative_eigenvalue)
      throw ValidationError("density matrix invariant violated: negative eigenvalue " + std::to_string(eig_.minCoeff()));
  }

  const std::vector<int>& dims() const noexcept { return dims_; }
  int sites() const noexcept { return static_cast<int>(dims_.size()); }
  Eigen::Index dim() const noexcept { return data_.rows(); }
  const Matrix& data() const noexcept { return data_; }
  const Eigen::VectorXd& eigenvalues() const noexcept { return eig_; }
  double purity() const { return (data_ * data_).trace().real(); }

private:
  std::vector<int> dims_;
  Matrix data_;
  Eigen::VectorXd eig_;
};

/// Von Neumann entropy in nats.
inline double entropy_of_spectrum(const Eigen::VectorXd& eig) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    const double l = eig[i];
    if (l > Tolerance::clip) s -= l * std::log(l);
  }
  return std::max(0.0, s);
}

inline double vn_entropy(const DensityMatrix& r) { return entropy_of_spectrum(r.eigenvalues()); }

/// Relative entropy Tr r(ln r - ln s); +infinity when the support of r leaves that of s.
inline double rel_entropy(const DensityMatrix& r, const DensityMatrix& s) {
  if (r.dims() != s.dims()) throw DimensionError("relative entropy of states with different site dimensions");
  Eigen::SelfAdjointEigenSolver<Matrix> es(s.data());
  const Matrix& v = es.eigenvectors();
  const Eigen::VectorXd& mu = es.eigenvalues();
  double cross = 0.0;
  double outside = 0.0;
  for (Eigen::Index j = 0; j < mu.size(); ++j) {
    const double w = (v.col(j).adjoint() * r.data() * v.col(j))(0, 0).real();
    if (mu[j] > Tolerance::clip)
      cross += w * std::log(mu[j]);
    else
      outside += w;
  }
  if (outside > Tolerance::trace) return std::numeric_limits<double>::infinity();
  return std::max(0.0, -vn_entropy(r) - cross);
}

namespace detail {

/// Row-major strides of the site indices.
inline std::vector<std::size_t> strides(const std::vector<int>& dims) {
  std::vector<std::size_t> st(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) st[i - 1] = st[i] * static_cast<std::size_t>(dims[i]);
  return st;
}

/// Offsets of every joint configuration of `sites` (in the order given) within the full index.
inline std::vector<std::size_t> offsets(const std::vector<int>& dims, const std::vector<int>& sites) {
  const auto st = strides(dims);
  std::vector<std::size_t> out{0};
  for (int s : sites) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * static_cast<std::size_t>(dims[static_cast<std::size_t>(s)]));
    for (std::size_t o : out)
      for (int v = 0; v < dims[static_cast<std::size_t>(s)]; ++v) next.push_back(o + static_cast<std::size_t>(v) * st[static_cast<std::size_t>(s)]);
    out = std::move(next);
  }
  return out;
}

inline std::vector<int> complement(int n, const std::vector<int>& sites) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (std::find(sites.begin(), sites.end(), i) == sites.end()) out.push_back(i);
  return out;
}

inline void check_sites(int n, const std::vector<int>& sites) {
  if (sites.empty()) throw ValidationError("subsystem selection must be nonempty");
  std::vector<int> s = sites;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ValidationError("subsystem selection repeats a site");
  if (s.front() < 0 || s.back() >= n) throw ValidationError("subsystem selection names a site outside 0.." + std::to_string(n - 1));
}

} // namespace detail

/// Raw marginal matrix on the kept sites (ascending order).
inline Matrix partial_trace_matrix(const Matrix& m, const std::vector<int>& dims, std::vector<int> keep) {
  const int n = static_cast<int>(dims.size());
  detail::check_sites(n, keep);
  std::sort(keep.begin(), keep.end());
  const auto traced = detail::complement(n, keep);
  const auto ko = detail::offsets(dims, keep);
  const auto to = detail::offsets(dims, traced);
  const auto dk = static_cast<Eigen::Index>(ko.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a)
    for (Eigen::Index b = 0; b < dk; ++b) {
      Complex acc(0.0, 0.0);
      for (std::size_t t : to)
        acc += m(static_cast<Eigen::Index>(ko[static_cast<std::size_t>(a)] + t), static_cast<Eigen::Index>(ko[static_cast<std::size_t>(b)] + t));
      out(a, b) = acc;
    }
  return out;
}

/// Marginal state on the kept sites.
inline DensityMatrix partial_trace(const DensityMatrix& r, const std::vector<int>& keep) {
  std::vector<int> k = keep;
  std::sort(k.begin(), k.end());
  Matrix m = partial_trace_matrix(r.data(), r.dims(), k);
  std::vector<int> dims;
  for (int s : k) dims.push_back(r.dims()[static_cast<std::size_t>(s)]);
  return DensityMatrix(std::move(dims), std::move(m));
}

inline std::vector<int> sites_of_mask(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1U) out.push_back(i);
  return out;
}

// ---- constructors ----------------------------------------------------------

inline DensityMatrix pure_state(std::vector<int> dims, Vector psi) {
  const double nrm = psi.norm();
  if (nrm < 1e-300) throw ValidationError("state vector is zero");
  psi /= nrm;
  Matrix m = psi * psi.adjoint();
  return DensityMatrix(std::move(dims), std::move(m));
}

/// (|0...0> + ... + |d-1...d-1>)/sqrt(d) on m sites of dimension d.
inline DensityMatrix ghz(int m, int d = 2) {
  if (m < 1) throw ValidationError("ghz needs at least one site");
  std::vector<int> dims(static_cast<std::size_t>(m), d);
  const auto D = static_cast<Eigen::Index>(total_dim(dims));
  Vector psi = Vector::Zero(D);
  const auto st = detail::strides(dims);
  for (int v = 0; v < d; ++v) {
    std::size_t idx = 0;
    for (std::size_t s = 0; s < st.size(); ++s) idx += static_cast<std::size_t>(v) * st[s];
    psi[static_cast<Eigen::Index>(idx)] = 1.0;
  }
  return pure_state(std::move(dims), std::move(psi));
}

/// Equal superposition of the m single-excitation qubit states.
inline DensityMatrix w_state(int m) {
  if (m < 1) throw ValidationError("w state needs at least one site");
  std::vector<int> dims(static_cast<std::size_t>(m), 2);
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(total_dim(dims)));
  for (int i = 0; i < m; ++i) psi[Eigen::Index{1} << (m - 1 - i)] = 1.0;
  return pure_state(std::move(dims), std::move(psi));
}

inline DensityMatrix bell() { return ghz(2, 2); }

/// |0...0> on the given sites.
inline DensityMatrix basis_zero(std::vector<int> dims) {
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(total_dim(dims)));
  psi[0] = 1.0;
  return pure_state(std::move(dims), std::move(psi));
}

inline DensityMatrix maximally_mixed(std::vector<int> dims) {
  const auto D = static_cast<Eigen::Index>(total_dim(dims));
  Matrix m = Matrix::Identity(D, D) / static_cast<double>(D);
  return DensityMatrix(std::move(dims), std::move(m));
}

inline Vector gaussian_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    v[i] = Complex(re, im);
  }
  return v;
}

/// Haar-random pure state; deterministic for a fixed seed.
inline DensityMatrix random_pure(std::vector<int> dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Vector psi = gaussian_vector(static_cast<Eigen::Index>(total_dim(dims)), rng);
  return pure_state(std::move(dims), std::move(psi));
}

/// Induced-measure random mixed state of the given rank; deterministic for a fixed seed.
inline DensityMatrix random_mixed(std::vector<int> dims, int rank, std::uint64_t seed) {
  const auto D = static_cast<Eigen::Index>(total_dim(dims));
  if (rank < 1 || rank > D) throw ValidationError("rank must lie in 1.." + std::to_string(D));
  std::mt19937_64 rng(seed);
  Matrix g(D, rank);
  for (int c = 0; c < rank; ++c) g.col(c) = gaussian_vector(D, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(dims), std::move(m));
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Tensor product, sites concatenated in order.
inline DensityMatrix product(const std::vector<DensityMatrix>& parts) {
  if (parts.empty()) throw ValidationError("product of no states");
  std::vector<int> dims = parts.front().dims();
  Matrix m = parts.front().data();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    dims.insert(dims.end(), parts[i].dims().begin(), parts[i].dims().end());
    total_dim(dims);
    m = kron(m, parts[i].data());
  }
  return DensityMatrix(std::move(dims), std::move(m));
}

/// Reorders sites: new site i is old site order[i].
inline DensityMatrix permute_sites(const DensityMatrix& r, const std::vector<int>& order) {
  const int n = r.sites();
  if (static_cast<int>(order.size()) != n) throw ValidationError("site permutation has the wrong length");
  detail::check_sites(n, order);
  std::vector<int> dims;
  for (int s : order) dims.push_back(r.dims()[static_cast<std::size_t>(s)]);
  // offsets(old dims, order) enumerates old indices in the new row-major order
  const auto map = detail::offsets(r.dims(), order);
  const auto D = static_cast<Eigen::Index>(map.size());
  Matrix m(D, D);
  for (Eigen::Index a = 0; a < D; ++a)
    for (Eigen::Index b = 0; b < D; ++b)
      m(a, b) = r.data()(static_cast<Eigen::Index>(map[static_cast<std::size_t>(a)]), static_cast<Eigen::Index>(map[static_cast<std::size_t>(b)]));
  return DensityMatrix(std::move(dims), std::move(m));
}

} // namespace ptk::quantum
