#pragma once

// Dense exact/float linear algebra: ranks, kernels, cokernels, stacking and
// Kronecker products. Every dimension test in the spectra modules reduces to
// a rank computed here.

#include "jspec/scalar.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <numeric>
#include <stdexcept>
#include <vector>

namespace jspec {

template <typename S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using ExactMatrix = DenseMatrix<RatComplex>;
using FloatMatrix = DenseMatrix<std::complex<double>>;
using Index = Eigen::Index;

struct RankConfig {
  ArithmeticMode mode = ArithmeticMode::Exact;
  double rel_tolerance = 1e-10;  // float mode: singular values below
                                 // rel_tolerance * sigma_max count as zero

  static RankConfig exact() { return {ArithmeticMode::Exact, 0.0}; }
  static RankConfig flt(double tol = 1e-10) { return {ArithmeticMode::Float, tol}; }

  void check_mode(ArithmeticMode scalar_mode) const {
    if (mode != scalar_mode)
      throw std::invalid_argument("RankConfig: arithmetic mode does not match matrix scalar");
    if (mode == ArithmeticMode::Float && rel_tolerance <= 0.0)
      throw std::invalid_argument("RankConfig: float mode requires rel_tolerance > 0");
  }
};

namespace detail {

// Complex integer pair used as the working element of fraction-free
// elimination. Divisions are exact by the Sylvester identity.
struct GaussInt {
  BigInt re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};

inline GaussInt gi_mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussInt gi_sub(const GaussInt& a, const GaussInt& b) {
  return {a.re - b.re, a.im - b.im};
}
inline GaussInt gi_div_exact(const GaussInt& a, const GaussInt& b) {
  BigInt n = b.re * b.re + b.im * b.im;
  GaussInt p{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};  // a * conj(b)
  BigInt qr, rr, qi, ri;
  boost::multiprecision::divide_qr(p.re, n, qr, rr);
  boost::multiprecision::divide_qr(p.im, n, qi, ri);
  if (rr != 0 || ri != 0)
    throw std::logic_error("fraction-free elimination produced an inexact division");
  return {qr, qi};
}

// Clears denominators row by row (rank is invariant under row scaling).
inline std::vector<std::vector<GaussInt>> to_row_scaled_integers(const ExactMatrix& m) {
  std::vector<std::vector<GaussInt>> w(static_cast<size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (Index j = 0; j < m.cols(); ++j) {
      const RatComplex& z = m(i, j);
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(z.re_));
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(z.im_));
    }
    auto& row = w[static_cast<size_t>(i)];
    row.resize(static_cast<size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j) {
      const RatComplex& z = m(i, j);
      Rational re = z.re_ * l;
      Rational im = z.im_ * l;
      row[static_cast<size_t>(j)] = {boost::multiprecision::numerator(re),
                                     boost::multiprecision::numerator(im)};
    }
  }
  return w;
}

// Fraction-free (Bareiss) elimination with row and column pivot search.
inline Index bareiss_rank(std::vector<std::vector<GaussInt>> w, Index rows, Index cols) {
  Index piv = 0;
  GaussInt prev{BigInt(1), BigInt(0)};
  for (Index col = 0; col < cols && piv < rows; ++col) {
    Index prow = -1;
    for (Index i = piv; i < rows; ++i) {
      if (!w[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) {
        prow = i;
        break;
      }
    }
    if (prow < 0) continue;
    if (prow != piv) std::swap(w[static_cast<size_t>(prow)], w[static_cast<size_t>(piv)]);
    const GaussInt p = w[static_cast<size_t>(piv)][static_cast<size_t>(col)];
    for (Index i = piv + 1; i < rows; ++i) {
      auto& ri = w[static_cast<size_t>(i)];
      const auto& rp = w[static_cast<size_t>(piv)];
      const GaussInt mik = ri[static_cast<size_t>(col)];
      for (Index j = col + 1; j < cols; ++j) {
        GaussInt t = gi_sub(gi_mul(ri[static_cast<size_t>(j)], p),
                            gi_mul(mik, rp[static_cast<size_t>(j)]));
        ri[static_cast<size_t>(j)] = gi_div_exact(t, prev);
      }
      ri[static_cast<size_t>(col)] = {BigInt(0), BigInt(0)};
    }
    prev = p;
    ++piv;
  }
  return piv;
}

}  // namespace detail

inline Index rank(const ExactMatrix& m, const RankConfig& cfg = RankConfig::exact()) {
  cfg.check_mode(ArithmeticMode::Exact);
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return detail::bareiss_rank(detail::to_row_scaled_integers(m), m.rows(), m.cols());
}

inline Index rank(const FloatMatrix& m, const RankConfig& cfg) {
  cfg.check_mode(ArithmeticMode::Float);
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!m.allFinite()) throw std::invalid_argument("rank: matrix has NaN/Inf entries");
  Eigen::JacobiSVD<FloatMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = cfg.rel_tolerance * sv(0);
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

template <typename S>
Index kernel_dim(const DenseMatrix<S>& m, const RankConfig& cfg) {
  return m.cols() - rank(m, cfg);
}

template <typename S>
Index cokernel_dim(const DenseMatrix<S>& m, const RankConfig& cfg) {
  return m.rows() - rank(m, cfg);
}

/// Horizontal block concatenation; the column space is the sum of the
/// blocks' column spaces.
template <typename S>
DenseMatrix<S> hstack(const std::vector<DenseMatrix<S>>& ms) {
  if (ms.empty()) throw std::invalid_argument("hstack: empty sequence");
  const Index rows = ms.front().rows();
  Index cols = 0;
  for (const auto& m : ms) {
    if (m.rows() != rows) throw std::invalid_argument("hstack: row count mismatch");
    cols += m.cols();
  }
  DenseMatrix<S> out(rows, cols);
  Index at = 0;
  for (const auto& m : ms) {
    out.block(0, at, rows, m.cols()) = m;
    at += m.cols();
  }
  return out;
}

/// Vertical block concatenation; the kernel is the intersection of the
/// blocks' kernels.
template <typename S>
DenseMatrix<S> vstack(const std::vector<DenseMatrix<S>>& ms) {
  if (ms.empty()) throw std::invalid_argument("vstack: empty sequence");
  const Index cols = ms.front().cols();
  Index rows = 0;
  for (const auto& m : ms) {
    if (m.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
    rows += m.rows();
  }
  DenseMatrix<S> out(rows, cols);
  Index at = 0;
  for (const auto& m : ms) {
    out.block(at, 0, m.rows(), cols) = m;
    at += m.rows();
  }
  return out;
}

template <typename S>
DenseMatrix<S> kron(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  DenseMatrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename S>
DenseMatrix<S> identity(Index n) {
  DenseMatrix<S> out = DenseMatrix<S>::Zero(n, n);
  for (Index i = 0; i < n; ++i) out(i, i) = S(1);
  return out;
}

template <typename S>
DenseMatrix<S> adjoint_of(const DenseMatrix<S>& m) {
  DenseMatrix<S> out(m.cols(), m.rows());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(j, i) = ScalarTraits<S>::conj(m(i, j));
  return out;
}

}  // namespace jspec
