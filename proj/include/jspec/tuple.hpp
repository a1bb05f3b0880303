#pragma once

// Commuting tuples of dense operators on a finite-dimensional space, with
// validation and the elementary algebra the chain computations need.

#include "jspec/linalg.hpp"

#include <optional>
#include <vector>

namespace jspec {

template <typename S>
using Point = std::vector<S>;  // a point of C^n

template <typename S>
struct FiniteTuple {
  Index dim = 0;                    // dimension of the underlying space
  std::vector<DenseMatrix<S>> ops;  // n commuting dim x dim operators

  Index length() const { return static_cast<Index>(ops.size()); }
};

struct CommutingVerdict {
  bool ok = true;
  int first = -1;   // offending pair (1-based) when !ok
  int second = -1;
  double residual = 0.0;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline double comm_residual(const ExactMatrix& c) {
  double r = 0;
  for (Index i = 0; i < c.rows(); ++i)
    for (Index j = 0; j < c.cols(); ++j) r = std::max(r, std::abs(to_cd(c(i, j))));
  return r;
}
inline double comm_residual(const FloatMatrix& c) { return c.cwiseAbs().maxCoeff(); }

template <typename S>
bool commutator_small(const DenseMatrix<S>& c, double scale);

template <>
inline bool commutator_small<RatComplex>(const ExactMatrix& c, double) {
  for (Index i = 0; i < c.rows(); ++i)
    for (Index j = 0; j < c.cols(); ++j)
      if (!c(i, j).is_zero()) return false;
  return true;
}

template <>
inline bool commutator_small<std::complex<double>>(const FloatMatrix& c, double scale) {
  return c.cwiseAbs().maxCoeff() <= 1e-8 * scale;
}

}  // namespace detail

template <typename S>
CommutingVerdict validate_commuting(const FiniteTuple<S>& t) {
  if (t.ops.empty()) throw std::invalid_argument("validate_commuting: empty tuple");
  for (const auto& op : t.ops)
    if (op.rows() != t.dim || op.cols() != t.dim)
      throw std::invalid_argument("validate_commuting: operator shape mismatch");
  double scale = 1.0;
  if constexpr (ScalarTraits<S>::mode == ArithmeticMode::Float) {
    for (const auto& op : t.ops) scale = std::max(scale, op.cwiseAbs().maxCoeff());
    scale = scale * scale * static_cast<double>(t.dim);
  }
  for (size_t i = 0; i < t.ops.size(); ++i) {
    for (size_t j = i + 1; j < t.ops.size(); ++j) {
      DenseMatrix<S> c = t.ops[i] * t.ops[j] - t.ops[j] * t.ops[i];
      if (!detail::commutator_small<S>(c, scale)) {
        return {false, static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                detail::comm_residual(c)};
      }
    }
  }
  return {};
}

/// T - lambda, coordinatewise.
template <typename S>
FiniteTuple<S> translate(const FiniteTuple<S>& t, const Point<S>& lambda) {
  if (static_cast<Index>(lambda.size()) != t.length())
    throw std::invalid_argument("translate: point length != tuple length");
  FiniteTuple<S> out{t.dim, {}};
  out.ops.reserve(t.ops.size());
  for (size_t i = 0; i < t.ops.size(); ++i) {
    DenseMatrix<S> m = t.ops[i];
    for (Index d = 0; d < t.dim; ++d) m(d, d) = m(d, d) - lambda[i];
    out.ops.push_back(std::move(m));
  }
  return out;
}

/// Coordinatewise k-th powers ((T_1)^k, ..., (T_n)^k).
template <typename S>
FiniteTuple<S> power_tuple(const FiniteTuple<S>& t, int k) {
  if (k < 1) throw std::invalid_argument("power_tuple: k must be >= 1");
  FiniteTuple<S> out{t.dim, {}};
  out.ops.reserve(t.ops.size());
  for (const auto& op : t.ops) {
    DenseMatrix<S> p = identity<S>(t.dim);
    for (int i = 0; i < k; ++i) p = p * op;
    out.ops.push_back(std::move(p));
  }
  return out;
}

template <typename S>
FiniteTuple<S> adjoint_tuple(const FiniteTuple<S>& t) {
  FiniteTuple<S> out{t.dim, {}};
  out.ops.reserve(t.ops.size());
  for (const auto& op : t.ops) out.ops.push_back(adjoint_of(op));
  return out;
}

template <typename S>
Point<S> conj_point(const Point<S>& p) {
  Point<S> out;
  out.reserve(p.size());
  for (const auto& z : p) out.push_back(ScalarTraits<S>::conj(z));
  return out;
}

inline Point<std::complex<double>> to_cd_point(const Point<RatComplex>& p) {
  Point<std::complex<double>> out;
  out.reserve(p.size());
  for (const auto& z : p) out.push_back(to_cd(z));
  return out;
}

template <typename S>
FiniteTuple<FloatMatrix::Scalar> to_float_tuple(const FiniteTuple<S>& t) {
  FiniteTuple<std::complex<double>> out{t.dim, {}};
  for (const auto& op : t.ops) {
    FloatMatrix m(op.rows(), op.cols());
    for (Index i = 0; i < op.rows(); ++i)
      for (Index j = 0; j < op.cols(); ++j) m(i, j) = to_cd(op(i, j));
    out.ops.push_back(std::move(m));
  }
  return out;
}

}  // namespace jspec
