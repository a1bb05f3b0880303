#pragma once

// Derived tuples: the Kronecker tensor tuple (S (x) I, I (x) T) on the
// product space, and the multiplication tuple (L_S, R_T) acting on the
// vectorized p x q matrix space.

#include "jspec/tuple.hpp"

namespace jspec {

template <typename S>
struct TensorTuple {
  FiniteTuple<S> tuple;  // (S_1 (x) I, ..., S_n (x) I, I (x) T_1, ..., I (x) T_m)
  Index dim_left = 0;    // dim of the S-factor space
  Index dim_right = 0;   // dim of the T-factor space
  Index n_left = 0;      // how many leading coordinates come from S
};

template <typename S>
struct MultTuple {
  FiniteTuple<S> tuple;  // (L_{S_1}, ..., L_{S_n}, R_{T_1}, ..., R_{T_m}) on vec(p x q)
  Index rows = 0;        // p
  Index cols = 0;        // q
  Index n_left = 0;
};

namespace detail {

template <typename S>
void require_commuting_factors(const FiniteTuple<S>& a, const FiniteTuple<S>& b,
                               const char* who) {
  if (!validate_commuting(a) || !validate_commuting(b))
    throw std::invalid_argument(std::string(who) + ": factor tuple does not commute");
}

}  // namespace detail

/// (S (x) I, I (x) T) with all S-factors first. Mixed coordinates commute by
/// construction; the whole tuple is validated anyway.
template <typename S>
TensorTuple<S> tensor_tuple(const FiniteTuple<S>& s, const FiniteTuple<S>& t) {
  detail::require_commuting_factors(s, t, "tensor_tuple");
  TensorTuple<S> out;
  out.dim_left = s.dim;
  out.dim_right = t.dim;
  out.n_left = s.length();
  out.tuple.dim = s.dim * t.dim;
  const DenseMatrix<S> ip = identity<S>(s.dim);
  const DenseMatrix<S> iq = identity<S>(t.dim);
  for (const auto& op : s.ops) out.tuple.ops.push_back(kron(op, iq));
  for (const auto& op : t.ops) out.tuple.ops.push_back(kron(ip, op));
  if (!validate_commuting(out.tuple))
    throw std::logic_error("tensor_tuple: assembled tuple does not commute");
  return out;
}

/// Left/right multiplications on the space of p x q matrices under
/// column-major vectorization: L_S = I_q (x) S and R_T = T^t (x) I_p, so
/// vec(S X) = L_S vec(X) and vec(X T) = R_T vec(X).
template <typename S>
MultTuple<S> mult_tuple(const FiniteTuple<S>& s, const FiniteTuple<S>& t) {
  detail::require_commuting_factors(s, t, "mult_tuple");
  MultTuple<S> out;
  out.rows = s.dim;
  out.cols = t.dim;
  out.n_left = s.length();
  out.tuple.dim = s.dim * t.dim;
  const DenseMatrix<S> ip = identity<S>(s.dim);
  const DenseMatrix<S> iq = identity<S>(t.dim);
  for (const auto& op : s.ops) out.tuple.ops.push_back(kron(iq, op));
  for (const auto& op : t.ops) {
    DenseMatrix<S> tr = op.transpose();
    out.tuple.ops.push_back(kron(tr, ip));
  }
  if (!validate_commuting(out.tuple))
    throw std::logic_error("mult_tuple: assembled tuple does not commute");
  return out;
}

/// Column-major vectorization of a p x q matrix.
template <typename S>
DenseMatrix<S> vec(const DenseMatrix<S>& x) {
  DenseMatrix<S> out(x.rows() * x.cols(), 1);
  Index at = 0;
  for (Index j = 0; j < x.cols(); ++j)
    for (Index i = 0; i < x.rows(); ++i) out(at++, 0) = x(i, j);
  return out;
}

}  // namespace jspec
