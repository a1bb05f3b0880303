#pragma once

// Koszul complexes of translated commuting tuples, homology dimensions, and
// the total complex of a tensor product of two such complexes.

#include "jspec/chains.hpp"

#include <vector>

namespace jspec {

inline Index binomial(int n, int p) {
  if (p < 0 || p > n) return 0;
  Index r = 1;
  for (int i = 0; i < p; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// All p-element subsets of {0,...,n-1} in lexicographic order.
inline std::vector<std::vector<int>> index_subsets(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) cur[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - p + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < p; ++j)
      cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

/// A graded complex ... -> C_p -> C_{p-1} -> ... -> C_0. For the Koszul
/// complex of an n-tuple on X, C_p = X (x) Lambda^p C^n with the subsets of
/// {1..n} in lexicographic order, so dim C_p = dim X * C(n,p).
template <typename S>
struct KoszulComplex {
  int n = 0;                               // tuple length (top degree)
  Index dim_x = 0;                         // dimension of the coefficient space
  std::vector<Index> dims;                 // dims[p], p = 0..n
  std::vector<DenseMatrix<S>> boundaries;  // boundaries[p-1] = d_p : C_p -> C_{p-1}

  const DenseMatrix<S>& d(int p) const { return boundaries.at(static_cast<size_t>(p - 1)); }
};

struct HomologyProfile {
  std::vector<Index> dims;  // dims[p] = dim H_p

  Index euler_characteristic() const {
    Index e = 0;
    int sign = 1;
    for (Index h : dims) {
      e += sign * h;
      sign = -sign;
    }
    return e;
  }
  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    return a.dims == b.dims;
  }
};

namespace detail {

template <typename S>
bool is_zero_matrix(const DenseMatrix<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!ScalarTraits<S>::is_zero(m(i, j))) return false;
  return true;
}

template <>
inline bool is_zero_matrix<std::complex<double>>(const FloatMatrix& m) {
  return m.size() == 0 || m.cwiseAbs().maxCoeff() <= 1e-9;
}

template <typename S>
void verify_chain_property(const KoszulComplex<S>& k) {
  for (int p = 1; p < static_cast<int>(k.boundaries.size()); ++p) {
    DenseMatrix<S> comp = k.d(p) * k.d(p + 1);
    if (!is_zero_matrix(comp))
      throw std::logic_error("KoszulComplex: d_" + std::to_string(p) + " o d_" +
                             std::to_string(p + 1) + " != 0");
  }
}

}  // namespace detail

/// Koszul complex of T - lambda. The boundary on x (x) e_{i1<...<ip} is
/// sum_j (-1)^(j-1) (T_{i_j}-lambda_{i_j}) x (x) e_{...without i_j...}.
template <typename S>
KoszulComplex<S> build_koszul(const FiniteTuple<S>& t, const Point<S>& lambda) {
  auto verdict = validate_commuting(t);
  if (!verdict)
    throw std::invalid_argument("build_koszul: tuple does not commute (pair " +
                                std::to_string(verdict.first) + "," +
                                std::to_string(verdict.second) + ")");
  const FiniteTuple<S> a = translate(t, lambda);
  const int n = static_cast<int>(a.length());
  const Index d = a.dim;

  KoszulComplex<S> k;
  k.n = n;
  k.dim_x = d;
  k.dims.resize(static_cast<size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) k.dims[static_cast<size_t>(p)] = d * binomial(n, p);

  std::vector<std::vector<int>> prev = index_subsets(n, 0);
  for (int p = 1; p <= n; ++p) {
    auto cur = index_subsets(n, p);
    // positions of (p-1)-subsets for O(1) block lookup
    auto pos_of = [&prev](const std::vector<int>& s) {
      for (size_t i = 0; i < prev.size(); ++i)
        if (prev[i] == s) return static_cast<Index>(i);
      throw std::logic_error("build_koszul: missing face subset");
    };
    DenseMatrix<S> dp = DenseMatrix<S>::Zero(k.dims[static_cast<size_t>(p - 1)],
                                             k.dims[static_cast<size_t>(p)]);
    for (size_t ci = 0; ci < cur.size(); ++ci) {
      const auto& subset = cur[ci];
      for (int j = 0; j < p; ++j) {
        std::vector<int> face = subset;
        face.erase(face.begin() + j);
        const Index ri = pos_of(face);
        const S sign = (j % 2 == 0) ? S(1) : S(-1);
        dp.block(ri * d, static_cast<Index>(ci) * d, d, d) =
            sign * a.ops[static_cast<size_t>(subset[static_cast<size_t>(j)])];
      }
    }
    k.boundaries.push_back(std::move(dp));
    prev = std::move(cur);
  }
  detail::verify_chain_property(k);
  return k;
}

/// h_p = dim ker d_p - rank d_{p+1}, with empty boundaries at the ends.
template <typename S>
HomologyProfile homology_dims(const KoszulComplex<S>& k, const RankConfig& cfg) {
  const int top = static_cast<int>(k.dims.size()) - 1;
  std::vector<Index> ranks(static_cast<size_t>(top) + 2, 0);  // ranks[p] = rank d_p
  for (int p = 1; p <= top; ++p)
    ranks[static_cast<size_t>(p)] = rank(k.d(p), cfg);
  HomologyProfile h;
  h.dims.resize(static_cast<size_t>(top) + 1);
  for (int p = 0; p <= top; ++p) {
    const Index ker = k.dims[static_cast<size_t>(p)] - ranks[static_cast<size_t>(p)];
    const Index hp = ker - ranks[static_cast<size_t>(p) + 1];
    if (hp < 0) throw std::logic_error("homology_dims: negative dimension (inconsistent complex)");
    h.dims[static_cast<size_t>(p)] = hp;
  }
  return h;
}

/// Total complex of the double complex K1 (x) K2. The degree-r space is the
/// direct sum over p+q=r of C1_p (x) C2_q with p descending; the boundary is
/// d1 (x) I on the left factor and (-1)^p I (x) d2 on the right.
template <typename S>
KoszulComplex<S> tensor_total_complex(const KoszulComplex<S>& k1, const KoszulComplex<S>& k2) {
  const int n1 = static_cast<int>(k1.dims.size()) - 1;
  const int n2 = static_cast<int>(k2.dims.size()) - 1;
  KoszulComplex<S> k;
  k.n = n1 + n2;
  k.dim_x = k1.dim_x * k2.dim_x;
  k.dims.resize(static_cast<size_t>(k.n) + 1, 0);

  // blocks[r] lists (p, q, offset) with p+q = r, p descending
  struct Block {
    int p, q;
    Index offset;
  };
  std::vector<std::vector<Block>> blocks(static_cast<size_t>(k.n) + 1);
  for (int r = 0; r <= k.n; ++r) {
    Index at = 0;
    for (int p = std::min(r, n1); p >= std::max(0, r - n2); --p) {
      const int q = r - p;
      blocks[static_cast<size_t>(r)].push_back({p, q, at});
      at += k1.dims[static_cast<size_t>(p)] * k2.dims[static_cast<size_t>(q)];
    }
    k.dims[static_cast<size_t>(r)] = at;
  }

  auto offset_in = [&blocks](int r, int p) -> Index {
    for (const auto& b : blocks[static_cast<size_t>(r)])
      if (b.p == p) return b.offset;
    throw std::logic_error("tensor_total_complex: missing target block");
  };

  for (int r = 1; r <= k.n; ++r) {
    DenseMatrix<S> dr = DenseMatrix<S>::Zero(k.dims[static_cast<size_t>(r - 1)],
                                             k.dims[static_cast<size_t>(r)]);
    for (const auto& b : blocks[static_cast<size_t>(r)]) {
      const Index d1p = k1.dims[static_cast<size_t>(b.p)];
      const Index d2q = k2.dims[static_cast<size_t>(b.q)];
      if (b.p >= 1) {
        DenseMatrix<S> blk = kron(k1.d(b.p), identity<S>(d2q));
        dr.block(offset_in(r - 1, b.p - 1), b.offset, blk.rows(), blk.cols()) = blk;
      }
      if (b.q >= 1) {
        DenseMatrix<S> blk = kron(identity<S>(d1p), k2.d(b.q));
        const S sign = (b.p % 2 == 0) ? S(1) : S(-1);
        dr.block(offset_in(r - 1, b.p), b.offset, blk.rows(), blk.cols()) = sign * blk;
      }
    }
    k.boundaries.push_back(std::move(dr));
  }
  detail::verify_chain_property(k);
  return k;
}

}  // namespace jspec
