#pragma once

// Whole-spectrum computation for finite-dimensional tuples: candidate joint
// eigenvalues by simultaneous triangularization (read off for triangular
// input, joint-eigenvector deflation otherwise), classification of every
// candidate, and polynomial images of tuples.

#include "jspec/chains.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <functional>
#include <vector>

namespace jspec {

// ---------------------------------------------------------------------------
// point ordering / dedup

inline bool scalar_less(const RatComplex& a, const RatComplex& b) {
  if (a.re_ != b.re_) return a.re_ < b.re_;
  return a.im_ < b.im_;
}
inline bool scalar_less(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

template <typename S>
bool point_less(const Point<S>& a, const Point<S>& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return scalar_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

inline bool point_close(const Point<std::complex<double>>& a,
                        const Point<std::complex<double>>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

template <typename S>
void sort_points(std::vector<Point<S>>& pts) {
  std::sort(pts.begin(), pts.end(), point_less<S>);
}

template <typename S>
std::vector<Point<S>> sorted_unique_points(std::vector<Point<S>> pts) {
  sort_points(pts);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// ---------------------------------------------------------------------------

struct CandidateSet {
  enum class Provenance { TriangularDiagonal, Deflation };

  template <typename S>
  struct Of {
    std::vector<Point<S>> points;
    Provenance provenance = Provenance::TriangularDiagonal;
  };
};

template <typename S>
struct FiniteSpectrum {
  std::array<std::vector<Point<S>>, kNumSpectrumKinds> sets;
  std::vector<PointClassification<S>> classifications;  // one per candidate

  std::vector<Point<S>>& of(SpectrumKind k) { return sets[static_cast<size_t>(k)]; }
  const std::vector<Point<S>>& of(SpectrumKind k) const {
    return sets[static_cast<size_t>(k)];
  }
};

template <typename S>
bool is_upper_triangular(const DenseMatrix<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < i; ++j)
      if (!ScalarTraits<S>::is_zero(m(i, j))) return false;
  return true;
}

namespace detail {

inline FloatMatrix kernel_basis(const FloatMatrix& m, double rel_tol = 1e-8) {
  Eigen::JacobiSVD<FloatMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() ? sv(0) : 0.0;
  const double cut = std::max(rel_tol * scale, 1e-12);
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

// Unitary whose first column is the given unit vector.
inline FloatMatrix unitary_with_first_column(const Eigen::VectorXcd& x) {
  const Index d = x.size();
  FloatMatrix u = FloatMatrix::Identity(d, d);
  std::complex<double> alpha =
      std::abs(x(0)) > 1e-14 ? x(0) / std::abs(x(0)) : std::complex<double>(1.0);
  Eigen::VectorXcd w = x;
  w(0) -= alpha;
  const double nw = w.norm();
  if (nw > 1e-14) {
    FloatMatrix p = FloatMatrix::Identity(d, d) - 2.0 * (w * w.adjoint()) / (nw * nw);
    // p maps alpha*e1 to x; fold the phase into the first column
    u = p;
    u.col(0) *= alpha;
  } else {
    u.col(0) *= alpha;
  }
  return u;
}

// One joint eigenvector of a commuting family, eigenvalue chosen
// lexicographically coordinate by coordinate.
inline Eigen::VectorXcd joint_eigenvector(const std::vector<FloatMatrix>& mats,
                                          Point<std::complex<double>>& mu_out) {
  const Index d = mats.front().rows();
  FloatMatrix v = FloatMatrix::Identity(d, d);
  mu_out.clear();
  for (const auto& m : mats) {
    FloatMatrix a = v.adjoint() * m * v;
    Eigen::ComplexEigenSolver<FloatMatrix> es(a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("candidate_points: eigensolver failed during deflation");
    std::vector<std::complex<double>> eigs(es.eigenvalues().data(),
                                           es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(eigs.begin(), eigs.end(),
              [](auto l, auto r) { return scalar_less(l, r); });
    const std::complex<double> mu = eigs.front();
    FloatMatrix kb = kernel_basis(a - mu * FloatMatrix::Identity(a.rows(), a.cols()));
    if (kb.cols() == 0)
      throw std::runtime_error(
          "candidate_points: deflation failed (ill-conditioned eigenspace)");
    v = v * kb;
    mu_out.push_back(mu);
  }
  return v.col(0).normalized();
}

inline void deflate_aligned(std::vector<FloatMatrix> mats,
                            std::vector<Point<std::complex<double>>>& out) {
  const Index d = mats.front().rows();
  if (d == 0) return;
  Point<std::complex<double>> mu;
  Eigen::VectorXcd x = joint_eigenvector(mats, mu);
  // record the Rayleigh values, which are exact on the joint eigenvector
  Point<std::complex<double>> aligned;
  for (const auto& m : mats) aligned.push_back((x.adjoint() * m * x)(0));
  out.push_back(aligned);
  if (d == 1) return;
  FloatMatrix u = unitary_with_first_column(x);
  std::vector<FloatMatrix> rest;
  rest.reserve(mats.size());
  for (const auto& m : mats) {
    FloatMatrix t = u.adjoint() * m * u;
    rest.push_back(t.bottomRightCorner(d - 1, d - 1));
  }
  deflate_aligned(std::move(rest), out);
}

}  // namespace detail

/// Aligned joint diagonal values via float deflation (the full multiset,
/// deduplicated with tolerance).
inline std::vector<Point<std::complex<double>>> candidate_points_float(
    const FiniteTuple<std::complex<double>>& t, double dedup_tol = 1e-8) {
  std::vector<Point<std::complex<double>>> all;
  detail::deflate_aligned(t.ops, all);
  std::sort(all.begin(), all.end(), point_less<std::complex<double>>);
  std::vector<Point<std::complex<double>>> out;
  for (const auto& p : all) {
    bool dup = false;
    for (const auto& q : out)
      if (point_close(p, q, dedup_tol)) dup = true;
    if (!dup) out.push_back(p);
  }
  return out;
}

template <typename S>
CandidateSet::Of<S> candidate_points(const FiniteTuple<S>& t, const RankConfig& cfg);

template <>
inline CandidateSet::Of<std::complex<double>> candidate_points(
    const FiniteTuple<std::complex<double>>& t, const RankConfig& cfg) {
  cfg.check_mode(ArithmeticMode::Float);
  bool tri = true;
  for (const auto& op : t.ops) tri = tri && is_upper_triangular(op);
  CandidateSet::Of<std::complex<double>> out;
  if (tri) {
    std::vector<Point<std::complex<double>>> pts;
    for (Index j = 0; j < t.dim; ++j) {
      Point<std::complex<double>> p;
      for (const auto& op : t.ops) p.push_back(op(j, j));
      pts.push_back(std::move(p));
    }
    out.points = sorted_unique_points(std::move(pts));
    out.provenance = CandidateSet::Provenance::TriangularDiagonal;
  } else {
    out.points = candidate_points_float(t);
    out.provenance = CandidateSet::Provenance::Deflation;
  }
  return out;
}

template <>
inline CandidateSet::Of<RatComplex> candidate_points(const FiniteTuple<RatComplex>& t,
                                                     const RankConfig& cfg) {
  cfg.check_mode(ArithmeticMode::Exact);
  bool tri = true;
  for (const auto& op : t.ops) tri = tri && is_upper_triangular(op);
  CandidateSet::Of<RatComplex> out;
  if (tri) {
    std::vector<Point<RatComplex>> pts;
    for (Index j = 0; j < t.dim; ++j) {
      Point<RatComplex> p;
      for (const auto& op : t.ops) p.push_back(op(j, j));
      pts.push_back(std::move(p));
    }
    out.points = sorted_unique_points(std::move(pts));
    out.provenance = CandidateSet::Provenance::TriangularDiagonal;
    return out;
  }
  // general exact input: deflate in float, snap back to exact coordinates;
  // every snapped candidate is then verified exactly by classification
  auto floats = candidate_points_float(to_float_tuple(t));
  std::vector<Point<RatComplex>> pts;
  for (const auto& fp : floats) {
    Point<RatComplex> p;
    for (const auto& z : fp)
      p.emplace_back(snap_to_rational(z.real()), snap_to_rational(z.imag()));
    pts.push_back(std::move(p));
  }
  out.points = sorted_unique_points(std::move(pts));
  out.provenance = CandidateSet::Provenance::Deflation;
  return out;
}

/// Classify the tuple at each provided point (a superset of the joint
/// spectrum); a point enters each spectrum set according to its flags.
/// Commutativity is validated once for the whole sweep.
template <typename S>
FiniteSpectrum<S> spectrum_at_candidates(const FiniteTuple<S>& t,
                                         const std::vector<Point<S>>& candidates,
                                         const RankConfig& cfg) {
  auto verdict = validate_commuting(t);
  if (!verdict)
    throw std::invalid_argument("spectrum_at_candidates: tuple does not commute (pair " +
                                std::to_string(verdict.first) + "," +
                                std::to_string(verdict.second) + ")");
  FiniteSpectrum<S> out;
  for (const auto& p : candidates) {
    auto cls = detail::classify_point_unchecked(t, p, cfg, static_cast<int>(t.dim) + 2);
    for (SpectrumKind k : kAllSpectrumKinds)
      if (flag_of(cls.flags, k)) out.of(k).push_back(p);
    out.classifications.push_back(std::move(cls));
  }
  return out;
}

/// Classify every candidate; points outside the candidate set are provably
/// in no set.
template <typename S>
FiniteSpectrum<S> full_spectrum(const FiniteTuple<S>& t, const RankConfig& cfg) {
  return spectrum_at_candidates(t, candidate_points(t, cfg).points, cfg);
}

// ---------------------------------------------------------------------------
// polynomial maps C^n -> C^m and their action on tuples

template <typename S>
struct Monomial {
  S coeff;
  std::vector<int> exps;  // one exponent per variable
};

template <typename S>
struct Polynomial {
  std::vector<Monomial<S>> terms;
};

template <typename S>
struct PolynomialMap {
  int vars = 0;
  std::vector<Polynomial<S>> components;
};

template <typename S>
S eval_poly(const Polynomial<S>& p, const Point<S>& z) {
  S acc(0);
  for (const auto& m : p.terms) {
    S t = m.coeff;
    for (size_t v = 0; v < m.exps.size(); ++v)
      for (int e = 0; e < m.exps[v]; ++e) t = t * z[v];
    acc = acc + t;
  }
  return acc;
}

template <typename S>
Point<S> eval_point(const PolynomialMap<S>& p, const Point<S>& z) {
  Point<S> out;
  out.reserve(p.components.size());
  for (const auto& c : p.components) out.push_back(eval_poly(c, z));
  return out;
}

/// The tuple (p_1(T), ..., p_m(T)); commutativity is preserved.
template <typename S>
FiniteTuple<S> polynomial_image(const FiniteTuple<S>& t, const PolynomialMap<S>& p) {
  if (p.vars != static_cast<int>(t.length()))
    throw std::invalid_argument("polynomial_image: variable count != tuple length");
  if (p.components.empty())
    throw std::invalid_argument("polynomial_image: map needs at least one component");
  // cache coordinate powers up to the largest exponent used
  std::vector<int> max_exp(static_cast<size_t>(p.vars), 0);
  for (const auto& c : p.components)
    for (const auto& m : c.terms)
      for (size_t v = 0; v < m.exps.size(); ++v)
        max_exp[v] = std::max(max_exp[v], m.exps[v]);
  std::vector<std::vector<DenseMatrix<S>>> powers(static_cast<size_t>(p.vars));
  for (size_t v = 0; v < powers.size(); ++v) {
    powers[v].push_back(identity<S>(t.dim));
    for (int e = 1; e <= max_exp[v]; ++e)
      powers[v].push_back(powers[v].back() * t.ops[v]);
  }
  FiniteTuple<S> out{t.dim, {}};
  for (const auto& c : p.components) {
    DenseMatrix<S> acc = DenseMatrix<S>::Zero(t.dim, t.dim);
    for (const auto& m : c.terms) {
      DenseMatrix<S> term = identity<S>(t.dim);
      for (size_t v = 0; v < m.exps.size(); ++v)
        if (m.exps[v] > 0) term = term * powers[v][static_cast<size_t>(m.exps[v])];
      acc = acc + m.coeff * term;
    }
    out.ops.push_back(std::move(acc));
  }
  return out;
}

}  // namespace jspec
