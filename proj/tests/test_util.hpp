#pragma once

// Shared helpers for building small exact matrices and tuples in tests.

#include "jspec/spectra_fd.hpp"
#include "jspec/tuple.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace jspec::testutil {

inline ExactMatrix exact(std::initializer_list<std::initializer_list<int>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  ExactMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = RatComplex(v);
    ++i;
  }
  return m;
}

inline ExactMatrix exact_diag(std::initializer_list<int> d) {
  ExactMatrix m = ExactMatrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  Index i = 0;
  for (int v : d) {
    m(i, i) = RatComplex(v);
    ++i;
  }
  return m;
}

inline ExactMatrix jordan2() { return exact({{0, 1}, {0, 0}}); }

inline Point<RatComplex> pt(std::initializer_list<int> coords) {
  Point<RatComplex> p;
  for (int v : coords) p.emplace_back(v);
  return p;
}

inline FiniteTuple<RatComplex> tuple_of(std::vector<ExactMatrix> ops) {
  FiniteTuple<RatComplex> t;
  t.dim = ops.front().rows();
  t.ops = std::move(ops);
  return t;
}

inline RatComplex gauss_int(std::mt19937_64& rng, int mag) {
  std::uniform_int_distribution<int> d(-mag, mag);
  return {Rational(d(rng)), Rational(d(rng))};
}

inline ExactMatrix random_gauss_matrix(std::mt19937_64& rng, Index r, Index c, int mag = 5) {
  ExactMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = gauss_int(rng, mag);
  return m;
}

inline FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix f(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) f(i, j) = to_cd(m(i, j));
  return f;
}

}  // namespace jspec::testutil
