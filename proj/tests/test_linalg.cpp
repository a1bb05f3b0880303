#include "jspec/linalg.hpp"

#include <doctest.h>

#include "test_util.hpp"

#include <random>

using namespace jspec;
using namespace jspec::testutil;

TEST_CASE("rank: pinned examples") {
  CHECK(rank(ExactMatrix::Zero(2, 2)) == 0);
  CHECK(rank(identity<RatComplex>(2)) == 2);
  CHECK(rank(jordan2()) == 1);
  CHECK(rank(ExactMatrix(0, 3)) == 0);
  CHECK(rank(ExactMatrix(3, 0)) == 0);
}

TEST_CASE("rank: float mode") {
  auto cfg = RankConfig::flt();
  CHECK(rank(FloatMatrix::Zero(2, 2), cfg) == 0);
  CHECK(rank(FloatMatrix::Identity(3, 3), cfg) == 3);
  FloatMatrix bad = FloatMatrix::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(rank(bad, cfg), std::invalid_argument);
}

TEST_CASE("rank: mode mismatch is rejected") {
  CHECK_THROWS_AS(rank(ExactMatrix::Zero(2, 2), RankConfig::flt()), std::invalid_argument);
  CHECK_THROWS_AS(rank(FloatMatrix::Zero(2, 2), RankConfig::exact()), std::invalid_argument);
  CHECK_THROWS_AS(rank(FloatMatrix::Zero(2, 2), RankConfig{ArithmeticMode::Float, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("kernel and cokernel dimensions") {
  auto cfg = RankConfig::exact();
  CHECK(kernel_dim(identity<RatComplex>(2), cfg) == 0);
  CHECK(kernel_dim<RatComplex>(ExactMatrix::Zero(2, 2), cfg) == 2);
  CHECK(kernel_dim<RatComplex>(jordan2(), cfg) == 1);

  CHECK(cokernel_dim<RatComplex>(ExactMatrix::Zero(3, 1), cfg) == 3);
  CHECK(cokernel_dim(identity<RatComplex>(2), cfg) == 0);
  ExactMatrix j = jordan2();
  ExactMatrix j2 = j * j;
  CHECK(cokernel_dim(hstack<RatComplex>({j, j2}), cfg) == 1);
}

TEST_CASE("hstack / vstack shapes and ranks") {
  ExactMatrix i2 = identity<RatComplex>(2);
  ExactMatrix h = hstack<RatComplex>({i2, i2});
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 4);
  CHECK(rank(h) == 2);

  ExactMatrix a = exact({{1, 2}, {3, 4}});
  ExactMatrix v = vstack<RatComplex>({a, ExactMatrix::Zero(2, 2)});
  CHECK(kernel_dim(v, RankConfig::exact()) == kernel_dim(a, RankConfig::exact()));

  CHECK(rank(hstack<RatComplex>({jordan2(), ExactMatrix::Zero(2, 2)})) == 1);

  CHECK_THROWS_AS(hstack<RatComplex>({i2, ExactMatrix::Zero(3, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(vstack<RatComplex>({i2, ExactMatrix::Zero(3, 3)}), std::invalid_argument);
}

TEST_CASE("kron: pinned examples") {
  ExactMatrix i6 = kron(identity<RatComplex>(2), identity<RatComplex>(3));
  CHECK(i6 == identity<RatComplex>(6));
  ExactMatrix a = exact({{1, 2}, {3, 4}});
  ExactMatrix z = kron<RatComplex>(a, ExactMatrix::Zero(2, 2));
  CHECK(rank(z) == 0);
  ExactMatrix d = kron(exact_diag({0, 1}), exact_diag({2, 3}));
  CHECK(d == exact_diag({0, 0, 2, 3}));
}

TEST_CASE("property: rank is multiplicative under kron") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<Index> dim(1, 4);
    ExactMatrix a = random_gauss_matrix(rng, dim(rng), dim(rng), 3);
    ExactMatrix b = random_gauss_matrix(rng, dim(rng), dim(rng), 3);
    CHECK(rank(kron(a, b)) == rank(a) * rank(b));
  }
}

TEST_CASE("property: stack dimension identities") {
  std::mt19937_64 rng(7);
  auto cfg = RankConfig::exact();
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<Index> dim(1, 5);
    const Index d = dim(rng);
    std::vector<ExactMatrix> ms;
    for (int i = 0; i < 3; ++i) ms.push_back(random_gauss_matrix(rng, d, d, 2));
    ExactMatrix h = hstack(ms);
    ExactMatrix v = vstack(ms);
    CHECK(cokernel_dim(h, cfg) == d - rank(h));
    CHECK(kernel_dim(v, cfg) == d - rank(v));
  }
}

TEST_CASE("property: exact and float ranks agree on integer matrices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<Index> dim(1, 20);
    const Index r = dim(rng), c = dim(rng);
    ExactMatrix m = random_gauss_matrix(rng, r, c, 5);
    // occasionally force rank deficiency by duplicating a row
    if (r >= 2 && trial % 3 == 0) m.row(r - 1) = m.row(0);
    CHECK(rank(m) == rank(to_float(m), RankConfig::flt()));
  }
}

TEST_CASE("property: rank invariance under permutation and invertible factors") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<Index> dim(2, 6);
    const Index d = dim(rng);
    ExactMatrix m = random_gauss_matrix(rng, d, d, 3);
    const Index r0 = rank(m);

    // row/column permutation
    std::vector<Index> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ExactMatrix p = ExactMatrix::Zero(d, d);
    for (Index i = 0; i < d; ++i) p(i, perm[static_cast<size_t>(i)]) = RatComplex(1);
    CHECK(rank(ExactMatrix(p * m)) == r0);
    CHECK(rank(ExactMatrix(m * p)) == r0);

    // unimodular shear (invertible)
    ExactMatrix u = identity<RatComplex>(d);
    u(0, d - 1) = gauss_int(rng, 4);
    CHECK(rank(ExactMatrix(u * m)) == r0);
  }
}
