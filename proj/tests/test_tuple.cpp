#include "jspec/tuple.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace jspec;
using namespace jspec::testutil;

TEST_CASE("validate_commuting") {
  auto diag_pair = tuple_of({exact_diag({1, 2}), exact_diag({3, 4})});
  CHECK(validate_commuting(diag_pair).ok);

  auto with_identity = tuple_of({identity<RatComplex>(2), exact({{1, 7}, {0, 3}})});
  CHECK(validate_commuting(with_identity).ok);

  auto bad = tuple_of({exact({{0, 1}, {0, 0}}), exact({{0, 0}, {1, 0}})});
  auto verdict = validate_commuting(bad);
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.first == 1);
  CHECK(verdict.second == 2);
  CHECK(verdict.residual > 0.0);
}

TEST_CASE("translate") {
  auto t = tuple_of({exact_diag({1, 2})});
  auto shifted = translate(t, pt({1}));
  CHECK(shifted.ops[0] == exact_diag({0, 1}));

  auto same = translate(t, pt({0}));
  CHECK(same.ops[0] == t.ops[0]);

  auto j = tuple_of({jordan2()});
  auto js = translate(j, pt({5}));
  CHECK(js.ops[0] == exact({{-5, 1}, {0, -5}}));

  CHECK_THROWS_AS(translate(t, pt({1, 2})), std::invalid_argument);
}

TEST_CASE("power_tuple") {
  auto t = tuple_of({exact_diag({0, 1})});
  CHECK(power_tuple(t, 2).ops[0] == exact_diag({0, 1}));

  auto j = tuple_of({jordan2()});
  CHECK(power_tuple(j, 2).ops[0] == ExactMatrix::Zero(2, 2));

  auto pair = tuple_of({exact_diag({1, 2}), exact({{0, 3}, {0, 0}})});
  auto p1 = power_tuple(pair, 1);
  CHECK(p1.ops[0] == pair.ops[0]);
  CHECK(p1.ops[1] == pair.ops[1]);

  CHECK_THROWS_AS(power_tuple(t, 0), std::invalid_argument);
}

TEST_CASE("property: translate round trip and power oracle") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<Index> dims(1, 4);
    const Index d = dims(rng);
    auto t = tuple_of({random_gauss_matrix(rng, d, d, 3)});
    t.ops.push_back(identity<RatComplex>(d));
    t.dim = d;

    Point<RatComplex> lambda{gauss_int(rng, 3), gauss_int(rng, 3)};
    Point<RatComplex> neg{-lambda[0], -lambda[1]};
    auto back = translate(translate(t, lambda), neg);
    CHECK(back.ops[0] == t.ops[0]);
    CHECK(back.ops[1] == t.ops[1]);

    // naive repeated-product oracle for powers
    std::uniform_int_distribution<int> kd(1, 4);
    const int k = kd(rng);
    auto p = power_tuple(t, k);
    ExactMatrix naive = identity<RatComplex>(d);
    for (int i = 0; i < k; ++i) naive = ExactMatrix(naive * t.ops[0]);
    CHECK(p.ops[0] == naive);
  }
}

TEST_CASE("adjoint tuple and float commutativity tolerance") {
  auto j = tuple_of({jordan2()});
  auto adj = adjoint_tuple(j);
  CHECK(adj.ops[0] == exact({{0, 0}, {1, 0}}));

  // complex entries conjugate
  ExactMatrix m(1, 1);
  m(0, 0) = RatComplex(Rational(2), Rational(3));
  auto t = tuple_of({m});
  CHECK(adjoint_tuple(t).ops[0](0, 0) == RatComplex(Rational(2), Rational(-3)));

  FloatMatrix a = FloatMatrix::Zero(2, 2);
  a(0, 1) = 1.0;
  FiniteTuple<std::complex<double>> f;
  f.dim = 2;
  f.ops = {a, a};
  f.ops[1](1, 0) = 1e-12;  // residual 1e-12, under the 1e-8 relative gate
  CHECK(validate_commuting(f).ok);
  f.ops[1](1, 0) = 1e-3;
  CHECK_FALSE(validate_commuting(f).ok);
}
