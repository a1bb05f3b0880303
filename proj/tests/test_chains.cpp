#include "jspec/chains.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace jspec;
using namespace jspec::testutil;

namespace {
const RankConfig kExact = RankConfig::exact();
}

TEST_CASE("mk_codim: pinned examples") {
  auto d = tuple_of({exact_diag({0, 1})});
  CHECK(mk_codim(d, pt({0}), 1, kExact) == 1);

  auto j = tuple_of({jordan2()});
  CHECK(mk_codim(j, pt({0}), 2, kExact) == 2);

  CHECK(mk_codim(d, pt({9}), 1, kExact) == 0);
  CHECK(mk_codim(d, pt({9}), 3, kExact) == 0);

  CHECK_THROWS_AS(mk_codim(d, pt({0}), 0, kExact), std::invalid_argument);
  CHECK_THROWS_AS(mk_codim(d, pt({0, 0}), 1, kExact), std::invalid_argument);
}

TEST_CASE("nk_dim: pinned examples") {
  auto d = tuple_of({exact_diag({0, 1})});
  CHECK(nk_dim(d, pt({0}), 1, kExact) == 1);

  auto j = tuple_of({jordan2()});
  CHECK(nk_dim(j, pt({0}), 2, kExact) == 2);

  auto pair = tuple_of({exact_diag({0, 1}), exact_diag({2, 3})});
  CHECK(nk_dim(pair, pt({0, 3}), 1, kExact) == 0);
}

TEST_CASE("classify_point: diagonal") {
  auto d = tuple_of({exact_diag({0, 1})});
  auto c = classify_point(d, pt({0}), kExact);
  CHECK(c.flags.defect);
  CHECK(c.flags.approx_point);
  CHECK_FALSE(c.flags.browder_lower);
  CHECK_FALSE(c.flags.browder_upper);
  CHECK_FALSE(c.flags.fredholm_lower);
  for (const auto& v : c.lower.values) CHECK(v == ExtCount::fin(1));
  CHECK(c.lower.stabilized_at == 1);
}

TEST_CASE("classify_point: nilpotent Jordan block") {
  auto j = tuple_of({jordan2()});
  auto c = classify_point(j, pt({0}), kExact);
  REQUIRE(c.lower.values.size() == 4);  // k_max = dim + 2
  CHECK(c.lower.values[0] == ExtCount::fin(1));
  CHECK(c.lower.values[1] == ExtCount::fin(2));
  CHECK(c.lower.values[2] == ExtCount::fin(2));
  CHECK(c.lower.values[3] == ExtCount::fin(2));
  CHECK(c.lower.stabilized_at == 2);
  CHECK(c.upper.stabilized_at == 2);
  CHECK(c.flags.defect);
  CHECK_FALSE(c.flags.browder_lower);  // trace stabilizes, so no divergence
}

TEST_CASE("classify_point: resolvent point has all flags false") {
  auto j = tuple_of({jordan2(), exact_diag({3, 3})});
  auto c = classify_point(j, pt({7, 9}), kExact);
  for (SpectrumKind k : kAllSpectrumKinds) CHECK_FALSE(flag_of(c.flags, k));
}

TEST_CASE("classify_point rejects non-commuting input") {
  auto bad = tuple_of({exact({{0, 1}, {0, 0}}), exact({{0, 0}, {1, 0}})});
  CHECK_THROWS_AS(classify_point(bad, pt({0, 0}), kExact), std::invalid_argument);
}

TEST_CASE("property: monotone traces and stabilization by dim") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    // triangular commuting pair: polynomials in one nilpotent
    std::uniform_int_distribution<Index> dims(1, 4);
    const Index d = dims(rng);
    ExactMatrix n = ExactMatrix::Zero(d, d);
    for (Index i = 0; i + 1 < d; ++i) n(i, i + 1) = gauss_int(rng, 2);
    auto t = tuple_of({n, ExactMatrix(n * n)});
    auto c = classify_point(t, pt({0, 0}), kExact);
    for (size_t k = 1; k < c.lower.values.size(); ++k) {
      CHECK(c.lower.values[k].value >= c.lower.values[k - 1].value);
      CHECK(c.upper.values[k].value >= c.upper.values[k - 1].value);
    }
    // in finite dimension the chain value at k = dim is already final
    CHECK(c.lower.values[static_cast<size_t>(d) - 1] == c.lower.values.back());
    CHECK(c.upper.values[static_cast<size_t>(d) - 1] == c.upper.values.back());
    CHECK(c.lower.stabilized_at.has_value());
  }
}

TEST_CASE("property: defect/approximate-point duality under adjoints") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 15; ++trial) {
    ExactMatrix n = ExactMatrix::Zero(3, 3);
    n(0, 1) = gauss_int(rng, 2);
    n(1, 2) = gauss_int(rng, 2);
    ExactMatrix a = ExactMatrix(n * RatComplex(2)) + identity<RatComplex>(3);
    auto t = tuple_of({n, a});
    Point<RatComplex> lambda{gauss_int(rng, 1), gauss_int(rng, 1)};
    auto direct = classify_point(t, lambda, kExact);
    auto dual = classify_point(adjoint_tuple(t), conj_point(lambda), kExact);
    CHECK(direct.flags.defect == dual.flags.approx_point);
    CHECK(direct.flags.approx_point == dual.flags.defect);
  }
}

TEST_CASE("single operator: defect = eigenvalue = approximate point") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    // triangular, so the eigenvalues are the diagonal entries
    ExactMatrix m = ExactMatrix::Zero(4, 4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = i; j < 4; ++j) m(i, j) = gauss_int(rng, 2);
    auto t = tuple_of({m});
    for (Index i = 0; i < 4; ++i) {
      auto c = classify_point(t, Point<RatComplex>{m(i, i)}, kExact);
      CHECK(c.flags.defect);
      CHECK(c.flags.approx_point);
    }
    // a point off the diagonal set is in neither
    RatComplex off{Rational(97), Rational(1)};
    auto c = classify_point(t, Point<RatComplex>{off}, kExact);
    CHECK_FALSE(c.flags.defect);
    CHECK_FALSE(c.flags.approx_point);
  }
}

TEST_CASE("flags_from_traces: the general semantics on l2-style traces") {
  // divergent finite chain: semi-Browder without semi-Fredholm
  TraceSummary divergent{ExtCount::fin(1), true, true};
  TraceSummary zero{ExtCount::fin(0), true, false};
  auto f = flags_from_traces(divergent, zero, true);
  CHECK(f.browder_lower);
  CHECK_FALSE(f.fredholm_lower);
  CHECK(f.divergent_lower);
  CHECK(f.divergent_lower_split);
  CHECK(f.split_browder_lower);
  CHECK(f.defect);
  CHECK_FALSE(f.approx_point);

  // infinite codimension: semi-Fredholm failure dominates
  auto g = flags_from_traces({ExtCount::inf(), false, false}, zero, false);
  CHECK(g.fredholm_lower);
  CHECK(g.browder_lower);
  CHECK_FALSE(g.divergent_lower);
  CHECK(g.fredholm_upper);  // non-closed range

  // upper divergence requires a closed range
  auto h = flags_from_traces(zero, {ExtCount::fin(2), true, true}, false);
  CHECK_FALSE(h.divergent_upper);
  CHECK(h.fredholm_upper);
  CHECK(h.browder_upper);
}
