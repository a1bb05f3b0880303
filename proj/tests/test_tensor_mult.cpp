#include "jspec/tensor_mult.hpp"

#include <doctest.h>

#include "jspec/koszul.hpp"
#include "jspec/spectra_fd.hpp"
#include "test_util.hpp"

using namespace jspec;
using namespace jspec::testutil;

namespace {
const RankConfig kExact = RankConfig::exact();
}

TEST_CASE("tensor_tuple: pinned examples") {
  auto s = tuple_of({exact_diag({0, 1})});
  auto t = tuple_of({exact_diag({2, 3})});
  auto tt = tensor_tuple(s, t);
  REQUIRE(tt.tuple.length() == 2);
  CHECK(tt.tuple.dim == 4);
  CHECK(tt.tuple.ops[0] == exact_diag({0, 0, 1, 1}));
  CHECK(tt.tuple.ops[1] == exact_diag({2, 3, 2, 3}));

  auto scalar = tuple_of({exact({{5}})});
  auto a = tuple_of({exact({{1, 2}, {0, 3}})});
  auto ts = tensor_tuple(a, scalar);
  CHECK(ts.tuple.ops[0] == a.ops[0]);
  CHECK(ts.tuple.ops[1] == ExactMatrix(RatComplex(5) * identity<RatComplex>(2)));
}

TEST_CASE("mult_tuple: identities act as identity") {
  auto s = tuple_of({identity<RatComplex>(2)});
  auto t = tuple_of({identity<RatComplex>(3)});
  auto mt = mult_tuple(s, t);
  CHECK(mt.tuple.dim == 6);
  CHECK(mt.tuple.ops[0] == identity<RatComplex>(6));
  CHECK(mt.tuple.ops[1] == identity<RatComplex>(6));
}

TEST_CASE("mult_tuple: defect spectrum of (L_J, R_3) on the 2x1 matrix space") {
  auto s = tuple_of({jordan2()});
  auto t = tuple_of({exact({{3}})});
  auto mt = mult_tuple(s, t);
  CHECK(mt.tuple.dim == 2);
  auto spec = full_spectrum(mt.tuple, kExact);
  REQUIRE(spec.of(SpectrumKind::Defect).size() == 1);
  CHECK(spec.of(SpectrumKind::Defect)[0] == pt({0, 3}));
}

TEST_CASE("property: vec identities for left and right multiplication") {
  std::mt19937_64 rng(3131);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<Index> dims(1, 3);
    const Index p = dims(rng), q = dims(rng);
    ExactMatrix a = random_gauss_matrix(rng, p, p, 3);
    ExactMatrix b = random_gauss_matrix(rng, q, q, 3);
    ExactMatrix x = random_gauss_matrix(rng, p, q, 3);

    auto mt = mult_tuple(tuple_of({a}), tuple_of({b}));
    ExactMatrix lhs_l = ExactMatrix(mt.tuple.ops[0] * vec(x));
    CHECK(lhs_l == vec(ExactMatrix(a * x)));
    ExactMatrix lhs_r = ExactMatrix(mt.tuple.ops[1] * vec(x));
    CHECK(lhs_r == vec(ExactMatrix(x * b)));
  }
}

TEST_CASE("tensor koszul homology equals the Kunneth convolution") {
  auto s = tuple_of({jordan2()});
  auto t = tuple_of({exact_diag({0, 2})});
  auto big = tensor_tuple(s, t);

  auto ks = build_koszul(s, pt({0}));
  auto kt = build_koszul(t, pt({0}));
  auto kb = build_koszul(big.tuple, pt({0, 0}));
  auto hs = homology_dims(ks, kExact);
  auto ht = homology_dims(kt, kExact);
  auto hb = homology_dims(kb, kExact);
  REQUIRE(hb.dims.size() == 3);
  // factor profiles (1,1) and (1,1) convolve to (1,2,1)
  CHECK(hs.dims == std::vector<Index>{1, 1});
  CHECK(ht.dims == std::vector<Index>{1, 1});
  CHECK(hb.dims == std::vector<Index>{1, 2, 1});
}
