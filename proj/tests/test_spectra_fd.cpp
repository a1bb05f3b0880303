#include "jspec/spectra_fd.hpp"

#include <doctest.h>

#include "jspec/generators.hpp"
#include "test_util.hpp"

using namespace jspec;
using namespace jspec::testutil;

namespace {
const RankConfig kExact = RankConfig::exact();
}

TEST_CASE("candidates: aligned diagonals of triangular tuples") {
  auto pair = tuple_of({exact_diag({0, 1}), exact_diag({2, 3})});
  auto cand = candidate_points(pair, kExact);
  CHECK(cand.provenance == CandidateSet::Provenance::TriangularDiagonal);
  REQUIRE(cand.points.size() == 2);
  CHECK(cand.points[0] == pt({0, 2}));
  CHECK(cand.points[1] == pt({1, 3}));

  auto j = tuple_of({jordan2()});
  auto cj = candidate_points(j, kExact);
  REQUIRE(cj.points.size() == 1);
  CHECK(cj.points[0] == pt({0}));

  auto trio = tuple_of({exact({{1, 0, 0}, {0, 1, 5}, {0, 0, 2}}),
                        exact({{4, 1, 0}, {0, 5, 0}, {0, 0, 6}})});
  auto ct = candidate_points(trio, kExact);
  REQUIRE(ct.points.size() == 3);
  CHECK(ct.points[0] == pt({1, 4}));
  CHECK(ct.points[1] == pt({1, 5}));
  CHECK(ct.points[2] == pt({2, 6}));
}

TEST_CASE("candidates: float deflation recovers the aligned values") {
  auto pair = tuple_of({exact_diag({0, 1}), exact_diag({2, 3})});
  // conjugate by an integer shear so the tuple is no longer triangular
  ExactMatrix u = exact({{1, 0}, {2, 1}});
  ExactMatrix uinv = exact({{1, 0}, {-2, 1}});
  FiniteTuple<RatComplex> conj{2, {}};
  for (const auto& op : pair.ops) conj.ops.push_back(ExactMatrix(u * op * uinv));

  auto fc = candidate_points(to_float_tuple(conj), RankConfig::flt());
  CHECK(fc.provenance == CandidateSet::Provenance::Deflation);
  REQUIRE(fc.points.size() == 2);
  CHECK(std::abs(fc.points[0][0] - Complexd{0, 0}) < 1e-7);
  CHECK(std::abs(fc.points[0][1] - Complexd{2, 0}) < 1e-7);
  CHECK(std::abs(fc.points[1][0] - Complexd{1, 0}) < 1e-7);
  CHECK(std::abs(fc.points[1][1] - Complexd{3, 0}) < 1e-7);

  // the exact path snaps the deflated values back to rationals
  auto ec = candidate_points(conj, kExact);
  CHECK(ec.provenance == CandidateSet::Provenance::Deflation);
  REQUIRE(ec.points.size() == 2);
  CHECK(ec.points[0] == pt({0, 2}));
  CHECK(ec.points[1] == pt({1, 3}));
}

TEST_CASE("full_spectrum: pinned examples") {
  auto d = tuple_of({exact_diag({0, 1})});
  auto spec = full_spectrum(d, kExact);
  CHECK(spec.of(SpectrumKind::Defect) == std::vector<Point<RatComplex>>{pt({0}), pt({1})});
  CHECK(spec.of(SpectrumKind::ApproxPoint) == spec.of(SpectrumKind::Defect));
  CHECK(spec.of(SpectrumKind::FredholmLower).empty());
  CHECK(spec.of(SpectrumKind::BrowderLower).empty());
  CHECK(spec.of(SpectrumKind::BrowderUpper).empty());

  auto pair = tuple_of({exact_diag({0, 1}), exact_diag({2, 3})});
  auto sp = full_spectrum(pair, kExact);
  CHECK(sp.of(SpectrumKind::Defect) ==
        std::vector<Point<RatComplex>>{pt({0, 2}), pt({1, 3})});

  // split sets coincide with their non-split twins in finite dimension
  for (const auto& cls : sp.classifications) {
    CHECK(cls.flags.split_defect == cls.flags.defect);
    CHECK(cls.flags.split_approx_point == cls.flags.approx_point);
    CHECK(cls.flags.split_browder_lower == cls.flags.browder_lower);
    CHECK_FALSE(cls.flags.noncomplemented_lower);
    CHECK_FALSE(cls.flags.noncomplemented_upper);
  }
}

TEST_CASE("soundness: off-candidate points carry no flags") {
  std::mt19937_64 rng(777);
  TupleGenConfig gen;
  gen.dim_max = 4;
  for (int trial = 0; trial < 5; ++trial) {
    auto g = random_commuting_tuple(rng, gen);
    auto cand = candidate_points(g.tuple, kExact);
    for (int probe = 0; probe < 10; ++probe) {
      Point<RatComplex> z;
      for (Index i = 0; i < g.tuple.length(); ++i)
        z.push_back(RatComplex(Rational(std::uniform_int_distribution<int>(7, 30)(rng)),
                               Rational(std::uniform_int_distribution<int>(1, 5)(rng))));
      bool is_candidate = false;
      for (const auto& c : cand.points) is_candidate = is_candidate || c == z;
      if (is_candidate) continue;
      auto cls = classify_point(g.tuple, z, kExact);
      for (SpectrumKind k : kAllSpectrumKinds) CHECK_FALSE(flag_of(cls.flags, k));
    }
  }
}

TEST_CASE("polynomial_image: pinned examples") {
  auto pair = tuple_of({exact_diag({0, 1}), exact_diag({2, 3})});

  PolynomialMap<RatComplex> ident;
  ident.vars = 2;
  ident.components.resize(2);
  ident.components[0].terms.push_back({RatComplex(1), {1, 0}});
  ident.components[1].terms.push_back({RatComplex(1), {0, 1}});
  auto same = polynomial_image(pair, ident);
  CHECK(same.ops[0] == pair.ops[0]);
  CHECK(same.ops[1] == pair.ops[1]);

  PolynomialMap<RatComplex> prod;
  prod.vars = 2;
  prod.components.resize(1);
  prod.components[0].terms.push_back({RatComplex(1), {1, 1}});
  auto pimg = polynomial_image(pair, prod);
  CHECK(pimg.ops[0] == exact_diag({0, 3}));

  auto j = tuple_of({jordan2()});
  PolynomialMap<RatComplex> sq;
  sq.vars = 1;
  sq.components.resize(1);
  sq.components[0].terms.push_back({RatComplex(1), {2}});
  CHECK(polynomial_image(j, sq).ops[0] == ExactMatrix::Zero(2, 2));
}

TEST_CASE("property: polynomial spectral mapping for defect and approximate point") {
  std::mt19937_64 rng(2024);
  TupleGenConfig gen;
  gen.dim_max = 4;
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_commuting_tuple(rng, gen);
    auto p = random_polynomial_map(rng, static_cast<int>(g.tuple.length()), 2, 3);
    auto image = polynomial_image(g.tuple, p);
    auto st = full_spectrum(g.tuple, kExact);
    auto si = full_spectrum(image, kExact);
    for (SpectrumKind kind : {SpectrumKind::Defect, SpectrumKind::ApproxPoint}) {
      std::vector<Point<RatComplex>> mapped;
      for (const auto& z : st.of(kind)) mapped.push_back(eval_point(p, z));
      CHECK(sorted_unique_points(std::move(mapped)) ==
            sorted_unique_points(si.of(kind)));
    }
  }
}
