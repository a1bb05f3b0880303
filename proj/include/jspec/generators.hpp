#pragma once

// Seeded random instances: commuting finite tuples (block upper triangular,
// exactly commuting by construction), polynomial maps, and structured specs.
// Seeds fully determine every instance.

#include "jspec/spectra_fd.hpp"
#include "jspec/structured.hpp"

#include <random>
#include <string>

namespace jspec {

using Rng = std::mt19937_64;

struct TupleGenConfig {
  int n_min = 1;
  int n_max = 2;
  Index dim_min = 1;
  Index dim_max = 5;
  int entry_mag = 2;       // magnitude bound for Gaussian-integer data
  bool conjugate = false;  // conjugate by a random integer unimodular matrix
};

/// A commuting tuple with known candidate structure: the space splits into
/// blocks; on each block every coordinate is a Gaussian-integer multiple of
/// the identity plus a polynomial (zero constant term) in one shared
/// nilpotent. Joint diagonal values are constant per block.
struct GeneratedTuple {
  FiniteTuple<RatComplex> tuple;
  std::vector<Point<RatComplex>> block_values;  // aligned value of each block
  std::string desc;
};

GeneratedTuple random_commuting_tuple(Rng& rng, const TupleGenConfig& cfg);

/// Random polynomial map C^vars -> C^comps with degree <= max_degree and
/// small Gaussian-integer coefficients.
PolynomialMap<RatComplex> random_polynomial_map(Rng& rng, int vars, int comps,
                                                int max_degree);

struct DiagonalGenConfig {
  int n = 1;
  int max_atoms = 3;
  int max_accumulations = 2;
  bool allow_infinite = true;
};

DiagonalTupleSpec random_diagonal_spec(Rng& rng, const DiagonalGenConfig& cfg);
ShiftSpec random_shift_spec(Rng& rng);

std::string describe(const DiagonalTupleSpec& d);
std::string describe(const ShiftSpec& s);

}  // namespace jspec
