#pragma once

// Finitely described commuting tuples on l2: diagonal tuples given by their
// attained values (atoms, with multiplicities) and accumulation points, and
// weighted shifts with eventually constant weight. Every spectrum of these
// models has a closed form in the descriptor data.

#include "jspec/region.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace jspec {

inline constexpr long kInfiniteMult = -1;

struct Atom {
  PointCd point;
  long mult = 1;  // kInfiniteMult for infinite multiplicity

  bool infinite() const { return mult == kInfiniteMult; }
};

/// Diagonal tuple on l2 whose joint symbol sequence enumerates each finite
/// atom with its multiplicity, each infinite atom infinitely often, and for
/// each accumulation point a sequence of distinct non-atom points converging
/// to it (realized canonically as a + 2^-k e_1). All spectra depend only on
/// the descriptor, never on the realization.
struct DiagonalTupleSpec {
  int n = 1;
  std::vector<Atom> atoms;
  std::vector<PointCd> accumulations;
};

struct ShiftSpec {
  enum class Direction { Forward, Backward };
  Direction direction = Direction::Forward;
  std::vector<Complexd> prefix;  // leading weights, all nonzero
  double tail = 1.0;             // weight from the end of the prefix on; > 0
};

using StructuredPart = std::variant<DiagonalTupleSpec, ShiftSpec>;

/// Coordinate-wise composition of parts into one commuting tuple on l2 or
/// l2(N x N). At most one shift part is supported (the fibered analyzer
/// handles shift (x) diagonal composites only).
struct StructuredTuple {
  std::vector<StructuredPart> parts;

  int length() const;
  int shift_count() const;
};

void validate(const DiagonalTupleSpec& d);
void validate(const ShiftSpec& s);
void validate(const StructuredTuple& t);

DiagonalTupleSpec adjoint_structured(const DiagonalTupleSpec& d);
ShiftSpec adjoint_structured(const ShiftSpec& s);

}  // namespace jspec
