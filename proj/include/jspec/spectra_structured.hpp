#pragma once

// Closed-form spectra for the structured l2 models. Diagonal tuples and
// eventually-constant weighted shifts admit exact regions; shift (x)
// diagonal composites are classified pointwise by a fibered analysis over
// the diagonal index. These models realize the semi-Browder/semi-Fredholm
// gaps that finite dimension cannot exhibit.

#include "jspec/chains.hpp"
#include "jspec/region.hpp"
#include "jspec/structured.hpp"

namespace jspec {

/// Same flag set as a finite-dimensional classification, derived from
/// closed-form chain traces.
struct StructuredVerdict {
  TraceSummary lower;
  TraceSummary upper;
  bool range_closed = true;
  SpectralFlags flags;
};

SpectrumRegion diagonal_spectrum(const DiagonalTupleSpec& d, SpectrumKind kind);
SpectrumRegion shift_spectrum(const ShiftSpec& s, SpectrumKind kind);

/// Composite descriptor of the Kronecker-style product of two diagonal
/// tuples: atoms are pairwise concatenations with multiplicity products
/// (infinite absorbs), accumulations are atoms x accumulations,
/// accumulations x atoms and accumulations x accumulations.
DiagonalTupleSpec tensor_diagonal(const DiagonalTupleSpec& a, const DiagonalTupleSpec& b);

StructuredVerdict diagonal_verdict(const DiagonalTupleSpec& d, const PointCd& lambda,
                                   double tol = kRegionBoundaryTol);
StructuredVerdict shift_verdict(const ShiftSpec& s, Complexd lambda,
                                double tol = kRegionBoundaryTol);

/// Pointwise classification of ((S - z1) (x) I, I (x) (D - z2)) on
/// l2(N x N) by blockwise analysis over the diagonal index: fibers whose
/// symbol differs from z2 are absorbed, each matched fiber contributes the
/// shift power cokernel/kernel, and accumulation at z2 forces the
/// non-closed-range / infinite-codimension verdicts.
StructuredVerdict fibered_tensor_verdict(const ShiftSpec& s, const DiagonalTupleSpec& d,
                                         Complexd z1, Complexd z2,
                                         double tol = kRegionBoundaryTol);

/// Verdict for a whole structured tuple at a point (diagonal composites,
/// a lone shift, or a shift (x) scalar-diagonal pair).
StructuredVerdict structured_verdict(const StructuredTuple& t, const PointCd& lambda,
                                     double tol = kRegionBoundaryTol);

/// Region for a whole structured tuple. Diagonal composites and lone shifts
/// come from their closed forms; shift (x) diagonal composites use the
/// verified tensor formulas over the factor regions.
SpectrumRegion structured_region(const StructuredTuple& t, SpectrumKind kind);

SpectrumRegion structured_part_region(const StructuredPart& p, SpectrumKind kind);

/// Right-hand sides of the tensor-tuple descriptions: regions for
/// (S (x) I, I (x) T) assembled from factor regions.
SpectrumRegion tensor_formula_region(const StructuredPart& s, const StructuredPart& t,
                                     SpectrumKind kind);

/// Right-hand sides for the multiplication tuple (L_S, R_T).
SpectrumRegion mult_formula_region(const StructuredPart& s, const StructuredPart& t,
                                   SpectrumKind kind);

}  // namespace jspec
