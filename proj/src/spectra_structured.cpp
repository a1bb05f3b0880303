#include "jspec/spectra_structured.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jspec {

namespace {

bool point_within(const PointCd& a, const PointCd& b, double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

std::vector<PointCd> dedup_points(std::vector<PointCd> pts) {
  std::vector<PointCd> out;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : out) dup = dup || (p == q);
    if (!dup) out.push_back(p);
  }
  return out;
}

// matched atom multiplicity at a point (infinite absorbs) and whether an
// accumulation point is hit
struct MatchInfo {
  long mult = 0;  // kInfiniteMult when any matched atom is infinite
  bool accumulation = false;

  bool in_closure() const { return mult != 0 || accumulation; }
  bool infinite() const { return mult == kInfiniteMult; }
};

MatchInfo match_at(const DiagonalTupleSpec& d, const PointCd& lambda, double tol) {
  MatchInfo m;
  for (const auto& a : d.atoms) {
    if (point_within(a.point, lambda, tol)) {
      if (a.infinite() || m.mult == kInfiniteMult)
        m.mult = kInfiniteMult;
      else
        m.mult += a.mult;
    }
  }
  for (const auto& p : d.accumulations)
    if (point_within(p, lambda, tol)) m.accumulation = true;
  return m;
}

enum class RadialPos { Inside, Boundary, Outside };

RadialPos radial_position(Complexd z, double r, double tol) {
  const double a = std::abs(z);
  if (std::abs(a - r) <= tol) return RadialPos::Boundary;
  return a < r ? RadialPos::Inside : RadialPos::Outside;
}

// trace forms the structured engines produce
struct TraceForm {
  enum class Kind { Zero, Infinite, Linear } kind = Kind::Zero;
  long slope = 0;  // value at k is slope * k (Linear only)

  static TraceForm zero() { return {Kind::Zero, 0}; }
  static TraceForm infinite() { return {Kind::Infinite, 0}; }
  static TraceForm linear(long m) { return {Kind::Linear, m}; }

  TraceSummary summary() const {
    switch (kind) {
      case Kind::Zero: return {ExtCount::fin(0), true, false};
      case Kind::Infinite: return {ExtCount::inf(), false, false};
      case Kind::Linear: return {ExtCount::fin(slope), true, true};
    }
    throw std::logic_error("TraceForm: bad kind");
  }
};

StructuredVerdict make_verdict(const TraceForm& lower, const TraceForm& upper,
                               bool range_closed) {
  StructuredVerdict v;
  v.lower = lower.summary();
  v.upper = upper.summary();
  v.range_closed = range_closed;
  v.flags = flags_from_traces(v.lower, v.upper, range_closed);
  return v;
}

bool region_is_essential_kind(SpectrumKind k) {
  switch (k) {
    case SpectrumKind::FredholmLower:
    case SpectrumKind::FredholmUpper:
    case SpectrumKind::BrowderLower:
    case SpectrumKind::BrowderUpper:
    case SpectrumKind::SplitDefectEssential:
    case SpectrumKind::SplitApproxEssential:
    case SpectrumKind::SplitBrowderLower:
    case SpectrumKind::SplitBrowderUpper:
      return true;
    default:
      return false;
  }
}

}  // namespace

SpectrumRegion diagonal_spectrum(const DiagonalTupleSpec& d, SpectrumKind kind) {
  validate(d);
  std::vector<PointCd> pts;
  if (region_is_essential_kind(kind)) {
    for (const auto& a : d.atoms)
      if (a.infinite()) pts.push_back(a.point);
  } else {
    for (const auto& a : d.atoms) pts.push_back(a.point);
  }
  for (const auto& p : d.accumulations) pts.push_back(p);
  return SpectrumRegion::points(d.n, dedup_points(std::move(pts)));
}

SpectrumRegion shift_spectrum(const ShiftSpec& s, SpectrumKind kind) {
  validate(s);
  bool disk = false;
  if (s.direction == ShiftSpec::Direction::Forward) {
    disk = kind == SpectrumKind::Defect || kind == SpectrumKind::SplitDefect ||
           kind == SpectrumKind::BrowderLower || kind == SpectrumKind::SplitBrowderLower;
  } else {
    disk = kind == SpectrumKind::ApproxPoint || kind == SpectrumKind::SplitApproxPoint ||
           kind == SpectrumKind::BrowderUpper || kind == SpectrumKind::SplitBrowderUpper;
  }
  return disk ? SpectrumRegion::disk({0, 0}, s.tail) : SpectrumRegion::circle({0, 0}, s.tail);
}

DiagonalTupleSpec tensor_diagonal(const DiagonalTupleSpec& a, const DiagonalTupleSpec& b) {
  validate(a);
  validate(b);
  DiagonalTupleSpec out;
  out.n = a.n + b.n;
  auto concat = [](const PointCd& p, const PointCd& q) {
    PointCd r = p;
    r.insert(r.end(), q.begin(), q.end());
    return r;
  };
  for (const auto& pa : a.atoms) {
    for (const auto& pb : b.atoms) {
      Atom atom;
      atom.point = concat(pa.point, pb.point);
      atom.mult = (pa.infinite() || pb.infinite()) ? kInfiniteMult : pa.mult * pb.mult;
      out.atoms.push_back(std::move(atom));
    }
  }
  std::vector<PointCd> acc;
  for (const auto& pa : a.atoms)
    for (const auto& qb : b.accumulations) acc.push_back(concat(pa.point, qb));
  for (const auto& qa : a.accumulations)
    for (const auto& pb : b.atoms) acc.push_back(concat(qa, pb.point));
  for (const auto& qa : a.accumulations)
    for (const auto& qb : b.accumulations) acc.push_back(concat(qa, qb));
  out.accumulations = dedup_points(std::move(acc));
  validate(out);
  return out;
}

StructuredVerdict diagonal_verdict(const DiagonalTupleSpec& d, const PointCd& lambda,
                                   double tol) {
  validate(d);
  if (static_cast<int>(lambda.size()) != d.n)
    throw std::invalid_argument("diagonal_verdict: point arity mismatch");
  const MatchInfo m = match_at(d, lambda, tol);
  // diagonal chains are constant in k: a matched fiber stays matched for all
  // powers, and accumulation makes the codimension infinite outright
  StructuredVerdict v;
  if (m.infinite() || m.accumulation) {
    v.lower = TraceForm::infinite().summary();
  } else {
    v.lower = {ExtCount::fin(m.mult), true, false};
  }
  v.upper = v.lower;
  v.range_closed = !m.accumulation;
  v.flags = flags_from_traces(v.lower, v.upper, v.range_closed);
  return v;
}

StructuredVerdict shift_verdict(const ShiftSpec& s, Complexd lambda, double tol) {
  validate(s);
  const RadialPos pos = radial_position(lambda, s.tail, tol);
  const bool forward = s.direction == ShiftSpec::Direction::Forward;
  if (pos == RadialPos::Outside)
    return make_verdict(TraceForm::zero(), TraceForm::zero(), true);
  if (pos == RadialPos::Boundary)
    return make_verdict(TraceForm::infinite(), TraceForm::zero(), false);
  // strictly inside: injective with codim R((S-z)^k) = k for the forward
  // shift (Fredholm of index -1, kernel-free); the backward shift mirrors
  return forward ? make_verdict(TraceForm::linear(1), TraceForm::zero(), true)
                 : make_verdict(TraceForm::zero(), TraceForm::linear(1), true);
}

StructuredVerdict fibered_tensor_verdict(const ShiftSpec& s, const DiagonalTupleSpec& d,
                                         Complexd z1, Complexd z2, double tol) {
  validate(s);
  validate(d);
  if (d.n != 1)
    throw std::invalid_argument("fibered_tensor_verdict: diagonal factor must be scalar");
  const RadialPos pos = radial_position(z1, s.tail, tol);
  const bool forward = s.direction == ShiftSpec::Direction::Forward;
  const MatchInfo m = match_at(d, {z2}, tol);

  if (pos == RadialPos::Outside || !m.in_closure())
    return make_verdict(TraceForm::zero(), TraceForm::zero(), true);

  // shift power profile at z1: cokernel slope c (per matched fiber) and
  // kernel slope kappa
  TraceForm per_fiber_coker = TraceForm::zero();
  TraceForm per_fiber_ker = TraceForm::zero();
  if (pos == RadialPos::Boundary) {
    per_fiber_coker = TraceForm::infinite();
  } else if (forward) {
    per_fiber_coker = TraceForm::linear(1);
  } else {
    per_fiber_ker = TraceForm::linear(1);
  }

  // lower chain: matched fibers each contribute the power cokernel; an
  // accumulation at z2 forces infinite codimension outright
  TraceForm lower = TraceForm::zero();
  if (per_fiber_coker.kind == TraceForm::Kind::Infinite) {
    lower = TraceForm::infinite();
  } else if (per_fiber_coker.kind == TraceForm::Kind::Linear) {
    if (m.infinite() || m.accumulation)
      lower = TraceForm::infinite();
    else if (m.mult > 0)
      lower = TraceForm::linear(m.mult * per_fiber_coker.slope);
  }

  // upper chain: only exactly matched fibers contribute kernel
  TraceForm upper = TraceForm::zero();
  if (per_fiber_ker.kind == TraceForm::Kind::Linear && m.mult != 0) {
    upper = m.infinite() ? TraceForm::infinite()
                         : TraceForm::linear(m.mult * per_fiber_ker.slope);
  }

  // the stacked column map is bounded below (modulo kernel) unless the shift
  // sits on its essential circle over a matched/accumulating symbol, or the
  // kernel direction collapses along an accumulation
  bool range_closed = true;
  if (pos == RadialPos::Boundary && m.in_closure()) range_closed = false;
  if (m.accumulation && per_fiber_ker.kind == TraceForm::Kind::Linear) range_closed = false;

  return make_verdict(lower, upper, range_closed);
}

namespace {

struct FiberedLayout {
  int shift_index = -1;       // index into parts, -1 if no shift
  int shift_coordinate = -1;  // coordinate offset of the shift
  std::vector<const DiagonalTupleSpec*> diagonals;
};

FiberedLayout layout_of(const StructuredTuple& t) {
  FiberedLayout lay;
  int coord = 0;
  for (size_t i = 0; i < t.parts.size(); ++i) {
    if (std::holds_alternative<ShiftSpec>(t.parts[i])) {
      lay.shift_index = static_cast<int>(i);
      lay.shift_coordinate = coord;
      coord += 1;
    } else {
      const auto& d = std::get<DiagonalTupleSpec>(t.parts[i]);
      lay.diagonals.push_back(&d);
      coord += d.n;
    }
  }
  return lay;
}

DiagonalTupleSpec compose_diagonals(const std::vector<const DiagonalTupleSpec*>& ds) {
  DiagonalTupleSpec acc = *ds.front();
  for (size_t i = 1; i < ds.size(); ++i) acc = tensor_diagonal(acc, *ds[i]);
  return acc;
}

}  // namespace

StructuredVerdict structured_verdict(const StructuredTuple& t, const PointCd& lambda,
                                     double tol) {
  validate(t);
  if (static_cast<int>(lambda.size()) != t.length())
    throw std::invalid_argument("structured_verdict: point arity mismatch");
  const FiberedLayout lay = layout_of(t);
  if (lay.shift_index < 0) {
    return diagonal_verdict(compose_diagonals(lay.diagonals), lambda, tol);
  }
  const auto& shift = std::get<ShiftSpec>(t.parts[static_cast<size_t>(lay.shift_index)]);
  if (lay.diagonals.empty()) {
    return shift_verdict(shift, lambda[0], tol);
  }
  const DiagonalTupleSpec diag = compose_diagonals(lay.diagonals);
  if (diag.n != 1)
    throw std::invalid_argument(
        "structured_verdict: unsupported composite (need shift x scalar diagonal)");
  const Complexd z1 = lambda[static_cast<size_t>(lay.shift_coordinate)];
  const Complexd z2 = lambda[lay.shift_coordinate == 0 ? 1 : 0];
  return fibered_tensor_verdict(shift, diag, z1, z2, tol);
}

SpectrumRegion structured_part_region(const StructuredPart& p, SpectrumKind kind) {
  if (std::holds_alternative<ShiftSpec>(p))
    return shift_spectrum(std::get<ShiftSpec>(p), kind);
  return diagonal_spectrum(std::get<DiagonalTupleSpec>(p), kind);
}

namespace {

SpectrumRegion formula_region(const StructuredPart& s, const StructuredPart& t,
                              SpectrumKind kind, bool mult_convention) {
  using K = SpectrumKind;
  auto rs = [&](K k) { return structured_part_region(s, k); };
  // for the multiplication tuple the T-side roles of defect/approximate
  // point swap (the identification runs through the adjoint factor)
  auto rt = [&](K k) {
    if (mult_convention) {
      switch (k) {
        case K::Defect: k = K::ApproxPoint; break;
        case K::ApproxPoint: k = K::Defect; break;
        case K::SplitDefect: k = K::SplitApproxPoint; break;
        case K::SplitApproxPoint: k = K::SplitDefect; break;
        case K::FredholmLower: k = K::FredholmUpper; break;
        case K::FredholmUpper: k = K::FredholmLower; break;
        case K::SplitDefectEssential: k = K::SplitApproxEssential; break;
        case K::SplitApproxEssential: k = K::SplitDefectEssential; break;
        case K::BrowderLower: k = K::BrowderUpper; break;
        case K::BrowderUpper: k = K::BrowderLower; break;
        case K::SplitBrowderLower: k = K::SplitBrowderUpper; break;
        case K::SplitBrowderUpper: k = K::SplitBrowderLower; break;
      }
    }
    return structured_part_region(t, k);
  };
  auto prod = [](SpectrumRegion a, SpectrumRegion b) {
    return SpectrumRegion::product({std::move(a), std::move(b)});
  };
  switch (kind) {
    case K::Defect:
    case K::SplitDefect:
      return prod(rs(K::Defect), rt(K::Defect));
    case K::ApproxPoint:
    case K::SplitApproxPoint:
      return prod(rs(K::ApproxPoint), rt(K::ApproxPoint));
    case K::FredholmLower:
    case K::SplitDefectEssential:
      return SpectrumRegion::unite({prod(rs(K::FredholmLower), rt(K::Defect)),
                                    prod(rs(K::Defect), rt(K::FredholmLower))});
    case K::FredholmUpper:
    case K::SplitApproxEssential:
      return SpectrumRegion::unite({prod(rs(K::FredholmUpper), rt(K::ApproxPoint)),
                                    prod(rs(K::ApproxPoint), rt(K::FredholmUpper))});
    case K::BrowderLower:
    case K::SplitBrowderLower:
      return SpectrumRegion::unite({prod(rs(K::BrowderLower), rt(K::Defect)),
                                    prod(rs(K::Defect), rt(K::BrowderLower))});
    case K::BrowderUpper:
    case K::SplitBrowderUpper:
      return SpectrumRegion::unite({prod(rs(K::BrowderUpper), rt(K::ApproxPoint)),
                                    prod(rs(K::ApproxPoint), rt(K::BrowderUpper))});
  }
  throw std::invalid_argument("formula_region: unknown spectrum kind");
}

}  // namespace

SpectrumRegion tensor_formula_region(const StructuredPart& s, const StructuredPart& t,
                                     SpectrumKind kind) {
  return formula_region(s, t, kind, /*mult_convention=*/false);
}

SpectrumRegion mult_formula_region(const StructuredPart& s, const StructuredPart& t,
                                   SpectrumKind kind) {
  return formula_region(s, t, kind, /*mult_convention=*/true);
}

SpectrumRegion structured_region(const StructuredTuple& t, SpectrumKind kind) {
  validate(t);
  const FiberedLayout lay = layout_of(t);
  if (lay.shift_index < 0) return diagonal_spectrum(compose_diagonals(lay.diagonals), kind);
  if (lay.diagonals.empty())
    return shift_spectrum(std::get<ShiftSpec>(t.parts[static_cast<size_t>(lay.shift_index)]),
                          kind);
  if (t.parts.size() != 2)
    throw std::invalid_argument("structured_region: unsupported composite");
  return tensor_formula_region(t.parts[0], t.parts[1], kind);
}

}  // namespace jspec
