#pragma once

// JSON operator specifications, report serialization, region dumps and CSV
// membership grids.

#include "jspec/chains.hpp"
#include "jspec/region.hpp"
#include "jspec/spectra_structured.hpp"
#include "jspec/structured.hpp"
#include "jspec/tuple.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace jspec {

using Json = nlohmann::ordered_json;

/// A parsed operator file: either a dense finite-dimensional tuple (entries
/// kept as doubles; lifted exactly into rationals on demand — every double
/// is dyadic) or a structured l2 tuple.
struct TupleInput {
  enum class Space { Finite, L2 } space = Space::Finite;
  Index dim = 0;
  std::vector<FloatMatrix> dense;
  StructuredTuple structured;
};

TupleInput parse_tuple_json(const Json& j);
TupleInput load_tuple_file(const std::string& path);

FiniteTuple<RatComplex> exact_tuple_of(const TupleInput& in);
FiniteTuple<std::complex<double>> float_tuple_of(const TupleInput& in);

Json tuple_to_json(const TupleInput& in);

// points: "re,im;re,im;..." on the CLI, [[re,im],...] in JSON
PointCd parse_point(const std::string& text);
Json point_to_json(const PointCd& p);
PointCd point_from_json(const Json& j);

Json flags_to_json(const SpectralFlags& f);
Json trace_to_json(const ChainTrace& t);

inline PointCd to_cd_point_generic(const Point<RatComplex>& p) { return to_cd_point(p); }
inline PointCd to_cd_point_generic(const Point<std::complex<double>>& p) { return p; }

template <typename S>
Json classification_to_json(const PointClassification<S>& c) {
  Json j;
  j["point"] = point_to_json(to_cd_point_generic(c.lambda));
  j["flags"] = flags_to_json(c.flags);
  j["traces"] = Json::object();
  j["traces"]["lower"] = trace_to_json(c.lower);
  j["traces"]["upper"] = trace_to_json(c.upper);
  j["range_closed"] = c.range_closed;
  return j;
}

Json verdict_to_json(const StructuredVerdict& v, const PointCd& lambda);

Json region_to_json(const SpectrumRegion& r);

// ---------------------------------------------------------------------------
// grids

struct GridAxis {
  double lo = -1.5;
  double hi = 1.5;
  int steps = 41;
};

/// One axis per complex coordinate, applied to both the real and imaginary
/// parts; the lattice is offset by half a step so region boundaries are
/// never sampled exactly.
struct GridSpec {
  std::vector<GridAxis> axes;

  long size() const;
  PointCd point(long flat) const;
};

GridSpec parse_grid(const std::string& text, int coords);
GridSpec default_grid(double radius, int coords, int steps = 41);

std::string grid_csv(const SpectrumRegion& region, const GridSpec& grid, double tol);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace jspec
