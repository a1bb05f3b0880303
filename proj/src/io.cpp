#include "jspec/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jspec {

namespace {

Complexd cd_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected [re,im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json cd_to_json(Complexd z) { return Json::array({z.real(), z.imag()}); }

DiagonalTupleSpec diagonal_from_json(const Json& j) {
  DiagonalTupleSpec d;
  d.n = j.value("n", 1);
  for (const auto& a : j.value("atoms", Json::array())) {
    Atom atom;
    for (const auto& c : a.at("point")) atom.point.push_back(cd_from_json(c));
    const auto& m = a.at("mult");
    if (m.is_string()) {
      if (m.get<std::string>() != "inf")
        throw std::invalid_argument("atom mult must be a positive integer or \"inf\"");
      atom.mult = kInfiniteMult;
    } else {
      atom.mult = m.get<long>();
    }
    d.atoms.push_back(std::move(atom));
  }
  for (const auto& p : j.value("accumulations", Json::array())) {
    PointCd q;
    for (const auto& c : p) q.push_back(cd_from_json(c));
    d.accumulations.push_back(std::move(q));
  }
  validate(d);
  return d;
}

ShiftSpec shift_from_json(const Json& j) {
  ShiftSpec s;
  const std::string dir = j.value("direction", "forward");
  if (dir == "forward")
    s.direction = ShiftSpec::Direction::Forward;
  else if (dir == "backward")
    s.direction = ShiftSpec::Direction::Backward;
  else
    throw std::invalid_argument("shift direction must be \"forward\" or \"backward\"");
  for (const auto& w : j.value("prefix", Json::array())) s.prefix.push_back(cd_from_json(w));
  s.tail = j.at("tail").get<double>();
  validate(s);
  return s;
}

Json diagonal_to_json(const DiagonalTupleSpec& d) {
  Json j;
  j["kind"] = "diagonal";
  j["n"] = d.n;
  j["atoms"] = Json::array();
  for (const auto& a : d.atoms) {
    Json aj;
    aj["point"] = Json::array();
    for (const auto& z : a.point) aj["point"].push_back(cd_to_json(z));
    if (a.infinite())
      aj["mult"] = "inf";
    else
      aj["mult"] = a.mult;
    j["atoms"].push_back(std::move(aj));
  }
  j["accumulations"] = Json::array();
  for (const auto& p : d.accumulations) {
    Json pj = Json::array();
    for (const auto& z : p) pj.push_back(cd_to_json(z));
    j["accumulations"].push_back(std::move(pj));
  }
  return j;
}

Json shift_to_json(const ShiftSpec& s) {
  Json j;
  j["kind"] = "shift";
  j["direction"] = s.direction == ShiftSpec::Direction::Forward ? "forward" : "backward";
  j["prefix"] = Json::array();
  for (const auto& w : s.prefix) j["prefix"].push_back(cd_to_json(w));
  j["tail"] = s.tail;
  return j;
}

}  // namespace

TupleInput parse_tuple_json(const Json& j) {
  TupleInput in;
  const auto& space = j.at("space");
  const std::string kind = space.at("kind").get<std::string>();
  if (kind == "finite") {
    in.space = TupleInput::Space::Finite;
    in.dim = space.at("dim").get<Index>();
    if (in.dim < 1) throw std::invalid_argument("finite space dim must be >= 1");
    for (const auto& op : j.at("operators")) {
      if (op.at("kind").get<std::string>() != "dense")
        throw std::invalid_argument("finite spaces take dense operators");
      const auto& rows = op.at("entries");
      if (static_cast<Index>(rows.size()) != in.dim)
        throw std::invalid_argument("dense operator row count != dim");
      FloatMatrix m(in.dim, in.dim);
      for (Index r = 0; r < in.dim; ++r) {
        const auto& row = rows[static_cast<size_t>(r)];
        if (static_cast<Index>(row.size()) != in.dim)
          throw std::invalid_argument("dense operator column count != dim");
        for (Index c = 0; c < in.dim; ++c) m(r, c) = cd_from_json(row[static_cast<size_t>(c)]);
      }
      if (!m.allFinite()) throw std::invalid_argument("dense operator has NaN/Inf entries");
      in.dense.push_back(std::move(m));
    }
    if (in.dense.empty()) throw std::invalid_argument("operator list is empty");
  } else if (kind == "l2") {
    in.space = TupleInput::Space::L2;
    for (const auto& op : j.at("operators")) {
      const std::string ok = op.at("kind").get<std::string>();
      if (ok == "diagonal")
        in.structured.parts.emplace_back(diagonal_from_json(op));
      else if (ok == "shift")
        in.structured.parts.emplace_back(shift_from_json(op));
      else
        throw std::invalid_argument("l2 spaces take diagonal or shift operators");
    }
    validate(in.structured);
  } else {
    throw std::invalid_argument("space kind must be \"finite\" or \"l2\"");
  }
  return in;
}

TupleInput load_tuple_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return parse_tuple_json(j);
}

FiniteTuple<RatComplex> exact_tuple_of(const TupleInput& in) {
  if (in.space != TupleInput::Space::Finite)
    throw std::invalid_argument("exact_tuple_of: not a finite-dimensional input");
  FiniteTuple<RatComplex> t;
  t.dim = in.dim;
  for (const auto& m : in.dense) {
    ExactMatrix e(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) e(i, j) = ratc_from_cd(m(i, j));
    t.ops.push_back(std::move(e));
  }
  return t;
}

FiniteTuple<std::complex<double>> float_tuple_of(const TupleInput& in) {
  if (in.space != TupleInput::Space::Finite)
    throw std::invalid_argument("float_tuple_of: not a finite-dimensional input");
  return {in.dim, in.dense};
}

Json tuple_to_json(const TupleInput& in) {
  Json j;
  if (in.space == TupleInput::Space::Finite) {
    j["space"] = {{"kind", "finite"}, {"dim", in.dim}};
    j["operators"] = Json::array();
    for (const auto& m : in.dense) {
      Json op;
      op["kind"] = "dense";
      op["entries"] = Json::array();
      for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(cd_to_json(m(r, c)));
        op["entries"].push_back(std::move(row));
      }
      j["operators"].push_back(std::move(op));
    }
  } else {
    j["space"] = {{"kind", "l2"}};
    j["operators"] = Json::array();
    for (const auto& p : in.structured.parts) {
      if (std::holds_alternative<DiagonalTupleSpec>(p))
        j["operators"].push_back(diagonal_to_json(std::get<DiagonalTupleSpec>(p)));
      else
        j["operators"].push_back(shift_to_json(std::get<ShiftSpec>(p)));
    }
  }
  return j;
}

PointCd parse_point(const std::string& text) {
  PointCd p;
  std::stringstream ss(text);
  std::string coord;
  while (std::getline(ss, coord, ';')) {
    const auto comma = coord.find(',');
    try {
      if (comma == std::string::npos) {
        p.emplace_back(std::stod(coord), 0.0);
      } else {
        p.emplace_back(std::stod(coord.substr(0, comma)), std::stod(coord.substr(comma + 1)));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad point syntax (want \"re,im;re,im;...\"): " + text);
    }
  }
  if (p.empty()) throw std::invalid_argument("empty point");
  return p;
}

Json point_to_json(const PointCd& p) {
  Json j = Json::array();
  for (const auto& z : p) j.push_back(cd_to_json(z));
  return j;
}

PointCd point_from_json(const Json& j) {
  PointCd p;
  for (const auto& c : j) p.push_back(cd_from_json(c));
  return p;
}

Json flags_to_json(const SpectralFlags& f) {
  Json j;
  for (SpectrumKind k : kAllSpectrumKinds) j[kind_name(k)] = flag_of(f, k);
  j["divergent-lower"] = f.divergent_lower;
  j["divergent-upper"] = f.divergent_upper;
  j["noncomplemented-lower"] = f.noncomplemented_lower;
  j["noncomplemented-upper"] = f.noncomplemented_upper;
  j["divergent-lower-split"] = f.divergent_lower_split;
  j["divergent-upper-split"] = f.divergent_upper_split;
  return j;
}

Json trace_to_json(const ChainTrace& t) {
  Json j;
  j["kind"] = t.kind == ChainKind::Lower ? "codim-Mk" : "dim-Nk";
  j["values"] = Json::array();
  for (const auto& v : t.values) {
    if (v.infinite)
      j["values"].push_back("inf");
    else
      j["values"].push_back(v.value);
  }
  if (t.stabilized_at)
    j["stabilized_at"] = *t.stabilized_at;
  else
    j["stabilized_at"] = nullptr;
  return j;
}

Json verdict_to_json(const StructuredVerdict& v, const PointCd& lambda) {
  auto summary = [](const TraceSummary& s) {
    Json j;
    if (s.first.infinite)
      j["first"] = "inf";
    else
      j["first"] = s.first.value;
    j["all_finite"] = s.all_finite;
    j["diverges"] = s.diverges;
    return j;
  };
  Json j;
  j["point"] = point_to_json(lambda);
  j["flags"] = flags_to_json(v.flags);
  j["traces"] = Json::object();
  j["traces"]["lower"] = summary(v.lower);
  j["traces"]["upper"] = summary(v.upper);
  j["range_closed"] = v.range_closed;
  return j;
}

Json region_to_json(const SpectrumRegion& r) {
  return r.visit([](const auto& node) -> Json {
    using T = std::decay_t<decltype(node)>;
    Json j;
    if constexpr (std::is_same_v<T, SpectrumRegion::FinitePoints>) {
      j["kind"] = "points";
      j["n"] = node.n;
      j["points"] = Json::array();
      for (const auto& p : node.points) j["points"].push_back(point_to_json(p));
    } else if constexpr (std::is_same_v<T, SpectrumRegion::Circle>) {
      j["kind"] = "circle";
      j["center"] = cd_to_json(node.center);
      j["radius"] = node.radius;
    } else if constexpr (std::is_same_v<T, SpectrumRegion::Disk>) {
      j["kind"] = "disk";
      j["center"] = cd_to_json(node.center);
      j["radius"] = node.radius;
    } else if constexpr (std::is_same_v<T, SpectrumRegion::Product>) {
      j["kind"] = "product";
      j["factors"] = Json::array();
      for (const auto& f : node.factors) j["factors"].push_back(region_to_json(f));
    } else {
      j["kind"] = "union";
      j["members"] = Json::array();
      for (const auto& m : node.members) j["members"].push_back(region_to_json(m));
    }
    return j;
  });
}

long GridSpec::size() const {
  long s = 1;
  for (const auto& ax : axes) s *= static_cast<long>(ax.steps) * ax.steps;
  return s;
}

PointCd GridSpec::point(long flat) const {
  PointCd p(axes.size());
  // decode little-endian: last coordinate's (re,im) varies fastest
  for (size_t c = axes.size(); c-- > 0;) {
    const auto& ax = axes[c];
    const double h = ax.steps > 1 ? (ax.hi - ax.lo) / ax.steps : 0.0;
    const long im_idx = flat % ax.steps;
    flat /= ax.steps;
    const long re_idx = flat % ax.steps;
    flat /= ax.steps;
    p[c] = {ax.lo + h * (0.5 + static_cast<double>(re_idx)),
            ax.lo + h * (0.5 + static_cast<double>(im_idx))};
  }
  return p;
}

GridSpec parse_grid(const std::string& text, int coords) {
  GridSpec g;
  std::stringstream ss(text);
  std::string axis;
  while (std::getline(ss, axis, ',')) {
    GridAxis ax;
    std::stringstream as(axis);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(as, part, ':')) parts.push_back(part);
    if (parts.size() != 3)
      throw std::invalid_argument("bad grid axis (want \"lo:hi:steps\"): " + axis);
    try {
      ax.lo = std::stod(parts[0]);
      ax.hi = std::stod(parts[1]);
      ax.steps = std::stoi(parts[2]);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad grid axis numbers: " + axis);
    }
    if (ax.steps < 1 || !(ax.lo < ax.hi))
      throw std::invalid_argument("bad grid axis range: " + axis);
    g.axes.push_back(ax);
  }
  if (g.axes.empty()) throw std::invalid_argument("empty grid");
  if (static_cast<int>(g.axes.size()) == 1 && coords > 1)
    g.axes.assign(static_cast<size_t>(coords), g.axes.front());
  if (static_cast<int>(g.axes.size()) != coords)
    throw std::invalid_argument("grid axis count does not match coordinate count");
  return g;
}

GridSpec default_grid(double radius, int coords, int steps) {
  const double r = std::max(radius, 1.0) * 1.5;
  GridSpec g;
  g.axes.assign(static_cast<size_t>(coords), GridAxis{-r, r, steps});
  return g;
}

std::string grid_csv(const SpectrumRegion& region, const GridSpec& grid, double tol) {
  const int n = static_cast<int>(grid.axes.size());
  std::ostringstream header;
  for (int c = 0; c < n; ++c) {
    if (c) header << ",";
    header << "re" << c << ",im" << c;
  }
  header << ",member";
  std::ostringstream body;
  const long total = grid.size();
  for (long i = 0; i < total; ++i) {
    const PointCd p = grid.point(i);
    for (size_t c = 0; c < p.size(); ++c) {
      if (c) body << ",";
      body << p[c].real() << "," << p[c].imag();
    }
    body << "," << (region.contains(p, tol) ? 1 : 0) << "\n";
  }
  return header.str() + "\n" + body.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace jspec
