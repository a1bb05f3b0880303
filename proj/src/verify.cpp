#include "jspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace jspec {

namespace {

const RankConfig kExact = RankConfig::exact();

using PtsX = std::vector<Point<RatComplex>>;

PtsX sorted_unique(PtsX pts) { return sorted_unique_points(std::move(pts)); }

PtsX union_points(PtsX a, const PtsX& b) {
  a.insert(a.end(), b.begin(), b.end());
  return sorted_unique(std::move(a));
}

bool contains_point(const PtsX& sorted, const Point<RatComplex>& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p, point_less<RatComplex>);
}

Point<RatComplex> concat(const Point<RatComplex>& a, const Point<RatComplex>& b) {
  Point<RatComplex> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string fmt_point(const Point<RatComplex>& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + ")";
}

}  // namespace

PtsX product_points(const PtsX& a, const PtsX& b) {
  PtsX out;
  out.reserve(a.size() * b.size());
  for (const auto& pa : a)
    for (const auto& pb : b) out.push_back(concat(pa, pb));
  return sorted_unique(std::move(out));
}

namespace {

// the tensor and multiplication formulas share one shape: a union of
// products of factor spectra; the multiplication case swaps the roles of
// defect/approximate-point data on the T side
SpectrumKind mult_swap(SpectrumKind k) {
  using K = SpectrumKind;
  switch (k) {
    case K::Defect: return K::ApproxPoint;
    case K::ApproxPoint: return K::Defect;
    case K::SplitDefect: return K::SplitApproxPoint;
    case K::SplitApproxPoint: return K::SplitDefect;
    case K::FredholmLower: return K::FredholmUpper;
    case K::FredholmUpper: return K::FredholmLower;
    case K::SplitDefectEssential: return K::SplitApproxEssential;
    case K::SplitApproxEssential: return K::SplitDefectEssential;
    case K::BrowderLower: return K::BrowderUpper;
    case K::BrowderUpper: return K::BrowderLower;
    case K::SplitBrowderLower: return K::SplitBrowderUpper;
    case K::SplitBrowderUpper: return K::SplitBrowderLower;
  }
  throw std::invalid_argument("mult_swap: unknown kind");
}

PtsX formula_set(const FiniteSpectrum<RatComplex>& s, const FiniteSpectrum<RatComplex>& t,
                 SpectrumKind kind, bool mult_convention) {
  using K = SpectrumKind;
  auto S = [&](K k) { return s.of(k); };
  auto T = [&](K k) { return t.of(mult_convention ? mult_swap(k) : k); };
  switch (kind) {
    case K::Defect:
    case K::SplitDefect:
      return product_points(S(K::Defect), T(K::Defect));
    case K::ApproxPoint:
    case K::SplitApproxPoint:
      return product_points(S(K::ApproxPoint), T(K::ApproxPoint));
    case K::FredholmLower:
    case K::SplitDefectEssential:
      return union_points(product_points(S(K::FredholmLower), T(K::Defect)),
                          product_points(S(K::Defect), T(K::FredholmLower)));
    case K::FredholmUpper:
    case K::SplitApproxEssential:
      return union_points(product_points(S(K::FredholmUpper), T(K::ApproxPoint)),
                          product_points(S(K::ApproxPoint), T(K::FredholmUpper)));
    case K::BrowderLower:
    case K::SplitBrowderLower:
      return union_points(product_points(S(K::BrowderLower), T(K::Defect)),
                          product_points(S(K::Defect), T(K::BrowderLower)));
    case K::BrowderUpper:
    case K::SplitBrowderUpper:
      return union_points(product_points(S(K::BrowderUpper), T(K::ApproxPoint)),
                          product_points(S(K::ApproxPoint), T(K::BrowderUpper)));
  }
  throw std::invalid_argument("formula_set: unknown kind");
}

}  // namespace

PtsX tensor_formula_set(const FiniteSpectrum<RatComplex>& s,
                        const FiniteSpectrum<RatComplex>& t, SpectrumKind kind) {
  return formula_set(s, t, kind, false);
}

PtsX mult_formula_set(const FiniteSpectrum<RatComplex>& s,
                      const FiniteSpectrum<RatComplex>& t, SpectrumKind kind) {
  return formula_set(s, t, kind, true);
}

int effective_threads(int requested) {
  int t = requested;
  if (t <= 0) {
    t = static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
  }
  if (const char* env = std::getenv("JSPEC_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) t = std::min(t, cap);
  }
  return std::max(t, 1);
}

void parallel_for(long n, int threads, const std::function<void(long)>& fn) {
  threads = std::min<long>(std::max(threads, 1), std::max<long>(n, 1));
  if (threads <= 1 || n <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mu;
  std::atomic<long> next{0};
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const long i = next.fetch_add(1);
        if (i >= n) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

Counterexample error_counterexample(const std::string& message) {
  Counterexample ce;
  ce.error = message;
  return ce;
}

// first few symmetric-difference points with both-side verdicts
void record_set_mismatch(InstanceResult& res, SpectrumKind kind, const PtsX& lhs,
                         const PtsX& rhs, const FiniteTuple<RatComplex>& derived) {
  std::vector<std::pair<Point<RatComplex>, bool>> diffs;  // (point, in_lhs)
  for (const auto& p : lhs)
    if (!contains_point(rhs, p)) diffs.emplace_back(p, true);
  for (const auto& p : rhs)
    if (!contains_point(lhs, p)) diffs.emplace_back(p, false);
  size_t shown = 0;
  for (const auto& [p, in_lhs] : diffs) {
    if (shown++ >= 3) break;
    Counterexample ce;
    ce.point = to_cd_point(p);
    ce.lhs_flags[kind_name(kind)] = in_lhs;
    ce.rhs_flags[kind_name(kind)] = !in_lhs;
    auto cls = classify_point(derived, p, kExact);
    ce.traces["lower"] = trace_to_json(cls.lower);
    ce.traces["upper"] = trace_to_json(cls.upper);
    res.counterexamples.push_back(std::move(ce));
  }
  res.pass = false;
}

InstanceResult derived_tuple_instance(const GeneratedTuple& s, const GeneratedTuple& t,
                                      const FiniteTuple<RatComplex>& derived,
                                      const std::vector<SpectrumKind>& kinds,
                                      bool mult_convention) {
  InstanceResult res;
  res.desc = s.desc + " x " + t.desc + (mult_convention ? " [mult]" : " [tensor]");
  try {
    const auto spec_s = full_spectrum(s.tuple, kExact);
    const auto spec_t = full_spectrum(t.tuple, kExact);
    // a simultaneous triangularization of the derived tuple aligns factor
    // diagonal values pairwise, so the product of the factor candidate sets
    // is a candidate superset for it
    const PtsX derived_cands =
        product_points(candidate_points(s.tuple, kExact).points,
                       candidate_points(t.tuple, kExact).points);
    const auto spec_d = spectrum_at_candidates(derived, derived_cands, kExact);
    for (SpectrumKind kind : kinds) {
      const PtsX lhs = sorted_unique(spec_d.of(kind));
      const PtsX rhs = formula_set(spec_s, spec_t, kind, mult_convention);
      if (lhs != rhs) record_set_mismatch(res, kind, lhs, rhs, derived);
    }
  } catch (const std::exception& e) {
    res.pass = false;
    res.counterexamples.push_back(error_counterexample(e.what()));
  }
  return res;
}

std::vector<Index> convolve(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

InstanceResult kunneth_instance(
    const GeneratedTuple& s, const GeneratedTuple& t,
    const std::vector<std::pair<Point<RatComplex>, Point<RatComplex>>>& pts) {
  InstanceResult res;
  res.desc = s.desc + " x " + t.desc + " [kunneth]";
  try {
    const auto big = tensor_tuple(s.tuple, t.tuple);
    for (const auto& [ls, lt] : pts) {
      const auto k1 = build_koszul(s.tuple, ls);
      const auto k2 = build_koszul(t.tuple, lt);
      const auto h1 = homology_dims(k1, kExact);
      const auto h2 = homology_dims(k2, kExact);
      const auto kb = build_koszul(big.tuple, concat(ls, lt));
      const auto hb = homology_dims(kb, kExact);
      const auto total = tensor_total_complex(k1, k2);
      const auto ht = homology_dims(total, kExact);
      const auto conv = convolve(h1.dims, h2.dims);
      if (hb.dims != conv || ht.dims != conv) {
        Counterexample ce;
        ce.point = to_cd_point(concat(ls, lt));
        ce.lhs_flags["kronecker_homology"] = hb.dims;
        ce.lhs_flags["total_complex_homology"] = ht.dims;
        ce.rhs_flags["kunneth_convolution"] = conv;
        res.counterexamples.push_back(std::move(ce));
        res.pass = false;
      }
    }
  } catch (const std::exception& e) {
    res.pass = false;
    res.counterexamples.push_back(error_counterexample(e.what()));
  }
  return res;
}

InstanceResult tensor_instance(const GeneratedTuple& s, const GeneratedTuple& t,
                               const FiniteTuple<RatComplex>& derived,
                               const std::vector<SpectrumKind>& kinds) {
  return derived_tuple_instance(s, t, derived, kinds, false);
}

InstanceResult mult_instance(const GeneratedTuple& s, const GeneratedTuple& t,
                             const FiniteTuple<RatComplex>& derived,
                             const std::vector<SpectrumKind>& kinds) {
  return derived_tuple_instance(s, t, derived, kinds, true);
}

InstanceResult projection_instance(const GeneratedTuple& t) {
  InstanceResult res;
  res.desc = t.desc + " [projection]";
  try {
    const Index n = t.tuple.length();
    if (n < 2) throw std::invalid_argument("projection check needs length >= 2");
    FiniteTuple<RatComplex> sub{t.tuple.dim,
                                {t.tuple.ops.begin(), t.tuple.ops.end() - 1}};
    const auto spec_full = full_spectrum(t.tuple, kExact);
    const auto spec_sub = full_spectrum(sub, kExact);
    const SpectrumKind kinds[] = {SpectrumKind::Defect, SpectrumKind::ApproxPoint,
                                  SpectrumKind::BrowderLower, SpectrumKind::BrowderUpper,
                                  SpectrumKind::SplitBrowderLower,
                                  SpectrumKind::SplitBrowderUpper};
    for (SpectrumKind kind : kinds) {
      PtsX projected;
      for (const auto& p : spec_full.of(kind))
        projected.emplace_back(p.begin(), p.end() - 1);
      projected = sorted_unique(std::move(projected));
      const PtsX expected = sorted_unique(spec_sub.of(kind));
      if (projected != expected) record_set_mismatch(res, kind, projected, expected, sub);
    }
  } catch (const std::exception& e) {
    res.pass = false;
    res.counterexamples.push_back(error_counterexample(e.what()));
  }
  return res;
}

InstanceResult mapping_instance(const GeneratedTuple& t, const PolynomialMap<RatComplex>& p) {
  InstanceResult res;
  std::ostringstream d;
  d << t.desc << " [mapping m=" << p.components.size() << "]";
  res.desc = d.str();
  try {
    const auto image = polynomial_image(t.tuple, p);
    const auto spec_t = full_spectrum(t.tuple, kExact);
    const auto spec_img = full_spectrum(image, kExact);
    const SpectrumKind kinds[] = {SpectrumKind::Defect, SpectrumKind::ApproxPoint};
    for (SpectrumKind kind : kinds) {
      PtsX mapped;
      for (const auto& z : spec_t.of(kind)) mapped.push_back(eval_point(p, z));
      mapped = sorted_unique(std::move(mapped));
      const PtsX direct = sorted_unique(spec_img.of(kind));
      if (mapped != direct) record_set_mismatch(res, kind, mapped, direct, image);
    }
  } catch (const std::exception& e) {
    res.pass = false;
    res.counterexamples.push_back(error_counterexample(e.what()));
  }
  return res;
}

namespace {

std::string part_desc(const StructuredPart& p) {
  if (std::holds_alternative<ShiftSpec>(p)) return describe(std::get<ShiftSpec>(p));
  return describe(std::get<DiagonalTupleSpec>(p));
}

double part_radius(const StructuredPart& p) {
  return structured_part_region(p, SpectrumKind::Defect).bounding_radius();
}

}  // namespace

InstanceResult structured_grid_instance(const StructuredPart& a, const StructuredPart& b,
                                        int grid_steps, double tol, int threads) {
  InstanceResult res;
  res.desc = part_desc(a) + " (x) " + part_desc(b) + " [grid " + std::to_string(grid_steps) +
             "x" + std::to_string(grid_steps) + " per coordinate]";
  try {
    StructuredTuple composite;
    composite.parts = {a, b};
    validate(composite);

    std::vector<SpectrumRegion> rhs;
    for (SpectrumKind kind : kAllSpectrumKinds)
      rhs.push_back(tensor_formula_region(a, b, kind));

    GridSpec grid;
    grid.axes = {GridAxis{-1.5 * std::max(part_radius(a), 1.0),
                          1.5 * std::max(part_radius(a), 1.0), grid_steps},
                 GridAxis{-1.5 * std::max(part_radius(b), 1.0),
                          1.5 * std::max(part_radius(b), 1.0), grid_steps}};

    const long total = grid.size();
    std::mutex mu;
    std::vector<std::pair<long, Counterexample>> fails;
    parallel_for(total, threads, [&](long i) {
      const PointCd z = grid.point(i);
      const StructuredVerdict v = structured_verdict(composite, z, tol);
      for (size_t k = 0; k < rhs.size(); ++k) {
        const bool lhs = flag_of(v.flags, kAllSpectrumKinds[k]);
        const bool r = rhs[k].contains(z, tol);
        if (lhs != r) {
          Counterexample ce;
          ce.point = z;
          ce.lhs_flags = flags_to_json(v.flags);
          ce.rhs_flags[kind_name(kAllSpectrumKinds[k])] = r;
          ce.traces = verdict_to_json(v, z)["traces"];
          std::lock_guard<std::mutex> lock(mu);
          fails.emplace_back(i, std::move(ce));
        }
      }
    });
    if (!fails.empty()) {
      std::sort(fails.begin(), fails.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (size_t i = 0; i < std::min<size_t>(fails.size(), 3); ++i)
        res.counterexamples.push_back(std::move(fails[i].second));
      res.pass = false;
    }
  } catch (const std::exception& e) {
    res.pass = false;
    res.counterexamples.push_back(error_counterexample(e.what()));
  }
  return res;
}

InstanceResult inclusion_chain_instance_fd(const GeneratedTuple& t) {
  InstanceResult res;
  res.desc = t.desc + " [inclusion-chains]";
  try {
    const auto spec = full_spectrum(t.tuple, kExact);
    auto subset = [&](SpectrumKind a, SpectrumKind b) {
      const PtsX sa = sorted_unique(spec.of(a));
      const PtsX sb = sorted_unique(spec.of(b));
      for (const auto& p : sa)
        if (!contains_point(sb, p)) {
          Counterexample ce;
          ce.point = to_cd_point(p);
          ce.lhs_flags[kind_name(a)] = true;
          ce.rhs_flags[kind_name(b)] = false;
          res.counterexamples.push_back(std::move(ce));
          res.pass = false;
        }
    };
    subset(SpectrumKind::FredholmLower, SpectrumKind::BrowderLower);
    subset(SpectrumKind::BrowderLower, SpectrumKind::Defect);
    subset(SpectrumKind::FredholmUpper, SpectrumKind::BrowderUpper);
    subset(SpectrumKind::BrowderUpper, SpectrumKind::ApproxPoint);
    subset(SpectrumKind::SplitDefectEssential, SpectrumKind::SplitBrowderLower);
    subset(SpectrumKind::SplitBrowderLower, SpectrumKind::SplitDefect);
    subset(SpectrumKind::SplitApproxEssential, SpectrumKind::SplitBrowderUpper);
    subset(SpectrumKind::SplitBrowderUpper, SpectrumKind::SplitApproxPoint);
  } catch (const std::exception& e) {
    res.pass = false;
    res.counterexamples.push_back(error_counterexample(e.what()));
  }
  return res;
}

InstanceResult inclusion_chain_instance_structured(const StructuredTuple& t, int grid_steps,
                                                   double tol) {
  InstanceResult res;
  res.desc = "structured(" + std::to_string(t.parts.size()) + " parts) [inclusion-chains]";
  try {
    validate(t);
    double radius = 1.0;
    for (const auto& p : t.parts) radius = std::max(radius, part_radius(p));
    GridSpec grid = default_grid(radius, t.length(), grid_steps);
    const long total = grid.size();
    for (long i = 0; i < total && res.counterexamples.size() < 3; ++i) {
      const PointCd z = grid.point(i);
      const StructuredVerdict v = structured_verdict(t, z, tol);
      const auto& f = v.flags;
      auto implies = [](bool x, bool y) { return !x || y; };
      const bool ok = implies(f.fredholm_lower, f.browder_lower) &&
                      implies(f.browder_lower, f.defect) &&
                      implies(f.fredholm_upper, f.browder_upper) &&
                      implies(f.browder_upper, f.approx_point) &&
                      implies(f.split_defect_essential, f.split_browder_lower) &&
                      implies(f.split_browder_lower, f.split_defect) &&
                      implies(f.split_approx_essential, f.split_browder_upper) &&
                      implies(f.split_browder_upper, f.split_approx_point);
      if (!ok) {
        Counterexample ce;
        ce.point = z;
        ce.lhs_flags = flags_to_json(f);
        res.counterexamples.push_back(std::move(ce));
        res.pass = false;
      }
    }
  } catch (const std::exception& e) {
    res.pass = false;
    res.counterexamples.push_back(error_counterexample(e.what()));
  }
  return res;
}

InstanceResult compactness_instance(const StructuredTuple& t) {
  InstanceResult res;
  res.desc = "structured(" + std::to_string(t.parts.size()) + " parts) [compactness]";
  try {
    validate(t);
    for (SpectrumKind kind : kAllSpectrumKinds) {
      const SpectrumRegion r = structured_region(t, kind);
      const double rad = r.bounding_radius();
      // every primitive is closed by construction; boundedness is the
      // computable half of compactness
      if (!std::isfinite(rad)) {
        Counterexample ce;
        ce.error = std::string("unbounded region for ") + kind_name(kind);
        res.counterexamples.push_back(std::move(ce));
        res.pass = false;
      }
      if (r.arity() != t.length()) {
        Counterexample ce;
        ce.error = std::string("region arity mismatch for ") + kind_name(kind);
        res.counterexamples.push_back(std::move(ce));
        res.pass = false;
      }
    }
  } catch (const std::exception& e) {
    res.pass = false;
    res.counterexamples.push_back(error_counterexample(e.what()));
  }
  return res;
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string> kChecks = {
    "kunneth",   "prop41", "prop42", "thm51-fd",        "thm51-structured",
    "prop61",    "prop62", "thm63",  "projection",      "mapping",
    "inclusion-chains", "compactness"};

std::vector<SpectrumKind> kinds_for(const std::string& check) {
  using K = SpectrumKind;
  if (check == "prop41" || check == "prop61")
    return {K::Defect, K::ApproxPoint, K::SplitDefect, K::SplitApproxPoint};
  if (check == "prop42" || check == "prop62")
    return {K::FredholmLower, K::FredholmUpper, K::SplitDefectEssential,
            K::SplitApproxEssential};
  return {K::BrowderLower, K::BrowderUpper, K::SplitBrowderLower, K::SplitBrowderUpper};
}

StructuredTuple random_structured_tuple(Rng& rng) {
  std::uniform_int_distribution<int> shape(0, 3);
  StructuredTuple t;
  switch (shape(rng)) {
    case 0: t.parts = {random_diagonal_spec(rng, {})}; break;
    case 1: t.parts = {random_shift_spec(rng)}; break;
    case 2: t.parts = {random_diagonal_spec(rng, {}), random_diagonal_spec(rng, {})}; break;
    default: t.parts = {random_shift_spec(rng), random_diagonal_spec(rng, {})}; break;
  }
  return t;
}

}  // namespace

const std::vector<std::string>& known_checks() { return kChecks; }

int default_trials(const std::string& check) {
  if (check == "thm51-structured") return 25;
  if (check == "projection" || check == "mapping") return 100;
  if (check == "inclusion-chains" || check == "compactness") return 50;
  return 200;
}

VerificationReport run_check(const CheckConfig& cfg) {
  if (std::find(kChecks.begin(), kChecks.end(), cfg.check) == kChecks.end())
    throw std::invalid_argument("unknown check: " + cfg.check);
  const int trials = cfg.trials > 0 ? cfg.trials : default_trials(cfg.check);
  const int threads = effective_threads(cfg.threads);
  const auto started = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.check = cfg.check;
  rep.seed = cfg.seed;
  rep.config["trials"] = trials;
  rep.config["grid_steps"] = cfg.grid_steps;
  rep.config["tolerance"] = cfg.tolerance;
  rep.config["mode"] = "exact";
  rep.instances.resize(static_cast<size_t>(trials));

  Rng master(cfg.seed);

  if (cfg.check == "kunneth" || cfg.check == "prop41" || cfg.check == "prop42" ||
      cfg.check == "thm51-fd" || cfg.check == "prop61" || cfg.check == "prop62" ||
      cfg.check == "thm63") {
    TupleGenConfig gen;
    gen.dim_max = 5;
    struct Pair {
      GeneratedTuple s, t;
      std::vector<std::pair<Point<RatComplex>, Point<RatComplex>>> pts;
    };
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<size_t>(trials));
    for (int i = 0; i < trials; ++i) {
      Pair p{random_commuting_tuple(master, gen), random_commuting_tuple(master, gen), {}};
      // one aligned candidate pair, one half-aligned, one generic offset
      const auto off = [&](Point<RatComplex> q) {
        for (auto& z : q) z = z + RatComplex(3, Rational(1, 2));
        return q;
      };
      p.pts.emplace_back(p.s.block_values.front(), p.t.block_values.front());
      p.pts.emplace_back(p.s.block_values.back(), off(p.t.block_values.front()));
      p.pts.emplace_back(off(p.s.block_values.front()), off(p.t.block_values.back()));
      pairs.push_back(std::move(p));
    }
    parallel_for(trials, threads, [&](long i) {
      const auto& p = pairs[static_cast<size_t>(i)];
      InstanceResult r;
      if (cfg.check == "kunneth") {
        r = kunneth_instance(p.s, p.t, p.pts);
      } else if (cfg.check == "prop41" || cfg.check == "prop42" || cfg.check == "thm51-fd") {
        r = tensor_instance(p.s, p.t, tensor_tuple(p.s.tuple, p.t.tuple).tuple,
                            kinds_for(cfg.check));
      } else {
        r = mult_instance(p.s, p.t, mult_tuple(p.s.tuple, p.t.tuple).tuple,
                          kinds_for(cfg.check));
      }
      rep.instances[static_cast<size_t>(i)] = std::move(r);
    });
  } else if (cfg.check == "thm51-structured") {
    struct Pair {
      StructuredPart a, b;
    };
    std::vector<Pair> pairs;
    const int shift_trials = std::max(trials / 5, 1);
    for (int i = 0; i < trials; ++i) {
      if (i < trials - shift_trials) {
        pairs.push_back({random_diagonal_spec(master, {}), random_diagonal_spec(master, {})});
      } else {
        pairs.push_back({random_shift_spec(master), random_diagonal_spec(master, {})});
      }
    }
    // grid sweeps parallelize internally; instances run sequentially
    for (int i = 0; i < trials; ++i) {
      rep.instances[static_cast<size_t>(i)] = structured_grid_instance(
          pairs[static_cast<size_t>(i)].a, pairs[static_cast<size_t>(i)].b, cfg.grid_steps,
          cfg.tolerance, threads);
    }
  } else if (cfg.check == "projection") {
    TupleGenConfig gen;
    gen.n_min = 2;
    gen.n_max = 3;
    std::vector<GeneratedTuple> ts;
    for (int i = 0; i < trials; ++i) ts.push_back(random_commuting_tuple(master, gen));
    parallel_for(trials, threads, [&](long i) {
      rep.instances[static_cast<size_t>(i)] = projection_instance(ts[static_cast<size_t>(i)]);
    });
  } else if (cfg.check == "mapping") {
    TupleGenConfig gen;
    std::vector<std::pair<GeneratedTuple, PolynomialMap<RatComplex>>> ts;
    for (int i = 0; i < trials; ++i) {
      auto t = random_commuting_tuple(master, gen);
      std::uniform_int_distribution<int> comps(1, 2);
      auto p = random_polynomial_map(master, static_cast<int>(t.tuple.length()), comps(master), 3);
      ts.emplace_back(std::move(t), std::move(p));
    }
    parallel_for(trials, threads, [&](long i) {
      rep.instances[static_cast<size_t>(i)] =
          mapping_instance(ts[static_cast<size_t>(i)].first, ts[static_cast<size_t>(i)].second);
    });
  } else if (cfg.check == "inclusion-chains") {
    TupleGenConfig gen;
    std::vector<GeneratedTuple> ts;
    std::vector<StructuredTuple> ss;
    for (int i = 0; i < trials; ++i) {
      ts.push_back(random_commuting_tuple(master, gen));
      ss.push_back(random_structured_tuple(master));
    }
    parallel_for(trials, threads, [&](long i) {
      auto fd = inclusion_chain_instance_fd(ts[static_cast<size_t>(i)]);
      auto st = inclusion_chain_instance_structured(ss[static_cast<size_t>(i)],
                                                    std::min(cfg.grid_steps, 21),
                                                    cfg.tolerance);
      InstanceResult merged;
      merged.desc = fd.desc + " + " + st.desc;
      merged.pass = fd.pass && st.pass;
      merged.counterexamples = std::move(fd.counterexamples);
      for (auto& ce : st.counterexamples) merged.counterexamples.push_back(std::move(ce));
      rep.instances[static_cast<size_t>(i)] = std::move(merged);
    });
  } else if (cfg.check == "compactness") {
    std::vector<StructuredTuple> ss;
    for (int i = 0; i < trials; ++i) ss.push_back(random_structured_tuple(master));
    parallel_for(trials, threads, [&](long i) {
      rep.instances[static_cast<size_t>(i)] = compactness_instance(ss[static_cast<size_t>(i)]);
    });
  }

  rep.pass = std::all_of(rep.instances.begin(), rep.instances.end(),
                         [](const InstanceResult& r) { return r.pass; });
  rep.timing_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - started)
                                        .count());
  return rep;
}

Json VerificationReport::to_json() const {
  Json j;
  j["check"] = check;
  j["seed"] = seed;
  j["instances"] = Json::array();
  for (const auto& ins : instances) {
    Json ji;
    ji["desc"] = ins.desc;
    ji["pass"] = ins.pass;
    ji["counterexamples"] = Json::array();
    for (const auto& ce : ins.counterexamples) {
      Json jc;
      jc["point"] = point_to_json(ce.point);
      jc["lhs_flags"] = ce.lhs_flags;
      jc["rhs_flags"] = ce.rhs_flags;
      jc["traces"] = ce.traces;
      if (!ce.error.empty()) jc["error"] = ce.error;
      ji["counterexamples"].push_back(std::move(jc));
    }
    j["instances"].push_back(std::move(ji));
  }
  j["config"] = config;
  j["pass"] = pass;
  j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace jspec
