// jspec: joint spectra of commuting operator tuples.
//
//   jspec verify   --check kunneth --trials 200 --seed 7 --out report.json
//   jspec region   --input shift.json --kind browder-lower --grid "-1.5:1.5:61" --format csv
//   jspec classify --input tuple.json --point "0.5,0;2,0"
//   jspec koszul   --input tuple.json --point "0,0"
//
// Exit codes: 0 all passed, 1 a check failed, 2 invalid input.

#include "jspec/io.hpp"
#include "jspec/koszul.hpp"
#include "jspec/spectra_fd.hpp"
#include "jspec/spectra_structured.hpp"
#include "jspec/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace jspec;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content << "\n";
  else
    write_file(out_path, content);
}

int cmd_verify(const std::string& check, int trials, std::uint64_t seed, int grid_steps,
               double tolerance, const std::string& out) {
  bool all_pass = true;
  Json reports = Json::array();
  std::vector<std::string> selected;
  if (check == "all")
    selected = known_checks();
  else
    selected.push_back(check);
  for (const auto& name : selected) {
    CheckConfig cfg;
    cfg.check = name;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.grid_steps = grid_steps;
    cfg.tolerance = tolerance;
    VerificationReport rep = run_check(cfg);
    all_pass = all_pass && rep.pass;
    int failed = 0;
    for (const auto& ins : rep.instances) failed += ins.pass ? 0 : 1;
    std::cerr << name << ": " << (rep.pass ? "pass" : "FAIL") << " ("
              << rep.instances.size() - failed << "/" << rep.instances.size()
              << " instances, " << rep.timing_ms << " ms)\n";
    reports.push_back(rep.to_json());
  }
  emit(out, (reports.size() == 1 ? reports[0] : reports).dump(2));
  return all_pass ? 0 : 1;
}

SpectrumRegion region_of_input(const TupleInput& in, SpectrumKind kind,
                               const RankConfig& rank_cfg) {
  if (in.space == TupleInput::Space::L2) return structured_region(in.structured, kind);
  // finite tuple: the spectra are finite point sets
  FiniteSpectrum<RatComplex> spec;
  std::vector<PointCd> pts;
  if (rank_cfg.mode == ArithmeticMode::Exact) {
    spec = full_spectrum(exact_tuple_of(in), RankConfig::exact());
    for (const auto& p : spec.of(kind)) pts.push_back(to_cd_point(p));
  } else {
    auto fspec = full_spectrum(float_tuple_of(in), rank_cfg);
    for (const auto& p : fspec.of(kind)) pts.push_back(p);
  }
  const int n = static_cast<int>(in.dense.size());
  return SpectrumRegion::points(n, std::move(pts));
}

int cmd_region(const std::string& input, const std::string& kind_name_s,
               const std::string& grid_text, const std::string& format,
               const std::string& out, double tolerance, bool use_float, double rank_tol) {
  const TupleInput in = load_tuple_file(input);
  const SpectrumKind kind = kind_from_name(kind_name_s);
  const RankConfig rank_cfg =
      use_float ? RankConfig::flt(rank_tol) : RankConfig::exact();
  const SpectrumRegion region = region_of_input(in, kind, rank_cfg);
  if (format == "json") {
    Json j;
    j["kind"] = kind_name(kind);
    j["region"] = region_to_json(region);
    emit(out, j.dump(2));
  } else if (format == "csv") {
    GridSpec grid = grid_text.empty()
                        ? default_grid(region.bounding_radius(), region.arity())
                        : parse_grid(grid_text, region.arity());
    emit(out, grid_csv(region, grid, tolerance));
  } else {
    throw std::invalid_argument("format must be json or csv");
  }
  return 0;
}

int cmd_classify(const std::string& input, const std::string& point_text,
                 const std::string& out, double tolerance, bool use_float, double rank_tol) {
  const TupleInput in = load_tuple_file(input);
  const PointCd z = parse_point(point_text);
  Json j;
  if (in.space == TupleInput::Space::L2) {
    const StructuredVerdict v = structured_verdict(in.structured, z, tolerance);
    j = verdict_to_json(v, z);
  } else if (use_float) {
    auto t = float_tuple_of(in);
    if (static_cast<Index>(z.size()) != t.length())
      throw std::invalid_argument("point length does not match tuple length");
    j = classification_to_json(classify_point(t, z, RankConfig::flt(rank_tol)));
  } else {
    auto t = exact_tuple_of(in);
    Point<RatComplex> lambda;
    for (const auto& c : z) lambda.push_back(ratc_from_cd(c));
    if (static_cast<Index>(lambda.size()) != t.length())
      throw std::invalid_argument("point length does not match tuple length");
    j = classification_to_json(classify_point(t, lambda, RankConfig::exact()));
  }
  emit(out, j.dump(2));
  return 0;
}

int cmd_koszul(const std::string& input, const std::string& point_text,
               const std::string& out, bool use_float, double rank_tol) {
  const TupleInput in = load_tuple_file(input);
  if (in.space != TupleInput::Space::Finite)
    throw std::invalid_argument("koszul needs a finite-dimensional tuple");
  const PointCd z = parse_point(point_text);
  Json j;
  j["point"] = point_to_json(z);
  auto fill = [&j](const auto& complex, const RankConfig& cfg) {
    j["degree_dims"] = complex.dims;
    Json ranks = Json::array();
    for (int p = 1; p <= static_cast<int>(complex.boundaries.size()); ++p)
      ranks.push_back(rank(complex.d(p), cfg));
    j["boundary_ranks"] = std::move(ranks);
    j["homology_dims"] = homology_dims(complex, cfg).dims;
  };
  if (use_float) {
    auto t = float_tuple_of(in);
    if (static_cast<Index>(z.size()) != t.length())
      throw std::invalid_argument("point length does not match tuple length");
    fill(build_koszul(t, z), RankConfig::flt(rank_tol));
  } else {
    auto t = exact_tuple_of(in);
    Point<RatComplex> lambda;
    for (const auto& c : z) lambda.push_back(ratc_from_cd(c));
    if (static_cast<Index>(lambda.size()) != t.length())
      throw std::invalid_argument("point length does not match tuple length");
    fill(build_koszul(t, lambda), RankConfig::exact());
  }
  emit(out, j.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"joint spectra of commuting operator tuples"};
  app.require_subcommand(1);

  std::string check = "all", input, point_text, grid_text, format = "json", out;
  std::string kind_text = "defect";
  int trials = -1;
  std::uint64_t seed = 1;
  int grid_steps = 41;
  double tolerance = kRegionBoundaryTol;
  double rank_tol = 1e-10;
  bool use_float = false;
  bool use_exact = false;

  auto* verify = app.add_subcommand("verify", "run named theorem checks");
  verify->add_option("--check", check, "check name or 'all'");
  verify->add_option("--trials", trials, "instances per check (-1: per-check default)");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--grid", grid_steps, "grid steps per axis for structured checks");
  verify->add_option("--tolerance", tolerance, "boundary tolerance");
  verify->add_option("--out", out, "write the report JSON here");

  auto* region = app.add_subcommand("region", "emit a spectrum region");
  region->add_option("--input", input, "operator JSON file")->required();
  region->add_option("--kind", kind_text, "spectrum kind");
  region->add_option("--grid", grid_text, "grid axes re_min:re_max:steps[,...] (csv format)");
  region->add_option("--format", format, "json or csv");
  region->add_option("--tolerance", tolerance, "membership tolerance");
  region->add_option("--out", out, "output file");
  region->add_flag("--float", use_float, "use floating arithmetic");
  region->add_flag("--exact", use_exact, "use exact arithmetic (default)");
  region->add_option("--rank-tolerance", rank_tol, "float-mode rank tolerance");

  auto* classify = app.add_subcommand("classify", "classify one point");
  classify->add_option("--input", input, "operator JSON file")->required();
  classify->add_option("--point", point_text, "point re,im;re,im;...")->required();
  classify->add_option("--tolerance", tolerance, "membership tolerance");
  classify->add_option("--out", out, "output file");
  classify->add_flag("--float", use_float, "use floating arithmetic");
  classify->add_flag("--exact", use_exact, "use exact arithmetic (default)");
  classify->add_option("--rank-tolerance", rank_tol, "float-mode rank tolerance");

  auto* koszul = app.add_subcommand("koszul", "Koszul complex data at a point");
  koszul->add_option("--input", input, "operator JSON file")->required();
  koszul->add_option("--point", point_text, "point re,im;re,im;...")->required();
  koszul->add_option("--out", out, "output file");
  koszul->add_flag("--float", use_float, "use floating arithmetic");
  koszul->add_flag("--exact", use_exact, "use exact arithmetic (default)");
  koszul->add_option("--rank-tolerance", rank_tol, "float-mode rank tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (use_float && use_exact)
      throw std::invalid_argument("--exact and --float are mutually exclusive");
    if (verify->parsed())
      return cmd_verify(check, trials, seed, grid_steps, tolerance, out);
    if (region->parsed())
      return cmd_region(input, kind_text, grid_text, format, out, tolerance, use_float,
                        rank_tol);
    if (classify->parsed())
      return cmd_classify(input, point_text, out, tolerance, use_float, rank_tol);
    if (koszul->parsed())
      return cmd_koszul(input, point_text, out, use_float, rank_tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
