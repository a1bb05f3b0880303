#pragma once

// Random-instance theorem checks (exact, finite-dimensional), grid-based
// formula checks (structured l2 models), property suites and machine
// readable reports. Seeds fully determine every generated instance.

#include "jspec/generators.hpp"
#include "jspec/io.hpp"
#include "jspec/spectra_structured.hpp"
#include "jspec/tensor_mult.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jspec {

struct CheckConfig {
  std::string check;
  std::uint64_t seed = 1;
  int trials = -1;  // -1: per-check default
  int grid_steps = 41;
  double tolerance = kRegionBoundaryTol;
  int threads = 0;  // 0: JSPEC_THREADS env or hardware concurrency
};

struct Counterexample {
  PointCd point;
  Json lhs_flags = Json::object();
  Json rhs_flags = Json::object();
  Json traces = Json::object();
  std::string error;  // set when the instance failed outside a point test
};

struct InstanceResult {
  std::string desc;
  bool pass = true;
  std::vector<Counterexample> counterexamples;
};

struct VerificationReport {
  std::string check;
  std::uint64_t seed = 0;
  std::vector<InstanceResult> instances;
  Json config = Json::object();
  bool pass = true;
  long timing_ms = 0;

  Json to_json() const;
};

const std::vector<std::string>& known_checks();
int default_trials(const std::string& check);

VerificationReport run_check(const CheckConfig& cfg);

/// Thread count respecting the JSPEC_THREADS cap.
int effective_threads(int requested);

/// Evaluate fn(0..n-1), possibly in parallel; any exception is rethrown.
void parallel_for(long n, int threads, const std::function<void(long)>& fn);

// ---------------------------------------------------------------------------
// instance-level checks (exposed for tests, including mutation tests)

/// Kunneth/total-complex consistency of the Kronecker tuple at a test point.
InstanceResult kunneth_instance(const GeneratedTuple& s, const GeneratedTuple& t,
                                const std::vector<std::pair<Point<RatComplex>, Point<RatComplex>>>& pts);

/// Compare the derived tuple's spectra against the tensor-formula sets for
/// the given kinds. `derived` is normally tensor_tuple(s, t).tuple; passing
/// a perturbed copy is how mutation tests turn the check red.
InstanceResult tensor_instance(const GeneratedTuple& s, const GeneratedTuple& t,
                               const FiniteTuple<RatComplex>& derived,
                               const std::vector<SpectrumKind>& kinds);

/// Same for the multiplication tuple (L_S, R_T) and the section-6 formulas.
InstanceResult mult_instance(const GeneratedTuple& s, const GeneratedTuple& t,
                             const FiniteTuple<RatComplex>& derived,
                             const std::vector<SpectrumKind>& kinds);

InstanceResult projection_instance(const GeneratedTuple& t);

InstanceResult mapping_instance(const GeneratedTuple& t, const PolynomialMap<RatComplex>& p);

/// Grid equality of composite verdicts vs the tensor formula regions for a
/// structured pair (diagonal x diagonal, or shift x scalar diagonal).
InstanceResult structured_grid_instance(const StructuredPart& a, const StructuredPart& b,
                                        int grid_steps, double tol, int threads);

InstanceResult inclusion_chain_instance_fd(const GeneratedTuple& t);
InstanceResult inclusion_chain_instance_structured(const StructuredTuple& t, int grid_steps,
                                                   double tol);
InstanceResult compactness_instance(const StructuredTuple& t);

/// Exact product set {(a, b) : a in A, b in B} (concatenated coordinates).
std::vector<Point<RatComplex>> product_points(const std::vector<Point<RatComplex>>& a,
                                              const std::vector<Point<RatComplex>>& b);

std::vector<Point<RatComplex>> tensor_formula_set(const FiniteSpectrum<RatComplex>& s,
                                                  const FiniteSpectrum<RatComplex>& t,
                                                  SpectrumKind kind);
std::vector<Point<RatComplex>> mult_formula_set(const FiniteSpectrum<RatComplex>& s,
                                                const FiniteSpectrum<RatComplex>& t,
                                                SpectrumKind kind);

}  // namespace jspec
