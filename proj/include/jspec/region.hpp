#pragma once

// Closed bounded subsets of C^n as a finite primitive algebra: finite point
// sets, circles and closed disks in one coordinate, cartesian products and
// unions. Membership is decidable for every primitive and the algebra is
// closed under union, product and projection.

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace jspec {

using Complexd = std::complex<double>;
using PointCd = std::vector<Complexd>;

inline constexpr double kRegionBoundaryTol = 1e-9;

class SpectrumRegion {
 public:
  struct FinitePoints {
    int n = 1;
    std::vector<PointCd> points;
  };
  struct Circle {
    Complexd center;
    double radius = 0.0;
  };
  struct Disk {
    Complexd center;
    double radius = 0.0;
  };
  struct Product {
    std::vector<SpectrumRegion> factors;
  };
  struct Union {
    std::vector<SpectrumRegion> members;
  };

  SpectrumRegion() : node_(FinitePoints{1, {}}) {}

  static SpectrumRegion points(int n, std::vector<PointCd> pts);
  static SpectrumRegion point(const PointCd& p);
  static SpectrumRegion empty(int n) { return points(n, {}); }
  static SpectrumRegion circle(Complexd center, double radius);
  static SpectrumRegion disk(Complexd center, double radius);
  static SpectrumRegion product(std::vector<SpectrumRegion> factors);
  static SpectrumRegion unite(std::vector<SpectrumRegion> members);

  int arity() const;
  bool is_empty() const;
  bool contains(const PointCd& p, double tol = kRegionBoundaryTol) const;

  /// Projection onto the first k coordinates (empty factors beyond k
  /// annihilate the result, matching set semantics).
  SpectrumRegion project_first(int k) const;

  /// A radius R with the region inside the closed polydisk of radius R
  /// around 0 (witness that every region is bounded).
  double bounding_radius() const;

  template <typename Visitor>
  auto visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), node_);
  }

 private:
  using Node = std::variant<FinitePoints, Circle, Disk, Product, Union>;
  explicit SpectrumRegion(Node n) : node_(std::move(n)) {}
  Node node_;
};

}  // namespace jspec
