#include "jspec/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jspec {

SpectrumRegion SpectrumRegion::points(int n, std::vector<PointCd> pts) {
  if (n < 1) throw std::invalid_argument("SpectrumRegion: arity must be >= 1");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("SpectrumRegion: point arity mismatch");
  return SpectrumRegion(FinitePoints{n, std::move(pts)});
}

SpectrumRegion SpectrumRegion::point(const PointCd& p) {
  return points(static_cast<int>(p.size()), {p});
}

SpectrumRegion SpectrumRegion::circle(Complexd center, double radius) {
  if (radius < 0) throw std::invalid_argument("SpectrumRegion: negative radius");
  return SpectrumRegion(Circle{center, radius});
}

SpectrumRegion SpectrumRegion::disk(Complexd center, double radius) {
  if (radius < 0) throw std::invalid_argument("SpectrumRegion: negative radius");
  return SpectrumRegion(Disk{center, radius});
}

SpectrumRegion SpectrumRegion::product(std::vector<SpectrumRegion> factors) {
  if (factors.empty()) throw std::invalid_argument("SpectrumRegion: empty product");
  if (factors.size() == 1) return factors.front();
  return SpectrumRegion(Product{std::move(factors)});
}

SpectrumRegion SpectrumRegion::unite(std::vector<SpectrumRegion> members) {
  if (members.empty()) throw std::invalid_argument("SpectrumRegion: empty union");
  const int n = members.front().arity();
  for (const auto& m : members)
    if (m.arity() != n) throw std::invalid_argument("SpectrumRegion: union arity mismatch");
  if (members.size() == 1) return members.front();
  return SpectrumRegion(Union{std::move(members)});
}

int SpectrumRegion::arity() const {
  return visit([](const auto& node) -> int {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, FinitePoints>) {
      return node.n;
    } else if constexpr (std::is_same_v<T, Circle> || std::is_same_v<T, Disk>) {
      return 1;
    } else if constexpr (std::is_same_v<T, Product>) {
      int n = 0;
      for (const auto& f : node.factors) n += f.arity();
      return n;
    } else {
      return node.members.front().arity();
    }
  });
}

bool SpectrumRegion::is_empty() const {
  return visit([](const auto& node) -> bool {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, FinitePoints>) {
      return node.points.empty();
    } else if constexpr (std::is_same_v<T, Circle> || std::is_same_v<T, Disk>) {
      return false;
    } else if constexpr (std::is_same_v<T, Product>) {
      return std::any_of(node.factors.begin(), node.factors.end(),
                         [](const SpectrumRegion& f) { return f.is_empty(); });
    } else {
      return std::all_of(node.members.begin(), node.members.end(),
                         [](const SpectrumRegion& m) { return m.is_empty(); });
    }
  });
}

bool SpectrumRegion::contains(const PointCd& p, double tol) const {
  if (static_cast<int>(p.size()) != arity())
    throw std::invalid_argument("SpectrumRegion::contains: point arity mismatch");
  return visit([&](const auto& node) -> bool {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, FinitePoints>) {
      for (const auto& q : node.points) {
        bool close = true;
        for (size_t i = 0; i < p.size() && close; ++i)
          close = std::abs(p[i] - q[i]) <= tol;
        if (close) return true;
      }
      return false;
    } else if constexpr (std::is_same_v<T, Circle>) {
      return std::abs(std::abs(p[0] - node.center) - node.radius) <= tol;
    } else if constexpr (std::is_same_v<T, Disk>) {
      return std::abs(p[0] - node.center) <= node.radius + tol;
    } else if constexpr (std::is_same_v<T, Product>) {
      size_t at = 0;
      for (const auto& f : node.factors) {
        const auto k = static_cast<size_t>(f.arity());
        PointCd slice(p.begin() + static_cast<long>(at), p.begin() + static_cast<long>(at + k));
        if (!f.contains(slice, tol)) return false;
        at += k;
      }
      return true;
    } else {
      return std::any_of(node.members.begin(), node.members.end(),
                         [&](const SpectrumRegion& m) { return m.contains(p, tol); });
    }
  });
}

SpectrumRegion SpectrumRegion::project_first(int k) const {
  const int n = arity();
  if (k < 1 || k > n)
    throw std::invalid_argument("SpectrumRegion::project_first: bad coordinate count");
  if (k == n) return *this;
  return visit([&](const auto& node) -> SpectrumRegion {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, FinitePoints>) {
      std::vector<PointCd> pts;
      pts.reserve(node.points.size());
      for (const auto& q : node.points) pts.emplace_back(q.begin(), q.begin() + k);
      return SpectrumRegion::points(k, std::move(pts));
    } else if constexpr (std::is_same_v<T, Circle> || std::is_same_v<T, Disk>) {
      throw std::logic_error("unreachable: arity-1 projection handled above");
    } else if constexpr (std::is_same_v<T, Product>) {
      // keep whole factors while they fit, split the one the cut lands in,
      // and reduce the remainder to an emptiness test
      std::vector<SpectrumRegion> kept;
      int remaining = k;
      size_t i = 0;
      for (; i < node.factors.size() && remaining > 0; ++i) {
        const SpectrumRegion& f = node.factors[i];
        if (f.arity() <= remaining) {
          kept.push_back(f);
          remaining -= f.arity();
        } else {
          kept.push_back(f.project_first(remaining));
          remaining = 0;
        }
      }
      bool rest_empty = false;
      for (; i < node.factors.size(); ++i) rest_empty = rest_empty || node.factors[i].is_empty();
      if (rest_empty) return SpectrumRegion::empty(k);
      return SpectrumRegion::product(std::move(kept));
    } else {
      std::vector<SpectrumRegion> members;
      members.reserve(node.members.size());
      for (const auto& m : node.members) members.push_back(m.project_first(k));
      return SpectrumRegion::unite(std::move(members));
    }
  });
}

double SpectrumRegion::bounding_radius() const {
  return visit([](const auto& node) -> double {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, FinitePoints>) {
      double r = 0;
      for (const auto& q : node.points)
        for (const auto& z : q) r = std::max(r, std::abs(z));
      return r;
    } else if constexpr (std::is_same_v<T, Circle> || std::is_same_v<T, Disk>) {
      return std::abs(node.center) + node.radius;
    } else if constexpr (std::is_same_v<T, Product>) {
      double r = 0;
      for (const auto& f : node.factors) r = std::max(r, f.bounding_radius());
      return r;
    } else {
      double r = 0;
      for (const auto& m : node.members) r = std::max(r, m.bounding_radius());
      return r;
    }
  });
}

}  // namespace jspec
