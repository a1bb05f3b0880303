#include "jspec/structured.hpp"

#include <cmath>
#include <stdexcept>

namespace jspec {

int StructuredTuple::length() const {
  int n = 0;
  for (const auto& p : parts) {
    if (std::holds_alternative<DiagonalTupleSpec>(p))
      n += std::get<DiagonalTupleSpec>(p).n;
    else
      n += 1;
  }
  return n;
}

int StructuredTuple::shift_count() const {
  int c = 0;
  for (const auto& p : parts)
    if (std::holds_alternative<ShiftSpec>(p)) ++c;
  return c;
}

void validate(const DiagonalTupleSpec& d) {
  if (d.n < 1) throw std::invalid_argument("DiagonalTupleSpec: n must be >= 1");
  auto check_point = [&](const PointCd& p) {
    if (static_cast<int>(p.size()) != d.n)
      throw std::invalid_argument("DiagonalTupleSpec: point arity mismatch");
    for (const auto& z : p)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("DiagonalTupleSpec: non-finite coordinate");
  };
  for (size_t i = 0; i < d.atoms.size(); ++i) {
    check_point(d.atoms[i].point);
    if (d.atoms[i].mult != kInfiniteMult && d.atoms[i].mult < 1)
      throw std::invalid_argument("DiagonalTupleSpec: multiplicity must be positive or infinite");
    for (size_t j = i + 1; j < d.atoms.size(); ++j)
      if (d.atoms[i].point == d.atoms[j].point)
        throw std::invalid_argument("DiagonalTupleSpec: duplicate atom point");
  }
  for (size_t i = 0; i < d.accumulations.size(); ++i) {
    check_point(d.accumulations[i]);
    for (size_t j = i + 1; j < d.accumulations.size(); ++j)
      if (d.accumulations[i] == d.accumulations[j])
        throw std::invalid_argument("DiagonalTupleSpec: duplicate accumulation point");
  }
}

void validate(const ShiftSpec& s) {
  if (!(s.tail > 0.0) || !std::isfinite(s.tail))
    throw std::invalid_argument("ShiftSpec: tail weight must be positive");
  for (const auto& w : s.prefix)
    if (w == Complexd{} || !std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw std::invalid_argument("ShiftSpec: prefix weights must be nonzero and finite");
}

void validate(const StructuredTuple& t) {
  if (t.parts.empty()) throw std::invalid_argument("StructuredTuple: no parts");
  for (const auto& p : t.parts)
    std::visit([](const auto& spec) { validate(spec); }, p);
  if (t.shift_count() > 1)
    throw std::invalid_argument("StructuredTuple: at most one shift part is supported");
}

DiagonalTupleSpec adjoint_structured(const DiagonalTupleSpec& d) {
  DiagonalTupleSpec out = d;
  for (auto& a : out.atoms)
    for (auto& z : a.point) z = std::conj(z);
  for (auto& p : out.accumulations)
    for (auto& z : p) z = std::conj(z);
  return out;
}

ShiftSpec adjoint_structured(const ShiftSpec& s) {
  ShiftSpec out = s;
  out.direction = s.direction == ShiftSpec::Direction::Forward
                      ? ShiftSpec::Direction::Backward
                      : ShiftSpec::Direction::Forward;
  for (auto& w : out.prefix) w = std::conj(w);
  return out;
}

}  // namespace jspec
