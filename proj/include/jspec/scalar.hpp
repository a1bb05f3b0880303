#pragma once

// Scalar types for the two arithmetic modes: exact Gaussian rationals
// (rational real and imaginary parts, never rounded) and complex doubles.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ArithmeticMode { Exact, Float };

/// A complex number with exact rational real and imaginary parts.
/// Arithmetic is closed: no operation ever rounds.
struct RatComplex {
  Rational re_{0};
  Rational im_{0};

  RatComplex() = default;
  RatComplex(int v) : re_(v) {}                       // NOLINT(google-explicit-constructor)
  RatComplex(long v) : re_(v) {}                      // NOLINT(google-explicit-constructor)
  RatComplex(const Rational& re) : re_(re) {}         // NOLINT(google-explicit-constructor)
  RatComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }

  RatComplex conj() const { return {re_, -im_}; }

  friend RatComplex operator+(const RatComplex& a, const RatComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend RatComplex operator-(const RatComplex& a, const RatComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend RatComplex operator-(const RatComplex& a) { return {-a.re_, -a.im_}; }
  friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend RatComplex operator/(const RatComplex& a, const RatComplex& b) {
    Rational n = b.re_ * b.re_ + b.im_ * b.im_;
    if (n == 0) throw std::domain_error("RatComplex: division by zero");
    RatComplex p = a * b.conj();
    return {p.re_ / n, p.im_ / n};
  }
  RatComplex& operator+=(const RatComplex& b) { return *this = *this + b; }
  RatComplex& operator-=(const RatComplex& b) { return *this = *this - b; }
  RatComplex& operator*=(const RatComplex& b) { return *this = *this * b; }
  RatComplex& operator/=(const RatComplex& b) { return *this = *this / b; }
  friend bool operator==(const RatComplex& a, const RatComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const RatComplex& a, const RatComplex& b) { return !(a == b); }
};

// free-function forms found by ADL (Eigen's generic complex paths use these)
inline const Rational& real(const RatComplex& z) { return z.re_; }
inline const Rational& imag(const RatComplex& z) { return z.im_; }
inline RatComplex conj(const RatComplex& z) { return z.conj(); }
inline Rational abs2(const RatComplex& z) { return z.re_ * z.re_ + z.im_ * z.im_; }

inline std::complex<double> to_cd(const RatComplex& z) {
  return {z.re_.convert_to<double>(), z.im_.convert_to<double>()};
}
inline std::complex<double> to_cd(const std::complex<double>& z) { return z; }

/// Exact rational from a double; every finite double is dyadic, so this
/// never loses information.
Rational rational_from_double(double x);

inline RatComplex ratc_from_cd(const std::complex<double>& z) {
  return {rational_from_double(z.real()), rational_from_double(z.imag())};
}

/// Nearest "simple" rational within tol of x (continued fractions).
/// Used to snap float deflation output back into exact arithmetic.
Rational snap_to_rational(double x, double tol = 1e-6, std::int64_t max_den = 1 << 20);

std::string to_string(const Rational& r);
std::string to_string(const RatComplex& z);

// ---------------------------------------------------------------------------

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<RatComplex> {
  static constexpr ArithmeticMode mode = ArithmeticMode::Exact;
  static RatComplex conj(const RatComplex& z) { return z.conj(); }
  static bool is_zero(const RatComplex& z) { return z.is_zero(); }
  static RatComplex from_cd(const std::complex<double>& z) { return ratc_from_cd(z); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static constexpr ArithmeticMode mode = ArithmeticMode::Float;
  static std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
  static bool is_zero(const std::complex<double>& z) { return z == std::complex<double>{}; }
  static std::complex<double> from_cd(const std::complex<double>& z) { return z; }
};

inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << (-exp));
  }
  return r;
}

inline Rational snap_to_rational(double x, double tol, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("snap_to_rational: non-finite value");
  // continued fraction expansion with convergent tracking
  double v = x;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) break;
    auto a = static_cast<std::int64_t>(fl);
    std::int64_t p2 = a * p1 + p0;
    std::int64_t q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - x) <= tol) return Rational(p1, q1);
    double frac = v - fl;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  // fall back to the exact dyadic value
  return rational_from_double(x);
}

inline std::string to_string(const Rational& r) {
  return r.str();
}

inline std::string to_string(const RatComplex& z) {
  if (z.im_ == 0) return to_string(z.re_);
  return to_string(z.re_) + (z.im_ > 0 ? "+" : "") + to_string(z.im_) + "i";
}

}  // namespace jspec

namespace Eigen {

template <>
struct NumTraits<jspec::RatComplex> : GenericNumTraits<jspec::RatComplex> {
  using Real = jspec::Rational;
  using NonInteger = jspec::RatComplex;
  using Nested = jspec::RatComplex;
  using Literal = int;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 200,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
