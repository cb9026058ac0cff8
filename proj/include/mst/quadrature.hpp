#pragma once

// Double-exponential (tanh-sinh) quadrature on finite intervals and Cauchy
// principal-value integrals through interior simple poles.
//
// Every integrand receives its abscissa together with the exact distances to
// both ends of the interval. Integrands such as (1-t)^(-b) stay accurate for
// nodes that round to the endpoint in double precision.

#include <cmath>
#include <complex>
#include <concepts>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <string>
#include <type_traits>
#include <utility>

#include "mst/error.hpp"

namespace mst {

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_refinement_level = 14;

  void validate() const;
};

template <class T>
struct BasicResult {
  T value{};
  double err_estimate = 0.0;
  bool converged = true;

  BasicResult& operator+=(const BasicResult& other) {
    value += other.value;
    err_estimate += other.err_estimate;
    converged = converged && other.converged;
    return *this;
  }
};

/// Value of a (principal-value) integral with an error estimate.
using PVResult = BasicResult<double>;
using ComplexPVResult = BasicResult<std::complex<double>>;

template <class T>
BasicResult<T> operator+(BasicResult<T> a, const BasicResult<T>& b) {
  a += b;
  return a;
}

template <class T>
BasicResult<T> scaled(BasicResult<T> r, double factor) {
  r.value *= factor;
  r.err_estimate *= std::abs(factor);
  return r;
}

/// A point of [a, b] carried with its exact distances to a and b.
struct Abscissa {
  double x;
  double from_left;
  double from_right;
};

/// Real integrand on (0,1) with declared endpoint-singularity exponents:
/// t^a (1-t)^b f(t) is bounded near the ends, with 0 <= a, b < 1.
///
/// The kernel takes (t, 1-t); the second argument is exact even where t
/// rounds to 1. Plain one-argument callables are accepted too.
class FuncSpec {
 public:
  using Kernel = std::function<double(double, double)>;

  FuncSpec();

  template <class F>
    requires std::invocable<const F&, double, double>
  FuncSpec(F f, double sing_left = 0.0, double sing_right = 0.0, std::string label = {})
      : kernel_(std::move(f)), sing_left_(sing_left), sing_right_(sing_right), label_(std::move(label)) {
    validate();
  }

  template <class F>
    requires(std::invocable<const F&, double> && !std::invocable<const F&, double, double>)
  FuncSpec(F f, double sing_left = 0.0, double sing_right = 0.0, std::string label = {})
      : FuncSpec(Kernel([g = std::move(f)](double t, double) { return g(t); }), sing_left, sing_right,
                 std::move(label)) {}

  static FuncSpec zero();
  static FuncSpec constant(double c);
  static FuncSpec monomial(int k);

  double operator()(double t) const { return kernel_(t, 1.0 - t); }
  double operator()(double t, double one_minus_t) const { return kernel_(t, one_minus_t); }

  double sing_left() const noexcept { return sing_left_; }
  double sing_right() const noexcept { return sing_right_; }
  const std::string& label() const noexcept { return label_; }

  /// Optional derivative, required by the derivative identity.
  const FuncSpec* derivative() const noexcept { return derivative_.get(); }
  FuncSpec with_derivative(FuncSpec d) const;

  void validate() const;

 private:
  Kernel kernel_;
  double sing_left_ = 0.0;
  double sing_right_ = 0.0;
  std::string label_;
  std::shared_ptr<const FuncSpec> derivative_;
};

namespace detail {

[[noreturn]] void throw_non_finite(double x);

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const std::complex<double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

/// Level-refined tanh-sinh rule on (0,1). `fn(s, 1-s)` is called with both
/// coordinates exact. The error estimate is the difference between the last
/// two levels.
template <class T, class F>
BasicResult<T> tanh_sinh_unit(F&& fn, const QuadConfig& cfg) {
  constexpr double kUMax = 6.5;
  constexpr int kMinLevel = 3;
  constexpr double kHalfPi = std::numbers::pi / 2.0;

  auto weighted = [&](double u) -> T {
    const double s = kHalfPi * std::sinh(u);
    const double e = std::exp(-2.0 * std::abs(s));
    const double small = e / (1.0 + e);
    if (small < std::numeric_limits<double>::min()) return T{};
    const double large = 1.0 / (1.0 + e);
    const double w = std::numbers::pi * std::cosh(u) * e / ((1.0 + e) * (1.0 + e));
    const T v = u >= 0.0 ? fn(large, small) : fn(small, large);
    if (!is_finite(v)) throw_non_finite(u >= 0.0 ? large : small);
    return w * v;
  };

  double h = 1.0;
  T sum = weighted(0.0);
  for (int j = 1; j * h <= kUMax; ++j) sum += weighted(j * h) + weighted(-j * h);
  T estimate = h * sum;

  BasicResult<T> out{estimate, std::abs(estimate), false};
  for (int level = 1; level <= cfg.max_refinement_level; ++level) {
    h *= 0.5;
    for (int j = 1; j * h <= kUMax; j += 2) sum += weighted(j * h) + weighted(-j * h);
    const T next = h * sum;
    const double err = std::abs(next - estimate);
    estimate = next;
    out.value = next;
    out.err_estimate = err;
    if (level >= kMinLevel && err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(next))) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

}  // namespace detail

/// Integrates fn(Abscissa) over [a, b].
template <class F>
auto integrate_interval(F&& fn, double a, double b, const QuadConfig& cfg) {
  using T = std::decay_t<std::invoke_result_t<F&, const Abscissa&>>;
  if (!(b > a)) return BasicResult<T>{};
  const double width = b - a;
  auto mapped = [&](double s, double sc) -> T {
    const double left = width * s;
    const double right = width * sc;
    if (left < std::numeric_limits<double>::min() || right < std::numeric_limits<double>::min()) return T{};
    const double x = s < 0.5 ? a + left : b - right;
    return fn(Abscissa{x, left, right});
  };
  return scaled(detail::tanh_sinh_unit<T>(mapped, cfg), width);
}

/// Integrates fn(t, 1-t) over (0,1) split at the given interior breakpoints
/// (ascending). Every piece keeps the complement 1-t exact.
template <class F>
auto integrate_unit_pieces(F&& fn, std::initializer_list<double> breaks, const QuadConfig& cfg) {
  using T = std::decay_t<std::invoke_result_t<F&, double, double>>;
  BasicResult<T> total{};
  double lo = 0.0;
  auto piece = [&](double a, double b) {
    const double b_comp = 1.0 - b;
    total += integrate_interval(
        [&](const Abscissa& p) -> T { return fn(p.x, b_comp + p.from_right); }, a, b, cfg);
  };
  for (double br : breaks) {
    if (br <= lo || br >= 1.0) continue;
    piece(lo, br);
    lo = br;
  }
  piece(lo, 1.0);
  return total;
}

/// PV of ∫_a^b phi(x) / (x - c) dx for a < c < b by subtraction of phi(c):
/// the regular integral of (phi(x) - phi(c)) / (x - c) on both sides of c,
/// plus phi(c) ln((b - c) / (c - a)). `c_left` = c - a and `c_right` = b - c
/// are passed exactly. phi receives Abscissa values measured on [a, b].
template <class F>
PVResult pv_interval(F&& phi, double a, double b, double c, double c_left, double c_right,
                     const QuadConfig& cfg) {
  if (!(c_left > 0.0) || !(c_right > 0.0))
    throw Error(ErrorCode::PoleAtEndpoint, "pole must lie strictly inside the interval");
  const double phi_c = phi(Abscissa{c, c_left, c_right});
  PVResult left = integrate_interval(
      [&](const Abscissa& p) -> double {
        if (p.x == c) return 0.0;
        return (phi(Abscissa{p.x, p.from_left, p.from_right + c_right}) - phi_c) / (-p.from_right);
      },
      a, c, cfg);
  PVResult right = integrate_interval(
      [&](const Abscissa& p) -> double {
        if (p.x == c) return 0.0;
        return (phi(Abscissa{p.x, c_left + p.from_left, p.from_right}) - phi_c) / p.from_left;
      },
      c, b, cfg);
  PVResult out = left + right;
  out.value += phi_c * std::log(c_right / c_left);
  return out;
}

/// ∫_0^1 f(t) dt.
PVResult integrate(const FuncSpec& f, const QuadConfig& cfg = {});

/// PV ∫_0^1 h(t) / (t - c) dt for 0 < c < 1.
PVResult pv_pole_integral(const FuncSpec& h, double c, const QuadConfig& cfg = {});

/// As above with the complement 1 - c supplied exactly.
PVResult pv_pole_integral(const FuncSpec& h, double c, double one_minus_c, const QuadConfig& cfg);

/// Independent PV route: the symmetric ε-excision limit realised by folding
/// the integrand about the pole, ∫_0^r (h(c+s) - h(c-s)) / s ds with
/// r = min(c, 1-c), plus the remaining regular part.
PVResult pv_by_folding(const FuncSpec& h, double c, double one_minus_c, const QuadConfig& cfg = {});

}  // namespace mst
