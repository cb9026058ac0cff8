#pragma once

// Recovering f from f* = Sf: the complex boundary-limit formula
//   (f(t+0) + f(t-0)) / 2 = lim_{η→0+} (1/2πi) [w₋ f*(w₋) - w₊ f*(w₊)],  w∓ = 1/(t ∓ iη),
// and the real formula
//   f(t) = (1/π²) PV ∫_ℝ f*(x) / (1 - t x) dx.

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "mst/transform.hpp"

namespace mst {

/// Source of f* values. Numeric oracles call `forward` and pick the branch
/// from the location of the point; closed-form oracles are supplied by the
/// caller and must return PV values on the cut themselves.
class TransformOracle {
 public:
  enum class Source { Numeric, ClosedForm };
  using Fn = std::function<std::complex<double>(const EvalPoint&)>;

  static TransformOracle numeric(FuncSpec f, QuadConfig cfg = {});
  static TransformOracle closed_form(Fn fn);

  /// f* at p. Failures of the underlying evaluation and non-finite values
  /// are reported as OracleFailure.
  std::complex<double> operator()(const EvalPoint& p) const;
  std::complex<double> operator()(std::complex<double> z) const { return (*this)(EvalPoint::at(z)); }

  Source source() const noexcept { return source_; }

 private:
  TransformOracle(Fn fn, Source s) : fn_(std::move(fn)), source_(s) {}
  Fn fn_;
  Source source_;
};

struct EtaSchedule {
  std::vector<double> eta_values{0.1, 0.05, 0.025, 0.0125};
  int extrapolation_order = 2;
  /// Successive extrapolants differing by more than this mark the result unconverged.
  double tolerance = 5e-3;

  void validate() const;
  /// Every η multiplied by `factor`.
  EtaSchedule scaled(double factor) const;
};

struct InversionResult {
  double value = 0.0;
  double err_estimate = 0.0;
  bool converged = true;
  /// Raw (pre-extrapolation) values, one per η for complex_invert.
  std::vector<double> raw;
  std::vector<std::string> warnings;
};

/// The η-smoothed value (1/2πi)[w₋ f*(w₋) - w₊ f*(w₊)] before the limit.
double complex_inversion_raw(const TransformOracle& fstar, double t, double eta);

/// Polynomial (Neville) extrapolation of the raw values to η = 0 through the
/// last `extrapolation_order + 1` schedule points.
InversionResult complex_invert(const TransformOracle& fstar, double t, const EtaSchedule& sched = {});

/// (1/π) ∫_0^1 η f(s) / ((t - s)² + η²) ds: the value complex_inversion_raw
/// must reproduce when f is known.
PVResult poisson_smoothed(const FuncSpec& f, double t, double eta, const QuadConfig& cfg = {});

struct RealInversionConfig {
  double radius = 200.0;
  /// Outer quadrature over x; each node costs one inner transform evaluation.
  QuadConfig outer{1e-8, 1e-8, 12};
};

/// Real inversion. The line is split at -R, 0, 1 and R; the pole at 1/t is
/// handled by subtraction on (1, R); |x| > R is integrated exactly after
/// x = 1/y. Requires 1/R < t < 1.
InversionResult real_invert(const TransformOracle& fstar, double t, const RealInversionConfig& cfg = {});

}  // namespace mst
