#pragma once

// The Markov-Stieltjes transform Sf(z) = ∫_0^1 f(t) / (1 - t z) dt.
//
// Off the cut [1, inf) the integral is an ordinary (Lebesgue) integral and
// Sf is analytic. On the cut it is a Cauchy principal value with the pole at
// t = 1/z.

#include <complex>
#include <span>
#include <vector>

#include "mst/coeff_seq.hpp"
#include "mst/quadrature.hpp"

namespace mst {

enum class Branch { Analytic, PrincipalValue };

struct EvalPoint {
  std::complex<double> z;
  Branch branch = Branch::Analytic;

  /// Picks the branch from the location of z.
  static EvalPoint at(std::complex<double> z);
  static bool on_cut(std::complex<double> z) { return z.imag() == 0.0 && z.real() >= 1.0; }

  /// Throws BranchMismatch when `branch` disagrees with the location of z.
  void validate() const;
};

struct TransformValue {
  std::complex<double> value;
  double err_estimate = 0.0;
  bool converged = true;
};

TransformValue forward(const FuncSpec& f, const EvalPoint& p, const QuadConfig& cfg = {});

/// Sf(z) for real z > 1 through the Hilbert transform of f extended by zero:
/// Sf(z) = (π/z) (H f1)(1/z). Uses the folding PV route, so it is independent
/// of the subtraction route taken by `forward`.
TransformValue forward_via_hilbert(const FuncSpec& f, double z, const QuadConfig& cfg = {});

/// (H f1)(x) = (1/π) PV ∫_0^1 f(t) / (x - t) dt for 0 < x < 1.
PVResult finite_hilbert_transform(const FuncSpec& f, double x, const QuadConfig& cfg = {});

/// Evaluates `forward` at every point; OpenMP-parallel over the points.
std::vector<TransformValue> forward_grid(const FuncSpec& f, std::span<const EvalPoint> points,
                                         const QuadConfig& cfg = {});
/// Serial reference for forward_grid.
std::vector<TransformValue> forward_grid_serial(const FuncSpec& f, std::span<const EvalPoint> points,
                                                const QuadConfig& cfg = {});

struct MomentSequence {
  CoeffSeq seq;
  std::vector<double> err_estimates;
  bool converged = true;
};

/// c_n = ∫_0^1 f(t) t^n dt for n < count: the Taylor coefficients of Sf at 0.
MomentSequence moments(const FuncSpec& f, int count, const QuadConfig& cfg = {});

/// f_γ(t) = (t / (1 - t))^γ for |γ| < 1.
FuncSpec f_gamma(double gamma);

/// S f_γ(z) = -(π / sin πγ) (1/z) (1 - (1 - z)^(-γ)), principal branch.
std::complex<double> sf_gamma_closed_form(double gamma, std::complex<double> z);

/// ‖f_γ‖_p = (πpγ / sin πpγ)^(1/p), from ‖f_γ‖_p^p = B(1 + pγ, 1 - pγ).
double f_gamma_lp_norm(double gamma, double p);

}  // namespace mst
