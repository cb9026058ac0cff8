#pragma once

// The Hilbert matrix Γ = (1/(m+n+1)): the Taylor-coefficient form of the
// transform, since Sf(z) = Σ_m (Σ_n a_n / (m+n+1)) z^m for f = Σ a_n t^n.

#include <utility>
#include <vector>

#include "mst/coeff_seq.hpp"
#include "mst/quadrature.hpp"

namespace mst {

/// N x N section of the Hilbert matrix. Entries are implicit.
class HilbertOpTrunc {
 public:
  explicit HilbertOpTrunc(int n);

  int size() const noexcept { return n_; }
  double entry(int m, int n) const { return 1.0 / (m + n + 1); }

  /// y_m = Σ_n x_n / (m + n + 1) for m < N; OpenMP-parallel over m.
  CoeffSeq apply(const CoeffSeq& x) const;
  /// Serial reference for apply; bit-identical results.
  CoeffSeq apply_serial(const CoeffSeq& x) const;

 private:
  void check(const CoeffSeq& x) const;
  int n_;
  std::vector<double> inv_;  // inv_[k] = 1 / (k + 1), k < 2N - 1
};

/// Spectral norm of the N-section by power iteration on Γ_N².
double norm_p2(int n);

/// All eigenvalues of the N-section, ascending, to high relative accuracy
/// (including the ones far below double precision). N ≤ 2048.
std::vector<long double> truncated_spectrum(int n);
/// Same computation with the serial cyclic Jacobi sweep.
std::vector<long double> truncated_spectrum_serial(int n);

/// π / sin(π/p).
double lp_sequence_norm_bound(double p);

/// ‖Γ_N x‖_p / ‖x‖_p for the probe x_n = (n+1)^(-1/p-ε).
double lp_probe_ratio(double p, double eps, int n);

/// ‖S f_γ‖_p / ‖f_γ‖_p by quadrature, 0 <= γ < 1/p (γ = 0 is the f = 1 limit).
double lp_lower_bound_ratio(double p, double gamma, const QuadConfig& cfg = {});

struct WitnessResult {
  double computed = 0.0;
  double bound = 0.0;
  double err_estimate = 0.0;
  bool converged = true;
};

/// ∫_a^1 |S x_a(z)|^p dz for x_a = (1-a)^(-1/p) χ_[a,1], by nested quadrature,
/// next to its lower bound (1/(p-1)) (1/a) (1 - (1+a)^(1-p)).
WitnessResult noncompactness_witness(double a, double p, const QuadConfig& cfg = {});

/// The a → 1 limit of the witness bound, (1/(p-1)) (1 - 2^(1-p)).
double noncompactness_limit_bound(double p);

/// Σ_{k<K} (k+1) / ((j+1) (k+j+1)²), compensated summation.
double bergman_row_divergence(int j, long long k_terms);

}  // namespace mst
