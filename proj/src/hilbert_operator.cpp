#include "mst/hilbert_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "mst/transform.hpp"

namespace mst {

namespace {

using ld = long double;
constexpr double kPi = std::numbers::pi;
constexpr int kMaxSpectrumSize = 2048;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// Dense column-major factor G with G Gᵀ = Γ_N (rows in original order).
//
// Γ_N is the Cauchy matrix g_i g_j / (x_i + x_j) with x_i = i + 1/2, g_i = 1.
// Eliminating pivot p keeps the form, with g_i <- g_i (x_i - x_p) / (x_i + x_p),
// so every Schur complement entry is produced without cancellation.
std::vector<ld> cauchy_cholesky(int n) {
  std::vector<ld> x(n), g(n, 1.0L);
  for (int i = 0; i < n; ++i) x[i] = i + 0.5L;
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<ld> G(static_cast<std::size_t>(n) * n, 0.0L);

  for (int k = 0; k < n; ++k) {
    auto best = std::max_element(remaining.begin(), remaining.end(), [&](int a, int b) {
      return g[a] * g[a] / (2 * x[a]) < g[b] * g[b] / (2 * x[b]);
    });
    const int p = *best;
    remaining.erase(best);
    ld* col = &G[static_cast<std::size_t>(k) * n];
    const ld root = std::sqrt(2 * x[p]);
    col[p] = g[p] / root;
    for (int i : remaining) {
      col[i] = g[i] * root / (x[i] + x[p]);
      g[i] *= (x[i] - x[p]) / (x[i] + x[p]);
    }
  }
  return G;
}

// One Hestenes rotation orthogonalising columns i and j. Returns false when
// they are already orthogonal to working precision.
bool rotate_pair(std::vector<ld>& G, int n, int i, int j, ld tol) {
  ld* a = &G[static_cast<std::size_t>(i) * n];
  ld* b = &G[static_cast<std::size_t>(j) * n];
  ld alpha = 0, beta = 0, gamma = 0;
  for (int r = 0; r < n; ++r) {
    alpha += a[r] * a[r];
    beta += b[r] * b[r];
    gamma += a[r] * b[r];
  }
  if (gamma == 0 || std::abs(gamma) <= tol * std::sqrt(alpha) * std::sqrt(beta)) return false;
  const ld zeta = (beta - alpha) / (2 * gamma);
  const ld sign = zeta < 0 ? -1.0L : 1.0L;
  const ld az = std::abs(zeta);
  const ld t = az > 1 ? sign / (az * (1 + std::sqrt(1 + 1 / (az * az)))) : sign / (az + std::sqrt(1 + az * az));
  const ld c = 1 / std::sqrt(1 + t * t);
  const ld s = c * t;
  for (int r = 0; r < n; ++r) {
    const ld u = a[r], v = b[r];
    a[r] = c * u - s * v;
    b[r] = s * u + c * v;
  }
  return true;
}

std::vector<long double> column_norms_squared(const std::vector<ld>& G, int n) {
  std::vector<long double> out(n);
  for (int k = 0; k < n; ++k) {
    const ld* col = &G[static_cast<std::size_t>(k) * n];
    ld s = 0;
    for (int r = 0; r < n; ++r) s += col[r] * col[r];
    out[k] = s;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_spectrum_size(int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "truncation size must be >= 1");
  if (n > kMaxSpectrumSize) {
    std::ostringstream msg;
    msg << "dense spectrum limited to N <= " << kMaxSpectrumSize << ", got " << n;
    throw Error(ErrorCode::SizeLimit, msg.str());
  }
}

constexpr int kMaxSweeps = 80;

ld jacobi_tol(int n) { return std::numeric_limits<ld>::epsilon() * n; }

}  // namespace

HilbertOpTrunc::HilbertOpTrunc(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "truncation size must be >= 1");
  inv_.resize(2 * static_cast<std::size_t>(n) - 1);
  for (std::size_t k = 0; k < inv_.size(); ++k) inv_[k] = 1.0 / static_cast<double>(k + 1);
}

void HilbertOpTrunc::check(const CoeffSeq& x) const {
  x.validate();
  if (x.size() > static_cast<std::size_t>(n_)) {
    std::ostringstream msg;
    msg << "sequence of length " << x.size() << " exceeds truncation size " << n_;
    throw Error(ErrorCode::SizeMismatch, msg.str());
  }
}

CoeffSeq HilbertOpTrunc::apply(const CoeffSeq& x) const {
  check(x);
  const int len = static_cast<int>(x.size());
  CoeffSeq y{std::vector<double>(n_), x.p_exponent};
#pragma omp parallel for schedule(static)
  for (int m = 0; m < n_; ++m) {
    const double* row = &inv_[m];
    double s = 0.0;
    for (int k = 0; k < len; ++k) s += x.coeffs[k] * row[k];
    y.coeffs[m] = s;
  }
  return y;
}

CoeffSeq HilbertOpTrunc::apply_serial(const CoeffSeq& x) const {
  check(x);
  const int len = static_cast<int>(x.size());
  CoeffSeq y{std::vector<double>(n_), x.p_exponent};
  for (int m = 0; m < n_; ++m) {
    double s = 0.0;
    for (int k = 0; k < len; ++k) s += x.coeffs[k] * inv_[m + k];
    y.coeffs[m] = s;
  }
  return y;
}

double norm_p2(int n) {
  const HilbertOpTrunc gamma(n);
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> start(0.5, 1.5);
  CoeffSeq v{std::vector<double>(n)};
  for (double& c : v.coeffs) c = start(rng);
  const double scale = std::sqrt(dot(v.coeffs, v.coeffs));
  for (double& c : v.coeffs) c /= scale;

  double rayleigh = 0.0;
  for (int iter = 0; iter < 10000; ++iter) {
    const CoeffSeq u = gamma.apply(gamma.apply(v));
    const double next = dot(v.coeffs, u.coeffs);  // vᵀ Γ² v
    const double len = std::sqrt(dot(u.coeffs, u.coeffs));
    for (int i = 0; i < n; ++i) v.coeffs[i] = u.coeffs[i] / len;
    if (std::abs(next - rayleigh) <= 1e-12 * next) return std::sqrt(next);
    rayleigh = next;
  }
  return std::sqrt(rayleigh);
}

std::vector<long double> truncated_spectrum(int n) {
  check_spectrum_size(n);
  std::vector<ld> G = cauchy_cholesky(n);
  const ld tol = jacobi_tol(n);

  // Round-robin ordering: each round is a perfect matching of the columns,
  // so its rotations touch disjoint data and run concurrently.
  const int m = n + (n % 2);
  std::vector<int> player(m);
  std::iota(player.begin(), player.end(), 0);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    long long rotations = 0;
    for (int round = 0; round + 1 < m; ++round) {
#pragma omp parallel for schedule(dynamic) reduction(+ : rotations)
      for (int k = 0; k < m / 2; ++k) {
        const int i = std::min(player[k], player[m - 1 - k]);
        const int j = std::max(player[k], player[m - 1 - k]);
        if (j < n && rotate_pair(G, n, i, j, tol)) ++rotations;
      }
      std::rotate(player.begin() + 1, player.end() - 1, player.end());
    }
    if (rotations == 0) break;
  }
  return column_norms_squared(G, n);
}

std::vector<long double> truncated_spectrum_serial(int n) {
  check_spectrum_size(n);
  std::vector<ld> G = cauchy_cholesky(n);
  const ld tol = jacobi_tol(n);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    long long rotations = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rotate_pair(G, n, i, j, tol)) ++rotations;
    if (rotations == 0) break;
  }
  return column_norms_squared(G, n);
}

double lp_sequence_norm_bound(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::DomainError, "p must lie in (1,inf)");
  return kPi / std::sin(kPi / p);
}

double lp_probe_ratio(double p, double eps, int n) {
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::DomainError, "p must lie in (1,inf)");
  if (!(eps > 0.0)) throw Error(ErrorCode::DomainError, "probe exponent offset must be positive");
  const HilbertOpTrunc gamma(n);
  CoeffSeq x{std::vector<double>(n), p};
  for (int k = 0; k < n; ++k) x.coeffs[k] = std::pow(k + 1.0, -1.0 / p - eps);
  return gamma.apply(x).norm() / x.norm();
}

double lp_lower_bound_ratio(double p, double gamma, const QuadConfig& cfg) {
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::DomainError, "p must lie in (1,inf)");
  if (!(gamma >= 0.0 && p * gamma < 1.0)) throw Error(ErrorCode::DomainError, "gamma must lie in [0, 1/p)");
  // |S f_γ(1 - x)| = (π / sin πγ) x^(-γ) (1 - x^γ) / (1 - x).
  const double log_front = gamma > 0.0 ? std::log(kPi / std::sin(kPi * gamma)) : 0.0;
  FuncSpec integrand(
      [p, gamma, log_front](double x, double xc) {
        const double lx = x < 0.5 ? std::log(x) : std::log1p(-xc);
        if (gamma == 0.0) return std::pow(-lx / xc, p);
        const double one_minus_xg = -std::expm1(gamma * lx);
        return std::exp(p * (log_front + std::log(one_minus_xg) - std::log(xc) - gamma * lx));
      },
      p * gamma, 0.0);
  const PVResult r = integrate(integrand, cfg);
  return std::pow(r.value, 1.0 / p) / f_gamma_lp_norm(gamma, p);
}

WitnessResult noncompactness_witness(double a, double p, const QuadConfig& cfg) {
  if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::DomainError, "a must lie in (0,1)");
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::DomainError, "p must lie in (1,inf)");
  cfg.validate();
  const double height = std::pow(1.0 - a, -1.0 / p);
  bool inner_converged = true;
  // S x_a(z) = height ∫_a^1 dt / (1 - t z) with 1 - t z = (1 - z) + z (1 - t).
  PVResult outer = integrate_interval(
      [&](const Abscissa& zp) {
        const double z = zp.x, zc = zp.from_right;
        // The integrand grows like ln(1/zc)^p; nodes this close to 1 carry no weight.
        if (zc < 1e-150) return 0.0;
        const PVResult inner = integrate_interval(
            [&](const Abscissa& tp) { return 1.0 / (zc + z * tp.from_right); }, a, 1.0, cfg);
        inner_converged = inner_converged && inner.converged;
        return std::pow(height * inner.value, p);
      },
      a, 1.0, cfg);
  WitnessResult out;
  out.computed = outer.value;
  out.err_estimate = outer.err_estimate;
  out.converged = outer.converged && inner_converged;
  out.bound = (1.0 / (p - 1.0)) * (1.0 / a) * (1.0 - std::pow(1.0 + a, 1.0 - p));
  return out;
}

double noncompactness_limit_bound(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::DomainError, "p must lie in (1,inf)");
  return (1.0 / (p - 1.0)) * (1.0 - std::pow(2.0, 1.0 - p));
}

double bergman_row_divergence(int j, long long k_terms) {
  if (j < 0) throw Error(ErrorCode::DomainError, "row index j must be >= 0");
  if (k_terms < 1) throw Error(ErrorCode::DomainError, "number of terms K must be >= 1");
  double sum = 0.0, comp = 0.0;  // Neumaier
  for (long long k = 0; k < k_terms; ++k) {
    const double d = static_cast<double>(k + j + 1);
    const double term = static_cast<double>(k + 1) / ((j + 1.0) * d * d);
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace mst
