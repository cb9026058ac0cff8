#include "mst/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mst/detail/parallel.hpp"

namespace mst {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kComplexStep = 1e-20;
constexpr double kCentralStep = 1e-5;

cplx transform_at(const FuncSpec& f, cplx z, const QuadConfig& cfg) { return forward(f, EvalPoint::at(z), cfg).value; }

// d/dz φ(z) for φ analytic near z: complex step on the real axis, central
// differences elsewhere.
template <class Phi>
cplx derivative(Phi&& phi, cplx z, const QuadConfig& cfg) {
  if (z.imag() == 0.0) {
    QuadConfig fine = cfg;
    fine.abs_tol = cfg.abs_tol * kComplexStep;
    return phi(cplx(z.real(), kComplexStep), fine).imag() / kComplexStep;
  }
  QuadConfig fine = cfg;
  fine.abs_tol = std::min(cfg.abs_tol, 1e-13);
  fine.rel_tol = std::min(cfg.rel_tol, 1e-13);
  return (phi(z + kCentralStep, fine) - phi(z - kCentralStep, fine)) / (2.0 * kCentralStep);
}

cplx derivative_lhs_rhs(const FuncSpec& f, cplx z, IdentityForm form, const QuadConfig& cfg) {
  const double f1 = f(1.0, 0.0), f0 = f(0.0, 1.0);
  const cplx boundary = f1 / (1.0 - z) - f0;
  if (form == IdentityForm::Corrected) {
    auto zf = [&](cplx w, const QuadConfig& c) { return w * transform_at(f, w, c); };
    return -z * derivative(zf, z, cfg) + boundary;
  }
  auto plain = [&](cplx w, const QuadConfig& c) { return transform_at(f, w, c); };
  return -derivative(plain, z, cfg) + boundary;
}

cplx antiderivative_rhs(const FuncSpec& f, cplx z, IdentityForm form, const QuadConfig& cfg) {
  const double total = integrate(f, cfg).value;
  if (form == IdentityForm::Corrected) {
    const auto r = integrate_unit_pieces(
        [&](double tau, double) -> cplx {
          return (total / (1.0 - z * tau) - transform_at(f, z * tau, cfg)) / tau;
        },
        {}, cfg);
    return r.value / z;
  }
  const auto path = integrate_unit_pieces([&](double tau, double) { return transform_at(f, z * tau, cfg); }, {}, cfg);
  FuncSpec weighted([&f](double t, double tc) { return tc * f(t, tc); }, f.sing_left(), f.sing_right());
  return -z * path.value - total * std::log(1.0 - z) + integrate(weighted, cfg).value;
}

IdentitySides sides_at(const FuncSpec& f, const IdentityCase& c, cplx z, const QuadConfig& cfg) {
  IdentitySides s{z, 0.0, 0.0};
  switch (c.id) {
    case IdentityId::Reflect: {
      FuncSpec reflected([&f](double t, double tc) { return f(tc, t); }, f.sing_right(), f.sing_left());
      s.lhs = transform_at(reflected, z, cfg);
      s.rhs = transform_at(f, z / (z - 1.0), cfg) / (1.0 - z);
      break;
    }
    case IdentityId::Dilate: {
      const double a = c.a;
      // f(at) vanishes for t > 1/a.
      s.lhs = integrate_interval(
                  [&](const Abscissa& p) -> cplx { return f(a * p.x, a * p.from_right) / (1.0 - p.x * z); }, 0.0,
                  1.0 / a, cfg)
                  .value;
      s.rhs = transform_at(f, z / a, cfg) / a;
      break;
    }
    case IdentityId::MultT: {
      FuncSpec tf([&f](double t, double tc) { return t * f(t, tc); }, f.sing_left(), f.sing_right());
      s.lhs = transform_at(tf, z, cfg);
      s.rhs = (transform_at(f, z, cfg) - integrate(f, cfg).value) / z;
      break;
    }
    case IdentityId::DivShift: {
      const double a = c.a;
      FuncSpec shifted([&f, a](double t, double tc) { return f(t, tc) / (t + a); }, f.sing_left(), f.sing_right());
      s.lhs = transform_at(shifted, z, cfg);
      s.rhs = (z * transform_at(f, z, cfg) + integrate(shifted, cfg).value) / (1.0 + a * z);
      break;
    }
    case IdentityId::Derivative: {
      s.lhs = transform_at(*f.derivative(), z, cfg);
      s.rhs = derivative_lhs_rhs(f, z, c.form, cfg);
      break;
    }
    case IdentityId::Antiderivative: {
      FuncSpec running([&f, &cfg](double t, double tc) {
        return integrate_interval([&](const Abscissa& p) { return f(p.x, tc + p.from_right); }, 0.0, t, cfg).value;
      });
      s.lhs = transform_at(running, z, cfg);
      s.rhs = antiderivative_rhs(f, z, c.form, cfg);
      break;
    }
  }
  return s;
}

}  // namespace

std::string_view to_string(IdentityId id) noexcept {
  switch (id) {
    case IdentityId::Reflect: return "reflect";
    case IdentityId::Dilate: return "dilate";
    case IdentityId::MultT: return "mult-t";
    case IdentityId::DivShift: return "div-shift";
    case IdentityId::Derivative: return "derivative";
    case IdentityId::Antiderivative: return "antiderivative";
  }
  return "unknown";
}

void IdentityCase::validate() const {
  if (id == IdentityId::Dilate && !(a > 1.0)) throw Error(ErrorCode::DomainError, "dilation needs a > 1");
  if (id == IdentityId::DivShift && !(a > 0.0)) throw Error(ErrorCode::DomainError, "shift needs a > 0");
  if (sample_z.empty()) throw Error(ErrorCode::DomainError, "identity case needs at least one sample point");
  for (cplx z : sample_z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::DomainError, "sample points must be finite");
    if (EvalPoint::on_cut(z)) throw Error(ErrorCode::BranchMismatch, "sample points must avoid [1,inf)");
    if (z == 0.0 && (id == IdentityId::MultT || id == IdentityId::Antiderivative))
      throw Error(ErrorCode::DomainError, "this rule divides by z; z = 0 is not a sample point");
    if (id == IdentityId::DivShift && std::abs(1.0 + a * z) == 0.0)
      throw Error(ErrorCode::DomainError, "sample point z = -1/a is a pole of the right-hand side");
  }
}

std::vector<IdentitySides> identity_sides(const FuncSpec& f, const IdentityCase& c, const QuadConfig& cfg) {
  c.validate();
  cfg.validate();
  if (c.id == IdentityId::Derivative) {
    if (!f.derivative())
      throw Error(ErrorCode::HypothesisViolation, "derivative rule needs f' (FuncSpec::with_derivative)");
    if (f.sing_left() != 0.0 || f.sing_right() != 0.0)
      throw Error(ErrorCode::HypothesisViolation, "derivative rule needs f in C^1[0,1] (no endpoint singularity)");
  }
  std::vector<IdentitySides> out;
  out.reserve(c.sample_z.size());
  for (cplx z : c.sample_z) out.push_back(sides_at(f, c, z, cfg));
  return out;
}

double identity_residual(const FuncSpec& f, const IdentityCase& c, const QuadConfig& cfg) {
  double worst = 0.0;
  for (const auto& s : identity_sides(f, c, cfg)) worst = std::max(worst, std::abs(s.lhs - s.rhs));
  return worst;
}

PVResult hilbert_kernel(const FuncSpec& h, double t, const QuadConfig& cfg) {
  return hilbert_kernel(h, t, 1.0 - t, cfg);
}

PVResult hilbert_kernel(const FuncSpec& h, double t, double one_minus_t, const QuadConfig& cfg) {
  return scaled(pv_pole_integral(h, t, one_minus_t, cfg), -1.0);
}

namespace {

double convolve_exact(const FuncSpec& f, const FuncSpec& g, double t, double tc, const QuadConfig& cfg,
                      ConvolutionForm form) {
  const double ft = f(t, tc), gt = g(t, tc);
  const FuncSpec& with_f = form == ConvolutionForm::Symmetric ? g : f;
  const FuncSpec& with_g = form == ConvolutionForm::Symmetric ? f : g;
  const double a = ft == 0.0 ? 0.0 : t * ft * hilbert_kernel(with_f, t, tc, cfg).value;
  const double b = gt == 0.0 ? 0.0 : t * gt * hilbert_kernel(with_g, t, tc, cfg).value;
  return a + b;
}

}  // namespace

double convolve(const FuncSpec& f, const FuncSpec& g, double t, const QuadConfig& cfg, ConvolutionForm form) {
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::DomainError, "convolution point must lie in (0,1)");
  cfg.validate();
  return convolve_exact(f, g, t, 1.0 - t, cfg, form);
}

double convolution_theorem_residual(const FuncSpec& f, const FuncSpec& g, const std::vector<cplx>& z_points,
                                    const QuadConfig& cfg, ConvolutionForm form) {
  cfg.validate();
  double worst = 0.0;
  for (cplx z : z_points) {
    const EvalPoint p = EvalPoint::at(z);
    if (p.branch != Branch::Analytic) throw Error(ErrorCode::BranchMismatch, "z points must avoid [1,inf)");
    const auto lhs = integrate_unit_pieces(
        [&](double t, double tc) -> cplx {
          const cplx denom = t < 0.5 ? 1.0 - t * z : (1.0 - z) + z * tc;
          return convolve_exact(f, g, t, tc, cfg, form) / denom;
        },
        {}, cfg);
    const cplx rhs = forward(f, p, cfg).value * forward(g, p, cfg).value;
    worst = std::max(worst, std::abs(lhs.value - rhs));
  }
  return worst;
}

ConvolutionAdjudication adjudicate_convolution(const QuadConfig& cfg) {
  const std::vector<cplx> zs = {{0.3, 0.0}, {-0.5, 0.0}, {0.2, 0.1}};
  const FuncSpec one = FuncSpec::constant(1.0), t = FuncSpec::monomial(1), zero = FuncSpec::zero();
  ConvolutionAdjudication out;
  out.symmetric_residual = convolution_theorem_residual(one, t, zs, cfg, ConvolutionForm::Symmetric);
  out.printed_residual = convolution_theorem_residual(one, t, zs, cfg, ConvolutionForm::AsPrinted);
  out.printed_zero_residual = convolution_theorem_residual(t, zero, zs, cfg, ConvolutionForm::AsPrinted);

  constexpr double kAccept = 1e-5;
  std::ostringstream rec;
  rec.precision(3);
  rec << std::scientific << "S(f*g) = Sf.Sg on (f,g)=(1,t), z in {0.3,-0.5,0.2+0.1i}: symmetric residual "
      << out.symmetric_residual << ", printed residual " << out.printed_residual
      << "; printed form with g=0, f=t: residual " << out.printed_zero_residual << " (theorem requires 0). ";
  if (out.symmetric_residual < kAccept) {
    out.accepted = ConvolutionForm::Symmetric;
    rec << "Accepted: symmetric form t f(t) Kg(t) + t g(t) Kf(t).";
  } else if (out.printed_residual < kAccept) {
    out.accepted = ConvolutionForm::AsPrinted;
    rec << "Accepted: printed form.";
  } else {
    throw Error(ErrorCode::OracleFailure, rec.str() + "Neither form satisfies the theorem.");
  }
  out.record = rec.str();
  return out;
}

double solve_alpha(double lambda) {
  if (lambda == 0.0) throw Error(ErrorCode::ZeroLambda, "lambda = 0 leaves no singular part to solve for");
  if (!std::isfinite(lambda)) throw Error(ErrorCode::DomainError, "lambda must be finite");
  // sin(απ) - λπ cos(απ) changes sign once on the bracket.
  double lo = lambda > 0.0 ? 0.0 : 0.5;
  double hi = lambda > 0.0 ? 0.5 : 1.0;
  auto F = [lambda](double a) { return std::sin(a * kPi) - lambda * kPi * std::cos(a * kPi); };
  const bool rising = lambda > 0.0;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double v = F(mid);
    if (v == 0.0) return mid;
    if ((v < 0.0) == rising)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> chebyshev_grid(int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "grid size must be >= 1");
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[n - 1 - k] = 0.5 * (1.0 + std::cos((2.0 * k + 1.0) * kPi / (2.0 * n)));
  return out;
}

void EquationProblem::validate() const {
  if (lambda == 0.0) throw Error(ErrorCode::ZeroLambda, "lambda = 0 leaves no singular part to solve for");
  if (grid.empty()) throw Error(ErrorCode::DomainError, "solver grid is empty");
  for (double t : grid)
    if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::DomainError, "solver grid points must lie in (0,1)");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidSpec, "solver tolerance must be positive");
  g.validate();
}

TransformOracle equation_oracle(const FuncSpec& h, double alpha, const QuadConfig& cfg) {
  const double c = std::cos(kPi * alpha), s = std::sin(kPi * alpha);
  return TransformOracle::closed_form([h, alpha, c, s, cfg](const EvalPoint& p) -> cplx {
    if (p.branch == Branch::Analytic) return std::pow(1.0 - p.z, alpha) * forward(h, p, cfg).value;
    const double x = p.z.real();
    const double pv = forward(h, p, cfg).value.real();
    // Sokhotski-Plemelj: the boundary values of S h are pv ± iπ h(1/x)/x.
    const double jump = kPi * h(1.0 / x, (x - 1.0) / x) / x;
    return std::pow(x - 1.0, alpha) * (c * pv + s * jump);
  });
}

EquationSolution solve_singular_equation(const EquationProblem& prob, const QuadConfig& cfg) {
  prob.validate();
  cfg.validate();
  const double alpha = solve_alpha(prob.lambda);
  const FuncSpec& g = prob.g;
  if (g.sing_right() + alpha >= 1.0) {
    std::ostringstream msg;
    msg << "g t^a (1-t)^(-a) is not integrable: right exponent " << g.sing_right() << " + alpha " << alpha
        << " >= 1";
    throw Error(ErrorCode::IntegrabilityViolation, msg.str());
  }
  const FuncSpec h([g, alpha](double t, double tc) { return g(t, tc) * std::pow(t, alpha) * std::pow(tc, -alpha); },
                   std::max(0.0, g.sing_left() - alpha), g.sing_right() + alpha);

  const double c = std::cos(kPi * alpha), s = std::sin(kPi * alpha);
  const FuncSpec direct(
      [g, h, alpha, c, s, cfg](double t, double tc) {
        const double kh = hilbert_kernel(h, t, tc, cfg).value;
        return c * c * g(t, tc) - (s * c / kPi) * std::pow(tc, alpha) * std::pow(t, -alpha) * kh;
      },
      std::max(alpha, g.sing_left()), g.sing_right());

  const TransformOracle oracle = equation_oracle(h, alpha, cfg);
  EquationSolution out;
  out.alpha = alpha;
  out.points.resize(prob.grid.size());
  std::vector<std::vector<std::string>> warnings(prob.grid.size());
  std::vector<char> converged(prob.grid.size(), 1);

  detail::parallel_for_rethrow(static_cast<std::ptrdiff_t>(prob.grid.size()), [&](std::ptrdiff_t i) {
    const double t = prob.grid[i];
    RealInversionConfig inv = prob.inversion;
    inv.radius = std::max(inv.radius, 4.0 / t);
    const InversionResult r = real_invert(oracle, t, inv);
    SolutionPoint& pt = out.points[i];
    pt.t = t;
    pt.x = c * r.value;
    pt.err_estimate = std::abs(c) * r.err_estimate;
    pt.x_direct = direct(t, 1.0 - t);
    pt.residual = pt.x + prob.lambda * hilbert_kernel(direct, t, 1.0 - t, cfg).value - g(t, 1.0 - t);
    converged[i] = r.converged;
    for (const auto& w : r.warnings) {
      std::ostringstream msg;
      msg << "t = " << t << ": " << w;
      warnings[i].push_back(msg.str());
    }
  });

  for (std::size_t i = 0; i < out.points.size(); ++i) {
    out.max_residual = std::max(out.max_residual, std::abs(out.points[i].residual));
    out.converged = out.converged && converged[i];
    out.warnings.insert(out.warnings.end(), warnings[i].begin(), warnings[i].end());
  }
  out.converged = out.converged && out.max_residual <= prob.tolerance;
  return out;
}

}  // namespace mst
