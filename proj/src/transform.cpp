#include "mst/transform.hpp"

#include "mst/detail/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mst {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TransformValue forward_analytic(const FuncSpec& f, cplx z, const QuadConfig& cfg) {
  const cplx one_minus_z = 1.0 - z;
  // 1 - t z, computed from whichever of t, 1 - t is exact.
  auto denom = [&](double t, double tc) { return t < 0.5 ? 1.0 - t * z : one_minus_z + z * tc; };

  // Split at the projection of the pole 1/z when it sits close to (0,1).
  double split = -1.0;
  if (z != 0.0) {
    const cplx pole = 1.0 / z;
    if (pole.real() > 0.0 && pole.real() < 1.0 && std::abs(pole.imag()) < 0.25) split = pole.real();
  }
  auto run = [&](auto&& integrand) {
    return split > 0.0 ? integrate_unit_pieces(integrand, {split}, cfg)
                       : integrate_unit_pieces(integrand, {}, cfg);
  };

  PVResult re = run([&](double t, double tc) {
    const cplx w = denom(t, tc);
    return f(t, tc) * w.real() / std::norm(w);
  });
  PVResult im{};
  if (z.imag() != 0.0) {
    im = run([&](double t, double tc) {
      const cplx w = denom(t, tc);
      return -f(t, tc) * w.imag() / std::norm(w);
    });
  }
  return {cplx(re.value, im.value), std::hypot(re.err_estimate, im.err_estimate), re.converged && im.converged};
}

TransformValue forward_principal_value(const FuncSpec& f, double z, const QuadConfig& cfg) {
  if (z == 1.0) throw Error(ErrorCode::PoleAtEndpoint, "z = 1 places the pole at t = 1");
  const double c = 1.0 / z;
  const double c_comp = (z - 1.0) / z;
  const PVResult r = scaled(pv_pole_integral(f, c, c_comp, cfg), -1.0 / z);
  return {cplx(r.value, 0.0), r.err_estimate, r.converged};
}

}  // namespace

EvalPoint EvalPoint::at(cplx z) { return {z, on_cut(z) ? Branch::PrincipalValue : Branch::Analytic}; }

void EvalPoint::validate() const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorCode::DomainError, "evaluation point must be finite");
  const bool cut = on_cut(z);
  if (branch == Branch::Analytic && cut) {
    std::ostringstream msg;
    msg << "z = " << z.real() << " lies on the cut [1,inf); use the principal-value branch";
    throw Error(ErrorCode::BranchMismatch, msg.str());
  }
  if (branch == Branch::PrincipalValue && !cut)
    throw Error(ErrorCode::BranchMismatch, "the principal-value branch requires real z >= 1");
}

TransformValue forward(const FuncSpec& f, const EvalPoint& p, const QuadConfig& cfg) {
  cfg.validate();
  p.validate();
  if (p.branch == Branch::PrincipalValue) return forward_principal_value(f, p.z.real(), cfg);
  return forward_analytic(f, p.z, cfg);
}

PVResult finite_hilbert_transform(const FuncSpec& f, double x, const QuadConfig& cfg) {
  return scaled(pv_by_folding(f, x, 1.0 - x, cfg), -1.0 / kPi);
}

TransformValue forward_via_hilbert(const FuncSpec& f, double z, const QuadConfig& cfg) {
  cfg.validate();
  if (z == 1.0) throw Error(ErrorCode::PoleAtEndpoint, "z = 1 places the pole at t = 1");
  if (!(z > 1.0)) throw Error(ErrorCode::DomainError, "the Hilbert-transform route needs real z > 1");
  const double x = 1.0 / z;
  const double x_comp = (z - 1.0) / z;
  // (π/z) (H f1)(x) with (H f1)(x) = -(1/π) PV ∫ f(t) / (t - x) dt.
  const PVResult r = scaled(pv_by_folding(f, x, x_comp, cfg), -1.0 / z);
  return {cplx(r.value, 0.0), r.err_estimate, r.converged};
}

std::vector<TransformValue> forward_grid(const FuncSpec& f, std::span<const EvalPoint> points,
                                         const QuadConfig& cfg) {
  std::vector<TransformValue> out(points.size());
  detail::parallel_for_rethrow(static_cast<std::ptrdiff_t>(points.size()),
                       [&](std::ptrdiff_t i) { out[i] = forward(f, points[i], cfg); });
  return out;
}

std::vector<TransformValue> forward_grid_serial(const FuncSpec& f, std::span<const EvalPoint> points,
                                                const QuadConfig& cfg) {
  std::vector<TransformValue> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(forward(f, p, cfg));
  return out;
}

MomentSequence moments(const FuncSpec& f, int count, const QuadConfig& cfg) {
  if (count < 1) throw Error(ErrorCode::DomainError, "moment count must be >= 1");
  cfg.validate();
  MomentSequence out;
  out.seq.coeffs.resize(count);
  out.err_estimates.resize(count);
  for (int n = 0; n < count; ++n) {
    const PVResult r =
        detail::tanh_sinh_unit<double>([&](double t, double tc) { return f(t, tc) * std::pow(t, n); }, cfg);
    out.seq.coeffs[n] = r.value;
    out.err_estimates[n] = r.err_estimate;
    out.converged = out.converged && r.converged;
  }
  return out;
}

FuncSpec f_gamma(double gamma) {
  if (!(std::abs(gamma) < 1.0)) throw Error(ErrorCode::DomainError, "f_gamma needs |gamma| < 1");
  std::ostringstream label;
  label << "(t/(1-t))^" << gamma;
  return FuncSpec([gamma](double t, double tc) { return std::pow(t, gamma) * std::pow(tc, -gamma); }, std::max(0.0, -gamma),
                  std::max(0.0, gamma), label.str());
}

cplx sf_gamma_closed_form(double gamma, cplx z) {
  if (gamma == 0.0 || !(std::abs(gamma) < 1.0))
    throw Error(ErrorCode::DomainError, "closed form needs 0 < |gamma| < 1");
  if (z == 0.0) throw Error(ErrorCode::DomainError, "closed form is singular at z = 0 (take the limit)");
  if (EvalPoint::on_cut(z)) throw Error(ErrorCode::DomainError, "closed form is analytic only off [1,inf)");
  return -(kPi / std::sin(kPi * gamma)) / z * (1.0 - std::pow(1.0 - z, -gamma));
}

double f_gamma_lp_norm(double gamma, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::DomainError, "p must lie in (1,inf)");
  const double x = kPi * p * gamma;
  if (!(std::abs(p * gamma) < 1.0)) throw Error(ErrorCode::DomainError, "f_gamma is in L^p only for |p gamma| < 1");
  if (gamma == 0.0) return 1.0;
  return std::pow(x / std::sin(x), 1.0 / p);
}

double CoeffSeq::norm() const {
  if (std::isinf(p_exponent)) {
    double m = 0.0;
    for (double c : coeffs) m = std::max(m, std::abs(c));
    return m;
  }
  double s = 0.0;
  for (double c : coeffs) s += std::pow(std::abs(c), p_exponent);
  return std::pow(s, 1.0 / p_exponent);
}

void CoeffSeq::validate() const {
  if (coeffs.empty()) throw Error(ErrorCode::SizeMismatch, "coefficient sequence must be non-empty");
  if (!(p_exponent > 1.0)) throw Error(ErrorCode::DomainError, "sequence exponent must lie in (1,inf]");
  for (double c : coeffs)
    if (!std::isfinite(c)) throw Error(ErrorCode::DomainError, "coefficients must be finite");
}

}  // namespace mst
