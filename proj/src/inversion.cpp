#include "mst/inversion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace mst {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void require_interior(double t) {
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::DomainError, "inversion point t must lie in (0,1)");
}

}  // namespace

TransformOracle TransformOracle::numeric(FuncSpec f, QuadConfig cfg) {
  cfg.validate();
  return TransformOracle([f = std::move(f), cfg](const EvalPoint& p) { return forward(f, p, cfg).value; },
                         Source::Numeric);
}

TransformOracle TransformOracle::closed_form(Fn fn) {
  if (!fn) throw Error(ErrorCode::InvalidSpec, "closed-form oracle needs a callable");
  return TransformOracle(std::move(fn), Source::ClosedForm);
}

cplx TransformOracle::operator()(const EvalPoint& p) const {
  cplx v;
  try {
    v = fn_(p);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::OracleFailure, e.what());
  }
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream msg;
    msg << "transform value is not finite at z = (" << p.z.real() << ", " << p.z.imag() << ")";
    throw Error(ErrorCode::OracleFailure, msg.str());
  }
  return v;
}

void EtaSchedule::validate() const {
  if (extrapolation_order < 1) throw Error(ErrorCode::InvalidSpec, "extrapolation order must be >= 1");
  if (eta_values.size() < static_cast<std::size_t>(extrapolation_order) + 1)
    throw Error(ErrorCode::InvalidSpec, "schedule needs at least extrapolation_order + 1 values of eta");
  for (std::size_t i = 0; i < eta_values.size(); ++i) {
    if (!(eta_values[i] > 0.0) || !std::isfinite(eta_values[i]))
      throw Error(ErrorCode::InvalidSpec, "eta values must be finite and positive");
    if (i > 0 && !(eta_values[i] < eta_values[i - 1]))
      throw Error(ErrorCode::InvalidSpec, "eta values must be strictly decreasing");
  }
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidSpec, "schedule tolerance must be positive");
}

EtaSchedule EtaSchedule::scaled(double factor) const {
  EtaSchedule out = *this;
  for (double& e : out.eta_values) e *= factor;
  return out;
}

double complex_inversion_raw(const TransformOracle& fstar, double t, double eta) {
  const cplx w_minus = 1.0 / cplx(t, -eta);
  const cplx w_plus = 1.0 / cplx(t, eta);
  const cplx diff = w_minus * fstar(w_minus) - w_plus * fstar(w_plus);
  return (diff / cplx(0.0, 2.0 * kPi)).real();
}

InversionResult complex_invert(const TransformOracle& fstar, double t, const EtaSchedule& sched) {
  require_interior(t);
  sched.validate();
  const auto& eta = sched.eta_values;
  const std::size_t n = eta.size();
  const int order = sched.extrapolation_order;

  InversionResult out;
  out.raw.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.raw[i] = complex_inversion_raw(fstar, t, eta[i]);

  // Neville tableau for the interpolating polynomial in η evaluated at 0.
  std::vector<std::vector<double>> T(n, std::vector<double>(order + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    T[i][0] = out.raw[i];
    for (int k = 1; k <= order && static_cast<std::size_t>(k) <= i; ++k)
      T[i][k] = T[i][k - 1] + (T[i][k - 1] - T[i - 1][k - 1]) * eta[i] / (eta[i - k] - eta[i]);
  }
  out.value = T[n - 1][order];
  out.err_estimate = n >= static_cast<std::size_t>(order) + 2 ? std::abs(T[n - 1][order] - T[n - 2][order])
                                                              : std::abs(T[n - 1][order] - T[n - 1][order - 1]);
  out.converged = out.err_estimate <= sched.tolerance;
  return out;
}

PVResult poisson_smoothed(const FuncSpec& f, double t, double eta, const QuadConfig& cfg) {
  require_interior(t);
  if (!(eta > 0.0)) throw Error(ErrorCode::DomainError, "eta must be positive");
  cfg.validate();
  return integrate_unit_pieces(
      [&](double s, double sc) {
        const double d = t - s;
        return eta * f(s, sc) / (kPi * (d * d + eta * eta));
      },
      {t}, cfg);
}

InversionResult real_invert(const TransformOracle& fstar, double t, const RealInversionConfig& cfg) {
  require_interior(t);
  cfg.outer.validate();
  const double R = cfg.radius;
  if (!(R > 1.0) || !std::isfinite(R)) throw Error(ErrorCode::DomainError, "radius R must be finite and > 1");
  if (!(t * R > 1.0)) throw Error(ErrorCode::DomainError, "the pole 1/t must lie inside (1, R)");

  InversionResult out;
  const double c = 1.0 / t;
  if (std::abs(c - 1.0) < 0.05)
    out.warnings.push_back("pole 1/t is within 0.05 of the cut edge x = 1; PV accuracy degrades");

  auto fs = [&](double x) { return fstar(EvalPoint::at(x)).real(); };
  const QuadConfig& q = cfg.outer;

  PVResult negative = integrate_interval([&](const Abscissa& p) { return fs(p.x) / (1.0 - t * p.x); }, -R, 0.0, q);
  PVResult inner = integrate_interval(
      [&](const Abscissa& p) { return p.x < 1.0 ? fs(p.x) / (1.0 - t * p.x) : 0.0; }, 0.0, 1.0, q);

  // 1/(1 - t x) = -(1/t) / (x - 1/t) on the cut.
  const double above_edge = std::nextafter(1.0, 2.0);
  PVResult pole = scaled(pv_interval([&](const Abscissa& p) { return fs(std::max(p.x, above_edge)); }, 1.0, R, c,
                                     (1.0 - t) / t, R - c, q),
                         -1.0 / t);

  // |x| > R after x = 1/y: ∫_{|y|<1/R} f*(1/y) / (y (y - t)) dy.
  auto tail_integrand = [&](const Abscissa& p) {
    const double y = p.x;
    if (std::abs(y) < 1e-14) return 0.0;
    return fs(1.0 / y) / (y * (y - t));
  };
  PVResult tail = integrate_interval(tail_integrand, -1.0 / R, 0.0, q) + integrate_interval(tail_integrand, 0.0, 1.0 / R, q);

  const PVResult total = scaled(negative + inner + pole + tail, 1.0 / (kPi * kPi));
  out.value = total.value;
  out.err_estimate = total.err_estimate;
  out.converged = total.converged;
  return out;
}

}  // namespace mst
