#include "mst/quadrature.hpp"

#include <sstream>

namespace mst {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::PoleAtEndpoint: return "PoleAtEndpoint";
    case ErrorCode::BranchMismatch: return "BranchMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::IntegrabilityViolation: return "IntegrabilityViolation";
    case ErrorCode::OracleFailure: return "OracleFailure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::EvalError: return "EvalError";
  }
  return "Unknown";
}

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw Error(ErrorCode::InvalidSpec, "quadrature tolerances must be strictly positive");
  if (max_refinement_level < 1) throw Error(ErrorCode::InvalidSpec, "max_refinement_level must be >= 1");
}

FuncSpec::FuncSpec() : FuncSpec(Kernel([](double, double) { return 0.0; }), 0.0, 0.0, "0") {}

FuncSpec FuncSpec::zero() { return FuncSpec(); }

FuncSpec FuncSpec::constant(double c) {
  return FuncSpec(Kernel([c](double, double) { return c; }), 0.0, 0.0, std::to_string(c));
}

FuncSpec FuncSpec::monomial(int k) {
  return FuncSpec(Kernel([k](double t, double) { return std::pow(t, k); }), 0.0, 0.0,
                  "t^" + std::to_string(k));
}

FuncSpec FuncSpec::with_derivative(FuncSpec d) const {
  FuncSpec out = *this;
  out.derivative_ = std::make_shared<const FuncSpec>(std::move(d));
  return out;
}

void FuncSpec::validate() const {
  if (!kernel_) throw Error(ErrorCode::InvalidSpec, "empty integrand");
  if (!(sing_left_ >= 0.0 && sing_left_ < 1.0) || !(sing_right_ >= 0.0 && sing_right_ < 1.0)) {
    std::ostringstream msg;
    msg << "singularity exponents must lie in [0,1), got (" << sing_left_ << ", " << sing_right_ << ")";
    throw Error(ErrorCode::InvalidSpec, msg.str());
  }
}

namespace detail {

void throw_non_finite(double x) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "integrand is not finite at interior point " << x;
  throw Error(ErrorCode::EvalError, msg.str());
}

}  // namespace detail

PVResult integrate(const FuncSpec& f, const QuadConfig& cfg) {
  cfg.validate();
  f.validate();
  return detail::tanh_sinh_unit<double>([&](double t, double tc) { return f(t, tc); }, cfg);
}

PVResult pv_pole_integral(const FuncSpec& h, double c, const QuadConfig& cfg) {
  return pv_pole_integral(h, c, 1.0 - c, cfg);
}

PVResult pv_pole_integral(const FuncSpec& h, double c, double one_minus_c, const QuadConfig& cfg) {
  cfg.validate();
  if (!(c > 0.0 && one_minus_c > 0.0)) throw Error(ErrorCode::PoleAtEndpoint, "pole must lie in (0,1)");
  return pv_interval([&](const Abscissa& p) { return h(p.x, p.from_right); }, 0.0, 1.0, c, c, one_minus_c,
                     cfg);
}

PVResult pv_by_folding(const FuncSpec& h, double c, double one_minus_c, const QuadConfig& cfg) {
  cfg.validate();
  if (!(c > 0.0 && one_minus_c > 0.0)) throw Error(ErrorCode::PoleAtEndpoint, "pole must lie in (0,1)");
  const bool left_short = c <= one_minus_c;
  const double r = left_short ? c : one_minus_c;

  PVResult folded = integrate_interval(
      [&](const Abscissa& p) -> double {
        const double s = p.x;
        if (s == 0.0) return 0.0;
        const double plus_c = r == one_minus_c ? p.from_right : one_minus_c - s;
        const double minus = r == c ? p.from_right : c - s;
        return (h(c + s, plus_c) - h(minus, one_minus_c + s)) / s;
      },
      0.0, r, cfg);

  PVResult rest;
  if (left_short) {
    rest = integrate_interval([&](const Abscissa& p) { return h(p.x, p.from_right) / (c + p.from_left); },
                              2.0 * c, 1.0, cfg);
  } else {
    rest = integrate_interval(
        [&](const Abscissa& p) {
          return h(p.x, 2.0 * one_minus_c + p.from_right) / (-(one_minus_c + p.from_right));
        },
        0.0, 1.0 - 2.0 * one_minus_c, cfg);
  }
  return folded + rest;
}

}  // namespace mst
