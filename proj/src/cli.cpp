#include "mst/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cfloat>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>

#include "mst/algebra.hpp"
#include "mst/error.hpp"
#include "mst/expr.hpp"
#include "mst/hilbert_operator.hpp"
#include "mst/inversion.hpp"
#include "mst/transform.hpp"

namespace mst::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Row {
  std::string label;
  std::optional<double> abscissa;
  json value;
  json err;
};

struct Report {
  explicit Report(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  json inputs = json::object();
  std::vector<Row> rows;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
  bool converged = true;
  bool has_grid = false;

  void add(std::string label, json value, json err) { rows.push_back({std::move(label), std::nullopt, value, err}); }
  void add_grid(std::string label, double x, json value, json err) {
    rows.push_back({std::move(label), x, value, err});
    has_grid = true;
  }
};

const json kExact = "exact";

/// Long doubles outside the double range are kept as decimal strings.
json ld_number(long double v) {
  const long double a = std::fabs(v);
  if (a == 0.0L || (a >= DBL_MIN && a <= DBL_MAX)) return static_cast<double>(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", v);
  return std::string(buf);
}

std::string csv_field(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
  return buf;
}

json to_json(const Report& r) {
  json j;
  j["schema_version"] = "1";
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  json results = json::array();
  for (const Row& row : r.rows) {
    json e;
    e["label"] = row.label;
    if (row.abscissa) e["t_or_lambda"] = *row.abscissa;
    e["value"] = row.value;
    e["err"] = row.err;
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  j["converged"] = r.converged;
  j["warnings"] = r.warnings;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

void write_csv(const Report& r, std::ostream& os) {
  os << "index,t_or_lambda,value,err\n";
  int index = 0;
  for (const Row& row : r.rows) {
    if (!row.abscissa) continue;
    os << index++ << ',' << csv_field(*row.abscissa) << ',' << csv_field(row.value) << ',' << csv_field(row.err)
       << '\n';
  }
}

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorCode::InvalidSpec, what); }

double parse_real(std::string_view s, const std::string& what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    bad_input(what + ": '" + std::string(s) + "' is not a finite number");
  return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_real(std::string_view(s).substr(start, comma - start), what));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

std::complex<double> parse_complex(const std::string& s) {
  const std::vector<double> v = parse_list(s, "-z");
  if (v.size() > 2) bad_input("-z expects RE[,IM], got '" + s + "'");
  return {v[0], v.size() == 2 ? v[1] : 0.0};
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

struct Options {
  // shared
  double tol = 1e-10;
  int max_level = 14;
  bool csv = false;
  std::string out_file;
  std::string sing;
  // function inputs
  std::string f;
  std::string g;
  std::string z;
  std::vector<std::string> zs;
  bool pv = false;
  // inversion
  std::string mode;
  std::vector<double> ts;
  std::vector<double> eta;
  int order = 2;
  double radius = 200.0;
  // the rest
  int count = 8;
  int n = 2;
  std::string ids = "all";
  std::optional<double> a;
  bool printed = false;
  bool adjudicate = false;
  double lambda = 0.0;
  int grid = 33;
  double residual_tol = 1e-3;
  double p = 2.0;
  int j = 0;
  long long k_terms = 10;
};

struct Parsed {
  Options opt;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* radius_opt = nullptr;
  CLI::Option* a_opt = nullptr;

  QuadConfig quad() const {
    QuadConfig cfg{opt.tol, opt.tol, opt.max_level};
    cfg.validate();
    return cfg;
  }

  std::pair<double, double> sing() const {
    if (opt.sing.empty()) return {0.0, 0.0};
    const std::vector<double> v = parse_list(opt.sing, "--sing");
    if (v.size() != 2) bad_input("--sing expects a,b");
    return {v[0], v[1]};
  }

  /// Parses EXPR and validates the singularity exponents before any quadrature.
  FuncSpec function(const std::string& src, Report& r, const char* key) const {
    const expr::Expr e = expr::parse(src);
    const auto [sl, sr] = sing();
    FuncSpec spec = expr::to_func_spec(e, sl, sr);
    r.inputs[key] = e.to_string();
    return spec;
  }

  void echo_common(Report& r, const QuadConfig& cfg) const {
    const auto [sl, sr] = sing();
    r.inputs["sing"] = json::array({sl, sr});
    r.inputs["tol"] = cfg.abs_tol;
    r.inputs["max_level"] = cfg.max_refinement_level;
  }
};

void add_common(CLI::App* sub, Parsed& p, bool with_sing) {
  sub->add_option("--tol", p.opt.tol, "Absolute and relative quadrature tolerance")->capture_default_str();
  sub->add_option("--max-level", p.opt.max_level, "Maximum tanh-sinh refinement level")->capture_default_str();
  sub->add_flag("--csv", p.opt.csv, "Write grid-valued results as CSV");
  sub->add_option("--out", p.opt.out_file, "Write the report to FILE instead of standard output");
  if (with_sing)
    sub->add_option("--sing", p.opt.sing, "Endpoint singularity exponents a,b: f ~ t^-a near 0, (1-t)^-b near 1");
}

std::vector<std::complex<double>> z_points(const Parsed& p, std::vector<std::complex<double>> fallback) {
  if (p.opt.zs.empty()) return fallback;
  std::vector<std::complex<double>> out;
  for (const std::string& s : p.opt.zs) out.push_back(parse_complex(s));
  return out;
}

// ---------------------------------------------------------------- subcommands

Report cmd_eval(const Parsed& p) {
  Report r("eval");
  const QuadConfig cfg = p.quad();
  const FuncSpec f = p.function(p.opt.f, r, "f");
  const std::complex<double> z = parse_complex(p.opt.z);
  r.inputs["z"] = complex_json(z);
  r.inputs["pv"] = p.opt.pv;
  p.echo_common(r, cfg);

  const EvalPoint point{z, p.opt.pv ? Branch::PrincipalValue : Branch::Analytic};
  if (!p.opt.pv && EvalPoint::on_cut(z)) bad_input("z lies on the cut [1, inf); pass --pv for the principal value");
  point.validate();
  const TransformValue v = forward(f, point, cfg);
  r.add("re", v.value.real(), v.err_estimate);
  r.add("im", v.value.imag(), v.err_estimate);
  r.converged = v.converged;
  return r;
}

Report cmd_invert(const Parsed& p) {
  Report r("invert");
  const QuadConfig cfg = p.quad();
  const FuncSpec f = p.function(p.opt.f, r, "f");
  r.inputs["mode"] = p.opt.mode;
  r.inputs["t"] = p.opt.ts;
  p.echo_common(r, cfg);

  const TransformOracle oracle = TransformOracle::numeric(f, cfg);
  if (p.opt.mode == "complex") {
    EtaSchedule sched;
    if (!p.opt.eta.empty()) sched.eta_values = p.opt.eta;
    sched.extrapolation_order = p.opt.order;
    sched.validate();
    r.inputs["eta_schedule"] = sched.eta_values;
    r.inputs["order"] = sched.extrapolation_order;
    for (double t : p.opt.ts) {
      const InversionResult res = complex_invert(oracle, t, sched);
      r.add_grid("f", t, res.value, res.err_estimate);
      r.converged = r.converged && res.converged;
      r.warnings.insert(r.warnings.end(), res.warnings.begin(), res.warnings.end());
    }
  } else {
    RealInversionConfig rc;
    rc.radius = p.opt.radius;
    r.inputs["radius"] = rc.radius;
    for (double t : p.opt.ts) {
      const InversionResult res = real_invert(oracle, t, rc);
      r.add_grid("f", t, res.value, res.err_estimate);
      r.converged = r.converged && res.converged;
      r.warnings.insert(r.warnings.end(), res.warnings.begin(), res.warnings.end());
    }
  }
  return r;
}

Report cmd_moments(const Parsed& p) {
  Report r("moments");
  const QuadConfig cfg = p.quad();
  const FuncSpec f = p.function(p.opt.f, r, "f");
  r.inputs["count"] = p.opt.count;
  p.echo_common(r, cfg);
  const MomentSequence m = moments(f, p.opt.count, cfg);
  for (std::size_t k = 0; k < m.seq.size(); ++k)
    r.add_grid("c", static_cast<double>(k), m.seq[k], m.err_estimates[k]);
  r.converged = m.converged;
  return r;
}

Report cmd_hilbert_norm(const Parsed& p) {
  Report r("hilbert-norm");
  r.inputs["N"] = p.opt.n;
  const double v = norm_p2(p.opt.n);
  // Power iteration stops once the Rayleigh quotient settles to 1e-12.
  r.add("norm", v, 1e-12 * v);
  r.add("pi", std::numbers::pi, kExact);
  return r;
}

Report cmd_spectrum(const Parsed& p) {
  Report r("spectrum");
  r.inputs["N"] = p.opt.n;
  const std::vector<long double> ev = truncated_spectrum(p.opt.n);
  const long double rel = std::numeric_limits<long double>::epsilon() * p.opt.n;
  for (long double v : ev) {
    Row row{"lambda", static_cast<double>(v), ld_number(v), ld_number(rel * v)};
    r.rows.push_back(std::move(row));
  }
  r.has_grid = true;
  return r;
}

std::vector<IdentityId> identity_ids(const std::string& spec) {
  constexpr IdentityId kAll[] = {IdentityId::Reflect,    IdentityId::Dilate,     IdentityId::MultT,
                                 IdentityId::DivShift,   IdentityId::Derivative, IdentityId::Antiderivative};
  if (spec == "all") return {std::begin(kAll), std::end(kAll)};
  std::vector<IdentityId> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = spec.find(',', start);
    const std::string name = spec.substr(start, comma - start);
    const auto it = std::find_if(std::begin(kAll), std::end(kAll), [&](IdentityId id) { return to_string(id) == name; });
    if (it == std::end(kAll)) bad_input("unknown identity '" + name + "'");
    out.push_back(*it);
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

Report cmd_identities(const Parsed& p) {
  Report r("identities");
  const QuadConfig cfg = p.quad();
  const FuncSpec f = p.function(p.opt.f, r, "f");
  const bool all = p.opt.ids == "all";
  const std::vector<IdentityId> ids = identity_ids(p.opt.ids);
  const std::vector<std::complex<double>> zs = z_points(p, IdentityCase{}.sample_z);
  json zj = json::array();
  for (auto z : zs) zj.push_back(complex_json(z));
  r.inputs["id"] = p.opt.ids;
  r.inputs["z"] = std::move(zj);
  r.inputs["form"] = p.opt.printed ? "printed" : "corrected";
  p.echo_common(r, cfg);

  for (IdentityId id : ids) {
    IdentityCase c{id};
    if (id == IdentityId::Dilate) c.a = p.a_opt->count() ? *p.opt.a : 2.0;
    if (id == IdentityId::DivShift) c.a = p.a_opt->count() ? *p.opt.a : 0.5;
    c.sample_z = zs;
    c.form = p.opt.printed ? IdentityForm::AsPrinted : IdentityForm::Corrected;
    const std::string name(to_string(id));
    double residual = 0.0;
    try {
      residual = identity_residual(f, c, cfg);
    } catch (const Error& e) {
      if (!all || e.code() != ErrorCode::HypothesisViolation) throw;
      r.warnings.push_back(name + " skipped: " + e.what());
      continue;
    }
    if (c.a != 0.0) r.inputs["a_" + name] = c.a;
    r.add(name, residual, 2.0 * cfg.abs_tol);
    const double limit = id == IdentityId::Derivative ? 1e-4 : 1e-6;
    if (residual >= limit) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s residual %.3g is not below %.0e", name.c_str(), residual, limit);
      r.warnings.emplace_back(buf);
    }
  }
  return r;
}

Report cmd_convolve_check(const Parsed& p) {
  Report r("convolve-check");
  const QuadConfig cfg = p.quad();
  if (p.opt.adjudicate) {
    r.inputs["adjudicate"] = true;
    p.echo_common(r, cfg);
    const ConvolutionAdjudication adj = adjudicate_convolution(cfg);
    r.add("symmetric_residual", adj.symmetric_residual, 2.0 * cfg.abs_tol);
    r.add("printed_residual", adj.printed_residual, 2.0 * cfg.abs_tol);
    r.add("printed_zero_residual", adj.printed_zero_residual, 2.0 * cfg.abs_tol);
    r.inputs["accepted"] = adj.accepted == ConvolutionForm::Symmetric ? "symmetric" : "printed";
    r.notes.push_back(adj.record);
    return r;
  }
  if (p.opt.f.empty() || p.opt.g.empty()) bad_input("convolve-check needs -f and -g (or --adjudicate)");
  const FuncSpec f = p.function(p.opt.f, r, "f");
  const FuncSpec g = p.function(p.opt.g, r, "g");
  const std::vector<std::complex<double>> zs = z_points(p, IdentityCase{}.sample_z);
  json zj = json::array();
  for (auto z : zs) zj.push_back(complex_json(z));
  r.inputs["z"] = std::move(zj);
  r.inputs["form"] = p.opt.printed ? "printed" : "symmetric";
  p.echo_common(r, cfg);
  const double res = convolution_theorem_residual(f, g, zs, cfg,
                                                  p.opt.printed ? ConvolutionForm::AsPrinted : ConvolutionForm::Symmetric);
  r.add("residual", res, 2.0 * cfg.abs_tol);
  return r;
}

Report cmd_solve(const Parsed& p) {
  Report r("solve");
  const QuadConfig cfg = p.tol_opt->count() ? p.quad() : kSolverQuad;
  EquationProblem prob;
  prob.lambda = p.opt.lambda;
  prob.g = p.function(p.opt.g, r, "g");
  if (p.opt.grid < 1) bad_input("--grid must be positive");
  prob.grid = chebyshev_grid(p.opt.grid);
  prob.tolerance = p.opt.residual_tol;
  if (p.radius_opt->count()) prob.inversion.radius = p.opt.radius;
  r.inputs["lambda"] = prob.lambda;
  r.inputs["grid"] = p.opt.grid;
  r.inputs["residual_tol"] = prob.tolerance;
  r.inputs["radius"] = prob.inversion.radius;
  p.echo_common(r, cfg);

  const EquationSolution sol = solve_singular_equation(prob, cfg);
  // Bisection runs to adjacent doubles.
  r.add("alpha", sol.alpha, kEps * sol.alpha);
  double worst_err = 0.0;
  for (const SolutionPoint& pt : sol.points) {
    r.add_grid("x", pt.t, pt.x, pt.err_estimate);
    worst_err = std::max(worst_err, pt.err_estimate);
  }
  r.add("max_residual", sol.max_residual, worst_err);
  r.converged = sol.converged;
  r.warnings = sol.warnings;
  return r;
}

Report cmd_witness(const Parsed& p) {
  Report r("witness");
  const QuadConfig cfg = p.quad();
  const double a = p.opt.a.value_or(0.5);
  r.inputs["a"] = a;
  r.inputs["p"] = p.opt.p;
  r.inputs["tol"] = cfg.abs_tol;
  r.inputs["max_level"] = cfg.max_refinement_level;
  const WitnessResult w = noncompactness_witness(a, p.opt.p, cfg);
  r.add("computed", w.computed, w.err_estimate);
  r.add("bound", w.bound, kExact);
  r.converged = w.converged;
  if (w.computed < w.bound - 1e-6) r.warnings.push_back("computed value is below the lower bound");
  return r;
}

Report cmd_bergman(const Parsed& p) {
  Report r("bergman");
  if (p.opt.k_terms < 1) bad_input("-K must be positive");
  r.inputs["j"] = p.opt.j;
  r.inputs["K"] = p.opt.k_terms;
  const double s = bergman_row_divergence(p.opt.j, p.opt.k_terms);
  const double s2 = bergman_row_divergence(p.opt.j, 2 * p.opt.k_terms);
  r.add("partial_sum", s, 2.0 * kEps * s);
  r.add("doubling_increment", s2 - s, 2.0 * kEps * s2);
  // The tail of row j behaves like (1/(j+1)) Σ 1/k, so doubling K adds ln 2 / (j+1).
  r.add("expected_increment", std::numbers::ln2 / (p.opt.j + 1), kExact);
  return r;
}

void emit(const Report& r, const Options& opt, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!opt.out_file.empty()) {
    file.open(opt.out_file);
    if (!file) bad_input("cannot open '" + opt.out_file + "' for writing");
    os = &file;
  }
  if (opt.csv && r.has_grid) {
    write_csv(r, *os);
  } else {
    *os << to_json(r).dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markov-Stieltjes transform toolkit", "mst"};
  app.require_subcommand(1);
  Parsed p;
  Options& o = p.opt;
  std::vector<std::pair<CLI::App*, std::function<Report(const Parsed&)>>> commands;

  {
    auto* sub = app.add_subcommand("eval", "Evaluate Sf(z)");
    sub->add_option("-f", o.f, "f(t) as an expression in t")->required();
    sub->add_option("-z", o.z, "Evaluation point RE[,IM]")->required()->allow_extra_args(false);
    sub->add_flag("--pv", o.pv, "Principal value on the cut [1, inf)");
    add_common(sub, p, true);
    commands.emplace_back(sub, cmd_eval);
  }
  {
    auto* sub = app.add_subcommand("invert", "Recover f(t) from Sf by complex or real inversion");
    sub->add_option("mode", o.mode, "complex or real")->required()->check(CLI::IsMember({"complex", "real"}));
    sub->add_option("-f", o.f, "f(t) as an expression in t")->required();
    sub->add_option("-t", o.ts, "Points in (0,1), comma separated")->required()->delimiter(',');
    sub->add_option("--eta-schedule", o.eta, "Decreasing eta values for the complex route")
        ->delimiter(',')
        ->default_str("0.1,0.05,0.025,0.0125");
    sub->add_option("--order", o.order, "Extrapolation order for the complex route")->capture_default_str();
    sub->add_option("--radius", o.radius, "Truncation radius R for the real route")->capture_default_str();
    add_common(sub, p, true);
    commands.emplace_back(sub, cmd_invert);
  }
  {
    auto* sub = app.add_subcommand("moments", "Moments c_n of f");
    sub->add_option("-f", o.f, "f(t) as an expression in t")->required();
    sub->add_option("-n", o.count, "Number of moments")->capture_default_str();
    add_common(sub, p, true);
    commands.emplace_back(sub, cmd_moments);
  }
  {
    auto* sub = app.add_subcommand("hilbert-norm", "Spectral norm of the N x N Hilbert matrix");
    sub->add_option("-N", o.n, "Matrix size")->capture_default_str();
    add_common(sub, p, false);
    commands.emplace_back(sub, cmd_hilbert_norm);
  }
  {
    auto* sub = app.add_subcommand("spectrum", "Eigenvalues of the N x N Hilbert matrix");
    sub->add_option("-N", o.n, "Matrix size, at most 2048")->capture_default_str();
    add_common(sub, p, false);
    commands.emplace_back(sub, cmd_spectrum);
  }
  {
    auto* sub = app.add_subcommand("identities", "Residuals of the operational rules");
    sub->add_option("-f", o.f, "f(t) as an expression in t")->required();
    sub->add_option("--id", o.ids,
                    "all, or a comma list of reflect, dilate, mult-t, div-shift, derivative, antiderivative")
        ->capture_default_str();
    sub->add_option("--a", o.a, "Parameter a of dilate (default 2) and div-shift (default 0.5)");
    sub->add_option("-z", o.zs, "Sample point RE[,IM]; repeatable (default 0.3, -0.5, 0.2+0.1i)");
    sub->add_flag("--printed", o.printed, "Use the printed derivative and antiderivative forms");
    add_common(sub, p, true);
    commands.emplace_back(sub, cmd_identities);
  }
  {
    auto* sub = app.add_subcommand("convolve-check", "Residual of S(f * g) = Sf Sg");
    sub->add_option("-f", o.f, "f(t) as an expression in t");
    sub->add_option("-g", o.g, "g(t) as an expression in t");
    sub->add_option("-z", o.zs, "Sample point RE[,IM]; repeatable (default 0.3, -0.5, 0.2+0.1i)");
    sub->add_flag("--printed", o.printed, "Use the printed, non-bilinear product");
    sub->add_flag("--adjudicate", o.adjudicate, "Run the form adjudication on (1, t) and (t, 0)");
    add_common(sub, p, true);
    commands.emplace_back(sub, cmd_convolve_check);
  }
  {
    auto* sub = app.add_subcommand("solve", "Solve x(t) + lambda PV int x(u)/(t-u) du = g(t)");
    sub->add_option("--lambda", o.lambda, "Real, nonzero lambda")->required();
    sub->add_option("-g", o.g, "g(t) as an expression in t")->required();
    sub->add_option("--grid", o.grid, "Number of Chebyshev grid points")->capture_default_str();
    sub->add_option("--residual-tol", o.residual_tol, "Residual bound on the grid")->capture_default_str();
    sub->add_option("--radius", o.radius, "Truncation radius R of the inversion")->capture_default_str();
    add_common(sub, p, true);
    sub->get_option("--tol")->description("Quadrature tolerance (solver default 1e-8)");
    commands.emplace_back(sub, cmd_solve);
  }
  {
    auto* sub = app.add_subcommand("witness", "Noncompactness witness integral against its lower bound");
    sub->add_option("--a", o.a, "a in (0,1)")->default_str("0.5");
    sub->add_option("--p", o.p, "p > 1")->capture_default_str();
    add_common(sub, p, false);
    commands.emplace_back(sub, cmd_witness);
  }
  {
    auto* sub = app.add_subcommand("bergman", "Partial sums of a Bergman-space row");
    sub->add_option("--j", o.j, "Row index")->capture_default_str();
    sub->add_option("-K", o.k_terms, "Number of terms")->capture_default_str();
    add_common(sub, p, false);
    commands.emplace_back(sub, cmd_bergman);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInput;
  }

  for (const auto& [sub, fn] : commands) {
    if (!*sub) continue;
    p.tol_opt = sub->get_option("--tol");
    p.radius_opt = sub->get_option_no_throw("--radius");
    p.a_opt = sub->get_option_no_throw("--a");
    try {
      const Report r = fn(p);
      emit(r, o, out);
      for (const std::string& w : r.warnings) err << "warning: " << w << '\n';
      if (!r.converged) {
        err << "mst: " << sub->get_name() << " did not converge\n";
        return kExitNonConvergence;
      }
      return kExitOk;
    } catch (const Error& e) {
      err << "mst: " << e.what() << '\n';
      return kExitInput;
    }
  }
  return kExitInput;
}

}  // namespace mst::cli
