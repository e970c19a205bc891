#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report_io.hpp"
#include "starq/coeffs.hpp"
#include "starq/membership.hpp"
#include "starq/radii.hpp"
#include "starq/special.hpp"

namespace {

using namespace starq;
using cli::fmt9;
using cli::round9;
using cli::to_csv;
using cli::write_output;
using Json = cli::Json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

// alpha accepted as a decimal or a fraction string such as "7/9".
double parse_real(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      const double num = std::stod(s.substr(0, slash));
      const double den = std::stod(s.substr(slash + 1));
      if (den == 0.0) throw InvalidParams("fraction with zero denominator: " + s);
      return num / den;
    }
    return std::stod(s);
  } catch (const std::invalid_argument&) {
    throw InvalidParams("cannot parse number: " + s);
  } catch (const std::out_of_range&) {
    throw InvalidParams("number out of range: " + s);
  }
}

// "start:stop:step" inclusive alpha range.
std::vector<double> parse_range(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.size() == 1) return {parse_real(parts[0])};
  if (parts.size() != 3) throw InvalidParams("range must be start:stop:step");
  const double start = parse_real(parts[0]);
  const double stop = parse_real(parts[1]);
  const double step = parse_real(parts[2]);
  if (step <= 0.0) throw InvalidParams("range step must be positive");
  std::vector<double> out;
  for (double v = start; v <= stop + 1e-12; v += step) out.push_back(v);
  return out;
}

std::size_t grid_m_default(std::size_t fallback) {
  if (const char* env = std::getenv("STARQ_GRID_M")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 64) return std::size_t(v);
  }
  return fallback;
}

FunctionHandle parse_function(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "identity") return FunctionHandle::identity();
  if (head == "koebe") return FunctionHandle::koebe();
  if (head == "slsharp") return FunctionHandle::sl_sharp();
  if (head == "falpha") return FunctionHandle::f_alpha(Alpha(parse_real(arg)));
  if (head == "fgamma") {
    const auto comma = arg.find(',');
    Complex g;
    if (comma == std::string::npos) {
      g = Complex{parse_real(arg), 0.0};
    } else {
      g = Complex{parse_real(arg.substr(0, comma)), parse_real(arg.substr(comma + 1))};
    }
    return FunctionHandle::gamma_poly(g);
  }
  if (head == "phi") {
    if (arg == "sl") return FunctionHandle::phi_extremal(PhiFamily::SL);
    if (arg == "log") return FunctionHandle::phi_extremal(PhiFamily::Log);
    if (arg == "exp") return FunctionHandle::phi_extremal(PhiFamily::Exp);
    if (arg == "sg") return FunctionHandle::phi_extremal(PhiFamily::SG);
    if (arg == "sin") return FunctionHandle::phi_extremal(PhiFamily::Sin);
    if (arg == "cardioid") return FunctionHandle::phi_extremal(PhiFamily::Cardioid);
    throw InvalidParams("unknown phi family: " + arg);
  }
  throw InvalidParams("unknown function spec: " + spec);
}

RadiusClass parse_radius_class(const std::string& s) {
  if (s == "sl") return RadiusClass::SL;
  if (s == "log") return RadiusClass::LogClass;
  if (s == "exp") return RadiusClass::Exp;
  if (s == "sg") return RadiusClass::SG;
  if (s == "sin") return RadiusClass::Sin;
  if (s == "cardioid") return RadiusClass::Cardioid;
  if (s == "starlike-order") return RadiusClass::StarlikeOrder;
  if (s == "mbeta") return RadiusClass::MBeta;
  if (s == "rad2") return RadiusClass::Rad2;
  if (s == "example1") return RadiusClass::Example1;
  throw InvalidParams("unknown radius class: " + s);
}

bool radius_takes_param(RadiusClass c) {
  return c == RadiusClass::StarlikeOrder || c == RadiusClass::MBeta ||
         c == RadiusClass::Rad2;
}

RadiusProblem make_problem(RadiusClass c, double alpha, std::optional<double> gamma,
                           std::optional<double> beta) {
  if (c == RadiusClass::StarlikeOrder) {
    if (!gamma) throw InvalidParams("starlike-order requires --gamma");
    return RadiusProblem(c, Alpha(alpha), *gamma);
  }
  if (c == RadiusClass::MBeta || c == RadiusClass::Rad2) {
    if (!beta) throw InvalidParams("this class requires --beta");
    return RadiusProblem(c, Alpha(alpha), *beta);
  }
  return RadiusProblem(c, Alpha(alpha));
}

std::string branch_name(const std::optional<RootBranch>& b) {
  if (!b) return "-";
  return *b == RootBranch::BelowThreshold ? "below" : "above";
}

// ---------------------------------------------------------------- constants

int cmd_constants(const std::string& alpha_str, const std::string& format,
                  const std::string& output) {
  const Alpha a(parse_real(alpha_str));
  const ClassConstants c = class_constants(a);
  const double et = branch_threshold(BranchClass::Exp);
  const double st = branch_threshold(BranchClass::SG);
  if (format == "json") {
    Json j;
    j["alpha"] = round9(a.value());
    j["q_min"] = round9(c.q_min);
    j["gamma"] = round9(c.gamma);
    j["macgregor_order"] = round9(c.macgregor_order);
    j["exp_threshold"] = round9(et);
    j["sg_threshold"] = round9(st);
    write_output(output, j.dump(2) + "\n");
  } else {
    write_output(output,
                 to_csv({"alpha", "q_min", "gamma", "macgregor_order", "exp_threshold",
                         "sg_threshold"},
                        {{fmt9(a.value()), fmt9(c.q_min), fmt9(c.gamma),
                          fmt9(c.macgregor_order), fmt9(et), fmt9(st)}}));
  }
  return kExitOk;
}

// ------------------------------------------------------------------- radius

std::vector<std::string> radius_row(const std::string& cls, double alpha,
                                    const RadiusProblem& p, const RadiusResult& r) {
  return {cls,
          fmt9(alpha),
          p.gamma ? fmt9(*p.gamma) : "-",
          p.beta ? fmt9(*p.beta) : "-",
          fmt9(r.root),
          fmt9(r.residual),
          fmt9(r.bracket_lo),
          fmt9(r.bracket_hi),
          branch_name(r.branch),
          r.whole_disk ? "1" : "0"};
}

Json radius_json(const std::string& cls, double alpha, const RadiusProblem& p,
                 const RadiusResult& r) {
  Json j;
  j["class"] = cls;
  j["alpha"] = round9(alpha);
  j["gamma"] = p.gamma ? Json(round9(*p.gamma)) : Json(nullptr);
  j["beta"] = p.beta ? Json(round9(*p.beta)) : Json(nullptr);
  j["root"] = round9(r.root);
  j["residual"] = round9(r.residual);
  j["bracket"] = Json::array({round9(r.bracket_lo), round9(r.bracket_hi)});
  j["branch"] = r.branch ? Json(branch_name(r.branch)) : Json(nullptr);
  j["whole_disk"] = r.whole_disk;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

const std::vector<std::string> kRadiusHeader = {
    "class",      "alpha",      "gamma",  "beta",   "root",
    "residual",   "bracket_lo", "bracket_hi", "branch", "whole_disk"};

int cmd_radius(const std::string& cls, const std::string& alpha_str,
               std::optional<double> gamma, std::optional<double> beta,
               const std::string& format, const std::string& output) {
  const RadiusClass c = parse_radius_class(cls);
  const double alpha = parse_real(alpha_str);
  if (!radius_takes_param(c) && (gamma || beta)) {
    throw InvalidParams("--gamma/--beta not accepted for this class");
  }
  const RadiusProblem p = make_problem(c, alpha, gamma, beta);
  const RadiusResult r = solve(p);
  if (format == "json") {
    write_output(output, radius_json(cls, alpha, p, r).dump(2) + "\n");
  } else {
    write_output(output, to_csv(kRadiusHeader, {radius_row(cls, alpha, p, r)}));
  }
  return kExitOk;
}

// ----------------------------------------------------------------- boundary

std::string boundary_svg(const BoundaryCurve& curve, std::size_t samples) {
  // Fixed 800x800 viewport, real axis horizontal; the window clips the
  // unbounded arms at |w| <= 10.
  const double clip = 10.0;
  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  for (std::size_t i = 0; i < curve.sample_count; ++i) {
    const Complex w = curve.vertices[i];
    if (std::abs(w) > clip) continue;
    xlo = std::min(xlo, w.real());
    xhi = std::max(xhi, w.real());
    ylo = std::min(ylo, w.imag());
    yhi = std::max(yhi, w.imag());
  }
  if (xlo > xhi) {
    xlo = -1;
    xhi = 1;
    ylo = -1;
    yhi = 1;
  }
  const double pad = 0.1 * std::max(xhi - xlo, yhi - ylo) + 1e-3;
  xlo -= pad;
  xhi += pad;
  ylo -= pad;
  yhi += pad;
  const double scale = 800.0 / std::max(xhi - xlo, yhi - ylo);
  auto px = [&](double x) { return (x - xlo) * scale; };
  auto py = [&](double y) { return 800.0 - (y - ylo) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\" version=\"1.1\">\n";
  svg << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  svg << "  <line x1=\"0\" y1=\"" << fmt9(py(0.0)) << "\" x2=\"800\" y2=\""
      << fmt9(py(0.0)) << "\" stroke=\"#cccccc\"/>\n";
  svg << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < samples; ++i) {
    const Complex w = curve.vertices[i];
    if (std::abs(w) > clip) continue;
    svg << fmt9(px(w.real())) << "," << fmt9(py(w.imag())) << " ";
  }
  svg << "\"/>\n";
  svg << "  <circle cx=\"" << fmt9(px(curve.a_min)) << "\" cy=\"" << fmt9(py(0.0))
      << "\" r=\"4\" fill=\"#d62728\"/>\n";
  svg << "  <text x=\"" << fmt9(px(curve.a_min) + 8) << "\" y=\"" << fmt9(py(0.0) - 8)
      << "\" font-family=\"sans-serif\" font-size=\"16\">A=" << fmt9(curve.a_min)
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

int cmd_boundary(const std::string& alpha_str, std::size_t samples,
                 const std::string& format, const std::string& output) {
  const Alpha a(parse_real(alpha_str));
  const BoundaryCurve curve = boundary_polygon(a, samples);
  if (format == "svg") {
    write_output(output, boundary_svg(curve, samples));
    return kExitOk;
  }
  if (format == "json") {
    Json j;
    j["alpha"] = round9(a.value());
    j["a_min"] = round9(curve.a_min);
    j["sample_count"] = curve.sample_count;
    Json verts = Json::array();
    for (std::size_t i = 0; i < curve.sample_count; ++i) {
      verts.push_back(Json::array({round9(curve.vertices[i].real()),
                                   round9(curve.vertices[i].imag())}));
    }
    j["vertices"] = std::move(verts);
    Json cap = Json::array();
    for (std::size_t i = curve.sample_count; i < curve.vertices.size(); ++i) {
      cap.push_back(Json::array({round9(curve.vertices[i].real()),
                                 round9(curve.vertices[i].imag())}));
    }
    j["cap_vertices"] = std::move(cap);
    write_output(output, j.dump(2) + "\n");
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows;
  const double pi = std::numbers::pi;
  const double lo = kEpsTheta, hi = 2.0 * pi - kEpsTheta;
  for (std::size_t i = 0; i < curve.sample_count; ++i) {
    const double theta = lo + (hi - lo) * double(i) / double(curve.sample_count - 1);
    rows.push_back({std::to_string(i), fmt9(theta), fmt9(curve.vertices[i].real()),
                    fmt9(curve.vertices[i].imag())});
  }
  write_output(output, to_csv({"index", "theta", "re", "im"}, rows));
  return kExitOk;
}

// -------------------------------------------------------------------- bound

int cmd_bound(const std::string& kind, const std::string& alpha_str, double t,
              std::size_t n, const std::string& format, const std::string& output) {
  const Alpha a(parse_real(alpha_str));
  Json j;
  std::vector<std::string> header;
  std::vector<std::string> row;
  if (kind == "fekete") {
    const CoefficientReport r = fekete_szego_bound(FeketeParams{a, t});
    header = {"kind", "alpha", "t", "bound", "attained", "branch"};
    row = {kind, fmt9(a.value()), fmt9(t), fmt9(r.bound),
           r.attained ? fmt9(*r.attained) : "-", std::to_string(r.branch)};
    j = {{"kind", kind},
         {"alpha", round9(a.value())},
         {"t", round9(t)},
         {"bound", round9(r.bound)},
         {"attained", r.attained ? Json(round9(*r.attained)) : Json(nullptr)},
         {"branch", r.branch}};
  } else if (kind == "a2") {
    const double b = a2_bound(a);
    header = {"kind", "alpha", "bound"};
    row = {kind, fmt9(a.value()), fmt9(b)};
    j = {{"kind", kind}, {"alpha", round9(a.value())}, {"bound", round9(b)}};
  } else if (kind == "a3") {
    const CoefficientReport r = a3_bound(a);
    header = {"kind", "alpha", "bound", "attained", "branch"};
    row = {kind, fmt9(a.value()), fmt9(r.bound), r.attained ? fmt9(*r.attained) : "-",
           std::to_string(r.branch)};
    j = {{"kind", kind},
         {"alpha", round9(a.value())},
         {"bound", round9(r.bound)},
         {"attained", r.attained ? Json(round9(*r.attained)) : Json(nullptr)},
         {"branch", r.branch}};
  } else if (kind == "inverse") {
    const InverseCoeffBounds r = inverse_coeff_bounds(a);
    header = {"kind", "alpha", "b2", "b3", "b3_branch"};
    row = {kind, fmt9(a.value()), fmt9(r.b2), fmt9(r.b3), std::to_string(r.b3_branch)};
    j = {{"kind", kind},
         {"alpha", round9(a.value())},
         {"b2", round9(r.b2)},
         {"b3", round9(r.b3)},
         {"b3_branch", r.b3_branch}};
  } else if (kind == "logcoeff") {
    const LogCoeffBound r = log_coeff_bound(a, n);
    header = {"kind", "alpha", "n", "bound", "conditional"};
    row = {kind, fmt9(a.value()), std::to_string(n), fmt9(r.bound),
           r.conditional ? "1" : "0"};
    j = {{"kind", kind},
         {"alpha", round9(a.value())},
         {"n", n},
         {"bound", round9(r.bound)},
         {"conditional", r.conditional}};
  } else {
    throw InvalidParams("unknown bound kind: " + kind);
  }
  if (format == "json") {
    write_output(output, j.dump(2) + "\n");
  } else {
    write_output(output, to_csv(header, {row}));
  }
  return kExitOk;
}

// --------------------------------------------------------------- membership

int cmd_membership(const std::string& fspec, const std::string& cls,
                   const std::string& alpha_str, double b, double rho,
                   std::optional<double> qgamma, double beta,
                   const std::string& radii_csv, std::size_t m,
                   const std::string& format, const std::string& output) {
  const Alpha a(parse_real(alpha_str));
  const FunctionHandle h = parse_function(fspec);

  std::vector<double> radii;
  if (radii_csv.empty()) {
    radii = SampleGrid::standard().radii;
  } else {
    std::stringstream ss(radii_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) radii.push_back(parse_real(tok));
  }
  const SampleGrid grid(radii, m);

  MembershipReport rep = [&]() -> MembershipReport {
    if (cls == "sq") return check_sq_inequality(h, a, grid);
    if (cls == "sqalpha") {
      const BoundaryCurve curve = boundary_polygon(a, 4096);
      return check_subordination_qalpha(h, a, grid, curve);
    }
    if (cls == "convex") return check_convex_order(h, a, grid);
    if (cls == "gb") return check_gb(h, b, grid);
    if (cls == "mocanu") return check_rho_convex(h, rho, grid);
    if (cls == "qgamma") return check_re_f_over_z(h, qgamma.value_or(gamma_alpha(a)), grid);
    if (cls == "mbeta") return check_m_beta(h, beta, grid);
    throw InvalidParams("unknown membership class: " + cls);
  }();

  const char* verdict = rep.verdict == Verdict::HoldsOnGrid ? "HoldsOnGrid" : "Violated";
  if (format == "json") {
    Json j;
    j["check"] = cls;
    j["function"] = h.name();
    j["alpha"] = round9(a.value());
    j["verdict"] = verdict;
    j["grid_verdict_note"] = "verdict over sampled grid points only, not a proof";
    j["worst_margin"] = round9(rep.worst_margin);
    j["witness"] = {{"z", Json::array({round9(rep.witness.z.real()),
                                       round9(rep.witness.z.imag())})},
                    {"lhs", round9(rep.witness.lhs)},
                    {"rhs", round9(rep.witness.rhs)}};
    Json rj = Json::array();
    for (double r : rep.grid.radii) rj.push_back(round9(r));
    j["grid"] = {{"radii", std::move(rj)}, {"angular_count", rep.grid.angular_count}};
    j["low_confidence"] = rep.low_confidence;
    write_output(output, j.dump(2) + "\n");
  } else {
    write_output(
        output,
        to_csv({"check", "function", "alpha", "verdict", "worst_margin", "witness_re",
                "witness_im", "witness_lhs", "witness_rhs", "radii_count",
                "angular_count", "low_confidence"},
               {{cls, h.name(), fmt9(a.value()), verdict, fmt9(rep.worst_margin),
                 fmt9(rep.witness.z.real()), fmt9(rep.witness.z.imag()),
                 fmt9(rep.witness.lhs), fmt9(rep.witness.rhs),
                 std::to_string(rep.grid.radii.size()),
                 std::to_string(rep.grid.angular_count),
                 std::to_string(rep.low_confidence)}}));
  }
  return kExitOk;
}

// --------------------------------------------------------------------- scan

int cmd_scan(const std::string& kind, const std::string& alpha_range,
             const std::string& cls, std::optional<double> gamma,
             std::optional<double> beta, std::size_t m, const std::string& output) {
  const std::vector<double> alphas = parse_range(alpha_range);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  if (kind == "convexity" || kind == "starlike") {
    header = {"alpha", "minimum", "argmin_theta", "sign"};
    for (double av : alphas) {
      const ScanResult r = kind == "convexity" ? convexity_scan(Alpha(av), m)
                                               : starlike_scan(Alpha(av), m);
      rows.push_back({fmt9(av), fmt9(r.minimum), fmt9(r.argmin_theta),
                      r.minimum < 0 ? "-" : "+"});
    }
  } else if (kind == "radius-table") {
    if (cls.empty()) throw InvalidParams("radius-table requires --class");
    const RadiusClass c = parse_radius_class(cls);
    header = {"class", "alpha", "root", "residual", "branch", "whole_disk"};
    for (double av : alphas) {
      const RadiusProblem p = make_problem(c, av, gamma, beta);
      const RadiusResult r = solve(p);
      rows.push_back({cls, fmt9(av), fmt9(r.root), fmt9(r.residual),
                      branch_name(r.branch), r.whole_disk ? "1" : "0"});
    }
  } else if (kind == "gamma-table") {
    header = {"alpha", "q_min", "gamma"};
    for (double av : alphas) {
      const Alpha a(av);
      rows.push_back({fmt9(av), fmt9(q_min(a)), fmt9(gamma_alpha(a))});
    }
  } else {
    throw InvalidParams("unknown scan kind: " + kind);
  }
  write_output(output, to_csv(header, rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "starq: evaluators, membership grids, radius solvers, and coefficient\n"
      "bounds for the starlike classes S*_q(alpha) and S*(q_alpha)."};
  app.require_subcommand(1);
  app.footer(
      "CSV columns (all numbers 9 significant digits, RFC 4180 quoting):\n"
      "  constants   alpha,q_min,gamma,macgregor_order,exp_threshold,sg_threshold\n"
      "  radius      class,alpha,gamma,beta,root,residual,bracket_lo,bracket_hi,\n"
      "              branch,whole_disk\n"
      "  boundary    index,theta,re,im\n"
      "  bound       kind-dependent; see each kind's JSON fields\n"
      "  membership  check,function,alpha,verdict,worst_margin,witness_re,\n"
      "              witness_im,witness_lhs,witness_rhs,radii_count,\n"
      "              angular_count,low_confidence\n"
      "  scan        convexity/starlike: alpha,minimum,argmin_theta,sign\n"
      "              radius-table: class,alpha,root,residual,branch,whole_disk\n"
      "              gamma-table:  alpha,q_min,gamma\n"
      "Exit codes: 0 ok, 2 invalid parameters, 3 solver failure, 4 i/o error.\n"
      "STARQ_GRID_M overrides the default angular sample count.");

  std::string alpha_str = "0";
  std::string format = "csv";
  std::string output;
  const std::size_t env_m = grid_m_default(1024);

  auto* constants = app.add_subcommand("constants", "q_min, gamma, and branch thresholds");
  constants->add_option("--alpha", alpha_str, "alpha in [0,1); decimal or fraction like 7/9")
      ->required();
  constants->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  constants->add_option("--output", output, "output path (default stdout)");

  auto* radius = app.add_subcommand("radius", "solve one radius equation");
  std::string cls;
  std::optional<double> gamma_opt, beta_opt;
  radius->add_option("--class", cls,
                     "sl|log|exp|sg|sin|cardioid|starlike-order|mbeta|rad2|example1")
      ->required();
  radius->add_option("--alpha", alpha_str)->required();
  radius->add_option("--gamma", gamma_opt, "order for starlike-order (q_min, 1)");
  radius->add_option("--beta", beta_opt, "bound for mbeta (>1) / rad2 (>=1)");
  radius->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  radius->add_option("--output", output);

  auto* boundary = app.add_subcommand("boundary", "boundary curve of q_alpha");
  std::size_t samples = 1024;
  boundary->add_option("--alpha", alpha_str)->required();
  boundary->add_option("--samples", samples, "number of curve samples (>= 256)");
  boundary->add_option("--format", format, "csv, json, or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  boundary->add_option("--output", output);

  auto* bound = app.add_subcommand("bound", "coefficient-functional bounds");
  std::string bound_kind;
  double t_weight = 0.0;
  std::size_t n_index = 1;
  bound->add_option("kind", bound_kind, "fekete|a2|a3|inverse|logcoeff")->required();
  bound->add_option("--alpha", alpha_str)->required();
  bound->add_option("--t", t_weight, "Fekete-Szego weight");
  bound->add_option("--n", n_index, "logarithmic coefficient index (>= 1)");
  bound->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  bound->add_option("--output", output);

  auto* membership = app.add_subcommand("membership", "grid membership checks");
  std::string fspec, radii_csv;
  double b_param = 1.0, rho_param = -1.0, beta_param = 2.0;
  std::optional<double> qgamma_param;
  std::size_t m_param = env_m;
  membership->add_option("--f", fspec,
                         "identity|koebe|slsharp|falpha:A|fgamma:RE[,IM]|phi:FAMILY")
      ->required();
  membership->add_option("--class", cls, "sq|sqalpha|convex|gb|mocanu|qgamma|mbeta")
      ->required();
  membership->add_option("--alpha", alpha_str)->required();
  membership->add_option("--b", b_param, "gb bound in (0,1], default 1");
  membership->add_option("--rho", rho_param, "mocanu weight, default -1");
  membership->add_option("--q-gamma", qgamma_param,
                         "qgamma bound, default gamma(alpha)");
  membership->add_option("--beta", beta_param, "mbeta bound (>1), default 2");
  membership->add_option("--radii", radii_csv, "comma-separated radii (default standard grid)");
  membership->add_option("--m", m_param, "angular samples per circle (env STARQ_GRID_M)");
  membership->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  membership->add_option("--output", output);

  auto* scan = app.add_subcommand("scan", "alpha-grid scans (CSV)");
  std::string scan_kind, scan_range = "0:0.9:0.1";
  std::size_t scan_m = grid_m_default(4096);
  scan->add_option("kind", scan_kind, "convexity|starlike|radius-table|gamma-table")
      ->required();
  scan->add_option("--alpha", scan_range, "range start:stop:step")->required();
  scan->add_option("--class", cls, "radius class for radius-table");
  scan->add_option("--gamma", gamma_opt);
  scan->add_option("--beta", beta_opt);
  scan->add_option("--m", scan_m, "scan samples (env STARQ_GRID_M)");
  scan->add_option("--output", output);

  try {
    app.parse(argc, argv);
    if (constants->parsed()) return cmd_constants(alpha_str, format, output);
    if (radius->parsed())
      return cmd_radius(cls, alpha_str, gamma_opt, beta_opt, format, output);
    if (boundary->parsed()) return cmd_boundary(alpha_str, samples, format, output);
    if (bound->parsed())
      return cmd_bound(bound_kind, alpha_str, t_weight, n_index, format, output);
    if (membership->parsed())
      return cmd_membership(fspec, cls, alpha_str, b_param, rho_param, qgamma_param,
                            beta_param, radii_csv, m_param, format, output);
    if (scan->parsed())
      return cmd_scan(scan_kind, scan_range, cls, gamma_opt, beta_opt, scan_m, output);
    return kExitInvalid;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const NoRootError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
