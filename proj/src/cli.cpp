#include "gion/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "gion/claims.hpp"
#include "gion/figure.hpp"
#include "gion/geometry.hpp"
#include "gion/interpretations.hpp"
#include "gion/inverse_solver.hpp"
#include "gion/json_output.hpp"

namespace gion::cli {
namespace {

struct AngleArgs {
  std::optional<double> central_deg;
  std::optional<double> theta_rad;
  double radius = 1.0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void add_angle_options(CLI::App* cmd, AngleArgs& args) {
  auto* deg = cmd->add_option("--central-deg", args.central_deg,
                              "Central angle in degrees, in (0, 180)");
  auto* rad = cmd->add_option("--theta-rad", args.theta_rad,
                              "Half central angle in radians, in (0, pi/2)");
  deg->excludes(rad);
  cmd->add_option("--radius", args.radius, "Large-circle radius")
      ->capture_default_str();
}

SegmentConfig make_config(const AngleArgs& args) {
  if (!args.central_deg && !args.theta_rad) {
    throw UsageError("one of --central-deg or --theta-rad is required");
  }
  return args.central_deg
             ? SegmentConfig::from_central_degrees(args.radius,
                                                   *args.central_deg)
             : SegmentConfig(args.radius, *args.theta_rad);
}

std::string construct_text(const SegmentMetrics& m) {
  std::ostringstream os;
  os << "central angle = " << num(radians_to_degrees(m.central)) << "°\n"
     << "theta = " << num(m.theta) << " rad\n"
     << "R = " << num(m.R) << "\n"
     << "a = " << num(m.a) << "  (chord)\n"
     << "m = " << num(m.m) << "  (bisector)\n"
     << "r = " << num(m.r) << "  (circle radius)\n"
     << "s = " << num(m.s) << "  (square side)\n"
     << "arc = " << num(m.arc) << "\n"
     << "circle center = (" << num(m.circle_center.x) << ", "
     << num(m.circle_center.y) << ")\n"
     << "square origin = (" << num(m.square_origin.x) << ", "
     << num(m.square_origin.y) << ")\n";
  return os.str();
}

std::string solve_text(double p, double q,
                       const std::vector<SolveResult>& solutions,
                       const std::string& interpretation) {
  std::ostringstream os;
  os << "p = " << num(p) << ", q = " << num(q) << "\n";
  if (solutions.empty()) {
    os << "no solutions: q must lie in the open interval (" << num(kQInfimum)
       << ", " << num(kQSupremum) << ") and be attained by q(theta)\n";
    return os.str();
  }
  os << solutions.size() << " solution(s)\n";
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    os << "\n[" << i + 1 << "]\n" << render_solution(solutions[i], interpretation);
  }
  return os.str();
}

std::string verify_text(const ClaimReport& rep) {
  std::ostringstream os;
  os << "a = 2r + 2m holds at central angle " << num(rep.central_chord_identity)
     << "°\n"
     << "R = 2s holds at central angle " << num(rep.central_square_identity)
     << "°\n"
     << "at 140°, R = 1: a - (2r + 2m) = " << num(rep.chord_residual_at_140)
     << "\n"
     << "at 140°, R = 1: R - 2s = " << num(rep.square_residual_at_140) << "\n"
     << "protractor consistent within " << num(rep.tolerance_deg)
     << "°: " << (rep.protractor_consistent ? "yes" : "no") << "\n";
  return os.str();
}

std::string haiku_text(const HaikuLines& h) {
  std::ostringstream os;
  os << h.line1_expr << " = " << num(h.line1_val) << "\n"
     << h.line2_expr << " = " << num(h.line2_val) << "\n"
     << h.line3_expr << " = " << num(h.line3_val) << "\n"
     << "exact perimeter a + arc = " << num(h.exact_perimeter_line2) << "\n"
     << "(values at R = 1)\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gion Shrine sangaku solver and verifier", "gion"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  AngleArgs angle;

  auto* construct = app.add_subcommand("construct", "Forward construction");
  add_angle_options(construct, angle);
  add_format(construct);

  double p = 0.0, q = 0.0;
  std::string interpretation{kDefaultInterpretation};
  SolverOptions solver_opts;
  auto* solve = app.add_subcommand("solve", "Recover all figures from p, q");
  solve->add_option("--p", p, "p = a + m + s + r")->required();
  solve->add_option("--q", q, "q = m/a + r/m + s/r")->required();
  solve->add_option("--interpretation", interpretation,
                    "Notation used for text output")
      ->capture_default_str();
  solve->add_option("--grid-size", solver_opts.grid_size, "Scan samples")
      ->capture_default_str();
  add_format(solve);

  double tolerance_deg = kDefaultProtractorToleranceDeg;
  auto* verify = app.add_subcommand("verify", "Check the construction claims");
  verify->add_option("--tolerance-deg", tolerance_deg,
                     "Protractor tolerance in degrees")
      ->capture_default_str();
  add_format(verify);

  bool ascii_pi = false;
  auto* haiku_cmd = app.add_subcommand("haiku", "Circumference and perimeter lines");
  add_angle_options(haiku_cmd, angle);
  haiku_cmd->add_flag("--ascii-pi", ascii_pi, "Write pi instead of π");
  add_format(haiku_cmd);

  int figure = 6;
  std::string out_path;
  RenderStyle style;
  bool no_labels = false;
  auto* render = app.add_subcommand("render", "Write an SVG figure");
  add_angle_options(render, angle);
  render->add_option("--figure", figure, "Figure to draw")
      ->check(CLI::IsMember({6, 7}))
      ->required();
  render->add_option("--out", out_path, "Output SVG path")->required();
  render->add_option("--width", style.canvas_width)->capture_default_str();
  render->add_option("--height", style.canvas_height)->capture_default_str();
  render->add_flag("--no-labels", no_labels);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("gion");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gion: " << e.what() << "\n";
    return kExitUsageError;
  }

  const bool json = format == "json";
  std::string result;
  try {
    if (construct->parsed()) {
      const SegmentMetrics m = metrics(make_config(angle));
      result = json ? dump_json(to_json(m)) : construct_text(m);
    } else if (solve->parsed()) {
      find_interpretation(interpretation);
      const auto solutions = solve_pq(p, q, solver_opts);
      result = json ? dump_json(solution_set_json(p, q, solutions))
                    : solve_text(p, q, solutions, interpretation);
    } else if (verify->parsed()) {
      const ClaimReport rep = verify_paper_claims(tolerance_deg);
      result = json ? dump_json(to_json(rep)) : verify_text(rep);
    } else if (haiku_cmd->parsed()) {
      const HaikuLines h = haiku(make_config(angle),
                                 ascii_pi ? PiStyle::kAscii : PiStyle::kUnicode);
      result = json ? dump_json(to_json(h)) : haiku_text(h);
    } else if (render->parsed()) {
      style.show_labels = !no_labels;
      const SegmentConfig cfg = make_config(angle);
      const std::string svg =
          figure == 6 ? render_figure6(cfg, style) : render_figure7(cfg, style);
      std::ofstream file(out_path, std::ios::binary);
      if (!file || !(file << svg) || !file.flush()) {
        err << "gion: cannot write '" << out_path << "'\n";
        return kExitDomainError;
      }
    }
  } catch (const UsageError& e) {
    err << "gion: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "gion: " << e.what() << "\n";
    return kExitDomainError;
  }
  out << result;
  return kExitOk;
}

}  // namespace gion::cli
