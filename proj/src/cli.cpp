#include "aspectsearch/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "aspectsearch/errors.hpp"
#include "aspectsearch/optimize.hpp"
#include "aspectsearch/profile.hpp"
#include "aspectsearch/quadrature.hpp"
#include "aspectsearch/simulate.hpp"
#include "aspectsearch/strategy.hpp"

namespace aspectsearch {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

/// Accepts "sin2", an inline JSON descriptor, or a path to a JSON file.
DetectionProfile load_profile(const std::string& arg) {
  if (arg == "sin2") return DetectionProfile::sin2();
  if (!arg.empty() && arg.front() == '{') return profile_from_json(arg);
  std::ifstream file(arg);
  if (!file) {
    throw std::invalid_argument("profile: \"" + arg +
                                "\" is neither \"sin2\", inline JSON, nor a "
                                "readable file");
  }
  std::ostringstream text;
  text << file.rdbuf();
  return profile_from_json(text.str());
}

/// Comma-separated values or a JSON array; radians unless `degrees`.
std::vector<double> parse_angle_list(const std::string& arg, bool degrees) {
  std::vector<double> angles;
  if (!arg.empty() && arg.front() == '[') {
    const auto doc = json::parse(arg, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) {
      throw std::invalid_argument("angles: malformed JSON array");
    }
    for (const auto& a : doc) {
      if (!a.is_number()) {
        throw std::invalid_argument("angles: entries must be numbers");
      }
      angles.push_back(a.get<double>());
    }
  } else {
    std::istringstream stream(arg);
    std::string token;
    while (std::getline(stream, token, ',')) {
      std::size_t used = 0;
      double parsed = 0.0;
      try {
        parsed = std::stod(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("angles: \"" + token +
                                    "\" is not a number");
      }
      if (used != token.size()) {
        throw std::invalid_argument("angles: \"" + token +
                                    "\" is not a number");
      }
      angles.push_back(parsed);
    }
  }
  if (angles.empty()) throw std::invalid_argument("angles: empty list");
  if (degrees) {
    for (double& a : angles) a *= kPi / 180.0;
  }
  return angles;
}

/// "m,n" or an inline JSON strategy descriptor.
StrategySpec parse_strategy(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    const auto descriptor = strategy_from_json(arg);
    if (!descriptor.has_strategy) {
      throw std::invalid_argument("strategy: descriptor has no m, n");
    }
    return descriptor.spec;
  }
  const auto comma = arg.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("strategy: expected \"m,n\"");
  }
  try {
    const int m = std::stoi(arg.substr(0, comma));
    const int n = std::stoi(arg.substr(comma + 1));
    return make_strategy(m, n);
  } catch (const NonPositive&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("strategy: expected \"m,n\" with integers");
  }
}

QuadratureRule rule_for(const DetectionProfile& g, int factors,
                        int node_override) {
  if (node_override > 0) return QuadratureRule(node_override);
  return QuadratureRule::for_product(factors, g.max_harmonic());
}

std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

struct Lattice {
  int points = 0;
  bool divides = false;
  double resolution = 0.0;

  double angle(int k) const {
    return divides ? kPi * (static_cast<double>(k) / points)
                   : k * resolution;
  }
};

Lattice make_lattice(double resolution) {
  if (!(resolution > 0.0) || resolution > kPi) {
    throw std::invalid_argument("resolution must be in (0, pi]");
  }
  Lattice lattice;
  lattice.resolution = resolution;
  lattice.points = static_cast<int>(std::floor(kPi / resolution + 1e-9));
  lattice.divides = std::abs(lattice.points * resolution - kPi) <= 1e-9;
  return lattice;
}

json optimization_to_json(const OptimizationResult& result) {
  return {{"angles", result.angles.values()},
          {"value", result.value},
          {"gradient_norm", result.gradient_norm},
          {"iterations", result.iterations},
          {"converged", result.converged}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Multi-aspect search strategies: evaluate, optimize, verify, and "
      "simulate the probability of missing a target of unknown orientation.",
      "aspectsearch"};
  app.require_subcommand(1);

  std::string profile_arg;
  std::string angles_arg;
  std::string strategy_arg;
  std::string init_arg = "random";
  int nodes_override = 0;
  int n_observations = 0;
  int max_iter = 500;
  double tol = 1e-10;
  double resolution = kPi / 360.0;
  long long trials = 0;
  std::uint64_t seed = 0;
  bool degrees = false;
  bool grid = false;

  auto* evaluate = app.add_subcommand(
      "evaluate", "No-detection probability and gradient at given angles");
  evaluate->add_option("--profile", profile_arg,
                       "profile: \"sin2\", inline JSON, or a JSON file")
      ->required();
  evaluate->add_option("--angles", angles_arg,
                       "observation angles, comma-separated or JSON array");
  evaluate->add_option("--strategy", strategy_arg,
                       "evenly-spaced strategy \"m,n\"");
  evaluate->add_option("--nodes", nodes_override, "quadrature node override");
  evaluate->add_flag("--degrees", degrees, "interpret angles as degrees");

  auto* closed_form = app.add_subcommand(
      "closed-form", "Exact strategy value for the sin^2 profile");
  closed_form->add_option("--strategy", strategy_arg, "strategy \"m,n\"")
      ->required();

  auto* verify_bound = app.add_subcommand(
      "verify-bound",
      "Check the unit-step lower bound and print the interpolating chain");
  verify_bound->add_option("--profile", profile_arg, "profile descriptor")
      ->required();
  verify_bound->add_option("--strategy", strategy_arg, "strategy \"m,n\"")
      ->required();
  verify_bound->add_option("--nodes", nodes_override,
                           "quadrature node override");

  auto* optimize =
      app.add_subcommand("optimize", "Search for minimizing angle vectors");
  optimize->add_option("--profile", profile_arg, "profile descriptor")
      ->required();
  optimize->add_option("--n", n_observations, "number of observations")
      ->required();
  optimize->add_option("--init", init_arg,
                       "start angles (comma-separated) or \"random\"");
  optimize->add_option("--seed", seed, "seed for --init random");
  optimize->add_flag("--grid", grid,
                     "exhaustive lattice search instead of descent");
  optimize->add_option("--resolution", resolution,
                       "lattice resolution, radians");
  optimize->add_option("--max-iter", max_iter, "descent iteration cap");
  optimize->add_option("--tol", tol, "gradient inf-norm tolerance");
  optimize->add_option("--nodes", nodes_override, "quadrature node override");
  optimize->add_flag("--degrees", degrees,
                     "interpret --init angles as degrees");

  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte-Carlo estimate of the no-detection probability");
  simulate_cmd->add_option("--profile", profile_arg, "profile descriptor")
      ->required();
  simulate_cmd->add_option("--angles", angles_arg, "observation angles")
      ->required();
  simulate_cmd->add_option("--trials", trials, "number of trials")
      ->required();
  simulate_cmd
      ->add_option("--seed", seed,
                   "RNG seed (mandatory: runs must be reproducible)")
      ->required();
  simulate_cmd->add_flag("--degrees", degrees,
                         "interpret angles as degrees");

  auto* sweep = app.add_subcommand(
      "sweep", "CSV of (angle offsets, G) over a lattice, for plotting");
  sweep->add_option("--profile", profile_arg, "profile descriptor")
      ->required();
  sweep->add_option("--n", n_observations, "number of observations (2 or 3)")
      ->required();
  sweep->add_option("--resolution", resolution,
                    "lattice resolution, radians");
  sweep->add_option("--nodes", nodes_override, "quadrature node override");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (evaluate->parsed()) {
      const auto profile = load_profile(profile_arg);
      const bool has_strategy = !strategy_arg.empty();
      const bool has_angles = !angles_arg.empty();
      if (has_strategy == has_angles) {
        throw std::invalid_argument(
            "evaluate: exactly one of --angles / --strategy is required");
      }
      json output;
      if (has_strategy) {
        const auto spec = parse_strategy(strategy_arg);
        const auto rule = rule_for(profile, spec.n, nodes_override);
        const auto angles = strategy_angles(spec);
        output["value"] = no_detection_probability(profile, angles, rule);
        output["gradient_norm"] = inf_norm(gradient(profile, angles, rule));
        output["g_tilde"] = no_detection_probability(profile, spec, rule);
      } else {
        const AngleVector angles(parse_angle_list(angles_arg, degrees));
        const auto rule =
            rule_for(profile, static_cast<int>(angles.size()), nodes_override);
        output["value"] = no_detection_probability(profile, angles, rule);
        output["gradient_norm"] = inf_norm(gradient(profile, angles, rule));
      }
      out << output.dump() << "\n";
      return 0;
    }

    if (closed_form->parsed()) {
      const auto spec = parse_strategy(strategy_arg);
      const json output = {{"rational", sin2_closed_form(spec).str()},
                           {"decimal", sin2_closed_form_value(spec)}};
      out << output.dump() << "\n";
      return 0;
    }

    if (verify_bound->parsed()) {
      const auto profile = load_profile(profile_arg);
      const auto spec = parse_strategy(strategy_arg);
      const auto rule = rule_for(profile, spec.n, nodes_override);
      const auto report = check_lower_bound(spec, profile, rule);
      const json output = {{"g_tilde_mn", report.strategy_value},
                           {"g_tilde_1n", report.unit_step_value},
                           {"holds", report.holds},
                           {"chain", lower_bound_chain(spec, profile, rule)}};
      out << output.dump() << "\n";
      return report.holds ? 0 : 4;
    }

    if (optimize->parsed()) {
      const auto profile = load_profile(profile_arg);
      const auto rule = rule_for(profile, n_observations, nodes_override);
      std::optional<OptimizationResult> result;
      if (grid) {
        result = grid_search(profile, n_observations, resolution, rule);
      } else {
        AngleVector start = init_arg == "random"
                                ? random_angles(n_observations, seed)
                                : AngleVector(
                                      parse_angle_list(init_arg, degrees));
        if (static_cast<int>(start.size()) != n_observations) {
          throw std::invalid_argument("optimize: --init must list exactly " +
                                      std::to_string(n_observations) +
                                      " angles");
        }
        result = local_minimize(profile, start, rule,
                                DescentOptions{max_iter, tol});
      }
      out << optimization_to_json(*result).dump() << "\n";
      return 0;
    }

    if (simulate_cmd->parsed()) {
      const SimulationConfig config{
          load_profile(profile_arg),
          AngleVector(parse_angle_list(angles_arg, degrees)), trials, seed};
      const auto result = simulate(config);
      const json output = {{"estimate", result.estimate},
                           {"std_error", result.std_error},
                           {"trials", result.trials},
                           {"seed", result.seed}};
      out << output.dump() << "\n";
      return 0;
    }

    if (sweep->parsed()) {
      const auto profile = load_profile(profile_arg);
      if (n_observations < 2 || n_observations > 3) {
        throw std::invalid_argument("sweep: --n must be 2 or 3");
      }
      const auto lattice = make_lattice(resolution);
      const auto rule = rule_for(profile, n_observations, nodes_override);
      for (int i = 1; i < n_observations; ++i) out << "mu_" << i << ",";
      out << "G\n";
      std::vector<double> angles(n_observations, 0.0);
      const int inner = n_observations == 3 ? lattice.points : 1;
      for (int k1 = 0; k1 < lattice.points; ++k1) {
        angles[1] = lattice.angle(k1);
        for (int k2 = 0; k2 < inner; ++k2) {
          if (n_observations == 3) angles[2] = lattice.angle(k2);
          const double value =
              no_detection_probability(profile, AngleVector(angles), rule);
          for (int i = 1; i < n_observations; ++i) {
            out << format_double(angles[i]) << ",";
          }
          out << format_double(value) << "\n";
        }
      }
      return 0;
    }

    throw std::invalid_argument("no subcommand given");
  } catch (const InsufficientNodes& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace aspectsearch
