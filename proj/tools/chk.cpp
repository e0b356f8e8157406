#include <CLI11.hpp>

#include <iostream>

#include "cyclo/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact checks for cyclic rational Cherednik / quiver variety identities"};
  app.require_subcommand(1);

  cyclo::cli::RunConfig cfg;
  std::string lambda_csv, theta_csv, cap_csv;
  unsigned long long seed = 0;
  bool have_seed = false;

  auto add_common = [&](CLI::App* sub, bool needs_lambda, bool needs_theta) {
    sub->add_option("--l", cfg.l, "rank (number of quiver vertices)")
        ->required();
    auto* lo = sub->add_option("--lambda", lambda_csv,
                               "comma-separated rationals, e.g. 3/4,1/4");
    auto* to = sub->add_option("--theta", theta_csv,
                               "comma-separated integers, e.g. -1,1");
    if (needs_lambda) lo->required();
    if (needs_theta) to->required();
    sub->add_option("--m", cfg.m, "power of the character / shift multiple");
    sub->add_option("--cap", cap_csv, "bidegree cap A,B");
    sub->add_option("--window", cfg.window, "series window (coefficient count)");
    auto* so = sub->add_option("--seed", seed, "seed for randomized sweeps");
    so->each([&](const std::string&) { have_seed = true; });
    sub->add_option("--out", cfg.out_path, "write the JSON report to FILE");
  };

  add_common(app.add_subcommand("order", "orderings, eta, alcove membership"),
             false, true);
  add_common(app.add_subcommand("homs", "standard-module hom table"), true,
             false);
  add_common(app.add_subcommand("fixed-points", "torus fixed point patterns"),
             false, true);
  add_common(app.add_subcommand("charts", "toric charts and geometric order"),
             false, true);
  add_common(app.add_subcommand("sections", "section bases and counts"), false,
             true);
  add_common(app.add_subcommand("abl-verify", "character identity check"),
             false, true);
  add_common(
      app.add_subcommand("shift-verify", "shift functor image verification"),
      true, true);
  add_common(app.add_subcommand("gr-verify", "graded image comparison"), true,
             true);
  add_common(app.add_subcommand("ch-cycles", "characteristic cycles"), false,
             true);
  add_common(app.add_subcommand("sweep", "run everything over alcove grids"),
             false, false);

  CLI11_PARSE(app, argc, argv);

  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (!lambda_csv.empty()) cfg.lambda = cyclo::cli::parse_lambda(lambda_csv);
    if (!theta_csv.empty()) cfg.theta = cyclo::cli::parse_theta(theta_csv);
    if (!cap_csv.empty()) {
      auto c = cyclo::cli::parse_theta(cap_csv);
      if (c.size() != 2) throw std::invalid_argument("--cap expects A,B");
      cfg.cap = {c[0], c[1]};
    }
  } catch (const std::exception& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  }
  if (have_seed) cfg.seed = seed;

  cyclo::cli::RunResult res = cyclo::cli::run(cfg);
  std::cout << res.report.dump(2) << "\n";
  return res.exit_code;
}
