#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace ashom::cli;
  CLI::App app{"Exact normal (co)homology of finite covered spaces and cochain complexes"};
  app.require_subcommand(1);

  JobSpec job;
  std::string degree;
  std::string cap;

  struct Command {
    const char* name;
    const char* help;
    bool needs_input;
  };
  const Command commands[] = {
      {"cohomology", "integer cohomology H^n of a complex or covered space", true},
      {"homology", "normal homology H_n(C; G) through the cone construction", true},
      {"ucf-check", "universal coefficient check; without a file, sweeps the corpus", false},
      {"dowker-check", "Vietoris versus nerve cohomology; without a file, runs the exhaustive sweep", false},
      {"pair-check", "long exact sequence of a covering pair", true},
      {"dimension-check", "homology of a point", false},
      {"tower-lim", "inverse limit of a tower", true},
      {"tower-lim1", "Mittag-Leffler and lim¹ verdict of a tower", true},
      {"milnor-check", "Milnor sequence shape check", true},
      {"coefficient-les", "long exact sequence of a coefficient extension", true},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    auto* in = sub->add_option("input", job.input, "input JSON file");
    if (c.needs_input) in->required();
    sub->add_option("--coeff", job.coeff, "coefficient group, e.g. Z, Z/6, Z^2+Z/2");
    sub->add_option("--degree", degree, "degree n or range a..b");
    sub->add_flag("--json", job.json, "structured output");
    sub->add_option("--modulus-cap", cap, "largest modulus the saturation protocol may use");
    sub->add_option("--seed", job.seed, "seed for corpus sweeps");
    sub->add_option("--cover", job.cover, "covering name in a space file");
    sub->add_option("--subcover", job.subcover, "covering of the closed subspace");
    sub->add_option("--ses", job.ses, "extension file {G, G1, G2, phi, psi}");
    sub->add_flag("--sweep", job.sweep, "run the exhaustive sweep");
    sub->callback([&, name = std::string(c.name)] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
    if (!degree.empty()) job.degrees = parse_degree_range(degree);
    if (!cap.empty()) job.modulus_cap = cap;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
  return run(job, std::cout, std::cerr);
}
