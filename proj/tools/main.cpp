#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace nhrlc::cli;

  CLI::App app{"Non-Hermitian analysis of the series RLC circuit"};
  app.require_subcommand(1);

  AnalyzeOptions an;
  CLI::App* analyze = app.add_subcommand("analyze", "Full JSON report for one circuit");
  analyze->add_option("--alpha", an.alpha, "Damping rate R/(2L)");
  analyze->add_option("--omega0", an.omega0, "Natural frequency 1/sqrt(LC)");
  analyze->add_option("--R", an.resistance, "Resistance (may be negative)");
  analyze->add_option("--L", an.inductance, "Inductance");
  analyze->add_option("--C", an.capacitance, "Capacitance");

  SweepOptions sw;
  CLI::App* sweep = app.add_subcommand("sweep", "Eigenvalues of H across a range of alpha, as CSV");
  sweep->add_option("--omega0", sw.omega0)->required();
  sweep->add_option("--alpha-min", sw.alpha_min)->required();
  sweep->add_option("--alpha-max", sw.alpha_max)->required();
  sweep->add_option("--steps", sw.steps)->required();

  EvolveOptions ev;
  CLI::App* evolve = app.add_subcommand("evolve", "Transient response as CSV, with method agreement");
  evolve->add_option("--alpha", ev.alpha)->required();
  evolve->add_option("--omega0", ev.omega0)->required();
  evolve->add_option("--i0", ev.i0)->required();
  evolve->add_option("--v0", ev.v0)->required();
  evolve->add_option("--L", ev.inductance)->required();
  evolve->add_option("--t-max", ev.t_max)->required();
  evolve->add_option("--dt", ev.dt)->required();
  evolve->add_option("--step", ev.step, "Integrator step")->capture_default_str();
  evolve->add_option("--method", ev.method)
      ->check(CLI::IsMember({"all", "closed", "spectral", "rk"}))
      ->capture_default_str();

  MequivOptions me;
  CLI::App* mequiv = app.add_subcommand("mequiv", "m-equivalence and similarity of two 2x2 matrices");
  mequiv->add_option("--matrix-a", me.matrix_a, "8 reals: re/im pairs, row-major")->required()->expected(8);
  mequiv->add_option("--matrix-b", me.matrix_b, "8 reals: re/im pairs, row-major")->required()->expected(8);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "nhrlc: " << e.what() << '\n';
    return kExitBadParameters;
  }

  if (*analyze) return cmd_analyze(an, std::cout, std::cerr);
  if (*sweep) return cmd_sweep(sw, std::cout, std::cerr);
  if (*evolve) return cmd_evolve(ev, std::cout, std::cerr);
  return cmd_mequiv(me, std::cout, std::cerr);
}
