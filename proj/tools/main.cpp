#include "CLI11.hpp"
#include "mahlervol/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "mahlervol: Mahler measures of t(x^m - 1)y - (x^n - 1) by quadrature, "
      "closed form, and hyperbolic volume"};
  app.require_subcommand(0, 1);

  mahlervol::RunConfig cfg;

  auto add_mn = [&cfg](CLI::App* sub) {
    sub->add_option("-m", cfg.m, "first exponent")->required();
    sub->add_option("-n", cfg.n, "second exponent")->required();
  };
  auto add_t = [&cfg](CLI::App* sub) {
    sub->add_option("-t", cfg.t, "scale parameter (default 1)");
  };
  auto add_output = [&cfg](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output_path,
                    "write the report here instead of stdout");
  };
  auto add_format = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json (default) or csv");
  };

  CLI::App* measure = app.add_subcommand(
      "measure", "Mahler measure by closed form and quadrature");
  add_mn(measure);
  add_t(measure);
  measure->add_option("--tol", cfg.tol, "quadrature tolerance (default 1e-10)");
  add_output(measure);

  CLI::App* roots = app.add_subcommand(
      "roots", "unit roots of the boundary function on the upper semicircle");
  add_mn(roots);
  add_t(roots);
  add_format(roots);
  add_output(roots);

  CLI::App* polygons = app.add_subcommand(
      "polygons", "admissible cyclic polygons attached to the unit roots");
  add_mn(polygons);
  add_t(polygons);
  add_output(polygons);

  CLI::App* verify = app.add_subcommand(
      "verify", "check pi * dilog term == signed polyhedral volume sum");
  add_mn(verify);
  add_t(verify);
  verify->add_option("--tol", cfg.tol, "residual tolerance (default 1e-10)");
  add_output(verify);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "threshold events of the root configuration over a t range");
  add_mn(sweep);
  sweep->add_option("--t-lo", cfg.t_lo, "range start (default 0.1)");
  sweep->add_option("--t-hi", cfg.t_hi, "range end (default 5)");
  sweep->add_option("--steps", cfg.steps, "consistency sweep size (default 64)");
  add_format(sweep);
  add_output(sweep);

  CLI::App* apoly = app.add_subcommand(
      "apoly", "gluing exponent matrix, symplectic check, identity solutions");
  add_mn(apoly);
  add_output(apoly);

  CLI::App* svg = app.add_subcommand(
      "svg", "render the admissible polygons as SVG files");
  add_mn(svg);
  add_t(svg);
  svg->add_option("--out-dir", cfg.out_dir, "target directory (default .)");
  add_output(svg);

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
  return mahlervol::run_cli(cfg);
}
