// Benchmark driver: convergence tables for box volume potentials.
//
// Exit status: 0 success, 2 usage error, 3 numerical failure.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "boxpot/run_spec.hpp"

int main(int argc, char** argv) {
  boxpot::RunSpec spec;
  std::string format = "csv";

  CLI::App app{"High-order cubature of advection-diffusion volume potentials over boxes"};
  app.set_config("--config", "", "key=value file; command-line flags override it");
  app.add_option("--dimension", spec.dimension, "space dimension n")
      ->capture_default_str();
  app.add_option("--profile", spec.profile,
                 "test profile: cos2, poly6, poly4, sinsq, exppoly")
      ->capture_default_str();
  app.add_option("--order", spec.order, "approximation order M (rate 2M)")
      ->capture_default_str();
  app.add_option("--lambda-re", spec.lambda_re, "Re lambda^2")->capture_default_str();
  app.add_option("--lambda-im", spec.lambda_im, "Im lambda^2")->capture_default_str();
  app.add_option("--extension", spec.extension,
                 "density extension: none, ext1, ext2, ext3")
      ->capture_default_str();
  app.add_option("--shape-d", spec.shape_d, "Gaussian shape parameter D")
      ->capture_default_str();
  app.add_option("--radius-r", spec.radius_r, "support radius r")->capture_default_str();
  app.add_option("--alpha", spec.alpha, "substitution constant alpha")
      ->capture_default_str();
  app.add_option("--beta", spec.beta, "substitution constant beta")
      ->capture_default_str();
  app.add_option("--tau", spec.tau, "trapezoid step")->capture_default_str();
  app.add_option("--node-lo", spec.node_lo, "lowest quadrature node index")
      ->capture_default_str();
  app.add_option("--node-hi", spec.node_hi, "highest quadrature node index")
      ->capture_default_str();
  app.add_option("--h-inv", spec.h_inv, "comma list of 1/h values")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--point", spec.point,
                 "comma list of evaluation-point components; padded with zeros")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--format", format, "output format: csv or markdown")
      ->capture_default_str();
  app.add_option("--output", spec.output_path, "output path (default: stdout)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (format == "csv") {
    spec.format = boxpot::OutputFormat::csv;
  } else if (format == "markdown") {
    spec.format = boxpot::OutputFormat::markdown;
  } else {
    std::cerr << "usage error: format must be csv or markdown\n";
    return 2;
  }
  return boxpot::run_table(spec, std::cerr);
}
