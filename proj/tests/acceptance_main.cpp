#include "taquin/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  taquin::AcceptanceOptions options;
  bool serial = false;
  app.add_option("--seed", options.seed, "Seed for the random cases");
  app.add_flag("--serial", serial, "Use the serial reference kernels");
  CLI11_PARSE(app, argc, argv);
  if (serial) options.execution = taquin::Execution::serial;

  int failed = 0;
  for (const auto& r : taquin::run_acceptance(options)) {
    std::cout << taquin::format_line(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
