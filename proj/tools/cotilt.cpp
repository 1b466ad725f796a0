#include <iostream>
#include <string>
#include <vector>

#include "cotilt/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const cotilt::cli::CommandReport report = cotilt::cli::run(args);
  (report.exit_code() == 2 && !report.json_output ? std::cerr : std::cout) << report.render();
  return report.exit_code();
}
