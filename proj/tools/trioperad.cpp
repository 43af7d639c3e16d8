#include <iostream>

#include "trioperad/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const trioperad::Report report = trioperad::run(args);
  if (report.usage_error) {
    std::cerr << "error: " << *report.usage_error << "\n";
  } else {
    std::cout << report.render();
  }
  return report.exit_code();
}
