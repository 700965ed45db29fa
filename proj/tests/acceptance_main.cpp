// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "serrewt/acceptance.hpp"

int main(int argc, char** argv) {
  serrewt::acceptance::Options opt;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) opt.seed = std::stoull(argv[++i]);
    else if (arg == "--only" && i + 1 < argc) only = std::stoi(argv[++i]);
  }
  int failures = 0;
  auto report = [&](const serrewt::acceptance::Result& r) {
    std::cout << serrewt::acceptance::format_line(r) << std::endl;
    if (!r.pass) ++failures;
  };
  if (only) report(serrewt::acceptance::run(only, opt));
  else serrewt::acceptance::run_all(opt, report);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
