#pragma once

// The acceptance suites, shared by the test binary and `serrewt verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace serrewt::acceptance {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts on success, first failure otherwise
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 20240601;
};

constexpr int kCriteria = 8;

Result run(int id, const Options& opt = {});
std::vector<Result> run_all(const Options& opt = {}, const std::function<void(const Result&)>& on_result = {});

// "[PASS] 3 partition: ..." one line per criterion.
std::string format_line(const Result& r);

}  // namespace serrewt::acceptance
