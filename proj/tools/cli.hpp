#pragma once

// The serrewt command-line front end, callable in-process for golden tests.

#include <ostream>
#include <string>
#include <vector>

namespace serrewt::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kDomainError = 1;    // bad config or violated precondition
constexpr int kVerifyFailed = 2;   // a computed check did not hold

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace serrewt::cli
