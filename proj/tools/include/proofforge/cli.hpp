#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace proofforge::cli {

// args excludes the program name. Exit codes: 0 ok / yes, 1 no (decide,
// failed selftest), 2 error with a single `error: <code>: <message>` line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  bool debug = false;
};
// randomized invariant suites; one line per suite, returns the failure count
std::size_t selftest(const SelftestOptions& o, std::ostream& out);

}  // namespace proofforge::cli
