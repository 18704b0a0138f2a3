#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wittlab/report.hpp"

namespace wittlab::suites {

struct Options {
  long max = 0;  // suite-specific size override; 0 keeps the default
  int cap = 8;   // weight/order cap for the heavy suites
  std::uint64_t seed = 20240917;
};

struct Info {
  std::string name;
  int criterion;  // acceptance criterion number
  std::string summary;
};

const std::vector<Info>& all();
// Accepts aliases; nullptr when unknown.
const Info* find(const std::string& name);

struct Result {
  Report report;
  std::string summary;  // one line for the OK/FAILED footer
};
Result run(const std::string& name, const Options& opts = {});

}  // namespace wittlab::suites
