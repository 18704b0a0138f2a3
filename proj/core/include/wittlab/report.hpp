#pragma once

#include <string>
#include <vector>

namespace wittlab {

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Ordered list of named checks; a report passes when every check passes.
struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.ok, c.detail});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
};

}  // namespace wittlab
