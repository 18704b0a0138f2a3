// Runs every acceptance criterion at its stated parameters and prints one
// PASS/FAIL line per criterion.  Exit status is 0 exactly when the failures
// are the known expected ones; an unexpected pass is reported as an error so
// the expectation list cannot go stale.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>

#include "suites.hpp"

namespace {

// Criterion 7 compares against a printed coproduct table whose mu_P(h3)
// entry violates the counit law; the computed value is right.
const std::set<int> kExpectedFailures = {7};

}  // namespace

int main() {
  int unexpected = 0, passed = 0;
  for (const auto& info : wittlab::suites::all()) {
    auto t0 = std::chrono::steady_clock::now();
    auto res = wittlab::suites::run(info.name);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = res.report.ok();
    bool expected_fail = kExpectedFailures.count(info.criterion) > 0;
    std::string detail;
    if (ok) {
      ++passed;
      detail = res.summary;
    } else {
      const auto* f = res.report.first_failure();
      detail = f->name + (f->detail.empty() ? "" : ": " + f->detail);
    }
    if (ok == expected_fail) ++unexpected;
    std::printf("%s criterion %2d %-22s %s%s [%zu checks, %.2fs]\n", ok ? "PASS" : "FAIL", info.criterion,
                info.name.c_str(), detail.c_str(),
                ok && expected_fail ? " (XPASS: remove from expected failures)"
                : !ok && expected_fail ? " (expected failure)"
                                       : "",
                res.report.checks.size(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass; %d unexpected result(s)\n", passed, wittlab::suites::all().size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
