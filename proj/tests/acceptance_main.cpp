// Acceptance gate: one line per criterion, each running the shared
// verification drivers with the pinned parameters and tolerances.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "twconj/verify.hpp"

namespace {

struct Criterion {
  std::string label;
  std::vector<std::string> driver_ids;
  twconj::VerifyOptions options;
  double time_limit_s;  // 0 = untimed
};

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  twconj::VerifyOptions defaults;

  twconj::VerifyOptions permuted = defaults;
  permuted.samples = 200;

  twconj::VerifyOptions zd = defaults;
  zd.samples = 1000;

  std::vector<Criterion> criteria = {
      {"monoid-isomorphism", {"monoid-iso"}, defaults, 60.0},
      {"diagonal-formula", {"diag-product"}, defaults, 120.0},
      {"permuted-diagonal-formula", {"permuted-diag"}, permuted, 300.0},
      {"sum-formula-and-bound", {"sum-formula", "upper-bound"}, defaults, 0.0},
      {"invariance-lemmas", {"inner-invariance", "conj-invariance", "cyclic-shift"}, defaults,
       0.0},
      {"jabara-bound", {"jabara"}, defaults, 0.0},
      {"johnson-structure", {"johnson"}, defaults, 300.0},
      {"characteristic-factor", {"characteristic-factor"}, defaults, 0.0},
      {"spectrum-containments", {"product-containment"}, defaults, 0.0},
      {"zdirectsum-example", {"zdirectsum"}, zd, 10.0},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    auto start = Clock::now();
    bool ok = true;
    long long cases = 0;
    std::string detail;
    try {
      for (const auto& id : criterion.driver_ids) {
        twconj::VerifyResult result = twconj::run_verifier(id, criterion.options);
        cases += result.cases;
        if (!result.ok) {
          ok = false;
          detail = id + ": " + result.summary + "\n" + result.counterexample.dump(2);
          break;
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_time = criterion.time_limit_s == 0.0 || elapsed <= criterion.time_limit_s;
    if (!ok || !in_time) ++failures;

    std::printf("%s criterion-%02zu %-28s cases=%-7lld %.2fs", (ok && in_time) ? "PASS" : "FAIL",
                i + 1, criterion.label.c_str(), cases, elapsed);
    if (criterion.time_limit_s > 0.0) std::printf(" (limit %.0fs)", criterion.time_limit_s);
    std::printf("\n");
    if (!ok) std::printf("  %s\n", detail.c_str());
    std::fflush(stdout);
  }

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
