// Runs every acceptance criterion with default options and prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "verlinde/suites.hpp"

using namespace verlinde;

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* title;
  std::optional<double> time_limit;  // seconds
};

const std::vector<Criterion> kCriteria = {
    {1, "fusion-oracle", "fusion agrees with semisimplified Jordan tensor products", 60.0},
    {2, "fpdim-hom", "fpdim is a ring homomorphism", std::nullopt},
    {3, "finti", "delta: multiplicativity, congruence, bound, second identity", 300.0},
    {4, "alternating", "alternating dimension and alternating powers", 300.0},
    {5, "padic", "p-adic dimension equals ad; digit extraction round trip", std::nullopt},
    {6, "frobenius", "Frobenius functor identities", 10.0},
    {7, "key-lemma", "Fr_+^(2) and Fr_+ o Fr_+ have equal Jordan types", 600.0},
    {8, "sd", "symmetric-group dimension of trivial modules; sd <= ad", std::nullopt},
    {9, "appendix", "greedy chain, James envelope, faithfulness bound", 120.0},
    {10, "mckay", "McKay graph of L_2 is the A_{p-1} path", std::nullopt},
};

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      const SuiteReport report = run_suite(c.suite, SuiteOptions{});
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::size_t instances = 0, failures = 0;
      for (const auto& prop : report.properties) {
        instances += prop.instances;
        failures += prop.failure_count;
        if (prop.failure_count > 0 && detail.size() < 400) {
          detail += " [" + prop.property + ": " + std::to_string(prop.failure_count) + " failures";
          if (!prop.failures.empty()) detail += ", e.g. " + prop.failures.front();
          detail += "]";
        }
      }
      ok = failures == 0 && instances > 0;
      char timing[96];
      std::snprintf(timing, sizeof timing, " (%zu instances, %.2f s", instances, secs);
      detail = timing + std::string(c.time_limit ? ", limit " + std::to_string(static_cast<int>(*c.time_limit)) + " s)" : ")") + detail;
      if (c.time_limit && secs >= *c.time_limit) {
        ok = false;
        detail += " [time limit exceeded]";
      }
    } catch (const std::exception& e) {
      detail = std::string(" [error: ") + e.what() + "]";
    }
    std::printf("%s criterion %d (%s): %s%s\n", ok ? "PASS" : "FAIL", c.number, c.suite, c.title, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  return failed == 0 ? 0 : 1;
}
