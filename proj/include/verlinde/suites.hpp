#pragma once

// Batch property checks behind `verlinde-lab verify`. Every suite is
// deterministic given its options.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "verlinde/config.hpp"
#include "verlinde/json_io.hpp"

namespace verlinde {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Runs the suite at this prime only.
  std::optional<int> p;
  /// Overrides the default number of random instances.
  std::optional<std::uint64_t> instances;
  std::size_t cap = default_cap();
};

struct PropertyReport {
  std::string property;
  std::uint64_t instances = 0;
  std::vector<std::string> failures;  // at most kMaxRecordedFailures messages
  std::uint64_t failure_count = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyReport> properties;
  double seconds = 0;

  bool passed() const;
};

inline constexpr std::size_t kMaxRecordedFailures = 20;

/// In the order `verify all` runs them.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

Json to_json(const PropertyReport& r);
Json to_json(const SuiteReport& r);

}  // namespace verlinde
