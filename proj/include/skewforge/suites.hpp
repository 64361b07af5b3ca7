#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace skewforge {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  /// Residual or witness; always set for failures.
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;  // sorted by name
  double elapsed_seconds = 0;

  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

struct SuiteOptions {
  /// Restricts gl-relations, oracle-crosscheck and torus to one rank.
  std::optional<int> n;
  std::uint64_t seed = 1;
  /// Restricts the gwa suite to one polynomial in t.
  std::optional<std::string> a;
};

/// gl-relations, gwa, torus, hecke, support-law, center, oracle-crosscheck, or
/// all. UnknownSuite otherwise.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});
const std::vector<std::string>& suite_names();

std::string format_report(const SuiteReport& r);
nlohmann::json report_to_json(const SuiteReport& r);

}  // namespace skewforge
