#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sexag {

/// One checked value in a scenario replay: the computed rendering next
/// to the rendering the source attests.
struct ReportLine {
  std::string label;
  std::string expected;
  std::string actual;
  bool ok = false;
};

/// A self-verifying replay of one attested computation. passed() is true
/// iff every line reproduced its expected value.
struct ScenarioReport {
  std::string name;
  std::string title;
  std::vector<ReportLine> lines;

  bool passed() const;
};

/// "enmetena", "ybc4669", "vat8528", "ao6770".
const std::vector<std::string>& scenario_names();

/// Replays the named case study end to end through the library and
/// checks every intermediate against its attested value. Throws
/// DomainError for unknown names.
ScenarioReport run_scenario(std::string_view name);

} // namespace sexag
