#pragma once

#include "sgen/generate.hpp"

namespace sgen {

inline constexpr const char* kToolVersion = "1.0.0";

struct FamilyRun {
  FamilyId id;
  bool built = false;
  bool axioms_ok = false;
  std::string axiom_detail;
  std::size_t dim = 0;
  Certificate cert;
  std::string error;  // structural failure description, empty when ok

  bool ok() const { return built && axioms_ok && cert.generated && error.empty(); }
};

struct RunOptions {
  std::size_t budget = 8;
  ClosureMode mode = ClosureMode::ungraded;
  bool allow_large = false;
};

/// Full verification pipeline for one family: build, axiom check, weight
/// decomposition, candidate construction, closure certification.
/// usage_error propagates (bad params, size cap); structural failures land in
/// the returned record.
FamilyRun run_family(const FamilyId& id, const RunOptions& opt);

std::string certificate_json(const Certificate& c);
std::string family_run_json(const FamilyRun& r);
std::string family_run_text(const FamilyRun& r);

/// Aggregated RunReport, families sorted by selector.
std::string run_report_json(std::vector<FamilyRun> runs);
std::string run_report_text(std::vector<FamilyRun> runs);

std::string weight_table_json(const BuiltFamily& f);
std::string weight_table_text(const BuiltFamily& f);

/// Structure table plus weight table, the shape the checked-in fixtures use.
std::string fixture_json(const BuiltFamily& f);

std::string catalog_text();
std::string catalog_json();

}  // namespace sgen
