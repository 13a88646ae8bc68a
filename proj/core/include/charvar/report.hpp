#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charvar/census.hpp"
#include "charvar/pencil.hpp"
#include "charvar/sheaf.hpp"
#include "charvar/twisted.hpp"

namespace charvar {

inline constexpr int kReportSchemaVersion = 1;

std::string tool_version();

/// Exact values are strings, counts are integers; keys are sorted.
nlohmann::json arrangement_json(const Arrangement& arr);
nlohmann::json lattice_json(const IntersectionLattice& lattice);
nlohmann::json component_json(const ComponentDescriptor& w);
nlohmann::json pencil_json(const PencilAnalysis& pa);

nlohmann::json lattice_report(const Arrangement& arr, const IntersectionLattice& lattice);
nlohmann::json census_report(const CensusResult& result);
nlohmann::json pencil_report(const PencilAnalysis& pa);

struct ScanResult {
  Arrangement arrangement;
  std::int64_t order = 2;
  std::uint64_t seed = 1;
  Rational shear;
  std::vector<ScanEntry> entries;  // projective characters
};
nlohmann::json scan_report(const ScanResult& scan);

nlohmann::json sheaf_report(const SheafScanOptions& options, const SheafScanReport& report);

/// Two-space indented document with a trailing newline.
std::string render(const nlohmann::json& doc);

}  // namespace charvar
