#pragma once

// JSON certificates and the campaign runner behind the CLI.

#include "hilbnef/bridgeland.hpp"
#include "hilbnef/coneconj.hpp"
#include "hilbnef/hilb.hpp"
#include "hilbnef/json_io.hpp"
#include "hilbnef/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbnef::report {

Json orbit_json(const Divisor& start, int max_h_degree, const std::vector<Divisor>& orbit);
Json nef_certificate_json(const Divisor& d, const surface::NefCertificate& cert);
Json ample_json(const std::string& which, int n, const surface::AmpleDecision& dec);
/// Per-curve summaries; full_pairings adds every (divisor, curve) pairing.
Json theorem_json(const hilb::TheoremReport& rep, bool full_pairings = false);
Json gieseker_json(const bridgeland::GiesekerCertificate& cert);
Json coverage_json(const coneconj::CoverageReport& rep);

/// Printed value next to the value recomputed exactly from the definitions.
struct DiscrepancyRow {
  std::string item;
  std::string slice;  // "A1", "A2" or "" when slice independent
  int n = 0;
  std::string printed_expression;
  std::optional<Rational> printed_value;
  std::string recomputed_expression;
  std::optional<Rational> recomputed_value;
  /// For wall rows: whether the recomputed wall still lies inside the fiber
  /// wall (center >= -1, or radius^2 above the rank >= 2 bound).
  std::optional<bool> dominance_holds;
  /// The same test applied to the printed value.
  std::optional<bool> printed_dominance_holds;
};

std::vector<DiscrepancyRow> discrepancy_table(int n);
Json discrepancy_json(const std::vector<DiscrepancyRow>& rows);

struct Campaign {
  int n_min = 3;
  int n_max = 3;
  int max_h_degree = 3;
  std::vector<bridgeland::PaperSlice> slices{bridgeland::PaperSlice::A1, bridgeland::PaperSlice::A2};
  int n_cap = 50;
};

enum ExitCode : int { kCertified = 0, kFalsified = 1, kUsage = 2 };

struct CampaignResult {
  int exit_code = kCertified;
  Json report;
};

/// Runs the ampleness, Gieseker-wall, nef-class and duality checks for every
/// n in the range. Invalid campaigns return kUsage with an "error" report.
CampaignResult run_campaign(const Campaign& c);

}  // namespace hilbnef::report
