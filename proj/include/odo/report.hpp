#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "odo/error.hpp"
#include "odo/fullgroup.hpp"
#include "odo/ktheory.hpp"
#include "odo/spec_io.hpp"

namespace odo {

struct ReportOptions {
  std::size_t max_degree = 3;
  /// Levels for finite AH certificates; empty picks the first few with n_i >= 3.
  std::vector<std::size_t> ah_levels;
  bool ah_colimit = true;
  /// Horizon for the extendable fixed-point counts; defaults to depth + 3.
  std::optional<std::size_t> horizon;
  std::size_t fixed_depth = 3;
  std::size_t window = 3;
};

/// The first (at most three) levels with 3 <= n_i <= 10^4.
std::vector<std::size_t> default_ah_levels(const OdometerSpec& spec);

/// {"error": <code name>, "message": ...}
Json error_entry(const Error& e);

Json topfree_json(const OdometerSpec& spec);
Json fixed_points_json(const OdometerSpec& spec, const ReportOptions& options);
Json homology_json(const HomologyReport& h);
Json ktheory_json(const KTheoryReport& k);
Json hk_json(const HkVerdict& v);
Json ah_json(const AhCertificate& cert);

/// Every section either holds its value, a structured error entry, or a
/// "not applicable: <reason>" string.
Json run_report(const OdometerSpec& spec, const ReportOptions& options);
Json hk_check(const OdometerSpec& spec, const ReportOptions& options);
Json ah_check(const OdometerSpec& spec, const ReportOptions& options);

/// Closed form against brute force, one entry per pair with status
/// "agree", "disagree" or "skipped".
Json run_oracles(const OdometerSpec& spec, std::size_t depth);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& report);

}  // namespace odo
