#pragma once

// Report rendering for the command-line harness: text, newline-delimited
// JSON, and CSV.  Output is byte-deterministic for a fixed configuration;
// the elapsed_ms field is the one exception and can be suppressed.

#include <optional>
#include <string>
#include <vector>

#include "oddlen/claims.hpp"
#include "oddlen/poly.hpp"

namespace oddlen {

enum class OutputFormat { Text, Json, Csv };

std::optional<OutputFormat> format_from_string(std::string_view name);

std::string render_reports(const std::vector<Report>& reports, OutputFormat format,
                           bool include_timing);

std::string render_scan(int n, GroupLabel g, const std::vector<ScanRow>& rows, OutputFormat format);

/// The `gf` command payload: {"coeffs":{...}} in JSON mode.
std::string render_gf(int n, GroupLabel g, const IndexSet& I, bool graded, const IntPoly* signed_poly,
                      const BiPoly* graded_poly, OutputFormat format);

/// The `factor` command payload for a successfully extracted cofactor.
std::string render_factor(int n, const IndexSet& J, const IntPoly& mj, OutputFormat format);

}  // namespace oddlen
