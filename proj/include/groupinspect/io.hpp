#pragma once

#include "groupinspect/model.hpp"
#include "groupinspect/segment.hpp"

#include <iosfwd>
#include <string>

namespace groupinspect {

/// Reads a p x n panel from CSV: one row per coordinate, one column per time
/// point. A first row whose fields do not all parse as numbers is treated as
/// an optional header of time labels and skipped. Ragged rows, empty fields
/// and non-finite values are rejected with line/column context (missing
/// values must be cleaned before ingestion).
Matrix read_csv_matrix(std::istream& in, const std::string& source_name = "<stream>");
Matrix read_csv_matrix_file(const std::string& path);

/// Writes a matrix as CSV, RFC-4180 quoting, full double precision.
void write_csv_matrix(std::ostream& out, const Matrix& M);

/// Quotes a single CSV field per RFC 4180 when needed.
std::string csv_quote(const std::string& field);

/// Grouping interchange format: a JSON array of arrays of 1-based
/// coordinate indices, e.g. [[1,2,3],[4,5]]. Coverage of [1, p] enforced.
Grouping read_grouping_json(std::istream& in, int p,
                            const std::string& source_name = "<stream>");
Grouping read_grouping_json_file(const std::string& path, int p);
std::string grouping_to_json(const Grouping& grouping);

/// Scenario interchange: {"n","p","groups","change_times","mean_levels","sigma"}.
std::string scenario_to_json(const ChangeScenario& scenario);
ChangeScenario scenario_from_json(const std::string& text);
ChangeScenario read_scenario_json_file(const std::string& path);

/// Segmentation interchange: {"n","change_points","interval_log":[{"s","e","b","stat"}]}.
std::string segmentation_to_json(const Segmentation& seg, int n);
Segmentation segmentation_from_json(const std::string& text);
/// One change point per row under a "change_point" header.
void write_segmentation_csv(std::ostream& out, const Segmentation& seg);

/// Shortest-round-trip decimal rendering of a double (matches JSON output).
std::string format_double(double value);

} // namespace groupinspect
