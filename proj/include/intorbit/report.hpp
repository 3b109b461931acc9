#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "intorbit/orbit.hpp"

namespace intorbit {

/// Widths are shown with 6 significant digits unless `full` is requested.
enum class Precision { display, full };

std::string format_width(double w, Precision precision = Precision::display);

/// CSV: n,lo,hi,width then raw_<i>_lo,raw_<i>_hi per extension. Endpoints
/// always carry 17 significant digits. LF line endings, header row.
void write_orbit_csv(std::ostream& os, const OrbitRecord& orbit, WidthMetric metric = WidthMetric::endpoint,
                     Precision precision = Precision::display);

/// Aligned human-readable version of the same data.
void write_orbit_table(std::ostream& os, const OrbitRecord& orbit, WidthMetric metric = WidthMetric::endpoint,
                       Precision precision = Precision::display);

/// Float comparison CSV: n, x_<i> per extension, absdiff_<i>_<j> per pair.
/// Rows [from, to] inclusive (clamped to the data). With index_base 1 the n
/// column is shifted so that the initial value is row 1.
void write_divergence_csv(std::ostream& os, const FloatCompareResult& result, std::size_t from,
                          std::size_t to, unsigned index_base = 0);

/// One line, e.g. "candidate fixed point of period 2 at iteration 20, ...".
std::string summary_line(const FixedPointReport& report, WidthMetric metric = WidthMetric::endpoint,
                         Precision precision = Precision::display);

/// JSON object with period, detected_at, lo, hi, width, converged.
std::string key_value_block(const FixedPointReport& report, WidthMetric metric = WidthMetric::endpoint);

/// Side-by-side comparison of the single and intersected methods: period,
/// width at detection and number of iterations, followed by the reduction.
void write_case_report(std::ostream& os, const CaseReport& report, WidthMetric metric = WidthMetric::endpoint,
                       Precision precision = Precision::display);

/// Per-iteration width table with the single - intersected difference.
void write_width_table(std::ostream& os, const std::vector<WidthRow>& rows,
                       Precision precision = Precision::display);

/// Reads "key = value" lines ('#' starts a comment) into command-line style
/// tokens {"--key", "value", ...}. Keys may repeat.
std::vector<std::string> config_to_args(std::istream& is);

}  // namespace intorbit
