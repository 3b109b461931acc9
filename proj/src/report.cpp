#include "intorbit/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace intorbit {
namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string method_label(const CaseReport& report, bool intersected) {
  const auto& exts = report.config.extensions;
  if (!intersected) return exts.front();
  std::string label;
  for (std::size_t i = 0; i < exts.size(); ++i) {
    if (i) label += " & ";
    label += exts[i];
  }
  return label;
}

}  // namespace

std::string format_width(double w, Precision precision) {
  if (precision == Precision::full) return format_double(w);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", w);
  return buf;
}

void write_orbit_csv(std::ostream& os, const OrbitRecord& orbit, WidthMetric metric, Precision precision) {
  std::size_t n_ext = 0;
  for (const auto& e : orbit.entries) n_ext = std::max(n_ext, e.raw.size());
  os << "n,lo,hi,width";
  for (std::size_t i = 1; i <= n_ext; ++i) os << ",raw_" << i << "_lo,raw_" << i << "_hi";
  os << '\n';
  for (std::size_t n = 0; n < orbit.size(); ++n) {
    const OrbitEntry& e = orbit[n];
    os << n << ',' << format_double(e.enclosure.lo()) << ',' << format_double(e.enclosure.hi()) << ','
       << format_width(measure(e.enclosure, metric), precision);
    for (std::size_t i = 0; i < n_ext; ++i) {
      if (i < e.raw.size()) {
        os << ',' << format_double(e.raw[i].lo()) << ',' << format_double(e.raw[i].hi());
      } else {
        os << ",,";
      }
    }
    os << '\n';
  }
}

void write_orbit_table(std::ostream& os, const OrbitRecord& orbit, WidthMetric metric, Precision precision) {
  os << std::setw(5) << "n" << "  " << std::setw(24) << "lo" << "  " << std::setw(24) << "hi" << "  "
     << std::setw(23) << "width" << '\n';
  for (std::size_t n = 0; n < orbit.size(); ++n) {
    const Interval& x = orbit[n].enclosure;
    os << std::setw(5) << n << "  " << std::setw(24) << format_double(x.lo()) << "  " << std::setw(24)
       << format_double(x.hi()) << "  " << std::setw(23) << format_width(measure(x, metric), precision)
       << '\n';
  }
}

void write_divergence_csv(std::ostream& os, const FloatCompareResult& result, std::size_t from, std::size_t to,
                          unsigned index_base) {
  const std::size_t n_ext = result.values.empty() ? 0 : result.values.front().size();
  os << 'n';
  for (std::size_t i = 1; i <= n_ext; ++i) os << ",x_" << i;
  for (const auto& [i, j] : result.pairs) os << ",absdiff_" << i + 1 << '_' << j + 1;
  os << '\n';
  if (result.values.empty()) return;
  to = std::min(to, result.values.size() - 1);
  for (std::size_t n = from; n <= to; ++n) {
    os << n + index_base;
    for (double v : result.values[n]) os << ',' << format_double(v);
    for (double d : result.diffs[n]) os << ',' << format_double(d);
    os << '\n';
  }
}

std::string summary_line(const FixedPointReport& report, WidthMetric metric, Precision precision) {
  std::ostringstream os;
  const std::string w = format_width(measure(report.interval, metric), precision);
  if (report.converged) {
    os << "candidate fixed point of period " << report.period << " at iteration " << report.detected_at
       << ", width " << w << ", enclosure " << to_string(report.interval);
  } else {
    os << "no period detected within " << report.detected_at << " iterations, final width " << w
       << ", enclosure " << to_string(report.interval);
  }
  return os.str();
}

std::string key_value_block(const FixedPointReport& report, WidthMetric metric) {
  nlohmann::ordered_json j;
  j["converged"] = report.converged;
  if (report.converged) j["period"] = report.period;
  j["detected_at"] = report.detected_at;
  j["lo"] = report.interval.lo();
  j["hi"] = report.interval.hi();
  j["width"] = measure(report.interval, metric);
  return j.dump(2);
}

void write_case_report(std::ostream& os, const CaseReport& report, WidthMetric metric, Precision precision) {
  const auto cell = [](const FixedPointReport& fp, int row, WidthMetric m, Precision p) -> std::string {
    switch (row) {
      case 0:
        return fp.converged ? std::to_string(fp.period) : "none";
      case 1:
        return format_width(measure(fp.interval, m), p);
      default:
        return std::to_string(fp.detected_at);
    }
  };
  const char* labels[] = {"Period of fixed point", "Width of interval", "Number of iterations"};
  os << "r = " << report.config.r << ", x0 = " << report.config.x0 << '\n';
  os << "  single:      " << method_label(report, false) << '\n';
  os << "  intersected: " << method_label(report, true) << '\n';
  os << std::left << std::setw(24) << "" << std::setw(26) << "single" << "intersected" << '\n';
  for (int row = 0; row < 3; ++row) {
    os << std::setw(24) << labels[row] << std::setw(26) << cell(report.single.fixed_point, row, metric, precision)
       << cell(report.intersected.fixed_point, row, metric, precision) << '\n';
  }
  os << std::right;
  if (report.single.fixed_point.converged && report.intersected.fixed_point.converged) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * report.reduction(metric));
    os << "Width reduction: " << buf << '\n';
  } else {
    os << "status: no period detected within " << report.config.max_iterations << " iterations\n";
  }
}

void write_width_table(std::ostream& os, const std::vector<WidthRow>& rows, Precision precision) {
  os << std::setw(5) << "n" << std::setw(24) << "single" << std::setw(24) << "intersected" << std::setw(24)
     << "difference" << '\n';
  for (const auto& row : rows) {
    os << std::setw(5) << row.n << std::setw(24) << format_width(row.single, precision) << std::setw(24)
       << format_width(row.intersected, precision) << std::setw(24) << format_width(row.difference, precision)
       << '\n';
  }
}

std::vector<std::string> config_to_args(std::istream& is) {
  std::vector<std::string> args;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
    args.push_back("--" + key);
    args.push_back(value);
  }
  return args;
}

}  // namespace intorbit
