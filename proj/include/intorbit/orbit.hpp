#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intorbit/decimal.hpp"
#include "intorbit/expression.hpp"
#include "intorbit/interval.hpp"

namespace intorbit {

enum class RunMode { single, intersect, float_compare };

/// How several extensions are combined into one orbit.
///   shared      - every extension at step n+1 is evaluated from the single
///                 intersected enclosure of step n
///   independent - each extension carries its own orbit; the reported
///                 enclosure is the intersection of the per-extension orbits
enum class Topology { shared, independent };

struct RunConfig {
  std::string r = "3.6";
  std::string x0 = "0.6";
  std::vector<std::string> extensions;
  std::size_t max_iterations = 100;
  RunMode mode = RunMode::intersect;
  EnclosureMode x0_enclosure = EnclosureMode::Tight;
  EnclosureMode r_enclosure = EnclosureMode::Thin;
  /// Scanned in ascending order; the smallest qualifying period wins.
  std::vector<unsigned> period_candidates = {1, 2, 4, 8, 16};
  /// Consecutive iterations a period test must hold before it is reported.
  unsigned persistence = 1;
  Topology topology = Topology::shared;
  EvalOptions eval;
  /// float_compare: |difference| above this counts as divergence.
  double divergence_threshold = 0.1;

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;

  std::vector<ExtensionExpr> parsed_extensions() const;
  Interval initial_enclosure() const { return enclose_decimal(x0, x0_enclosure); }
  Interval parameter_enclosure() const { return enclose_decimal(r, r_enclosure); }
};

struct OrbitEntry {
  Interval enclosure;
  double width = 0.0;
  /// F_i applied to the predecessor, before intersection; empty at n = 0.
  std::vector<Interval> raw;
};

/// Enclosures X_0 .. X_N of one interval pseudo-orbit.
struct OrbitRecord {
  std::vector<OrbitEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  const OrbitEntry& operator[](std::size_t n) const { return entries[n]; }
  const OrbitEntry& back() const { return entries.back(); }
};

/// A candidate periodic point: X_n intersects X_{n-p}. Non-empty
/// intersection is necessary for a period-p point, not a proof of one.
struct FixedPointReport {
  unsigned period = 0;
  std::size_t detected_at = 0;
  Interval interval;
  double width = 0.0;
  bool converged = false;
};

/// Step-by-step interval orbit. Each step evaluates every extension and
/// intersects the results; with one extension this is the plain orbit.
class IntervalOrbit {
 public:
  IntervalOrbit(std::vector<ExtensionExpr> extensions, Interval x0, Interval r,
                Topology topology = Topology::shared, EvalOptions eval = {});

  /// Appends X_{n+1}. Throws SoundnessFault on an empty intersection.
  const OrbitEntry& step();

  const OrbitRecord& record() const noexcept { return record_; }
  std::size_t iteration() const noexcept { return record_.size() - 1; }

 private:
  std::vector<ExtensionExpr> extensions_;
  Interval r_;
  Topology topology_;
  EvalOptions eval_;
  std::vector<Interval> carried_;  // per extension, independent topology only
  OrbitRecord record_;
};

OrbitRecord iterate_single(const ExtensionExpr& e, const RunConfig& cfg);
/// Works for any number of extensions >= 1; with one it matches
/// iterate_single bit for bit.
OrbitRecord iterate_intersected(const std::vector<ExtensionExpr>& es, const RunConfig& cfg);

/// Smallest candidate period p whose test X_m ∩ X_{m-p} != ∅ holds for every
/// m in [n - persistence + 1, n].
std::optional<unsigned> period_at(const OrbitRecord& orbit, std::size_t n, const RunConfig& cfg);

/// First (n, p) in scan order, or nullopt if nothing qualifies.
std::optional<FixedPointReport> detect_period(const OrbitRecord& orbit, const RunConfig& cfg);

/// Iterates until a period is detected or max_iterations is reached.
/// The returned report has converged == false when nothing was detected;
/// it then describes the final enclosure.
FixedPointReport iterate_until_period(IntervalOrbit& orbit, const RunConfig& cfg);

struct FloatCompareResult {
  /// values[n][i]: iterate n of extension i.
  std::vector<std::vector<double>> values;
  /// Extension index pairs (i, j), i < j, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// diffs[n][k] = |values[n][pairs[k].first] - values[n][pairs[k].second]|.
  std::vector<std::vector<double>> diffs;
  std::vector<std::optional<std::size_t>> pair_divergence;
  /// First n where any pair differs by more than the threshold.
  std::optional<std::size_t> first_divergence;
  double threshold = 0.1;
};

FloatCompareResult iterate_float_compare(const std::vector<ExtensionExpr>& es, const RunConfig& cfg);

struct MethodResult {
  OrbitRecord orbit;
  FixedPointReport fixed_point;
};

struct WidthRow {
  std::size_t n;
  double single;
  double intersected;
  double difference;
};

struct CaseReport {
  RunConfig config;
  MethodResult single;       // first extension alone
  MethodResult intersected;  // all extensions

  /// Widths over the iterations both orbits reached.
  std::vector<WidthRow> width_table(WidthMetric metric = WidthMetric::endpoint) const;
  /// (single - intersected) / single at the respective detection points.
  double reduction(WidthMetric metric = WidthMetric::endpoint) const;
};

/// Runs extension 1 alone and all extensions intersected, each until its
/// own period detection (or the iteration budget).
CaseReport run_case(const RunConfig& cfg);

std::string_view to_string(RunMode mode);
std::string_view to_string(Topology topology);

}  // namespace intorbit
