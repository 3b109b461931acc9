#include "intorbit/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "intorbit/errors.hpp"

namespace intorbit {

void RunConfig::validate() const {
  nearest_double(r);
  nearest_double(x0);
  const std::size_t needed = mode == RunMode::float_compare ? 2 : 1;
  if (extensions.size() < needed) {
    throw std::invalid_argument(std::string(to_string(mode)) + " mode needs at least " +
                                std::to_string(needed) + " extension(s), got " +
                                std::to_string(extensions.size()));
  }
  if (period_candidates.empty()) throw std::invalid_argument("no period candidates");
  for (unsigned p : period_candidates) {
    if (p == 0) throw std::invalid_argument("period candidates must be positive");
  }
  if (persistence == 0) throw std::invalid_argument("persistence must be at least 1");
  if (!(divergence_threshold > 0.0)) throw std::invalid_argument("divergence threshold must be positive");
  parsed_extensions();
}

std::vector<ExtensionExpr> RunConfig::parsed_extensions() const {
  std::vector<ExtensionExpr> out;
  out.reserve(extensions.size());
  for (const auto& text : extensions) out.push_back(ExtensionExpr::parse(text));
  return out;
}

IntervalOrbit::IntervalOrbit(std::vector<ExtensionExpr> extensions, Interval x0, Interval r,
                             Topology topology, EvalOptions eval)
    : extensions_(std::move(extensions)), r_(r), topology_(topology), eval_(eval) {
  if (extensions_.empty()) throw std::invalid_argument("orbit needs at least one extension");
  record_.entries.push_back({x0, width(x0), {}});
  if (topology_ == Topology::independent) carried_.assign(extensions_.size(), x0);
}

const OrbitEntry& IntervalOrbit::step() {
  const Interval previous = record_.back().enclosure;
  OrbitEntry next;
  next.raw.reserve(extensions_.size());
  for (std::size_t i = 0; i < extensions_.size(); ++i) {
    const Interval from = topology_ == Topology::shared ? previous : carried_[i];
    next.raw.push_back(eval_interval(extensions_[i], {from, r_}, eval_));
  }
  if (topology_ == Topology::independent) carried_ = next.raw;

  Interval acc = next.raw.front();
  for (std::size_t i = 1; i < next.raw.size(); ++i) {
    const auto meet = intersect(acc, next.raw[i]);
    if (!meet) {
      throw SoundnessFault("empty intersection at iteration " + std::to_string(record_.size()) +
                           ": " + to_string(acc) + " and " + to_string(next.raw[i]) + " from '" +
                           extensions_[i].source() + "'");
    }
    acc = *meet;
  }
  next.enclosure = acc;
  next.width = width(acc);
  record_.entries.push_back(std::move(next));
  return record_.back();
}

namespace {

IntervalOrbit make_orbit(std::vector<ExtensionExpr> es, const RunConfig& cfg) {
  return IntervalOrbit(std::move(es), cfg.initial_enclosure(), cfg.parameter_enclosure(),
                       cfg.topology, cfg.eval);
}

}  // namespace

OrbitRecord iterate_single(const ExtensionExpr& e, const RunConfig& cfg) {
  return iterate_intersected({e}, cfg);
}

OrbitRecord iterate_intersected(const std::vector<ExtensionExpr>& es, const RunConfig& cfg) {
  IntervalOrbit orbit = make_orbit(es, cfg);
  for (std::size_t n = 0; n < cfg.max_iterations; ++n) orbit.step();
  return orbit.record();
}

std::optional<unsigned> period_at(const OrbitRecord& orbit, std::size_t n, const RunConfig& cfg) {
  if (n >= orbit.size()) return std::nullopt;
  std::vector<unsigned> periods = cfg.period_candidates;
  std::sort(periods.begin(), periods.end());
  const std::size_t k = cfg.persistence;
  for (unsigned p : periods) {
    // Every m in [n-k+1, n] needs m - p >= 0.
    if (n + 1 < k + p) continue;
    bool holds = true;
    for (std::size_t m = n + 1 - k; m <= n && holds; ++m) {
      holds = intersect(orbit[m].enclosure, orbit[m - p].enclosure).has_value();
    }
    if (holds) return p;
  }
  return std::nullopt;
}

std::optional<FixedPointReport> detect_period(const OrbitRecord& orbit, const RunConfig& cfg) {
  for (std::size_t n = 1; n < orbit.size(); ++n) {
    if (const auto p = period_at(orbit, n, cfg)) {
      return FixedPointReport{*p, n, orbit[n].enclosure, orbit[n].width, true};
    }
  }
  return std::nullopt;
}

FixedPointReport iterate_until_period(IntervalOrbit& orbit, const RunConfig& cfg) {
  const OrbitRecord& record = orbit.record();
  while (orbit.iteration() < cfg.max_iterations) {
    orbit.step();
    const std::size_t n = orbit.iteration();
    if (const auto p = period_at(record, n, cfg)) {
      return FixedPointReport{*p, n, record[n].enclosure, record[n].width, true};
    }
  }
  return FixedPointReport{0, orbit.iteration(), record.back().enclosure, record.back().width, false};
}

FloatCompareResult iterate_float_compare(const std::vector<ExtensionExpr>& es, const RunConfig& cfg) {
  if (es.size() < 2) throw std::invalid_argument("float comparison needs at least 2 extensions");
  FloatCompareResult out;
  out.threshold = cfg.divergence_threshold;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) out.pairs.emplace_back(i, j);
  }
  out.pair_divergence.assign(out.pairs.size(), std::nullopt);

  const double r = nearest_double(cfg.r);
  std::vector<double> x(es.size(), nearest_double(cfg.x0));
  for (std::size_t n = 0;; ++n) {
    std::vector<double> d;
    d.reserve(out.pairs.size());
    for (std::size_t k = 0; k < out.pairs.size(); ++k) {
      const double diff = std::fabs(x[out.pairs[k].first] - x[out.pairs[k].second]);
      d.push_back(diff);
      if (!out.pair_divergence[k] && diff > out.threshold) out.pair_divergence[k] = n;
      if (!out.first_divergence && diff > out.threshold) out.first_divergence = n;
    }
    out.values.push_back(x);
    out.diffs.push_back(std::move(d));
    if (n == cfg.max_iterations) break;
    for (std::size_t i = 0; i < es.size(); ++i) x[i] = eval_float(es[i], {x[i], r});
  }
  return out;
}

std::vector<WidthRow> CaseReport::width_table(WidthMetric metric) const {
  std::vector<WidthRow> rows;
  const std::size_t n = std::min(single.orbit.size(), intersected.orbit.size());
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = measure(single.orbit[i].enclosure, metric);
    const double b = measure(intersected.orbit[i].enclosure, metric);
    rows.push_back({i, a, b, a - b});
  }
  return rows;
}

double CaseReport::reduction(WidthMetric metric) const {
  const double a = measure(single.fixed_point.interval, metric);
  const double b = measure(intersected.fixed_point.interval, metric);
  return (a - b) / a;
}

CaseReport run_case(const RunConfig& cfg) {
  if (cfg.extensions.size() < 2) throw std::invalid_argument("run_case needs at least two extensions");
  const std::vector<ExtensionExpr> es = cfg.parsed_extensions();
  CaseReport report{cfg, {}, {}};

  IntervalOrbit single = make_orbit({es.front()}, cfg);
  report.single.fixed_point = iterate_until_period(single, cfg);
  report.single.orbit = single.record();

  IntervalOrbit all = make_orbit(es, cfg);
  report.intersected.fixed_point = iterate_until_period(all, cfg);
  report.intersected.orbit = all.record();
  return report;
}

std::string_view to_string(RunMode mode) {
  switch (mode) {
    case RunMode::single:
      return "single";
    case RunMode::intersect:
      return "intersect";
    case RunMode::float_compare:
      return "float-compare";
  }
  return "?";
}

std::string_view to_string(Topology topology) {
  return topology == Topology::shared ? "shared" : "independent";
}

}  // namespace intorbit
