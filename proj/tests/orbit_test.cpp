#include <gtest/gtest.h>

#include <cmath>

#include "intorbit/errors.hpp"
#include "intorbit/orbit.hpp"
#include "oracle.hpp"

namespace {

using namespace intorbit;

const char* const kF1 = "r*x*(1-x)";
const char* const kF2 = "r*(x*(1-x))";

RunConfig config(const std::string& r, std::size_t n, std::vector<std::string> exts = {kF1, kF2}) {
  RunConfig cfg;
  cfg.r = r;
  cfg.x0 = "0.6";
  cfg.extensions = std::move(exts);
  cfg.max_iterations = n;
  return cfg;
}

bool bit_identical(const OrbitRecord& a, const OrbitRecord& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (!(a[n].enclosure == b[n].enclosure) || a[n].width != b[n].width) return false;
  }
  return true;
}

TEST(Orbit, EntryZeroIsInitialEnclosure) {
  const RunConfig cfg = config("3.6", 0);
  const OrbitRecord rec = iterate_single(ExtensionExpr::parse(kF1), cfg);
  ASSERT_EQ(rec.size(), 1u);
  EXPECT_EQ(rec[0].enclosure, enclose_decimal("0.6", EnclosureMode::Tight));
  EXPECT_TRUE(rec[0].raw.empty());
}

TEST(Orbit, ZeroParameterCollapsesToZero) {
  const RunConfig cfg = config("0.0", 20);
  const OrbitRecord rec = iterate_single(ExtensionExpr::parse(kF1), cfg);
  for (std::size_t n = 1; n < rec.size(); ++n) {
    EXPECT_EQ(rec[n].enclosure, make_interval(0, 0));
  }
}

TEST(Orbit, SingleWidthsGrowAtRateNearR) {
  const RunConfig cfg = config("3.6", 10);
  const OrbitRecord rec = iterate_single(ExtensionExpr::parse(kF1), cfg);
  ASSERT_EQ(rec.size(), 11u);
  for (std::size_t n = 2; n < rec.size(); ++n) {
    const double ratio = rec[n].width / rec[n - 1].width;
    EXPECT_GT(ratio, 2.5);
    EXPECT_LT(ratio, 5.0);
  }
  EXPECT_NEAR(measure(rec[10].enclosure, WidthMetric::midrad), 7.62e-11, 0.1 * 7.62e-11);
}

TEST(Orbit, IntersectedEntryLiesInEveryRawResult) {
  const RunConfig cfg = config("3.6", 30);
  const OrbitRecord rec = iterate_intersected(cfg.parsed_extensions(), cfg);
  for (std::size_t n = 1; n < rec.size(); ++n) {
    ASSERT_EQ(rec[n].raw.size(), 2u);
    double min_raw = INFINITY;
    for (const auto& raw : rec[n].raw) {
      EXPECT_TRUE(contains(raw, rec[n].enclosure));
      min_raw = std::min(min_raw, width(raw));
    }
    EXPECT_LE(rec[n].width, min_raw);
    EXPECT_GE(rec[n].width, 0.0);
  }
}

TEST(Orbit, IntersectedNeverWiderThanSingle) {
  for (const char* r : {"3.3", "3.47", "3.55", "3.6", "3.9"}) {
    const RunConfig cfg = config(r, 40);
    const auto es = cfg.parsed_extensions();
    const OrbitRecord a = iterate_single(es.front(), cfg);
    const OrbitRecord b = iterate_intersected(es, cfg);
    for (std::size_t n = 0; n < a.size(); ++n) {
      ASSERT_LE(b[n].width, a[n].width) << "r=" << r << " n=" << n;
      ASSERT_TRUE(contains(a[n].enclosure, b[n].enclosure));
    }
  }
}

TEST(Orbit, DegenerateIntersectionsMatchSingleRun) {
  const RunConfig cfg = config("3.55", 40);
  const auto f1 = ExtensionExpr::parse(kF1);
  const OrbitRecord single = iterate_single(f1, cfg);
  EXPECT_TRUE(bit_identical(iterate_intersected({f1}, cfg), single));
  EXPECT_TRUE(bit_identical(iterate_intersected({f1, f1}, cfg), single));
}

TEST(Orbit, IndependentTopologyIsNoTighterThanShared) {
  RunConfig cfg = config("3.6", 15);
  const auto es = cfg.parsed_extensions();
  const OrbitRecord shared = iterate_intersected(es, cfg);
  cfg.topology = Topology::independent;
  const OrbitRecord indep = iterate_intersected(es, cfg);
  for (std::size_t n = 0; n < shared.size(); ++n) {
    EXPECT_TRUE(contains(indep[n].enclosure, shared[n].enclosure));
    if (n == 0) continue;
    for (std::size_t i = 0; i < es.size(); ++i) {
      EXPECT_TRUE(contains(indep[n].raw[i], indep[n].enclosure));
    }
  }
  EXPECT_GT(indep.back().width, shared.back().width);
}

TEST(Orbit, EmptyIntersectionIsASoundnessFault) {
  // Two different maps cannot both enclose one orbit.
  const RunConfig cfg = config("3.6", 5, {kF1, "r*x*(1-x)+1"});
  EXPECT_THROW(iterate_intersected(cfg.parsed_extensions(), cfg), SoundnessFault);
}

TEST(Orbit, StepperRejectsNoExtensions) {
  EXPECT_THROW(IntervalOrbit({}, make_interval(0, 0), make_interval(1, 1)), std::invalid_argument);
}

TEST(Detect, ConstantOrbitHasPeriodOne) {
  OrbitRecord rec;
  for (int i = 0; i < 5; ++i) rec.entries.push_back({make_interval(2, 2), 0.0, {}});
  const RunConfig cfg;
  const auto fp = detect_period(rec, cfg);
  ASSERT_TRUE(fp.has_value());
  EXPECT_EQ(fp->period, 1u);
  EXPECT_EQ(fp->detected_at, 1u);
  EXPECT_TRUE(fp->converged);
}

TEST(Detect, SmallestPeriodWinsAndPersistenceDelays) {
  // Alternating a, b, a, b ...: period 2 (and 4) from n = 2.
  OrbitRecord rec;
  for (int i = 0; i < 8; ++i) {
    rec.entries.push_back({i % 2 ? make_interval(3, 4) : make_interval(1, 2), 1.0, {}});
  }
  RunConfig cfg;
  auto fp = detect_period(rec, cfg);
  ASSERT_TRUE(fp);
  EXPECT_EQ(fp->period, 2u);
  EXPECT_EQ(fp->detected_at, 2u);
  cfg.persistence = 3;
  fp = detect_period(rec, cfg);
  ASSERT_TRUE(fp);
  EXPECT_EQ(fp->period, 2u);
  EXPECT_EQ(fp->detected_at, 4u);
  cfg.period_candidates = {4, 3};
  cfg.persistence = 1;
  fp = detect_period(rec, cfg);
  ASSERT_TRUE(fp);
  EXPECT_EQ(fp->period, 4u);
  EXPECT_EQ(fp->detected_at, 4u);
}

TEST(Detect, AbsentWhenNothingRepeats) {
  OrbitRecord rec;
  for (int i = 0; i < 6; ++i) rec.entries.push_back({make_interval(i, i + 0.5), 0.5, {}});
  EXPECT_FALSE(detect_period(rec, RunConfig{}).has_value());
}

TEST(Detect, ReportIsRecheckableFromRecord) {
  for (const char* r : {"3.3", "3.47", "3.55"}) {
    const RunConfig cfg = config(r, 60);
    const OrbitRecord rec = iterate_intersected(cfg.parsed_extensions(), cfg);
    const auto fp = detect_period(rec, cfg);
    ASSERT_TRUE(fp);
    EXPECT_GE(fp->detected_at, fp->period);
    EXPECT_TRUE(intersect(rec[fp->detected_at].enclosure, rec[fp->detected_at - fp->period].enclosure));
    EXPECT_EQ(fp->interval, rec[fp->detected_at].enclosure);
  }
}

TEST(Detect, OnlineAndOfflineAgree) {
  const RunConfig cfg = config("3.47", 60);
  const auto es = cfg.parsed_extensions();
  IntervalOrbit orbit(es, cfg.initial_enclosure(), cfg.parameter_enclosure());
  const FixedPointReport online = iterate_until_period(orbit, cfg);
  const auto offline = detect_period(iterate_intersected(es, cfg), cfg);
  ASSERT_TRUE(offline);
  EXPECT_EQ(online.period, offline->period);
  EXPECT_EQ(online.detected_at, offline->detected_at);
  EXPECT_EQ(online.interval, offline->interval);
  EXPECT_EQ(orbit.iteration(), online.detected_at);
}

TEST(Detect, StablePeriodOneRegime) {
  // r = 2.5: fixed point 1 - 1/r = 0.6 exactly.
  RunConfig cfg = config("2.5", 100);
  const CaseReport rep = run_case(cfg);
  for (const auto* m : {&rep.single, &rep.intersected}) {
    ASSERT_TRUE(m->fixed_point.converged);
    EXPECT_EQ(m->fixed_point.period, 1u);
    EXPECT_TRUE(oracle::encloses(m->fixed_point.interval, oracle::Rational(3, 5)));
  }
}

TEST(Detect, BudgetExhaustedReportsFinalWidth) {
  RunConfig cfg = config("3.9", 5);
  cfg.period_candidates = {16};
  const CaseReport rep = run_case(cfg);
  EXPECT_FALSE(rep.single.fixed_point.converged);
  EXPECT_EQ(rep.single.fixed_point.detected_at, 5u);
  EXPECT_EQ(rep.single.fixed_point.width, rep.single.orbit.back().width);
}

TEST(RunCase, PeriodTwoCase) {
  const CaseReport rep = run_case(config("3.3", 100));
  EXPECT_EQ(rep.single.fixed_point.period, 2u);
  EXPECT_EQ(rep.intersected.fixed_point.period, 2u);
  EXPECT_EQ(rep.single.fixed_point.detected_at, 20u);
  EXPECT_EQ(rep.intersected.fixed_point.detected_at, 20u);
  EXPECT_NEAR(rep.single.fixed_point.width, 3.65900e-6, 0.05 * 3.65900e-6);
  EXPECT_NEAR(rep.intersected.fixed_point.width, 3.65833e-6, 0.05 * 3.65833e-6);
  for (const auto& row : rep.width_table()) EXPECT_GE(row.difference, 0.0);
}

TEST(RunCase, NeedsTwoExtensions) {
  EXPECT_THROW(run_case(config("3.3", 10, {kF1})), std::invalid_argument);
}

TEST(FloatCompare, IdenticalFormsNeverDiffer) {
  RunConfig cfg = config("3.9", 100, {kF1, kF1});
  const auto res = iterate_float_compare(cfg.parsed_extensions(), cfg);
  ASSERT_EQ(res.values.size(), 101u);
  for (const auto& d : res.diffs) EXPECT_EQ(d.front(), 0.0);
  EXPECT_FALSE(res.first_divergence.has_value());
}

TEST(FloatCompare, NestedFormDivergesFromRoundoffScale) {
  RunConfig cfg = config("3.9", 100, {kF1, kF2});
  const auto res = iterate_float_compare(cfg.parsed_extensions(), cfg);
  ASSERT_TRUE(res.first_divergence.has_value());
  // Differences start at roundoff level and reach O(1): the running maximum
  // passes each decade in order.
  double running = 0.0;
  std::size_t last_decade_n = 0;
  for (int decade = -15; decade <= -1; ++decade) {
    std::size_t n = 0;
    while (n < res.diffs.size() && res.diffs[n].front() <= std::pow(10.0, decade)) ++n;
    ASSERT_LT(n, res.diffs.size()) << "never exceeded 1e" << decade;
    EXPECT_GE(n, last_decade_n);
    last_decade_n = n;
  }
  for (const auto& d : res.diffs) running = std::max(running, d.front());
  EXPECT_GT(running, 0.5);
  EXPECT_LT(res.diffs[1].front(), 1e-15);
}

TEST(FloatCompare, PairsAndPerPairDivergence) {
  RunConfig cfg = config("3.9", 80, {kF1, kF2, "r*x-r*x^2"});
  const auto res = iterate_float_compare(cfg.parsed_extensions(), cfg);
  ASSERT_EQ(res.pairs.size(), 3u);
  EXPECT_EQ(res.pairs[2], std::make_pair(std::size_t{1}, std::size_t{2}));
  std::size_t earliest = SIZE_MAX;
  for (const auto& p : res.pair_divergence) {
    ASSERT_TRUE(p.has_value());
    earliest = std::min(earliest, *p);
  }
  EXPECT_EQ(res.first_divergence, earliest);
}

TEST(Config, Validation) {
  RunConfig cfg = config("3.3", 10, {});
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.extensions = {kF1};
  EXPECT_NO_THROW(cfg.validate());
  cfg.mode = RunMode::float_compare;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.extensions = {kF1, "r*x*(1-"};
  EXPECT_THROW(cfg.validate(), ParseError);
  cfg.extensions = {kF1, kF2};
  cfg.x0 = "zero";
  EXPECT_THROW(cfg.validate(), DecimalError);
  cfg.x0 = "0.6";
  cfg.period_candidates = {0};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.period_candidates = {2};
  cfg.persistence = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

}  // namespace
