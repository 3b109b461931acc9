#include "intorbit/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <stdexcept>

#include "intorbit/errors.hpp"

namespace intorbit {
namespace {

const char* const kLogistic = "r*x*(1-x)";
const char* const kLogisticNested = "r*(x*(1-x))";
const char* const kLogisticExpanded = "r*x-r*x^2";

struct PeriodCase {
  const char* r;
  unsigned period;
  std::size_t iterations;
  double width_single;
  double width_intersected;
  double reduction_percent;  // NaN when no reduction figure is published
};

const PeriodCase kPeriodCases[] = {
    {"3.3", 2, 20, 3.65900e-6, 3.65833e-6, std::nan("")},
    {"3.47", 4, 23, 6.44715e-4, 4.72274e-4, 26.0},
    {"3.55", 8, 23, 9.14991e-4, 7.91852e-4, 13.0},
};

constexpr double kWidthTolerance = 0.05;
constexpr double kGrowthTolerance = 0.10;
constexpr double kReductionTolerancePoints = 3.0;

// Interval sizes for r = 3.6, x0 = 0.6, iterations 0..10.
const double kGrowthSingle[] = {2.22e-16, 6.66e-16, 2.55e-15, 9.77e-15, 3.48e-14, 1.25e-13,
                                4.53e-13, 1.63e-12, 5.87e-12, 2.11e-11, 7.62e-11};
const double kGrowthIntersected[] = {2.22e-16, 6.66e-16, 2.11e-15, 7.77e-15, 2.77e-14, 9.99e-14,
                                     3.60e-13, 1.29e-12, 4.66e-12, 1.67e-11, 6.04e-11};

// Float divergence, r = 3.9, x0 = 0.6. Iterations are labelled from 1 for
// the initial value, so label 67 is iterate 66.
constexpr std::size_t kDivergenceLabel = 67;
constexpr std::size_t kDivergenceFirstMin = 55;
constexpr std::size_t kDivergenceFirstMax = 67;
constexpr double kDivergenceMinGap = 0.5;

std::string sci(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
  return buf;
}

std::string fixed(double v, int decimals) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

bool case_matches(const CaseReport& rep, const PeriodCase& ref) {
  const auto& a = rep.single.fixed_point;
  const auto& b = rep.intersected.fixed_point;
  return a.converged && b.converged && a.period == ref.period && b.period == ref.period &&
         a.detected_at == ref.iterations && b.detected_at == ref.iterations;
}

std::vector<Verdict> check_period_case(const PeriodCase& ref, const ReproductionOptions& opts) {
  const std::string tag = std::string("case r=") + ref.r;
  std::vector<Verdict> out;
  std::vector<CaseReport> sweep;
  std::string matching;
  try {
    for (unsigned k = 1; k <= 3; ++k) {
      RunConfig cfg = period_case_config(ref.r, k);
      cfg.eval.rounding = opts.rounding;
      sweep.push_back(run_case(cfg));
      if (case_matches(sweep.back(), ref)) matching += (matching.empty() ? "k=" : ",") + std::to_string(k);
    }
  } catch (const SoundnessFault& e) {
    out.push_back({tag + " run", std::string("soundness fault: ") + e.what(), "sound enclosures", false});
    return out;
  }
  out.push_back({tag + " persistence sweep k=1..3", matching.empty() ? "no k matches" : matching + " match",
                 "some k reproduces periods and iterations", !matching.empty()});

  std::size_t pick = 0;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    if (case_matches(sweep[i], ref)) {
      pick = i;
      break;
    }
  }
  const CaseReport& rep = sweep[pick];
  const auto& single = rep.single.fixed_point;
  const auto& inter = rep.intersected.fixed_point;
  const auto period_text = [](const FixedPointReport& fp) {
    return fp.converged ? std::to_string(fp.period) : std::string("none");
  };
  const std::string k_tag = " (k=" + std::to_string(pick + 1) + ")";
  out.push_back({tag + " single period" + k_tag, period_text(single), std::to_string(ref.period),
                 single.converged && single.period == ref.period});
  out.push_back({tag + " intersected period" + k_tag, period_text(inter), std::to_string(ref.period),
                 inter.converged && inter.period == ref.period});
  out.push_back({tag + " single iterations" + k_tag, std::to_string(single.detected_at),
                 std::to_string(ref.iterations), single.detected_at == ref.iterations});
  out.push_back({tag + " intersected iterations" + k_tag, std::to_string(inter.detected_at),
                 std::to_string(ref.iterations), inter.detected_at == ref.iterations});

  const double ws = measure(single.interval, WidthMetric::midrad);
  const double wi = measure(inter.interval, WidthMetric::midrad);
  out.push_back({tag + " single width", sci(ws, 6), sci(ref.width_single, 6),
                 within_tolerance(ws, ref.width_single, kWidthTolerance, 6)});
  out.push_back({tag + " intersected width", sci(wi, 6), sci(ref.width_intersected, 6),
                 within_tolerance(wi, ref.width_intersected, kWidthTolerance, 6)});
  if (!std::isnan(ref.reduction_percent)) {
    const double got = 100.0 * (ws - wi) / ws;
    out.push_back({tag + " width reduction %", fixed(got, 1), "~" + fixed(ref.reduction_percent, 0) + " +/- 3",
                   std::fabs(got - ref.reduction_percent) <= kReductionTolerancePoints});
  }
  return out;
}

}  // namespace

bool within_tolerance(double got, double expected, double rel_tol, int printed_digits) {
  if (!std::isfinite(got)) return false;
  if (expected == 0.0) return got == 0.0;
  if (std::fabs(got - expected) <= rel_tol * std::fabs(expected)) return true;
  return sci(got, printed_digits) == sci(expected, printed_digits);
}

RunConfig period_case_config(const std::string& r, unsigned persistence) {
  RunConfig cfg;
  cfg.r = r;
  cfg.x0 = "0.6";
  cfg.extensions = {kLogistic, kLogisticNested};
  cfg.max_iterations = 100;
  cfg.persistence = persistence;
  return cfg;
}

std::vector<Verdict> reproduce_period_cases(const ReproductionOptions& opts) {
  std::vector<Verdict> out;
  for (const auto& ref : kPeriodCases) {
    auto v = check_period_case(ref, opts);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<Verdict> reproduce_width_growth(const ReproductionOptions& opts) {
  RunConfig cfg;
  cfg.r = "3.6";
  cfg.x0 = "0.6";
  cfg.extensions = {kLogistic, kLogisticNested};
  cfg.max_iterations = 10;
  cfg.eval.rounding = opts.rounding;
  std::vector<Verdict> out;
  OrbitRecord single;
  OrbitRecord inter;
  try {
    const auto es = cfg.parsed_extensions();
    single = iterate_single(es.front(), cfg);
    inter = iterate_intersected(es, cfg);
  } catch (const SoundnessFault& e) {
    out.push_back({"growth r=3.6 run", std::string("soundness fault: ") + e.what(), "sound enclosures", false});
    return out;
  }
  bool ordered = true;
  for (std::size_t n = 0; n <= 10; ++n) {
    const double a = measure(single[n].enclosure, WidthMetric::midrad);
    const double b = measure(inter[n].enclosure, WidthMetric::midrad);
    ordered = ordered && b <= a;
    const std::string row = "growth r=3.6 n=" + std::to_string(n);
    if (n == 0) {
      out.push_back({row + " single", sci(a, 3), sci(kGrowthSingle[0], 3), sci(a, 3) == sci(kGrowthSingle[0], 3)});
      out.push_back({row + " intersected", sci(b, 3), sci(kGrowthIntersected[0], 3),
                     sci(b, 3) == sci(kGrowthIntersected[0], 3)});
    } else {
      out.push_back({row + " single", sci(a, 3), sci(kGrowthSingle[n], 3),
                     within_tolerance(a, kGrowthSingle[n], kGrowthTolerance, 3)});
      out.push_back({row + " intersected", sci(b, 3), sci(kGrowthIntersected[n], 3),
                     within_tolerance(b, kGrowthIntersected[n], kGrowthTolerance, 3)});
    }
  }
  out.push_back({"growth r=3.6 intersected <= single at every n", ordered ? "yes" : "no", "yes", ordered});
  return out;
}

std::vector<Verdict> reproduce_float_divergence(const ReproductionOptions&) {
  RunConfig cfg;
  cfg.r = "3.9";
  cfg.x0 = "0.6";
  cfg.extensions = {kLogistic, kLogisticExpanded};
  cfg.max_iterations = 70;
  cfg.mode = RunMode::float_compare;
  const FloatCompareResult res = iterate_float_compare(cfg.parsed_extensions(), cfg);

  std::vector<Verdict> out;
  const auto first = res.first_divergence;
  const std::string first_text = first ? std::to_string(*first) : "none";
  out.push_back({"divergence r=3.9 first n with |d|>0.1 (from 0)", first_text,
                 "in [" + std::to_string(kDivergenceFirstMin) + ", " + std::to_string(kDivergenceFirstMax) + "]",
                 first && *first >= kDivergenceFirstMin && *first <= kDivergenceFirstMax});
  const double gap = res.diffs[kDivergenceLabel - 1].front();
  out.push_back({"divergence r=3.9 |d| at n=67 (from 1)", fixed(gap, 4), "> " + fixed(kDivergenceMinGap, 2),
                 gap > kDivergenceMinGap});
  return out;
}

std::vector<Verdict> reproduce_all(const ReproductionOptions& opts) {
  const auto launch = opts.parallel ? std::launch::async : std::launch::deferred;
  auto cases = std::async(launch, reproduce_period_cases, opts);
  auto growth = std::async(launch, reproduce_width_growth, opts);
  auto diverge = std::async(launch, reproduce_float_divergence, opts);
  std::vector<Verdict> out = cases.get();
  for (auto* f : {&growth, &diverge}) {
    auto v = f->get();
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

bool print_verdicts(std::ostream& os, const std::vector<Verdict>& verdicts) {
  bool all = true;
  for (const auto& v : verdicts) {
    os << v.label << ": got " << v.got << ", expected " << v.expected << ", " << (v.pass ? "PASS" : "FAIL")
       << '\n';
    all = all && v.pass;
  }
  return all;
}

}  // namespace intorbit
