#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "intorbit/orbit.hpp"

namespace intorbit {

/// One reproduced quantity next to its published reference value.
struct Verdict {
  std::string label;
  std::string got;
  std::string expected;
  bool pass = false;
};

struct ReproductionOptions {
  /// Anything other than directed is expected to produce FAIL verdicts.
  Rounding rounding = Rounding::directed;
  /// Run the independent experiments on separate threads.
  bool parallel = true;
};

/// Relative tolerance check, also accepting agreement to the number of
/// significant digits the reference was printed with.
bool within_tolerance(double got, double expected, double rel_tol, int printed_digits);

// Reference experiments. Each returns its verdicts in a fixed order.
std::vector<Verdict> reproduce_period_cases(const ReproductionOptions& opts);
std::vector<Verdict> reproduce_width_growth(const ReproductionOptions& opts);
std::vector<Verdict> reproduce_float_divergence(const ReproductionOptions& opts);

std::vector<Verdict> reproduce_all(const ReproductionOptions& opts = {});

/// Prints "label: got X, expected Y, PASS|FAIL" lines; returns true if all pass.
bool print_verdicts(std::ostream& os, const std::vector<Verdict>& verdicts);

/// Configuration of the three period-detection cases (r = 3.3, 3.47, 3.55)
/// with the two extensions r*x*(1-x) and r*(x*(1-x)).
RunConfig period_case_config(const std::string& r, unsigned persistence = 1);

}  // namespace intorbit
