#include "cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "intorbit/errors.hpp"
#include "intorbit/orbit.hpp"
#include "intorbit/report.hpp"
#include "intorbit/reproduce.hpp"

namespace intorbit::cli {
namespace {

struct CommonFlags {
  std::string r;
  std::string x0;
  std::vector<std::string> extensions;
  std::string enclose = "x0=tight,r=thin";
  std::string literals = "thin";
  std::string rounding = "directed";
  std::string topology = "shared";
  std::string width = "endpoint";
  std::string precision = "display";
};

const std::map<std::string, Rounding> kRoundings = {
    {"directed", Rounding::directed}, {"ulp", Rounding::ulp_step}, {"nearest", Rounding::nearest}};
const std::map<std::string, Topology> kTopologies = {{"shared", Topology::shared},
                                                     {"independent", Topology::independent}};
const std::map<std::string, WidthMetric> kWidths = {{"endpoint", WidthMetric::endpoint},
                                                    {"midrad", WidthMetric::midrad}};
const std::map<std::string, Precision> kPrecisions = {{"display", Precision::display}, {"full", Precision::full}};

void add_common(CLI::App* cmd, CommonFlags& f, bool need_point = true) {
  auto* r = cmd->add_option("--r", f.r, "Map parameter r (decimal)");
  auto* x0 = cmd->add_option("--x0", f.x0, "Initial condition (decimal)");
  if (need_point) {
    r->required();
    x0->required();
  }
  cmd->add_option("--ext", f.extensions, "Extension expression over x and r (repeatable)")
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  cmd->add_option("--enclose", f.enclose, "Enclosure of x0 and r, e.g. x0=tight,r=thin (thin|pair|tight)");
  cmd->add_option("--literals", f.literals, "Enclosure of numeric literals (thin|pair|tight)")
      ->check(CLI::IsMember({"thin", "pair", "tight"}));
  cmd->add_option("--rounding", f.rounding, "Endpoint rounding (directed|ulp|nearest)")
      ->check(CLI::IsMember({"directed", "ulp", "nearest"}));
  cmd->add_option("--topology", f.topology, "Intersection topology (shared|independent)")
      ->check(CLI::IsMember({"shared", "independent"}));
  cmd->add_option("--width", f.width, "Width measure (endpoint|midrad)")
      ->check(CLI::IsMember({"endpoint", "midrad"}));
  cmd->add_option("--precision", f.precision, "Width digits (display|full)")
      ->check(CLI::IsMember({"display", "full"}));
}

void apply_enclose(const std::string& spec, RunConfig& cfg) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--enclose expects key=mode, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const EnclosureMode mode = parse_enclosure_mode(item.substr(eq + 1));
    if (key == "x0") {
      cfg.x0_enclosure = mode;
    } else if (key == "r") {
      cfg.r_enclosure = mode;
    } else {
      throw std::invalid_argument("--enclose key must be x0 or r, got '" + key + "'");
    }
  }
}

RunConfig to_config(const CommonFlags& f) {
  RunConfig cfg;
  cfg.r = f.r;
  cfg.x0 = f.x0;
  cfg.extensions = f.extensions;
  apply_enclose(f.enclose, cfg);
  cfg.eval.literals = parse_enclosure_mode(f.literals);
  cfg.eval.rounding = kRoundings.at(f.rounding);
  cfg.topology = kTopologies.at(f.topology);
  return cfg;
}

std::vector<unsigned> parse_periods(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || p == 0) {
      throw std::invalid_argument("--periods expects positive integers, got '" + item + "'");
    }
    out.push_back(static_cast<unsigned>(p));
  }
  return out;
}

// Inserts the contents of --config FILE right after the subcommand name so
// that explicit flags on the command line come later and win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string path;
    std::size_t span = 0;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      span = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      span = 1;
    } else {
      continue;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    const std::vector<std::string> extra = config_to_args(in);
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + span));
    const std::size_t at = args.size() > 1 ? 2 : args.size();
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
    break;
  }
  return args;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval pseudo-orbits of 1-D maps: enclosure tightening by intersecting interval extensions"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_path;
  app.add_option("--config", config_path, "key = value file mirroring the flags");

  // orbit
  CommonFlags orbit_flags;
  std::size_t orbit_n = 10;
  std::string orbit_mode = "single";
  std::string orbit_out = "csv";
  auto* orbit = app.add_subcommand("orbit", "Iterate an interval pseudo-orbit and print its enclosures");
  add_common(orbit, orbit_flags);
  orbit->add_option("--n", orbit_n, "Number of iterations");
  orbit->add_option("--mode", orbit_mode, "single|intersect")->check(CLI::IsMember({"single", "intersect"}));
  orbit->add_option("--out", orbit_out, "csv|table")->check(CLI::IsMember({"csv", "table"}));

  // fixedpoint
  CommonFlags fp_flags;
  std::string fp_periods = "1,2,4,8,16";
  unsigned fp_persistence = 1;
  std::size_t fp_max_n = 100;
  bool fp_widths = false;
  bool fp_json = false;
  auto* fixedpoint = app.add_subcommand("fixedpoint", "Compare period detection with one and with all extensions");
  add_common(fixedpoint, fp_flags);
  fixedpoint->add_option("--periods", fp_periods, "Comma-separated candidate periods");
  fixedpoint->add_option("--persistence", fp_persistence, "Consecutive detections required")
      ->check(CLI::PositiveNumber);
  fixedpoint->add_option("--max-n", fp_max_n, "Iteration budget");
  fixedpoint->add_flag("--widths", fp_widths, "Also print the per-iteration width table");
  fixedpoint->add_flag("--json", fp_json, "Also print each report as a JSON block");

  // diverge
  CommonFlags dv_flags;
  std::size_t dv_n = 70;
  std::size_t dv_from = 0;
  std::size_t dv_to = static_cast<std::size_t>(-1);
  double dv_threshold = 0.1;
  unsigned dv_base = 0;
  auto* diverge = app.add_subcommand("diverge", "Iterate extensions in plain floating point and compare");
  add_common(diverge, dv_flags);
  diverge->add_option("--n", dv_n, "Number of iterations");
  diverge->add_option("--from", dv_from, "First row to print");
  diverge->add_option("--to", dv_to, "Last row to print");
  diverge->add_option("--threshold", dv_threshold, "Divergence threshold")->check(CLI::PositiveNumber);
  diverge->add_option("--index-base", dv_base, "Label of the initial value (0 or 1)")->check(CLI::Range(0, 1));

  // reproduce
  std::string rp_rounding = "directed";
  bool rp_serial = false;
  auto* reproduce = app.add_subcommand("reproduce", "Re-run the reference experiments and compare");
  reproduce->add_option("--rounding", rp_rounding, "Endpoint rounding (directed|ulp|nearest)")
      ->check(CLI::IsMember({"directed", "ulp", "nearest"}));
  reproduce->add_flag("--serial", rp_serial, "Run experiments on one thread");

  try {
    args = expand_config(std::move(args));
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*orbit) {
      RunConfig cfg = to_config(orbit_flags);
      cfg.max_iterations = orbit_n;
      cfg.mode = orbit_mode == "single" ? RunMode::single : RunMode::intersect;
      cfg.validate();
      const auto es = cfg.parsed_extensions();
      const OrbitRecord rec =
          cfg.mode == RunMode::single ? iterate_single(es.front(), cfg) : iterate_intersected(es, cfg);
      const WidthMetric metric = kWidths.at(orbit_flags.width);
      const Precision precision = kPrecisions.at(orbit_flags.precision);
      if (orbit_out == "csv") {
        write_orbit_csv(out, rec, metric, precision);
      } else {
        write_orbit_table(out, rec, metric, precision);
      }
      return kOk;
    }
    if (*fixedpoint) {
      RunConfig cfg = to_config(fp_flags);
      cfg.max_iterations = fp_max_n;
      cfg.period_candidates = parse_periods(fp_periods);
      cfg.persistence = fp_persistence;
      cfg.mode = RunMode::intersect;
      cfg.validate();
      if (cfg.extensions.size() < 2) throw std::invalid_argument("fixedpoint needs at least 2 --ext");
      const CaseReport rep = run_case(cfg);
      const WidthMetric metric = kWidths.at(fp_flags.width);
      const Precision precision = kPrecisions.at(fp_flags.precision);
      write_case_report(out, rep, metric, precision);
      out << "single:      " << summary_line(rep.single.fixed_point, metric, precision) << '\n';
      out << "intersected: " << summary_line(rep.intersected.fixed_point, metric, precision) << '\n';
      if (fp_json) {
        out << key_value_block(rep.single.fixed_point, metric) << '\n';
        out << key_value_block(rep.intersected.fixed_point, metric) << '\n';
      }
      if (fp_widths) write_width_table(out, rep.width_table(metric), precision);
      return kOk;
    }
    if (*diverge) {
      RunConfig cfg = to_config(dv_flags);
      cfg.max_iterations = dv_n;
      cfg.mode = RunMode::float_compare;
      cfg.divergence_threshold = dv_threshold;
      cfg.validate();
      const FloatCompareResult res = iterate_float_compare(cfg.parsed_extensions(), cfg);
      // --from/--to are in the same labelling as the printed n column.
      const std::size_t from = dv_from >= dv_base ? dv_from - dv_base : 0;
      const std::size_t to = dv_to == static_cast<std::size_t>(-1) ? dv_to : dv_to - std::min<std::size_t>(dv_to, dv_base);
      write_divergence_csv(out, res, from, to, dv_base);
      if (res.first_divergence) {
        err << "first divergence above " << format_double(res.threshold) << " at n=" << *res.first_divergence + dv_base
            << '\n';
      } else {
        err << "no divergence above " << format_double(res.threshold) << '\n';
      }
      return kOk;
    }
    if (*reproduce) {
      ReproductionOptions opts;
      opts.rounding = kRoundings.at(rp_rounding);
      opts.parallel = !rp_serial;
      const bool ok = print_verdicts(out, reproduce_all(opts));
      out << (ok ? "all reference values reproduced\n" : "reproduction mismatch\n");
      return ok ? kOk : kMismatch;
    }
  } catch (const SoundnessFault& e) {
    err << "soundness fault: " << e.what() << '\n';
    return kSoundness;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace intorbit::cli
