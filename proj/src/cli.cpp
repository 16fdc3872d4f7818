#include "qnetmax/cli.hpp"

#include "qnetmax/classify.hpp"
#include "qnetmax/criteria.hpp"
#include "qnetmax/error.hpp"
#include "qnetmax/io.hpp"
#include "qnetmax/swap.hpp"
#include "qnetmax/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>

namespace qnetmax::cli {

namespace {

using ojson = nlohmann::ordered_json;
using io::round_significant;

ojson spectrum_json(const TSpectrum& t) {
  return ojson::array({round_significant(t.t1), round_significant(t.t2), round_significant(t.t3)});
}

std::uint64_t parse_seed_text(const std::string& text, const char* source) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw Error(ErrorKind::ParseError, std::string(source) + " must be a non-negative integer, got \"" + text + "\"");
  return value;
}

std::vector<double> parse_axis(const std::string& spec) {
  std::vector<double> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = spec.find(':', start);
    const std::string piece = spec.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      throw Error(ErrorKind::ParseError, "--grid: cannot read \"" + piece + "\" in \"" + spec + "\"");
    parts.push_back(v);
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) throw Error(ErrorKind::ParseError, "--grid axis must be start:stop:step, got \"" + spec + "\"");
  return grid_axis(parts[0], parts[1], parts[2]);
}

std::vector<std::pair<double, double>> parse_grid(const std::string& spec) {
  const auto comma = spec.find(',');
  const auto first = parse_axis(spec.substr(0, comma));
  const auto second = comma == std::string::npos ? first : parse_axis(spec.substr(comma + 1));
  std::vector<std::pair<double, double>> grid;
  grid.reserve(first.size() * second.size());
  for (double p1 : first)
    for (double p2 : second) grid.emplace_back(p1, p2);
  return grid;
}

int run_analyze(const std::vector<std::string>& files, std::uint64_t seed, std::ostream& out) {
  NetworkConfig states;
  for (const auto& f : files) states.push_back(io::load_state_file(f));
  const MaxReport rep = max_report(states);

  ojson report;
  report["seed"] = seed;
  report["n"] = states.size();
  ojson links = ojson::array();
  for (std::size_t i = 0; i < states.size(); ++i) {
    ojson link;
    link["file"] = files[i];
    if (states[i].label()) link["label"] = *states[i].label();
    link["t_spectrum"] = spectrum_json(rep.spectra[i]);
    link["chsh_max"] = round_significant(rep.chsh_per_link[i]);
    link["chsh_violation"] = violates(rep.chsh_per_link[i]);
    links.push_back(link);
  }
  report["links"] = links;
  ojson chsh = ojson::array();
  for (double s : rep.chsh_per_link) chsh.push_back(round_significant(s));
  report["chsh_max"] = chsh;
  if (states.size() >= 2) {
    report["star_max"] = round_significant(rep.biloc_or_star);
    report["star_violation"] = violates(rep.biloc_or_star);
  }
  if (states.size() == 2) {
    const RegionFlags f{violates(rep.chsh_per_link[0]), violates(rep.chsh_per_link[1]), violates(rep.biloc_or_star)};
    report["bilocality_max"] = round_significant(rep.biloc_or_star);
    report["flags"] = {{"ab_nonlocal", f.ab_nonlocal}, {"bc_nonlocal", f.bc_nonlocal}, {"nonbilocal", f.nonbilocal}};
  }
  out << report.dump(2) << '\n';
  return kExitOk;
}

int run_scan(const std::string& family, const std::string& grid_spec, std::ostream& out) {
  const auto grid = parse_grid(grid_spec);
  if (family == "werner") {
    write_scan_csv(out, ScanFamily::Werner, werner_scan(grid));
  } else if (family == "colored") {
    write_scan_csv(out, ScanFamily::Colored, colored_scan(grid));
  } else {
    throw Error(ErrorKind::ParseError, "--family must be werner or colored, got \"" + family + "\"");
  }
  return kExitOk;
}

int run_verify(const std::string& suite, std::uint64_t seed, int instances, int restarts, std::ostream& out) {
  const SuiteSummary s = run_suite(suite, seed, instances, restarts);
  ojson report;
  report["seed"] = s.seed;
  report["suite"] = s.suite;
  report["instances"] = s.instances;
  report["restarts"] = s.restarts;
  report["passed"] = s.passed;
  report["failed"] = s.failed;
  report[s.metric] = round_significant(s.worst);
  if (s.suite == "theorem3" || s.suite == "theorem4") report["min_gap"] = round_significant(s.worst_low);
  report["failing_instances"] = s.failing_instances;
  report["status"] = s.failed == 0 ? "pass" : "fail";
  out << report.dump(2) << '\n';
  return s.failed == 0 ? kExitOk : kExitVerifyFailed;
}

int run_swap_sim(const std::string& ab_file, const std::string& bc_file, const std::string& settings_file,
                 std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const TwoQubitState ab = io::load_state_file(ab_file);
  const TwoQubitState bc = io::load_state_file(bc_file);
  BilocalSettings s = BilocalSettings::branciard();
  if (settings_file.empty()) {
    err << "notice: no --settings given; using Branciard settings\n";
  } else {
    std::vector<std::string> warnings;
    s = io::parse_bilocal_settings(io::read_json_file(settings_file), &warnings);
    for (const auto& w : warnings) err << w << '\n';
  }
  const BsmDistribution d = bsm_distribution(ab, bc, s.a0, s.a1, s.c0, s.c1);
  const BilocalValue v = bsm_bilocality(d);

  write_bsm_csv(out, d);
  ojson report;
  report["seed"] = seed;
  report["I"] = round_significant(v.I);
  report["J"] = round_significant(v.J);
  report["B"] = round_significant(v.B);
  report["violation"] = violates(v.B);
  report["bilocality_max"] = round_significant(bilocality_max(ab, bc));
  out << report.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_seed) {
  CLI::App app{"Maximal violation of bilocality and star-network n-locality inequalities", "qnetmax"};
  app.require_subcommand(1);

  std::string seed_text;
  auto add_seed = [&](CLI::App* sub) {
    return sub->add_option("--seed", seed_text, "RNG seed (default 0, or QNETMAX_SEED)");
  };

  auto* analyze = app.add_subcommand("analyze", "Closed-form maxima for one or more state files");
  std::vector<std::string> state_files;
  analyze->add_option("states", state_files, "State JSON files")->required();
  auto* analyze_seed = add_seed(analyze);

  auto* scan = app.add_subcommand("scan", "Threshold scan over a state family (CSV)");
  std::string family;
  std::string grid;
  scan->add_option("--family", family, "werner | colored")->required();
  scan->add_option("--grid", grid, "start:stop:step[,start:stop:step]")->required();

  auto* verify = app.add_subcommand("verify", "Run a randomized verification suite");
  std::string suite;
  int instances = 50;
  int restarts = 32;
  verify->add_option("--suite", suite, "theorem1 | theorem3 | theorem4 | lemma2 | lemma4 | prop1")->required();
  verify->add_option("--instances", instances, "Number of random instances")->capture_default_str();
  verify->add_option("--restarts", restarts, "Optimizer restarts per instance")->capture_default_str();
  auto* verify_seed = add_seed(verify);

  auto* swap = app.add_subcommand("swap-sim", "Entanglement-swapping simulation with a Bell-state measurement");
  std::string ab_file;
  std::string bc_file;
  std::string settings_file;
  swap->add_option("stateAB", ab_file, "rho_AB JSON file")->required();
  swap->add_option("stateBC", bc_file, "rho_BC JSON file")->required();
  swap->add_option("--settings", settings_file, "Settings JSON file (a0, a1, c0, c1)");
  auto* swap_seed = add_seed(swap);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    std::uint64_t seed = 0;
    const bool seed_given = (analyze->parsed() && analyze_seed->count() > 0) ||
                            (verify->parsed() && verify_seed->count() > 0) ||
                            (swap->parsed() && swap_seed->count() > 0);
    if (seed_given)
      seed = parse_seed_text(seed_text, "--seed");
    else if (env_seed)
      seed = parse_seed_text(*env_seed, "QNETMAX_SEED");

    if (analyze->parsed()) return run_analyze(state_files, seed, out);
    if (scan->parsed()) return run_scan(family, grid, out);
    if (verify->parsed()) return run_verify(suite, seed, instances, restarts, out);
    return run_swap_sim(ab_file, bc_file, settings_file, seed, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace qnetmax::cli
