// hilbnef: exact nef-cone computations for Hilbert schemes of points on a
// general rational elliptic surface.
//
// Exit codes: 0 certified, 1 a check was falsified, 2 invalid input.

#include "hilbnef/bridgeland.hpp"
#include "hilbnef/coneconj.hpp"
#include "hilbnef/hilb.hpp"
#include "hilbnef/json_io.hpp"
#include "hilbnef/parallel.hpp"
#include "hilbnef/report.hpp"
#include "hilbnef/surface.hpp"
#include "hilbnef/weyl.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hilbnef;

namespace {

struct Globals {
  std::string out;
  unsigned threads = 0;
  std::uint64_t seed = 0;
};

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << "\n";
}

Divisor parse_class_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') return divisor_from_json(Json::parse(text));
  return parse_divisor(text);
}

Divisor read_divisor_arg(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream f(text.substr(1));
    if (!f) throw std::invalid_argument("cannot read " + text.substr(1));
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_class_arg(ss.str());
  }
  return parse_class_arg(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact nef cone computations for Hilbert schemes of points on a rational elliptic surface"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out, "Write the JSON result to this path instead of stdout");
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");
  app.add_option("--seed", g.seed, "Seed for randomized experiments");

  int exit_code = report::kCertified;
  std::function<void()> action;

  // weyl orbit
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group orbits")->require_subcommand(1);
  auto* orbit_cmd = weyl_cmd->add_subcommand("orbit", "Degree-bounded orbit of a class");
  std::string orbit_start = "E9";
  int orbit_degree = 3;
  orbit_cmd->add_option("--start", orbit_start, "Start class, e.g. E9 or 3H-2E1-E2 or a JSON object");
  orbit_cmd->add_option("--max-degree", orbit_degree, "Largest H-degree kept")->required();
  orbit_cmd->callback([&] { action = [&] {
    const Divisor start = read_divisor_arg(orbit_start);
    emit(report::orbit_json(start, orbit_degree, weyl::weyl_orbit(start, orbit_degree)), g.out);
  }; });

  // surface nef / ample-family
  auto* surface_cmd = app.add_subcommand("surface", "Cone tests on the surface")->require_subcommand(1);
  auto* nef_cmd = surface_cmd->add_subcommand("nef", "Degree-bounded nef certificate");
  std::string nef_divisor;
  int nef_degree = 3;
  nef_cmd->add_option("--divisor", nef_divisor, "Divisor as JSON, expression, or @file")->required();
  nef_cmd->add_option("--max-degree", nef_degree, "Largest H-degree of (-1)-classes checked");
  nef_cmd->callback([&] { action = [&] {
    const Divisor d = read_divisor_arg(nef_divisor);
    const auto cert = surface::is_nef_up_to_degree(d, nef_degree);
    emit(report::nef_certificate_json(d, cert), g.out);
    if (!cert.nef_up_to_bound()) exit_code = report::kFalsified;
  }; });

  auto* ample_cmd = surface_cmd->add_subcommand("ample-family", "Exact ampleness of A1 or A2");
  int ample_n = 3;
  std::string ample_which = "A1";
  ample_cmd->add_option("--n", ample_n, "Number of points")->required();
  ample_cmd->add_option("--which", ample_which, "A1 or A2")->check(CLI::IsMember({"A1", "A2"}));
  ample_cmd->callback([&] { action = [&] {
    const auto dec = ample_which == "A1" ? surface::ample_a1(ample_n) : surface::ample_a2(ample_n);
    emit(report::ample_json(ample_which, ample_n, dec), g.out);
    if (!dec.ample) exit_code = report::kFalsified;
  }; });

  // hilb check-theorem
  auto* hilb_cmd = app.add_subcommand("hilb", "Hilbert scheme checks")->require_subcommand(1);
  auto* thm_cmd = hilb_cmd->add_subcommand("check-theorem", "Duality scan between nef and curve generators");
  int thm_n = 3;
  int thm_degree = 3;
  bool thm_full = false;
  thm_cmd->add_option("--n", thm_n, "Number of points (>= 3)")->required();
  thm_cmd->add_option("--max-degree", thm_degree, "Largest H-degree of (-1)-classes");
  thm_cmd->add_flag("--full-pairings", thm_full, "List every generator pair in the report");
  thm_cmd->callback([&] { action = [&] {
    if (thm_n < 3) throw CLI::ValidationError("--n", "n must be >= 3");
    const auto rep = hilb::theorem1_check(thm_n, thm_degree);
    emit(report::theorem_json(rep, thm_full), g.out);
    if (!rep.ok()) exit_code = report::kFalsified;
  }; });

  // walls gieseker
  auto* walls_cmd = app.add_subcommand("walls", "Bridgeland walls")->require_subcommand(1);
  auto* gies_cmd = walls_cmd->add_subcommand("gieseker", "Certify the Gieseker wall on a slice");
  std::string gies_slice = "A1";
  int gies_n = 3;
  int gies_degree = 3;
  gies_cmd->add_option("--slice", gies_slice, "A1 or A2")->check(CLI::IsMember({"A1", "A2"}));
  gies_cmd->add_option("--n", gies_n, "Number of points (>= 3)")->required();
  gies_cmd->add_option("--max-degree", gies_degree, "Largest H-degree of candidate -L");
  gies_cmd->callback([&] { action = [&] {
    if (gies_n < 3) throw CLI::ValidationError("--n", "n must be >= 3");
    const auto cert = bridgeland::scan_gieseker_wall(bridgeland::parse_slice(gies_slice), gies_n, gies_degree);
    emit(report::gieseker_json(cert), g.out);
    if (!cert.certified()) exit_code = report::kFalsified;
  }; });

  // coneconj cover
  auto* cc_cmd = app.add_subcommand("coneconj", "Translation experiments")->require_subcommand(1);
  auto* cover_cmd = cc_cmd->add_subcommand("cover", "Reduce random nef classes by translations");
  int cover_n = 3;
  std::size_t cover_samples = 100;
  int cover_degree = 3;
  cover_cmd->add_option("--n", cover_n, "Number of points (>= 3)")->required();
  cover_cmd->add_option("--samples", cover_samples, "Number of random nef classes");
  cover_cmd->add_option("--max-degree", cover_degree, "Degree bound for generators and nef checks");
  cover_cmd->add_option("--seed", g.seed, "Seed for the sampler");
  cover_cmd->callback([&] { action = [&] {
    if (cover_n < 3) throw CLI::ValidationError("--n", "n must be >= 3");
    const auto rep = coneconj::coverage_experiment(cover_n, cover_samples, cover_degree, g.seed);
    emit(report::coverage_json(rep), g.out);
    if (rep.successes() != rep.samples.size()) exit_code = report::kFalsified;
  }; });

  // campaign run
  auto* camp_cmd = app.add_subcommand("campaign", "Multi-n certification runs")->require_subcommand(1);
  auto* run_cmd = camp_cmd->add_subcommand("run", "Run every check over a range of n");
  report::Campaign campaign;
  std::vector<std::string> slice_names{"A1", "A2"};
  run_cmd->add_option("--n-min", campaign.n_min, "Smallest n");
  run_cmd->add_option("--n-max", campaign.n_max, "Largest n");
  run_cmd->add_option("--max-degree", campaign.max_h_degree, "Enumeration bound");
  run_cmd->add_option("--slices", slice_names, "Subset of A1 A2")->check(CLI::IsMember({"A1", "A2"}));
  run_cmd->add_option("--n-cap", campaign.n_cap, "Largest n accepted");
  run_cmd->callback([&] { action = [&] {
    campaign.slices.clear();
    for (const auto& s : slice_names) campaign.slices.push_back(bridgeland::parse_slice(s));
    const auto res = report::run_campaign(campaign);
    emit(res.report, g.out);
    if (res.exit_code == report::kUsage) std::cerr << "error: " << res.report["error"].get<std::string>() << "\n";
    exit_code = res.exit_code;
  }; });

  try {
    app.parse(argc, argv);
    set_thread_count(g.threads);
    if (action) action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return report::kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return report::kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return report::kUsage;
  }
  return exit_code;
}
