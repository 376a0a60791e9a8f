// gft: table, figure, sharpness and audit reports for the half-plane class.
//
// Exit codes: 0 success / all bounds hold, 1 bound violation found, 2 usage
// or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "gft/bounds.hpp"
#include "gft/reports.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
  double theta = 0.0;
  double gamma = 1.0;
  std::uint64_t seed = 1;
  int count = 10;
  std::string out;
  std::string format;
  gft::GridSpec grid;
  double rho = 0.999;
  int samples = 720;
  std::string target = "th2";
  double a = 0.5;
  bool inject_koebe = false;
  unsigned workers = 1;
};

void emit(const Options& o, const std::string& content) {
  if (o.out.empty() || o.out == "-") {
    std::cout << content;
  } else {
    gft::write_file_atomic(o.out, content);
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--theta", o.theta, "rotation angle theta, |theta| < pi/2")->capture_default_str();
  cmd->add_option("--gamma", o.gamma, "half-plane offset parameter gamma > 0")->capture_default_str();
}

void add_grid(CLI::App* cmd, Options& o) {
  cmd->add_option("--grid-J", o.grid.J, "radial levels, r_max = 1 - 2^-J")->capture_default_str();
  cmd->add_option("--grid-M", o.grid.M, "angles per radius")->capture_default_str();
  cmd->add_option("--refine-R", o.grid.R, "local refinement rounds")->capture_default_str();
}

void add_output(CLI::App* cmd, Options& o, std::vector<std::string> formats) {
  cmd->add_option("--out", o.out, "output path (stdout when omitted)");
  cmd->add_option("--format", o.format, "output format, default " + formats.front())->check(CLI::IsMember(formats));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schwarzian and pre-Schwarzian norm toolkit for the half-plane class C_theta(gamma)"};
  app.require_subcommand(1);
  Options o;

  auto* table1 = app.add_subcommand("table1", "largest gamma with delta(gamma, theta) < 1 for the standard thetas");
  add_output(table1, o, {"csv", "json"});

  auto* figure1 = app.add_subcommand("figure1", "image of |z| = rho under the subordination target g");
  add_params(figure1, o);
  figure1->add_option("--rho", o.rho, "curve radius, 0 < rho < 1")->capture_default_str();
  figure1->add_option("--samples", o.samples, "points on the curve")->capture_default_str();
  add_output(figure1, o, {"csv", "json", "svg"});

  auto* sharp = app.add_subcommand("sharpness", "grid estimate of an extremal norm against its sharp bound");
  add_params(sharp, o);
  add_grid(sharp, o);
  sharp->add_option("--target", o.target, "th2 | th3_theta0 | pre_h")
      ->check(CLI::IsMember({"th2", "th3_theta0", "pre_h"}))
      ->capture_default_str();
  sharp->add_option("--alpha", o.a, "zero a of the dilatation (a - z)/(1 - a z) for th3_theta0")->capture_default_str();
  add_output(sharp, o, {"json"});

  auto* audit = app.add_subcommand("audit", "check every bound on seeded random members");
  audit->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  audit->add_option("--count", o.count, "number of members")->capture_default_str();
  audit->add_flag("--inject-koebe", o.inject_koebe, "append the Koebe function, which must be flagged");
  audit->add_option("--workers", o.workers, "threads (0 = all cores)")->capture_default_str();
  add_grid(audit, o);
  add_output(audit, o, {"json"});

  auto* criteria = app.add_subcommand("criteria", "Becker, Nehari and quasiconformal-extension criteria");
  add_params(criteria, o);
  add_output(criteria, o, {"json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (table1->parsed()) {
      if (o.format.empty()) o.format = "csv";
      const auto rows = gft::table1_rows();
      if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back({{"theta", r.label}, {"theta_radians", r.theta}, {"gamma_max", r.gamma_max}});
        emit(o, dump(j));
      } else {
        emit(o, gft::table1_csv(rows));
      }
      return 0;
    }
    if (figure1->parsed()) {
      if (o.format.empty()) o.format = "csv";
      const auto data = gft::figure1_data(gft::ClassParams(o.theta, o.gamma), o.rho, o.samples);
      if (o.format == "svg") {
        emit(o, gft::figure1_svg(data));
      } else if (o.format == "json") {
        emit(o, dump(gft::figure1_json(data)));
      } else {
        emit(o, gft::figure1_csv(data));
      }
      return 0;
    }
    if (sharp->parsed()) {
      const gft::ClassParams p(o.theta, o.gamma);
      o.grid.validate();
      const auto res = gft::sharpness(p, gft::parse_sharpness_target(o.target), o.a, o.grid);
      emit(o, dump(gft::to_json(res, p)));
      return 0;
    }
    if (audit->parsed()) {
      if (o.count < 1) {
        std::cerr << "audit: --count must be >= 1\n";
        return kExitUsage;
      }
      gft::AuditConfig cfg{o.seed, o.count, o.grid, o.inject_koebe, o.workers};
      const auto records = gft::run_audit(cfg);
      const auto j = gft::audit_json(cfg, records);
      emit(o, dump(j));
      if (!j["all_pass"].get<bool>()) {
        for (const auto& r : j["records"]) {
          if (!r["pass"].get<bool>()) std::cerr << "violation: " << r.dump() << "\n";
        }
        return kExitViolation;
      }
      return 0;
    }
    if (criteria->parsed()) {
      emit(o, dump(gft::criteria_json(gft::ClassParams(o.theta, o.gamma))));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
