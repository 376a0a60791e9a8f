#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gft/bounds.hpp"
#include "gft/class_params.hpp"
#include "gft/schwarz_function.hpp"
#include "gft/sup_estimator.hpp"

namespace gft {

/// Slack allowed between a computed norm and its bound.
inline constexpr double kAuditSlack = 1e-6;

// ---- table 1 ---------------------------------------------------------------

struct Table1Row {
  std::string label;
  double theta = 0.0;
  double gamma_max = 0.0;
};

/// θ ∈ {π/4, π/5, π/6, π/10, 0}.
std::vector<Table1Row> table1_rows(double tol = kGammaMaxTol);
/// Columns `theta,gamma_max`; γ to 6 decimals.
std::string table1_csv(const std::vector<Table1Row>& rows);

// ---- figure 1 ----------------------------------------------------------------

struct CurvePoint {
  double t = 0.0;
  Complex w;
  /// (1 + γ/2)cosθ - Re(e^{iθ} w).
  double margin = 0.0;
};

struct Figure1Data {
  ClassParams params;
  double rho = 0.0;
  Complex g0;
  Complex normal;
  double offset = 0.0;
  std::vector<CurvePoint> points;
};

/// g(ρ e^{it}) for `samples` uniform t in [0, 2π). Throws std::invalid_argument
/// unless 0 < ρ < 1 and samples ≥ 1.
Figure1Data figure1_data(const ClassParams& p, double rho, int samples);
std::string figure1_csv(const Figure1Data& d);
nlohmann::json figure1_json(const Figure1Data& d);
/// 800×800 viewport with the curve and the boundary line of the half-plane.
std::string figure1_svg(const Figure1Data& d);

// ---- sharpness -----------------------------------------------------------------

enum class SharpnessTarget { th2, th3_theta0, pre_h };

/// Throws std::invalid_argument for an unknown name.
SharpnessTarget parse_sharpness_target(const std::string& name);
std::string to_string(SharpnessTarget t);

struct SharpnessResult {
  SharpnessTarget target;
  double bound = 0.0;
  NormEstimate estimate;
  double ratio = 0.0;
};

/// th2: ‖S_{f₁}‖ vs 2δ; pre_h: ‖P_{f₁}‖ vs 2γ cosθ; th3_theta0: ‖P_{f₂}‖ vs
/// 1 + 2γ (θ must be 0, otherwise std::invalid_argument).
SharpnessResult sharpness(const ClassParams& p, SharpnessTarget target, double a = 0.5, const GridSpec& g = {});
nlohmann::json to_json(const SharpnessResult& r, const ClassParams& p);

// ---- criteria ----------------------------------------------------------------

nlohmann::json criteria_json(const ClassParams& p);

// ---- random audit ----------------------------------------------------------

struct AuditConfig {
  std::uint64_t seed = 1;
  int count = 10;
  GridSpec grid;
  /// Append a Koebe-function record, which must fail.
  bool inject_koebe = false;
  unsigned workers = 1;
};

struct NormCheck {
  std::string name;
  double norm = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct AuditRecord {
  int index = 0;
  ClassParams params;
  std::string member;
  std::optional<std::string> dilatation;
  double membership_margin = 0.0;
  bool member_ok = false;
  std::vector<NormCheck> checks;
  bool pass = false;
};

/// Draws `count` members from the seed and checks every applicable bound.
/// Throws std::invalid_argument if count < 1.
std::vector<AuditRecord> run_audit(const AuditConfig& cfg);
nlohmann::json audit_json(const AuditConfig& cfg, const std::vector<AuditRecord>& records);

// ---- output ------------------------------------------------------------------

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace gft
