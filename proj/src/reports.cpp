#include "gft/reports.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gft/bounds.hpp"
#include "gft/function_classes.hpp"
#include "gft/rng.hpp"

namespace gft {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

nlohmann::json complex_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

nlohmann::json grid_json(const GridSpec& g) { return {{"J", g.J}, {"M", g.M}, {"R", g.R}}; }

}  // namespace

// ---- table 1 -----------------------------------------------------------------

std::vector<Table1Row> table1_rows(double tol) {
  const std::vector<std::pair<std::string, double>> thetas{
      {"pi/4", kPi / 4}, {"pi/5", kPi / 5}, {"pi/6", kPi / 6}, {"pi/10", kPi / 10}, {"0", 0.0}};
  std::vector<Table1Row> rows;
  for (const auto& [label, theta] : thetas) rows.push_back({label, theta, solve_gamma_max(theta, tol)});
  return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::string out = "theta,gamma_max\n";
  for (const auto& r : rows) out += r.label + "," + fmt("%.6f", r.gamma_max) + "\n";
  return out;
}

// ---- figure 1 ----------------------------------------------------------------

Figure1Data figure1_data(const ClassParams& p, double rho, int samples) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0, 1)");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const HalfPlaneSpec hp = HalfPlaneSpec::of(p);
  Figure1Data d{p, rho, subordination_target(p, 0.0), hp.normal, hp.offset, {}};
  d.points.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * kPi * k / samples;
    const Complex w = subordination_target(p, std::polar(rho, t));
    d.points.push_back({t, w, hp.margin(w)});
  }
  return d;
}

std::string figure1_csv(const Figure1Data& d) {
  std::ostringstream os;
  os << "# theta=" << fmt("%.17g", d.params.theta()) << " gamma=" << fmt("%.17g", d.params.gamma())
     << " rho=" << fmt("%.17g", d.rho) << "\n";
  os << "# g0=" << fmt("%.17g", d.g0.real()) << "," << fmt("%.17g", d.g0.imag()) << "\n";
  os << "# half_plane: Re(exp(i*theta)*w) < offset, normal=" << fmt("%.17g", d.normal.real()) << ","
     << fmt("%.17g", d.normal.imag()) << " offset=" << fmt("%.17g", d.offset) << "\n";
  os << "t,re,im,margin\n";
  for (const auto& pt : d.points) {
    os << fmt("%.17g", pt.t) << "," << fmt("%.17g", pt.w.real()) << "," << fmt("%.17g", pt.w.imag()) << ","
       << fmt("%.17g", pt.margin) << "\n";
  }
  return os.str();
}

nlohmann::json figure1_json(const Figure1Data& d) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& pt : d.points) pts.push_back({{"t", pt.t}, {"re", pt.w.real()}, {"im", pt.w.imag()}, {"margin", pt.margin}});
  return {{"theta", d.params.theta()},
          {"gamma", d.params.gamma()},
          {"rho", d.rho},
          {"g0", complex_json(d.g0)},
          {"half_plane", {{"normal", complex_json(d.normal)}, {"offset", d.offset}}},
          {"points", pts}};
}

std::string figure1_svg(const Figure1Data& d) {
  // Window centred on g(0) = 1, wide enough to show the boundary line.
  const double span = 4.0 * std::max(1.0, std::abs(d.offset) + 1.0);
  const double cx = d.g0.real();
  const double cy = d.g0.imag();
  const double scale = 800.0 / (2.0 * span);
  auto X = [&](double x) { return (x - cx + span) * scale; };
  auto Y = [&](double y) { return (span - (y - cy)) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  os << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"" << fmt("%.3f", Y(0.0)) << "\" x2=\"800\" y2=\"" << fmt("%.3f", Y(0.0))
     << "\" stroke=\"#bbb\"/>\n";
  os << "<line x1=\"" << fmt("%.3f", X(0.0)) << "\" y1=\"0\" x2=\"" << fmt("%.3f", X(0.0))
     << "\" y2=\"800\" stroke=\"#bbb\"/>\n";
  // Boundary line: w = conj(normal)·(offset + i s).
  const Complex dir = std::conj(d.normal);
  const Complex a = dir * Complex(d.offset, -4.0 * span);
  const Complex b = dir * Complex(d.offset, 4.0 * span);
  os << "<line x1=\"" << fmt("%.3f", X(a.real())) << "\" y1=\"" << fmt("%.3f", Y(a.imag())) << "\" x2=\""
     << fmt("%.3f", X(b.real())) << "\" y2=\"" << fmt("%.3f", Y(b.imag()))
     << "\" stroke=\"#c0392b\" stroke-dasharray=\"6,4\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (const auto& pt : d.points) {
    os << fmt("%.3f", X(pt.w.real())) << "," << fmt("%.3f", Y(pt.w.imag())) << " ";
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

// ---- sharpness ---------------------------------------------------------------

SharpnessTarget parse_sharpness_target(const std::string& name) {
  if (name == "th2") return SharpnessTarget::th2;
  if (name == "th3_theta0") return SharpnessTarget::th3_theta0;
  if (name == "pre_h") return SharpnessTarget::pre_h;
  throw std::invalid_argument("unknown sharpness target '" + name + "' (th2 | th3_theta0 | pre_h)");
}

std::string to_string(SharpnessTarget t) {
  switch (t) {
    case SharpnessTarget::th2:
      return "th2";
    case SharpnessTarget::th3_theta0:
      return "th3_theta0";
    case SharpnessTarget::pre_h:
      return "pre_h";
  }
  return "?";
}

SharpnessResult sharpness(const ClassParams& p, SharpnessTarget target, double a, const GridSpec& g) {
  SharpnessResult res{target, 0.0, {}, 0.0};
  switch (target) {
    case SharpnessTarget::th2:
      res.bound = th2_norm_bound(p);
      res.estimate = schwarzian_norm(make_extremal_f1(p), g);
      break;
    case SharpnessTarget::pre_h:
      res.bound = analytic_part_pre_bound(p);
      res.estimate = pre_schwarzian_norm(make_extremal_f1(p), g);
      break;
    case SharpnessTarget::th3_theta0:
      if (p.theta() != 0.0) throw std::invalid_argument("th3_theta0 requires theta = 0");
      if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("th3_theta0 requires 0 < a < 1");
      res.bound = th3_pre_norm_bound(p);
      res.estimate = harmonic_pre_schwarzian_norm(make_f2_witness(p, a), g);
      break;
  }
  res.ratio = res.estimate.value / res.bound;
  return res;
}

nlohmann::json to_json(const SharpnessResult& r, const ClassParams& p) {
  return {{"target", to_string(r.target)},
          {"theta", p.theta()},
          {"gamma", p.gamma()},
          {"bound", r.bound},
          {"estimate", r.estimate.value},
          {"ratio", r.ratio},
          {"witness", complex_json(r.estimate.witness.z())},
          {"r_max", r.estimate.r_max},
          {"grid", grid_json(r.estimate.grid)}};
}

// ---- criteria ----------------------------------------------------------------

nlohmann::json criteria_json(const ClassParams& p) {
  const BoundReport becker = becker_criterion(p);
  const BoundReport nehari = nehari_criterion(p);
  nlohmann::json qc = {{"K", nullptr}};
  if (nehari.applicable) qc["K"] = qc_extension_K(p);
  return {{"theta", p.theta()},
          {"gamma", p.gamma()},
          {"becker", {{"value", becker.value}, {"applicable", becker.applicable}}},
          {"nehari", {{"delta", nehari.value}, {"applicable", nehari.applicable}}},
          {"qc", qc}};
}

// ---- random audit ------------------------------------------------------------

namespace {

SchwarzSpec draw_schwarz(CounterRng& rng, int family) {
  switch (family) {
    case 0:
      return Monomial{1 + rng.index(4)};
    case 1: {
      const double r = rng.uniform();
      return Rotation{std::polar(r, rng.uniform(0.0, 2.0 * kPi))};
    }
    default: {
      const double r = rng.uniform(0.0, 0.9);
      const double t = rng.uniform(0.0, 2.0 * kPi);
      return BlaschkeDeg2Fix0{std::polar(r, t), rng.uniform(0.0, 2.0 * kPi)};
    }
  }
}

SchwarzSpec draw_dilatation(CounterRng& rng, bool identity) {
  const double r = rng.uniform(0.0, 0.9);
  const double t = rng.uniform(0.0, 2.0 * kPi);
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  if (identity) return Automorphism{Complex(0.0), 0.0};
  return Automorphism{std::polar(r, t), phi};
}

NormCheck check(std::string name, double norm, double bound) {
  return {std::move(name), norm, bound, norm <= bound + kAuditSlack};
}

void analytic_checks(AuditRecord& rec, const AnalyticMap& f, const GridSpec& g) {
  const ClassParams& p = rec.params;
  rec.checks.push_back(check("schwarzian", schwarzian_norm(f, g).value, th2_norm_bound(p)));
  rec.checks.push_back(check("pre_schwarzian", pre_schwarzian_norm(f, g).value, analytic_part_pre_bound(p)));
  rec.checks.push_back(check("becker", becker_quantity(f, g).value, becker_criterion(p).value));
}

AuditRecord audit_member(const AuditConfig& cfg, int index) {
  CounterRng rng(cfg.seed, static_cast<std::uint64_t>(index));
  const double theta = rng.uniform(-1.4, 1.4);
  const double gamma = rng.log_uniform(0.05, 3.0);
  AuditRecord rec{index, ClassParams(theta, gamma), {}, {}, 0.0, false, {}, false};
  const SchwarzSpec w = draw_schwarz(rng, index % 3);
  const SchwarzSpec dil = draw_dilatation(rng, index % 4 == 3);

  AnalyticMap h = member_from_schwarz(rec.params, w);
  rec.member = h.describe();
  const MembershipResult m = membership_test(h, rec.params);
  rec.membership_margin = m.margin;
  rec.member_ok = m.member;
  analytic_checks(rec, h, cfg.grid);
  if (rec.member_ok) {
    const HarmonicMap F = make_harmonic_member(rec.params, std::move(h), dil);
    rec.dilatation = dil.describe();
    rec.checks.push_back(check("harmonic_pre_schwarzian", harmonic_pre_schwarzian_norm(F, cfg.grid).value,
                               th3_pre_norm_bound(rec.params)));
    rec.checks.push_back(check("harmonic_schwarzian", harmonic_schwarzian_norm(F, cfg.grid).value,
                               th4_harmonic_schwarzian_bound(rec.params, dil.is_rotation_of_identity())));
  }
  return rec;
}

AuditRecord audit_koebe(const AuditConfig& cfg, int index) {
  AuditRecord rec{index, ClassParams(0.0, 1.0), {}, {}, 0.0, false, {}, false};
  const AnalyticMap f = koebe_probe();
  rec.member = f.describe();
  const MembershipResult m = membership_test(f, rec.params);
  rec.membership_margin = m.margin;
  rec.member_ok = m.member;
  analytic_checks(rec, f, cfg.grid);
  return rec;
}

}  // namespace

std::vector<AuditRecord> run_audit(const AuditConfig& cfg) {
  if (cfg.count < 1) throw std::invalid_argument("audit count must be >= 1");
  cfg.grid.validate();
  const int total = cfg.count + (cfg.inject_koebe ? 1 : 0);
  std::vector<std::optional<AuditRecord>> slots(static_cast<std::size_t>(total));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(total));
  auto run_one = [&](int i) {
    try {
      slots[static_cast<std::size_t>(i)] = i < cfg.count ? audit_member(cfg, i) : audit_koebe(cfg, i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(
                                            cfg.workers == 0 ? std::thread::hardware_concurrency() : cfg.workers,
                                            static_cast<unsigned>(total)));
  if (workers == 1) {
    for (int i = 0; i < total; ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = static_cast<int>(w); i < total; i += static_cast<int>(workers)) run_one(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<AuditRecord> out;
  out.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    AuditRecord rec = std::move(*slots[i]);
    rec.pass = rec.member_ok;
    for (const auto& c : rec.checks) rec.pass = rec.pass && c.pass;
    out.push_back(std::move(rec));
  }
  return out;
}

nlohmann::json audit_json(const AuditConfig& cfg, const std::vector<AuditRecord>& records) {
  nlohmann::json recs = nlohmann::json::array();
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json norms, bounds, margins, pass;
    for (const auto& c : r.checks) {
      norms[c.name] = c.norm;
      bounds[c.name] = c.bound;
      margins[c.name] = c.bound - c.norm;
      pass[c.name] = c.pass;
    }
    recs.push_back({{"index", r.index},
                    {"theta", r.params.theta()},
                    {"gamma", r.params.gamma()},
                    {"member", r.member},
                    {"dilatation", r.dilatation ? nlohmann::json(*r.dilatation) : nlohmann::json(nullptr)},
                    {"membership_margin", r.membership_margin},
                    {"membership_pass", r.member_ok},
                    {"norms", norms},
                    {"bounds", bounds},
                    {"margins", margins},
                    {"checks_pass", pass},
                    {"pass", r.pass}});
    if (!r.pass) violations.push_back(r.index);
  }
  return {{"seed", cfg.seed},
          {"count", cfg.count},
          {"inject_koebe", cfg.inject_koebe},
          {"grid", grid_json(cfg.grid)},
          {"slack", kAuditSlack},
          {"records", recs},
          {"violations", violations},
          {"all_pass", violations.empty()}};
}

// ---- output ------------------------------------------------------------------

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gft
