#include "hs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "hs/errors.hpp"
#include "hs/findim.hpp"
#include "hs/group_geometry.hpp"
#include "hs/parallel.hpp"
#include "hs/pde_oracle.hpp"
#include "hs/presets.hpp"
#include "hs/pseudosphere.hpp"
#include "hs/weak_flow.hpp"

namespace hs::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kSchema = 1;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Thrown for unwritable output locations; reported as a config error.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string preset = "fig1c";
  std::string scenario_file;
  int n = 256;
  int kappa = -1;
  double dt = 0.0;  // per-subcommand default applied when left at 0
  double t_max = -1.0;
  std::vector<double> times;
  std::string out;
  std::uint64_t seed = 1;
  bool json = false;
  int samples = 100;
  bool scan_planes = false;
};

json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;  // infinite breaking time and friends
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_text(const json& j, std::ostream& out, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix + it.key();
    const auto& v = it.value();
    if (v.is_object()) {
      print_text(v, out, key + ".");
    } else if (v.is_array()) {
      if (!v.empty() && v.front().is_object()) {
        out << key << ": " << v.size() << " entries\n";
      } else {
        out << key << ": " << v.dump() << '\n';
      }
    } else if (v.is_number_float()) {
      out << key << ": " << fmt(v.get<double>()) << '\n';
    } else if (v.is_string()) {
      out << key << ": " << v.get<std::string>() << '\n';
    } else {
      out << key << ": " << v.dump() << '\n';
    }
  }
}

void emit(const json& report, const Options& o, std::ostream& out) {
  if (o.json) {
    out << report.dump(2) << '\n';
  } else {
    print_text(report, out);
  }
}

fs::path prepare_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw OutputError("cannot create output directory " + dir);
  }
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw OutputError("cannot write " + path.string());
  f << text;
  if (!f) throw OutputError("cannot write " + path.string());
}

std::vector<double> time_grid(double t_max, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("--dt must be positive");
  if (!(t_max >= 0.0)) throw std::invalid_argument("--t-max must be >= 0");
  const auto count = static_cast<long>(std::floor(t_max / dt + 1e-9));
  if (count > 1000000) throw std::invalid_argument("too many output times");
  std::vector<double> t(count + 1);
  for (long k = 0; k <= count; ++k) t[k] = static_cast<double>(k) * dt;
  return t;
}

void require_ascending(const std::vector<double>& t) {
  if (t.empty()) throw std::invalid_argument("time list is empty");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] >= 0.0) || !std::isfinite(t[i])) {
      throw std::invalid_argument("times must be finite and >= 0");
    }
    if (i > 0 && !(t[i] > t[i - 1])) {
      throw std::invalid_argument("times must be strictly ascending");
    }
  }
}

std::vector<double> double_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<double>>();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read scenario file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Scenario scenario_from(const Options& o) {
  if (!o.scenario_file.empty()) return parse_scenario(read_file(o.scenario_file));
  Scenario s;
  s.name = o.preset;
  s.preset = o.preset;
  s.kappa = kappa_from_int(o.kappa);
  s.n = o.n;
  return s;
}

void require_minus(const Scenario& s, const char* what) {
  if (s.kappa != Kappa::kMinus) {
    throw std::invalid_argument(std::string(what) +
                                " uses the kappa = -1 closed forms only");
  }
}

json classification_json(const InitialData& d) {
  const auto nd = normalize(d);
  json j;
  j["c"] = nd.cls.c;
  j["classification"] = to_string(nd.cls.type);
  j["scale"] = nd.cls.scale;
  return j;
}

// ---------------------------------------------------------------- simulate

struct Frame {
  double t = 0.0;
  GridFunction u, rho, ux_phi;
  double energy = 0.0;
};

int simulate(const Options& o, std::ostream& out, std::ostream& err) {
  auto s = scenario_from(o);
  require_minus(s, "simulate");
  std::vector<double> times = s.times;
  if (times.empty()) times = o.times;
  if (times.empty()) {
    times = time_grid(o.t_max < 0 ? 10.0 : o.t_max, o.dt > 0 ? o.dt : 0.05);
  }
  require_ascending(times);

  const auto d = initial_data(s);
  const auto adm = admissibility(d);
  const auto nd = normalize(d);
  const double scale = nd.cls.scale;
  const double t_star = adm.admissible() ? kInfinity : scale * blowup_time(nd);
  if (times.back() >= t_star) {
    err << "error: requested t = " << fmt(times.back())
        << " reaches the breaking time T* = " << fmt(t_star)
        << " and the data do not admit the global weak continuation\n";
    return kBlowup;
  }

  std::vector<std::optional<Frame>> slots(times.size());
  parallel_for(static_cast<int>(times.size()), [&](int i) {
    const double t = times[i];
    Frame f{t, GridFunction::zeros(d.grid()), GridFunction::zeros(d.grid()),
            GridFunction::zeros(d.grid()), 0.0};
    if (adm.admissible()) {
      auto e = weak_solution(d, t);
      f.u = e.u;
      f.rho = e.rho;
      f.ux_phi = lagrangian_snapshot(d, t);
      f.energy = energy(weak_state(d, t));
    } else {
      const double tau = t / scale;
      auto e = eulerian_solution(nd, tau);
      f.u = e.u / scale;
      f.rho = e.rho / scale;
      auto lf = lagrangian_fields(nd, tau);
      f.ux_phi = lf.U / scale;
      f.energy = integrate((lf.U * lf.U - lf.varrho * lf.varrho) * lf.phi_x) /
                 (scale * scale);
    }
    slots[i] = std::move(f);
  });
  std::vector<Frame> frames;
  for (auto& f : slots) frames.push_back(std::move(*f));

  double drift = 0.0;
  for (const auto& f : frames) drift = std::max(drift, std::abs(f.energy - frames[0].energy));
  const double e0 = 4.0 * casimir_c(d);
  const double drift_tol = 1e-8 * std::max(1.0, std::abs(e0));

  json summary;
  summary["schema"] = kSchema;
  summary["name"] = s.name;
  summary["n"] = d.grid().size();
  summary["kappa"] = static_cast<int>(value(s.kappa));
  summary.update(classification_json(d));
  summary["T_star"] = number(t_star);
  summary["admissible"] = adm.admissible();
  summary["engine"] = adm.admissible() ? "weak" : "classical";
  summary["energy"] = frames[0].energy;
  summary["energy_drift"] = drift;
  summary["times"] = times;

  if (!o.out.empty()) {
    const auto dir = prepare_dir(o.out);
    if (s.write_csv) {
      std::string surface = "t,x,ux_phi\n";
      for (std::size_t i = 0; i < frames.size(); ++i) {
        const auto& f = frames[i];
        std::string csv = "x,u,rho,ux_phi\n";
        for (int j = 0; j < f.u.size(); ++j) {
          const std::string x = fmt(d.grid().node(j));
          csv += x + ',' + fmt(f.u[j]) + ',' + fmt(f.rho[j]) + ',' + fmt(f.ux_phi[j]) + '\n';
          surface += fmt(f.t) + ',' + x + ',' + fmt(f.ux_phi[j]) + '\n';
        }
        char name[32];
        std::snprintf(name, sizeof name, "fields_%04zu.csv", i);
        write_file(dir / name, csv);
      }
      write_file(dir / "surface.csv", surface);
    }
    if (s.write_json) write_file(dir / "summary.json", summary.dump(2) + '\n');
  }
  emit(summary, o, out);
  if (drift > drift_tol) {
    err << "error: energy drift " << fmt(drift) << " exceeds " << fmt(drift_tol) << '\n';
    return kCheckFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- geodesic

int geodesic_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  auto s = scenario_from(o);
  require_minus(s, "geodesic");
  std::vector<double> times = o.times;
  if (times.empty()) times = time_grid(o.t_max < 0 ? 2.0 : o.t_max, o.dt > 0 ? o.dt : 0.05);
  require_ascending(times);
  const auto d = initial_data(s);

  std::vector<SpherePoint> pts(times.size(), SpherePoint{d.u0(), d.u0()});
  parallel_for(static_cast<int>(times.size()), [&](int i) { pts[i] = geodesic(d, times[i]); });

  json series = json::array();
  double worst = 0.0;
  std::string pts_csv = "t,x,f1,f2\n", series_csv = "t,min_gap,sphere_defect\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto& f = pts[i];
    const double defect = std::abs(pairing(f, f) - 1.0);
    worst = std::max(worst, defect);
    series.push_back({{"t", times[i]}, {"min_gap", f.min_gap()}, {"sphere_defect", defect}});
    series_csv += fmt(times[i]) + ',' + fmt(f.min_gap()) + ',' + fmt(defect) + '\n';
    for (int j = 0; j < f.f1.size(); ++j) {
      pts_csv += fmt(times[i]) + ',' + fmt(d.grid().node(j)) + ',' + fmt(f.f1[j]) + ',' +
                 fmt(f.f2[j]) + '\n';
    }
  }

  json report;
  report["schema"] = kSchema;
  report["name"] = s.name;
  report.update(classification_json(d));
  report["boundary_hit_time"] = number(boundary_hit_time(d));
  report["max_sphere_defect"] = worst;
  report["series"] = series;
  if (!o.out.empty()) {
    const auto dir = prepare_dir(o.out);
    write_file(dir / "geodesic.csv", pts_csv);
    write_file(dir / "series.csv", series_csv);
    write_file(dir / "geodesic.json", report.dump(2) + '\n');
  }
  emit(report, o, out);
  if (worst > 1e-9) {
    err << "error: geodesic leaves the pseudosphere by " << fmt(worst) << '\n';
    return kCheckFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- blowup

int blowup_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  auto s = scenario_from(o);
  require_minus(s, "blowup");
  const auto d = initial_data(s);
  const auto nd = normalize(d);
  const double scale = nd.cls.scale;
  const double t_norm = blowup_time(nd);
  const double t_star = scale * t_norm;
  const double hit = boundary_hit_time(d);

  json report;
  report["schema"] = kSchema;
  report["name"] = s.name;
  report.update(classification_json(d));
  report["T_star"] = number(t_star);
  report["T_star_normalized"] = number(t_norm);
  report["T_star_formula"] = number(scale * blowup_time_formula_literal(nd));
  report["boundary_hit_time"] = number(hit);
  if (nd.cls.type == CausalType::kTimelike) {
    report["global"] = is_global(nd);
  } else {
    report["global"] = nullptr;
  }
  report["admissible"] = admissibility(d).admissible();
  if (!o.out.empty()) write_file(prepare_dir(o.out) / "blowup.json", report.dump(2) + '\n');
  emit(report, o, out);

  // The pseudosphere boundary is met exactly when the flow map breaks.
  const BoundaryScan scan;
  const bool visible = t_star < scan.horizon - scan.step;
  if (visible && std::abs(hit - t_star) > 1e-6) {
    err << "error: boundary hit " << fmt(hit) << " disagrees with T* " << fmt(t_star) << '\n';
    return kCheckFailed;
  }
  if (!visible && std::isfinite(hit)) {
    err << "error: boundary hit at " << fmt(hit) << " but no breaking found\n";
    return kCheckFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- compare

constexpr double kCompareL2 = 1e-5;
constexpr double kCompareCasimir = 1e-8;

int compare_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  auto s = scenario_from(o);
  require_minus(s, "compare");
  std::vector<double> times = o.times.empty() ? std::vector<double>{0.1, 0.2, 0.3} : o.times;
  require_ascending(times);
  const auto d = initial_data(s);
  OracleConfig cfg{d.grid().size(), o.dt > 0 ? o.dt : 1e-3, true};
  cfg.validate();
  const auto rep = compare(d, times, cfg);

  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"t", r.t},
                    {"l2_u", r.l2_u},
                    {"l2_rho", r.l2_rho},
                    {"sup_u", r.sup_u},
                    {"sup_rho", r.sup_rho},
                    {"casimir_drift", r.casimir_drift}});
  }
  json report;
  report["schema"] = kSchema;
  report["name"] = s.name;
  report.update(classification_json(d));
  report["time_units"] = "normalized";
  report["n"] = cfg.n;
  report["dt"] = cfg.dt;
  report["T_star_normalized"] = number(rep.blowup_time);
  report["max_l2"] = rep.max_l2();
  report["max_casimir_drift"] = rep.max_casimir_drift();
  report["rows"] = rows;
  if (!o.out.empty()) write_file(prepare_dir(o.out) / "compare.json", report.dump(2) + '\n');
  emit(report, o, out);
  if (rep.max_l2() > kCompareL2 || rep.max_casimir_drift() > kCompareCasimir) {
    err << "error: engines disagree (L2 " << fmt(rep.max_l2()) << ", Casimir drift "
        << fmt(rep.max_casimir_drift()) << ")\n";
    return kCheckFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- curvature

double sup_pair(const TangentPair& a) { return std::max(sup_norm(a.u1), sup_norm(a.u2)); }

TangentPair sum3(const TangentPair& a, const TangentPair& b, const TangentPair& c) {
  return {a.u1 + b.u1 + c.u1, a.u2 + b.u2 + c.u2};
}

struct Identity {
  const char* name;
  double tolerance;
  std::vector<double> errors;
};

// Errors of the K^s example triple, worst over the sampled a.
struct KExample {
  double gram_rel = 0.0;   // against -3a/256
  double omega_abs = 0.0;  // against 1/16
  double sec_rel = 0.0;    // against 1 + 1/a
};

KExample k_example(const Grid& g) {
  auto fn = [&](auto f) { return GridFunction::sample(g, f); };
  const KTangent v(fn([](double x) { return (1 - std::cos(3 * kTwoPi * x)) / (3 * kTwoPi); }),
                   fn([](double x) { return 0.5 * std::sin(kTwoPi * x); }));
  KExample e;
  for (double a : {0.5, -0.5, 0.1, -0.1, 0.01, -0.01}) {
    const KTangent u(fn([](double x) { return (1 - std::cos(kTwoPi * x)) / kTwoPi; }),
                     fn([a](double x) { return std::sqrt(1 + a) * std::sin(2 * kTwoPi * x); }));
    const double gram = metric_K(u, u) * metric_K(v, v) - std::pow(metric_K(u, v), 2);
    const double want = -3 * a / 256;
    e.gram_rel = std::max(e.gram_rel, std::abs(gram - want) / std::abs(want));
    e.omega_abs = std::max(e.omega_abs, std::abs(omega_form(u, v) - 1.0 / 16));
    const double sec = k_sectional(u, v);
    e.sec_rel = std::max(e.sec_rel, std::abs(sec - (1 + 1 / a)) / std::abs(1 + 1 / a));
  }
  return e;
}

int curvature_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  const Kappa kappa = kappa_from_int(o.kappa);
  if (o.samples < 1) throw std::invalid_argument("--samples must be positive");
  const Grid grid(o.n);
  std::mt19937_64 rng(o.seed);
  struct Sample {
    TangentPair u, v, w, a, b;
  };
  std::vector<Sample> samples;
  samples.reserve(o.samples);
  for (int i = 0; i < o.samples; ++i) {
    auto u = random_tangent(grid, rng), v = random_tangent(grid, rng), w = random_tangent(grid, rng);
    auto a = random_tangent(grid, rng, true), b = random_tangent(grid, rng, true);
    samples.push_back({u, v, w, a, b});
  }

  const bool minus = kappa == Kappa::kMinus;
  std::vector<Identity> ids = {{"arnold", 1e-6, {}}, {"duality", 1e-7, {}}, {"jacobi", 1e-8, {}}};
  if (minus) {
    for (const char* name : {"j_squared", "omega_is_gJ", "g_anti_invariant", "nijenhuis"}) {
      ids.push_back({name, 1e-7, {}});
    }
  }
  for (auto& id : ids) id.errors.assign(samples.size(), 0.0);

  parallel_for(o.samples, [&](int i) {
    const auto& s = samples[i];
    const double gram = plane_gram(s.u, s.v, kappa);
    ids[0].errors[i] = std::abs(arnold_curvature(s.u, s.v, kappa) - gram) / std::max(1.0, std::abs(gram));
    const double rhs = metric_G(s.u, bracket(s.v, s.w), kappa);
    ids[1].errors[i] = std::abs(pair_weak(b_operator(s.u, s.v, kappa), s.w, kappa) - rhs) /
                       std::max(1.0, std::abs(rhs));
    ids[2].errors[i] = sup_pair(sum3(bracket(bracket(s.u, s.v), s.w), bracket(bracket(s.v, s.w), s.u),
                                     bracket(bracket(s.w, s.u), s.v)));
    if (!minus) return;
    const auto JU = j_tensor(s.u);
    const auto JJ = j_tensor(JU);
    ids[3].errors[i] = std::max(sup_norm(JJ.u1 - s.u.u1), sup_norm(JJ.u2 - mean_zero_project(s.u.u2)));
    const KTangent KU(s.u), KV(s.v), KJU(JU), KJV(j_tensor(s.v));
    ids[4].errors[i] = std::abs(omega_form(s.u, s.v) - metric_K(KJU, KV));
    ids[5].errors[i] = std::abs(metric_K(KU, KV) + metric_K(KJU, KJV));
    ids[6].errors[i] = sup_pair(nijenhuis(s.a, s.b));
  });

  json report;
  report["schema"] = kSchema;
  report["kappa"] = static_cast<int>(value(kappa));
  report["n"] = o.n;
  report["samples"] = o.samples;
  report["seed"] = o.seed;
  json per = json::object();
  double max_err = 0.0;
  bool ok = true;
  auto record = [&](const std::string& name, double e, double tol) {
    per[name] = {{"max_error", e}, {"tolerance", tol}, {"pass", e < tol}};
    max_err = std::max(max_err, e);
    ok = ok && e < tol;
  };
  for (const auto& id : ids) {
    record(id.name, *std::max_element(id.errors.begin(), id.errors.end()), id.tolerance);
  }
  if (minus) {
    const auto e = k_example(grid);
    record("k_example_gram", e.gram_rel, 1e-10);
    record("k_example_omega", e.omega_abs, 1e-10);
    record("k_example_sec", e.sec_rel, 1e-8);
  }
  report["max_rel_error"] = max_err;
  report["identities"] = per;
  report["pass"] = ok;
  if (!o.out.empty()) write_file(prepare_dir(o.out) / "curvature.json", report.dump(2) + '\n');
  emit(report, o, out);
  if (!ok) {
    err << "error: curvature identities failed\n";
    return kCheckFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- findim

int findim_cmd(const Options& o, int dim, std::ostream& out, std::ostream& err) {
  if (dim < 1) throw std::invalid_argument("findim needs --n >= 1");
  if (o.samples < 1) throw std::invalid_argument("--samples must be positive");
  namespace fd = hs::findim;
  std::mt19937_64 rng(o.seed);
  double j_dev = 0.0, lo = kInfinity, hi = -kInfinity;
  int degenerate = 0;
  for (int i = 0; i < o.samples; ++i) {
    const auto p = fd::random_point(dim, rng);
    const auto X = fd::random_horizontal(p, rng);
    const auto Y = fd::random_horizontal(p, rng);
    try {
      j_dev = std::max(j_dev, std::abs(fd::quotient_sec(X, fd::j_action(X)) - 4.0));
    } catch (const DegeneratePlane&) {
      ++degenerate;
    }
    try {
      const double sec = fd::quotient_sec(X, Y);
      lo = std::min(lo, sec);
      hi = std::max(hi, sec);
    } catch (const DegeneratePlane&) {
      ++degenerate;
    }
  }
  const auto planes = fd::scan_coordinate_planes(fd::canonical_point(dim));
  double plo = kInfinity, phi = -kInfinity;
  json plane_rows = json::array();
  std::string csv = "i,j,sec\n";
  for (const auto& pl : planes) {
    plo = std::min(plo, pl.sec);
    phi = std::max(phi, pl.sec);
    plane_rows.push_back({{"i", pl.i}, {"j", pl.j}, {"sec", pl.sec}});
    csv += std::to_string(pl.i) + ',' + std::to_string(pl.j) + ',' + fmt(pl.sec) + '\n';
  }

  json report;
  report["schema"] = kSchema;
  report["n"] = dim;
  report["samples"] = o.samples;
  report["seed"] = o.seed;
  report["j_planes"] = {{"max_deviation_from_4", j_dev}};
  report["random_planes"] = {{"min", number(lo)}, {"max", number(hi)}};
  report["degenerate_planes"] = degenerate;
  report["coordinate_planes"] = {{"count", planes.size()}, {"min", number(plo)}, {"max", number(phi)}};
  if (o.scan_planes) report["planes"] = plane_rows;

  if (!o.out.empty()) {
    const auto dir = prepare_dir(o.out);
    if (o.scan_planes) write_file(dir / "planes.csv", csv);
    write_file(dir / "findim.json", report.dump(2) + '\n');
  }
  if (o.scan_planes && !o.json) {
    out << csv;
  } else {
    emit(report, o, out);
  }

  bool ok = j_dev < 1e-10;
  if (dim == 1) ok = ok && std::abs(lo - 4.0) < 1e-10 && std::abs(hi - 4.0) < 1e-10;
  if (!ok) {
    err << "error: quotient curvature checks failed\n";
    return kCheckFailed;
  }
  return kOk;
}

void add_data_options(CLI::App* app, Options& o) {
  app->add_option("--preset", o.preset, "named initial data")
      ->check(CLI::IsMember(preset_names()));
  app->add_option("--scenario", o.scenario_file, "scenario descriptor (JSON)")
      ->check(CLI::ExistingFile);
  app->add_option("--n", o.n, "grid points");
  app->add_option("--kappa", o.kappa, "coupling constant (-1 or 1)");
}

void add_output_options(CLI::App* app, Options& o) {
  app->add_option("--out", o.out, "output directory");
  app->add_flag("--json", o.json, "print the report as JSON");
  app->add_option("--seed", o.seed, "random seed");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-component Hunter-Saxton toolkit", "hs"};
  app.require_subcommand(1);
  Options o;
  int dim = 2;

  auto* sim = app.add_subcommand("simulate", "closed-form or weak solution on a time grid");
  add_data_options(sim, o);
  add_output_options(sim, o);
  sim->add_option("--t-max", o.t_max, "last output time (default 10)");
  sim->add_option("--dt", o.dt, "output spacing (default 0.05)");
  sim->add_option("--times", o.times, "explicit output times")->delimiter(',');

  auto* geo = app.add_subcommand("geodesic", "pseudosphere geodesic time series");
  add_data_options(geo, o);
  add_output_options(geo, o);
  geo->add_option("--t-max", o.t_max, "last time (default 2)");
  geo->add_option("--dt", o.dt, "spacing (default 0.05)");
  geo->add_option("--times", o.times, "explicit times")->delimiter(',');

  auto* blow = app.add_subcommand("blowup", "breaking time of the data");
  add_data_options(blow, o);
  add_output_options(blow, o);

  auto* cmp = app.add_subcommand("compare", "closed forms against the PDE integrator");
  add_data_options(cmp, o);
  add_output_options(cmp, o);
  cmp->add_option("--times", o.times, "normalized times (default 0.1,0.2,0.3)")->delimiter(',');
  cmp->add_option("--dt", o.dt, "integrator step (default 1e-3)");

  auto* curv = app.add_subcommand("curvature", "metric, curvature and symplectic identities");
  curv->add_option("--n", o.n, "grid points");
  curv->add_option("--kappa", o.kappa, "coupling constant (-1 or 1)");
  curv->add_option("--samples", o.samples, "random tangent samples");
  add_output_options(curv, o);

  auto* fin = app.add_subcommand("findim", "finite-dimensional quotient curvature");
  fin->add_option("--n", dim, "pseudosphere dimension parameter (default 2)");
  fin->add_option("--samples", o.samples, "random samples");
  fin->add_flag("--scan-planes", o.scan_planes, "sectional curvature of coordinate planes (CSV)");
  add_output_options(fin, o);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("hs");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadConfig;
  }

  if (*sim) return simulate(o, out, err);
  if (*geo) return geodesic_cmd(o, out, err);
  if (*blow) return blowup_cmd(o, out, err);
  if (*cmp) return compare_cmd(o, out, err);
  if (*curv) return curvature_cmd(o, out, err);
  return findim_cmd(o, dim, out, err);
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario is not valid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw std::invalid_argument("scenario must be a JSON object");
    Scenario s;
    s.name = j.value("name", std::string("scenario"));
    s.kappa = kappa_from_int(j.value("kappa", -1));
    s.n = j.value("n", 256);
    const bool has_preset = j.contains("preset"), has_fourier = j.contains("fourier");
    if (has_preset == has_fourier) {
      throw std::invalid_argument("scenario needs exactly one of \"preset\" and \"fourier\"");
    }
    if (has_preset) {
      s.preset = j.at("preset").get<std::string>();
      const auto& names = preset_names();
      if (std::find(names.begin(), names.end(), s.preset) == names.end()) {
        throw std::invalid_argument("unknown preset \"" + s.preset + "\"");
      }
    } else {
      const auto& f = j.at("fourier");
      auto& fd = s.fourier;
      fd.u0x_cos = double_list(f, "u0x_cos");
      fd.u0x_sin = double_list(f, "u0x_sin");
      fd.rho0_mean = f.value("rho0_mean", 0.0);
      fd.rho0_cos = double_list(f, "rho0_cos");
      fd.rho0_sin = double_list(f, "rho0_sin");
    }
    initial_data(s);  // validates n and the coefficients
    if (j.contains("times")) {
      s.times = j.at("times").get<std::vector<double>>();
      require_ascending(s.times);
    }
    if (j.contains("outputs")) {
      s.write_csv = s.write_json = false;
      for (const auto& v : j.at("outputs")) {
        const auto k = v.get<std::string>();
        if (k == "csv") {
          s.write_csv = true;
        } else if (k == "json") {
          s.write_json = true;
        } else {
          throw std::invalid_argument("unknown output kind \"" + k + "\"");
        }
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed scenario: ") + e.what());
  }
}

InitialData initial_data(const Scenario& s) {
  if (!s.preset.empty()) return preset(s.preset, s.n, s.kappa);
  return from_fourier(s.fourier, s.n, s.kappa);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    thread_budget();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadConfig;
  }
  try {
    return dispatch(args, out, err);
  } catch (const BlowupReached& e) {
    err << "error: " << e.what() << '\n';
    return kBlowup;
  } catch (const NotAdmissible& e) {
    err << "error: " << e.what() << '\n';
    return kBlowup;
  } catch (const GridMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hs::cli
