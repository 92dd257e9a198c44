#include "kp2/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kp2 {

using nlohmann::json;

namespace {

constexpr double kDefaultPeriod = 32.0 * 3.14159265358979323846;

void require_keys(const json& j, const std::string& where,
                  const std::set<std::string>& known) {
  if (!j.is_object()) throw ConfigError("config: '" + where + "' must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key()))
      throw ConfigError("config: unknown key '" + it.key() + "' in " + where);
  }
}

template <class T>
void get_to(const json& j, const char* key, T& out) {
  if (j.contains(key)) j.at(key).get_to(out);
}

void parse_sim(const json& j, SimConfig& sim, InitialProfile& init, int& stride) {
  require_keys(j, "sim",
               {"alpha", "nx", "ny", "lx", "ly", "dt", "t_end", "scheme", "picard_iters",
                "picard_quadrature_nodes", "cutoff_width", "initial", "checkpoint_stride"});
  int nx = sim.grid.nx, ny = sim.grid.ny;
  double lx = sim.grid.lx, ly = sim.grid.ly;
  get_to(j, "alpha", sim.alpha);
  get_to(j, "nx", nx);
  get_to(j, "ny", ny);
  get_to(j, "lx", lx);
  get_to(j, "ly", ly);
  sim.grid = Grid2D(nx, ny, lx, ly);
  get_to(j, "dt", sim.dt);
  get_to(j, "t_end", sim.t_end);
  if (j.contains("scheme")) {
    const std::string s = j.at("scheme").get<std::string>();
    if (s == "etdrk4")
      sim.scheme = Scheme::etdrk4;
    else if (s == "picard")
      sim.scheme = Scheme::picard;
    else
      throw ConfigError("config: scheme must be 'etdrk4' or 'picard', got '" + s + "'");
  }
  get_to(j, "picard_iters", sim.picard_iters);
  get_to(j, "picard_quadrature_nodes", sim.picard_quadrature_nodes);
  get_to(j, "cutoff_width", sim.cutoff_width);
  get_to(j, "checkpoint_stride", stride);
  if (j.contains("initial")) {
    const json& ji = j.at("initial");
    require_keys(ji, "sim.initial",
                 {"profile", "amplitude", "width", "width_y", "x0", "y0", "path"});
    get_to(ji, "profile", init.profile);
    get_to(ji, "amplitude", init.amplitude);
    get_to(ji, "width", init.width);
    get_to(ji, "width_y", init.width_y);
    get_to(ji, "x0", init.x0);
    get_to(ji, "y0", init.y0);
    get_to(ji, "path", init.path);
  }
}

}  // namespace

ExperimentConfig::ExperimentConfig() {
  sim.grid = Grid2D(64, 64, kDefaultPeriod, kDefaultPeriod);
}

ExperimentConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: JSON parse failure: ") + e.what());
  }
  ExperimentConfig cfg;
  require_keys(j, "top level",
               {"sim", "norms", "probe", "scaling", "verify", "converge", "output_dir",
                "format", "seed"});
  if (j.contains("sim")) parse_sim(j.at("sim"), cfg.sim, cfg.initial, cfg.checkpoint_stride);
  if (j.contains("norms")) {
    const json& jn = j.at("norms");
    require_keys(jn, "norms", {"s1", "s2", "b", "sigma"});
    get_to(jn, "s1", cfg.norms.s1);
    get_to(jn, "s2", cfg.norms.s2);
    get_to(jn, "b", cfg.norms.b);
    get_to(jn, "sigma", cfg.norms.sigma);
  }
  if (j.contains("probe")) {
    const json& jp = j.at("probe");
    require_keys(jp, "probe",
                 {"kernels", "boxes", "n_samples", "seed", "alpha", "s", "falsify"});
    get_to(jp, "kernels", cfg.probe.kernels);
    get_to(jp, "boxes", cfg.probe.boxes);
    get_to(jp, "n_samples", cfg.probe.n_samples);
    get_to(jp, "seed", cfg.probe.seed);
    get_to(jp, "alpha", cfg.probe.alpha);
    get_to(jp, "s", cfg.probe.s);
    get_to(jp, "falsify", cfg.probe.falsify);
  }
  if (j.contains("scaling")) {
    const json& js = j.at("scaling");
    require_keys(js, "scaling", {"lambda", "alpha", "s1", "s2", "t_end"});
    get_to(js, "lambda", cfg.scaling.lambda);
    get_to(js, "alpha", cfg.scaling.alpha);
    get_to(js, "s1", cfg.scaling.s1);
    get_to(js, "s2", cfg.scaling.s2);
    get_to(js, "t_end", cfg.scaling.t_end);
  }
  if (j.contains("verify")) {
    const json& jv = j.at("verify");
    require_keys(jv, "verify",
                 {"bounds_alphas", "identity_alphas", "n_samples", "probe_samples",
                  "probe_boxes", "seed", "max_growth_ratio"});
    get_to(jv, "bounds_alphas", cfg.verify.bounds_alphas);
    get_to(jv, "identity_alphas", cfg.verify.identity_alphas);
    get_to(jv, "n_samples", cfg.verify.n_samples);
    get_to(jv, "probe_samples", cfg.verify.probe_samples);
    get_to(jv, "probe_boxes", cfg.verify.probe_boxes);
    get_to(jv, "seed", cfg.verify.seed);
    get_to(jv, "max_growth_ratio", cfg.verify.max_growth_ratio);
  }
  if (j.contains("converge")) {
    const json& jc = j.at("converge");
    require_keys(jc, "converge", {"t_end", "dt", "grid_n"});
    get_to(jc, "t_end", cfg.converge.t_end);
    get_to(jc, "dt", cfg.converge.dt);
    get_to(jc, "grid_n", cfg.converge.grid_n);
  }
  get_to(j, "output_dir", cfg.output_dir);
  get_to(j, "format", cfg.format);
  if (cfg.format != "csv" && cfg.format != "json")
    throw ConfigError("config: format must be 'csv' or 'json'");
  get_to(j, "seed", cfg.seed);
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("config: cannot open " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace kp2
