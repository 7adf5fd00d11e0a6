#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "fucik/errors.hpp"
#include "fucik/report_json.hpp"

namespace fucik::cli {

namespace {

void check_keys(const YAML::Node& node, const std::string& where, const std::set<std::string>& allowed) {
  if (!node.IsMap()) throw PreconditionError(where + ": expected a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) throw PreconditionError(where + ": unknown key '" + key + "'");
  }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& where) {
  if (!node.IsScalar()) throw PreconditionError(where + ": expected a scalar");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw PreconditionError(where + ": cannot parse '" + node.Scalar() + "'");
  }
}

ForcingSignal load_forcing(const YAML::Node& node, const std::string& where) {
  check_keys(node, where, {"constant", "harmonics"});
  double c0 = node["constant"] ? scalar<double>(node["constant"], where + ".constant") : 0.0;
  std::vector<Harmonic> hs;
  if (const auto list = node["harmonics"]) {
    if (!list.IsSequence()) throw PreconditionError(where + ".harmonics: expected a list");
    for (std::size_t j = 0; j < list.size(); ++j) {
      const std::string w = where + ".harmonics[" + std::to_string(j) + "]";
      check_keys(list[j], w, {"k", "cos", "sin"});
      if (!list[j]["k"]) throw PreconditionError(w + ": missing k");
      Harmonic h;
      h.k = scalar<int>(list[j]["k"], w + ".k");
      if (list[j]["cos"]) h.cos_coef = scalar<double>(list[j]["cos"], w + ".cos");
      if (list[j]["sin"]) h.sin_coef = scalar<double>(list[j]["sin"], w + ".sin");
      hs.push_back(h);
    }
  }
  return ForcingSignal(c0, std::move(hs));
}

CouplingFunction load_coupling(const YAML::Node& node, const std::string& where) {
  check_keys(node, where, {"family", "limit", "width", "bump_amplitude", "bump_center", "bump_radius"});
  const std::string family = node["family"] ? scalar<std::string>(node["family"], where + ".family") : "smooth_step";
  auto num = [&](const char* key, double def) {
    return node[key] ? scalar<double>(node[key], where + "." + key) : def;
  };
  if (family == "none") {
    if (node["limit"] || node["width"]) throw PreconditionError(where + ": family 'none' takes no parameters");
    return CouplingFunction::none();
  }
  if (!node["limit"]) throw PreconditionError(where + ": missing limit");
  if (family == "smooth_step") {
    if (node["bump_amplitude"] || node["bump_center"] || node["bump_radius"])
      throw PreconditionError(where + ": bump parameters need family 'step_with_bump'");
    return CouplingFunction::smooth_step(num("limit", 0), num("width", 1));
  }
  if (family == "step_with_bump")
    return CouplingFunction::step_with_bump(num("limit", 0), num("width", 1), num("bump_amplitude", 0),
                                            num("bump_center", 0), num("bump_radius", 1));
  throw PreconditionError(where + ".family: unknown coupling family '" + family + "'");
}

FucikPair load_pair(const YAML::Node& node, int n, const std::string& where) {
  if (!node["a"]) throw PreconditionError(where + ": missing a");
  const double a = scalar<double>(node["a"], where + ".a");
  const FucikPair p = FucikPair::from_a(a, n);
  if (node["b"]) {
    const double b = scalar<double>(node["b"], where + ".b");
    if (!(b > 0)) throw PreconditionError(where + ".b: must be positive");
    const double defect = 1 / std::sqrt(a) + 1 / std::sqrt(b) - 2.0 / n;
    if (std::abs(defect) > kIdentityTolerance)
      throw PreconditionError(where + ": (a, b) is off the resonance curve 1/sqrt(a) + 1/sqrt(b) = 2/n (defect " +
                              std::to_string(defect) + ")");
  }
  return p;
}

RunConfig load(const YAML::Node& root) {
  RunConfig cfg;
  if (!root || root.IsNull()) return cfg;
  check_keys(root, "config", {"n", "oscillators", "integrator", "seed", "output", "run"});

  if (root["oscillators"] || root["n"]) {
    if (!root["n"] || !root["oscillators"]) throw PreconditionError("config: n and oscillators go together");
    const int n = scalar<int>(root["n"], "n");
    if (n < 1) throw PreconditionError("n: must be a positive integer");
    const auto osc = root["oscillators"];
    if (!osc.IsSequence() || osc.size() != 2) throw PreconditionError("oscillators: expected a list of two entries");
    std::vector<FucikPair> pairs;
    std::vector<ForcingSignal> forcing;
    std::vector<CouplingFunction> coupling;
    for (std::size_t i = 0; i < 2; ++i) {
      const std::string w = "oscillators[" + std::to_string(i) + "]";
      check_keys(osc[i], w, {"a", "b", "forcing", "coupling"});
      pairs.push_back(load_pair(osc[i], n, w));
      forcing.push_back(osc[i]["forcing"] ? load_forcing(osc[i]["forcing"], w + ".forcing") : ForcingSignal::zero());
      coupling.push_back(osc[i]["coupling"] ? load_coupling(osc[i]["coupling"], w + ".coupling")
                                            : CouplingFunction::none());
    }
    cfg.system.emplace(pairs[0], pairs[1], forcing[0], forcing[1], coupling[0], coupling[1]);
  }

  if (const auto it = root["integrator"]) {
    check_keys(it, "integrator", {"rel_tol", "abs_tol", "max_step"});
    if (it["rel_tol"]) cfg.integrator.rel_tol = scalar<double>(it["rel_tol"], "integrator.rel_tol");
    if (it["abs_tol"]) cfg.integrator.abs_tol = scalar<double>(it["abs_tol"], "integrator.abs_tol");
    if (it["max_step"]) cfg.integrator.max_step = scalar<double>(it["max_step"], "integrator.max_step");
    cfg.integrator.validate();
  }
  if (root["seed"]) cfg.seed = scalar<std::uint64_t>(root["seed"], "seed");
  if (root["output"]) cfg.output_dir = scalar<std::string>(root["output"], "output");

  if (const auto run = root["run"]) {
    check_keys(run, "run", {"grid", "tol", "samples", "direction", "zero_index", "start", "iterations", "matrix"});
    auto& r = cfg.run;
    if (run["grid"]) r.grid = scalar<int>(run["grid"], "run.grid");
    if (run["tol"]) r.tol = scalar<double>(run["tol"], "run.tol");
    if (run["samples"]) r.samples = scalar<int>(run["samples"], "run.samples");
    if (run["direction"]) r.direction = direction_from_string(scalar<std::string>(run["direction"], "run.direction"));
    if (run["zero_index"]) r.zero_index = scalar<int>(run["zero_index"], "run.zero_index");
    if (run["iterations"]) r.iterations = scalar<int>(run["iterations"], "run.iterations");
    auto four = [&](const char* key) {
      const auto s = run[key];
      if (!s.IsSequence() || s.size() != 4) throw PreconditionError(std::string("run.") + key + ": expected 4 numbers");
      std::array<double, 4> v{};
      for (std::size_t j = 0; j < 4; ++j) v[j] = scalar<double>(s[j], std::string("run.") + key);
      return v;
    };
    if (run["start"]) r.start = four("start");
    if (run["matrix"]) {
      const auto v = four("matrix");
      r.matrix = Matrix2{v[0], v[1], v[2], v[3]};
    }
  }
  return cfg;
}

}  // namespace

RunConfig load_config_text(const std::string& yaml) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml);
  } catch (const YAML::Exception& e) {
    throw PreconditionError(std::string("config: ") + e.what());
  }
  return load(root);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_config_text(ss.str());
}

ForcingSignal parse_forcing(const std::string& text) {
  double c0 = 0;
  std::vector<Harmonic> hs;
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, ',')) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) throw PreconditionError("forcing term '" + term + "': expected name:value");
    const std::string name = term.substr(0, colon);
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(term.substr(colon + 1), &used);
      if (used != term.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw PreconditionError("forcing term '" + term + "': bad number");
    }
    if (name == "const") {
      c0 += value;
      continue;
    }
    const bool is_cos = name.rfind("cos", 0) == 0, is_sin = name.rfind("sin", 0) == 0;
    if (!is_cos && !is_sin) throw PreconditionError("forcing term '" + term + "': expected cosK, sinK or const");
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(name.substr(3), &used);
      if (used != name.size() - 3) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw PreconditionError("forcing term '" + term + "': bad harmonic index");
    }
    hs.push_back(Harmonic{k, is_cos ? value : 0.0, is_sin ? value : 0.0});
  }
  return ForcingSignal(c0, std::move(hs));
}

std::vector<double> parse_numbers(const std::string& text, std::size_t count) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw PreconditionError("'" + text + "': bad number '" + item + "'");
    }
  }
  if (count && out.size() != count)
    throw PreconditionError("'" + text + "': expected " + std::to_string(count) + " comma-separated numbers");
  return out;
}

nlohmann::json to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["system"] = cfg.system ? fucik::to_json(*cfg.system) : nlohmann::json(nullptr);
  j["integrator"] = fucik::to_json(cfg.integrator);
  j["seed"] = cfg.seed;
  return j;
}

}  // namespace fucik::cli
