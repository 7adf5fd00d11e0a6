#include "fucik/report_json.hpp"

namespace fucik {

using nlohmann::json;

json to_json(const Matrix2& m) { return json::array({json::array({m.a11, m.a12}), json::array({m.a21, m.a22})}); }

json to_json(const FucikPair& p) {
  return {{"a", p.a()}, {"b", p.b()}, {"n", p.n()}, {"gamma", p.gamma()}, {"tau", p.tau()}};
}

json to_json(const ForcingSignal& p) {
  json h = json::array();
  for (const auto& x : p.harmonics()) h.push_back({{"k", x.k}, {"cos", x.cos_coef}, {"sin", x.sin_coef}});
  return {{"constant", p.constant()}, {"harmonics", h}};
}

json to_json(const CouplingFunction& f) {
  json j = {{"family", to_string(f.family())}, {"limit", f.limit_plus()}, {"width", f.width()}};
  if (f.family() == CouplingFamily::StepWithBump) {
    j["bump_amplitude"] = f.bump_amplitude();
    j["bump_center"] = f.bump_center();
    j["bump_radius"] = f.bump_radius();
  }
  return j;
}

json to_json(const SystemConfig& cfg) {
  json osc = json::array();
  for (int i = 0; i < 2; ++i)
    osc.push_back({{"a", cfg.pair(i).a()},
                   {"b", cfg.pair(i).b()},
                   {"forcing", to_json(cfg.forcing(i))},
                   {"coupling", to_json(cfg.coupling(i))}});
  return {{"n", cfg.n()}, {"oscillators", osc}};
}

json to_json(const IntegratorSettings& st) {
  return {{"rel_tol", st.rel_tol}, {"abs_tol", st.abs_tol}, {"max_step", st.max_step}};
}

json to_json(const TorusZero& z) {
  return {{"omega", {z.omega.t1(), z.omega.t2()}},
          {"jacobian", to_json(z.jacobian)},
          {"class", to_string(z.classification)},
          {"residual_norm", z.residual_norm}};
}

json to_json(const ZeroSearch& zs) {
  json zeros = json::array();
  for (const auto& z : zs.zeros) zeros.push_back(to_json(z));
  return {{"zeros", zeros}, {"seeds", zs.seeds}, {"singular", zs.singular}, {"failed", zs.failed}, {"log", zs.log}};
}

json to_json(const ConeParams& cp) {
  return {{"a0", cp.a0}, {"eps0", cp.eps0}, {"eta", cp.eta}, {"slope", cp.slope}};
}

json to_json(const ContractionReport& r) {
  return {{"samples", r.samples}, {"violations", r.violations}, {"worst_margin", r.worst_margin}};
}

json to_json(const InvariantSetParams& p) {
  return {{"omega", {p.omega.t1(), p.omega.t2()}},
          {"R", p.R},
          {"Theta", p.Theta},
          {"lambda", p.lambda},
          {"eta", p.eta},
          {"growth_margins", {p.growth_margins[0], p.growth_margins[1]}},
          {"direction", to_string(p.direction)}};
}

json to_json(const InvariantSetChoice& c) {
  return {{"params", to_json(c.params)},
          {"jacobian", to_json(c.jacobian)},
          {"cone", to_json(c.cone)},
          {"certified_margins", {c.certified_margins[0], c.certified_margins[1]}},
          {"L_star", c.L_star},
          {"R_remainder", c.R_remainder},
          {"verification_rounds", c.verification_rounds},
          {"log", c.log}};
}

json to_json(const InvarianceReport& r) {
  return {{"samples", r.samples},
          {"violations", r.violations},
          {"growth_violations", r.growth_violations},
          {"ratio_violations", r.ratio_violations},
          {"angle_violations", r.angle_violations},
          {"worst_growth_slack", r.worst_growth_slack},
          {"worst_ratio_slack", r.worst_ratio_slack},
          {"worst_angle_slack", r.worst_angle_slack}};
}

json to_json(const ResolubilityMargins& m) {
  return {{"in_set", m.in_set}, {"lambda_at_pi", m.lambda_at_pi}, {"alpha", m.alpha}, {"lambda_at_zero", m.lambda_at_zero}};
}

json to_json(const PipelineResult& p) {
  return {{"direction", to_string(p.direction)},
          {"zero", to_json(p.zero)},
          {"invariant_set", to_json(p.choice)},
          {"verification", to_json(p.verification)},
          {"orbit",
           {{"iterations", p.orbit.states.empty() ? 0 : p.orbit.states.size() - 1},
            {"radii_increasing", p.radii_increasing},
            {"all_in_E", p.all_in_E},
            {"min_radius_start", p.min_radius_start},
            {"min_radius_end", p.min_radius_end},
            {"required_growth", p.required_growth},
            {"energy_diverges", p.energy_diverges}}}};
}

json to_json(const ScenarioReport& r) {
  json zeros = json::array();
  for (const auto& z : r.zeros) zeros.push_back(to_json(z));
  json cf = json::array();
  for (const auto& p : r.closed_form)
    cf.push_back({{"label", p.label},
                  {"omega", {p.point.t1(), p.point.t2()}},
                  {"jacobian", to_json(p.jacobian)},
                  {"class", to_string(p.classification)}});
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json pipes = json::array();
  for (const auto& p : r.pipelines) pipes.push_back(to_json(p));
  return {{"scenario", r.name},   {"parameters", r.parameters}, {"all_passed", r.all_passed()},
          {"checks", checks},     {"zeros", zeros},             {"closed_form", cf},
          {"pipelines", pipes},   {"extras", r.extras}};
}

}  // namespace fucik
