#pragma once

// JSON views of the library's records, used by the CLI reports.

#include <json.hpp>

#include "fucik/dynamics.hpp"
#include "fucik/resonance.hpp"
#include "fucik/scenarios.hpp"
#include "fucik/spectral.hpp"
#include "fucik/system.hpp"

namespace fucik {

nlohmann::json to_json(const Matrix2& m);
nlohmann::json to_json(const FucikPair& p);
nlohmann::json to_json(const ForcingSignal& p);
nlohmann::json to_json(const CouplingFunction& f);
nlohmann::json to_json(const SystemConfig& cfg);
nlohmann::json to_json(const IntegratorSettings& st);
nlohmann::json to_json(const TorusZero& z);
nlohmann::json to_json(const ZeroSearch& zs);
nlohmann::json to_json(const ConeParams& cp);
nlohmann::json to_json(const ContractionReport& r);
nlohmann::json to_json(const InvariantSetParams& p);
nlohmann::json to_json(const InvariantSetChoice& c);
nlohmann::json to_json(const InvarianceReport& r);
nlohmann::json to_json(const ResolubilityMargins& m);
/// Pipeline summary; the orbit itself goes to CSV.
nlohmann::json to_json(const PipelineResult& p);
nlohmann::json to_json(const ScenarioReport& r);

}  // namespace fucik
