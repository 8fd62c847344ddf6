#ifndef EFTVQA_SERIALIZE_HPP
#define EFTVQA_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "eftvqa/circuit.hpp"
#include "eftvqa/estimator.hpp"
#include "eftvqa/hamiltonian.hpp"
#include "eftvqa/injection.hpp"
#include "eftvqa/noise_models.hpp"
#include "eftvqa/schedule.hpp"
#include "eftvqa/trajectory.hpp"

namespace eftvqa {

using nlohmann::json;

// Shortest round-trip decimal form, locale-independent; used for every
// number we print so identical runs produce identical bytes.
std::string format_double(double value);

// Writes through a temp file and renames, so failed runs leave no partial
// output behind.
void write_file_atomic(const std::string& path, const std::string& content);

json to_json(const Circuit& circuit);
Circuit circuit_from_json(const json& j);

json to_json(const Hamiltonian& hamiltonian);
Hamiltonian hamiltonian_from_json(const json& j);

json to_json(const CodeParams& code);
CodeParams code_params_from_json(const json& j);

json to_json(const NisqNoiseModel& model);
NisqNoiseModel nisq_model_from_json(const json& j);

json to_json(const PqecNoiseModel& model);
PqecNoiseModel pqec_model_from_json(const json& j);

json to_json(const FactorySpec& factory);
FactorySpec factory_from_json(const json& j);

json to_json(const SynthesisSpec& synthesis);
SynthesisSpec synthesis_from_json(const json& j);

json to_json(const CultivationSpec& cultivation);
CultivationSpec cultivation_from_json(const json& j);

json to_json(const RelaxationParams& relaxation);

json to_json(const InjectionAnalytics& analytics);
json to_json(const PipelineStats& stats);
json to_json(const FidelityReport& report);
json to_json(const Schedule& schedule);

std::string schedule_gantt(const Schedule& schedule);

}  // namespace eftvqa

#endif
