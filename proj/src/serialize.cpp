#include "eftvqa/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "eftvqa/errors.hpp"

namespace eftvqa {

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, end);
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out.good()) throw std::runtime_error("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move output into place at '" + path + "'");
}

namespace {

json assumed_number(double value) {
    return json{{"value", value}, {"assumed", true}};
}

json assumed_number(uint64_t value) {
    return json{{"value", value}, {"assumed", true}};
}

double read_number(const json& j) {
    if (j.is_object()) return j.at("value").get<double>();
    return j.get<double>();
}

uint64_t read_integer(const json& j) {
    if (j.is_object()) return j.at("value").get<uint64_t>();
    return j.get<uint64_t>();
}

}  // namespace

json to_json(const Circuit& circuit) {
    json gates = json::array();
    for (const auto& g : circuit.gates) {
        json entry;
        entry["op"] = gate_name(g.kind);
        if (g.is_two_qubit())
            entry["qubits"] = {g.q0, g.q1};
        else
            entry["qubits"] = {g.q0};
        if (g.kind == GateKind::Rz) entry["angle"] = g.angle;
        gates.push_back(std::move(entry));
    }
    return json{{"width", circuit.width}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
    Circuit c;
    c.width = j.at("width").get<uint32_t>();
    for (const auto& entry : j.at("gates")) {
        const GateKind kind = gate_kind_from_name(entry.at("op").get<std::string>());
        const auto& qubits = entry.at("qubits");
        Gate g;
        g.kind = kind;
        g.q0 = qubits.at(0).get<uint32_t>();
        if (kind == GateKind::CX) {
            if (qubits.size() != 2) throw config_error("cx needs two qubits");
            g.q1 = qubits.at(1).get<uint32_t>();
        } else if (qubits.size() != 1) {
            throw config_error("single-qubit gate needs one qubit");
        }
        if (kind == GateKind::Rz) g.angle = entry.at("angle").get<double>();
        c.gates.push_back(g);
    }
    c.validate();
    return c;
}

json to_json(const Hamiltonian& hamiltonian) {
    json terms = json::array();
    for (const auto& t : hamiltonian.terms) {
        terms.push_back(json{{"coeff", t.coeff * t.pauli.sign()},
                             {"pauli", t.pauli.to_string()}});
    }
    return json{{"width", hamiltonian.width}, {"terms", std::move(terms)}};
}

Hamiltonian hamiltonian_from_json(const json& j) {
    Hamiltonian h;
    h.width = j.at("width").get<uint32_t>();
    for (const auto& t : j.at("terms")) {
        const PauliString p = PauliString::parse(t.at("pauli").get<std::string>());
        h.add(t.at("coeff").get<double>(), p);
    }
    return h;
}

json to_json(const CodeParams& code) {
    return json{{"d", code.d}, {"p_phys", code.p_phys}};
}

CodeParams code_params_from_json(const json& j) {
    CodeParams c;
    c.d = j.at("d").get<int>();
    c.p_phys = j.at("p_phys").get<double>();
    c.validate();
    return c;
}

json to_json(const NisqNoiseModel& model) {
    return json{{"p_cnot", model.p_cnot},
                {"p_1q", model.p_1q},
                {"p_rz", model.p_rz},
                {"p_meas", model.p_meas}};
}

NisqNoiseModel nisq_model_from_json(const json& j) {
    NisqNoiseModel m;
    m.p_cnot = read_number(j.at("p_cnot"));
    m.p_1q = read_number(j.at("p_1q"));
    m.p_rz = read_number(j.at("p_rz"));
    m.p_meas = read_number(j.at("p_meas"));
    return m;
}

json to_json(const PqecNoiseModel& model) {
    return json{{"code", to_json(model.code)},
                {"p_logical", model.p_logical},
                {"p_rz_inject", model.p_rz_inject}};
}

PqecNoiseModel pqec_model_from_json(const json& j) {
    PqecNoiseModel m;
    m.code = code_params_from_json(j.at("code"));
    m.p_logical = read_number(j.at("p_logical"));
    m.p_rz_inject = read_number(j.at("p_rz_inject"));
    return m;
}

json to_json(const FactorySpec& factory) {
    json j{{"name", factory.name},
           {"d_x", factory.d_x},
           {"d_z", factory.d_z},
           {"d_m", factory.d_m}};
    if (factory.assumed) {
        j["qubit_footprint"] = assumed_number(factory.qubit_footprint);
        j["cycles_per_t"] = assumed_number(factory.cycles_per_t);
        j["t_error"] = assumed_number(factory.t_error);
    } else {
        j["qubit_footprint"] = factory.qubit_footprint;
        j["cycles_per_t"] = factory.cycles_per_t;
        j["t_error"] = factory.t_error;
    }
    return j;
}

FactorySpec factory_from_json(const json& j) {
    FactorySpec f;
    f.name = j.at("name").get<std::string>();
    f.d_x = j.at("d_x").get<int>();
    f.d_z = j.at("d_z").get<int>();
    f.d_m = j.at("d_m").get<int>();
    f.qubit_footprint = read_integer(j.at("qubit_footprint"));
    f.cycles_per_t = read_integer(j.at("cycles_per_t"));
    f.t_error = read_number(j.at("t_error"));
    f.assumed = j.at("qubit_footprint").is_object();
    f.validate();
    return f;
}

json to_json(const SynthesisSpec& synthesis) {
    // the log-precision T-count slope and the Clifford interleaving factor
    // are model constants, not published values
    return json{{"epsilon", synthesis.epsilon},
                {"c1", assumed_number(synthesis.c1)},
                {"c0", assumed_number(synthesis.c0)},
                {"depth_factor", synthesis.depth_factor},
                {"gate_factor", assumed_number(synthesis.gate_factor)}};
}

SynthesisSpec synthesis_from_json(const json& j) {
    SynthesisSpec s;
    s.epsilon = read_number(j.at("epsilon"));
    s.c1 = read_number(j.at("c1"));
    s.c0 = read_number(j.at("c0"));
    s.depth_factor = read_number(j.at("depth_factor"));
    s.gate_factor = read_number(j.at("gate_factor"));
    s.validate();
    return s;
}

json to_json(const CultivationSpec& cultivation) {
    return json{{"footprint_patches", cultivation.footprint_patches},
                {"expected_cycles_per_t", assumed_number(cultivation.expected_cycles_per_t)},
                {"t_error", assumed_number(cultivation.t_error)}};
}

CultivationSpec cultivation_from_json(const json& j) {
    CultivationSpec c;
    c.footprint_patches = read_integer(j.at("footprint_patches"));
    c.expected_cycles_per_t = read_integer(j.at("expected_cycles_per_t"));
    c.t_error = read_number(j.at("t_error"));
    c.validate();
    return c;
}

json to_json(const RelaxationParams& relaxation) {
    return json{{"t1_us", assumed_number(relaxation.t1_us)},
                {"t2_us", assumed_number(relaxation.t2_us)},
                {"cycle_us", assumed_number(relaxation.cycle_us)}};
}

json to_json(const InjectionAnalytics& analytics) {
    return json{{"p_pass", analytics.p_pass},
                {"expected_trials", analytics.expected_trials},
                {"stddev_trials", analytics.stddev_trials},
                {"n_trials", analytics.n_trials},
                {"p_within_n_trials", analytics.p_within_n_trials},
                {"p_within_window", analytics.p_within_window},
                {"c", analytics.c},
                {"alpha", analytics.alpha},
                {"beta", analytics.beta},
                {"shuffling_feasible", analytics.shuffling_feasible}};
}

json to_json(const PipelineStats& stats) {
    return json{{"policy", policy_name(stats.policy)},
                {"backups", stats.backups},
                {"magic_patches", stats.magic_patches},
                {"trials", stats.trials},
                {"mean_attempts", stats.mean_attempts},
                {"mean_stall_cycles", stats.mean_stall_cycles},
                {"mean_total_cycles", stats.mean_total_cycles},
                {"mean_volume", stats.mean_volume},
                {"stall_free_fraction", stats.stall_free_fraction},
                {"on_time_injection_fraction", stats.on_time_injection_fraction}};
}

json to_json(const FidelityReport& report) {
    return json{{"fidelity", report.fidelity},
                {"log_error", report.log_error},
                {"breakdown", report.breakdown},
                {"t_circ", report.t_circ},
                {"qubits_used", report.qubits_used},
                {"stall_cycles", report.stall_cycles},
                {"factories", report.factories},
                {"over_budget", report.over_budget}};
}

json to_json(const Schedule& schedule) {
    json ops = json::array();
    for (const auto& op : schedule.timeline) {
        const char* kind = "";
        switch (op.kind) {
            case MacroKind::cnot_cluster_fast: kind = "cnot_cluster_fast"; break;
            case MacroKind::cnot_cluster_slow: kind = "cnot_cluster_slow"; break;
            case MacroKind::rz_consume: kind = "rz_consume"; break;
            case MacroKind::patch_rotate: kind = "patch_rotate"; break;
            case MacroKind::measure_patch: kind = "measure_patch"; break;
        }
        ops.push_back(json{{"kind", kind},
                           {"start", op.start},
                           {"cycles", op.cycles},
                           {"patches", op.data_patches},
                           {"engaged_patches", op.engaged_patches},
                           {"layer", op.layer}});
    }
    return json{{"layout", layout_name(schedule.layout.kind)},
                {"width", schedule.width},
                {"t_circ", schedule.t_circ},
                {"total_patches", schedule.total_patches},
                {"physical_qubits", schedule.physical_qubits},
                {"v_patch_cycles", schedule.v_patch_cycles},
                {"v_physical", schedule.v_physical},
                {"cnot_count", schedule.cnot_count},
                {"rz_count", schedule.rz_count},
                {"rz_attempts", schedule.rz_attempts},
                {"stall_cycles", schedule.stall_cycles},
                {"idle_cycles", schedule.idle_cycles},
                {"timeline", std::move(ops)}};
}

std::string schedule_gantt(const Schedule& schedule) {
    std::ostringstream out;
    out << "# layout=" << layout_name(schedule.layout.kind)
        << " width=" << schedule.width
        << " t_circ=" << format_double(schedule.t_circ)
        << " V=" << format_double(schedule.v_patch_cycles) << " patch-cycles\n";
    for (const auto& op : schedule.timeline) {
        const char* kind = "";
        switch (op.kind) {
            case MacroKind::cnot_cluster_fast: kind = "cnot*"; break;
            case MacroKind::cnot_cluster_slow: kind = "cnot~"; break;
            case MacroKind::rz_consume: kind = "rz   "; break;
            case MacroKind::patch_rotate: kind = "rot  "; break;
            case MacroKind::measure_patch: kind = "meas "; break;
        }
        out << "[" << format_double(op.start) << ", "
            << format_double(op.start + op.cycles) << ")\t" << kind << "\tq{";
        for (size_t i = 0; i < op.data_patches.size(); ++i) {
            if (i) out << ",";
            out << op.data_patches[i];
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace eftvqa
