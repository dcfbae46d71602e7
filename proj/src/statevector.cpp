#include "qlstm/statevector.hpp"

#include <cmath>
#include <cstdint>

#include "qlstm/gates.hpp"
#include "qlstm/kernels.hpp"

namespace qlstm {

bool gate_is_rotation(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

bool gate_is_two_qubit(GateKind kind) {
    return kind == GateKind::CNOT || kind == GateKind::CZ;
}

const char *gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::CZ:
        return "CZ";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string &name) {
    if (name == "H") return GateKind::H;
    if (name == "X") return GateKind::X;
    if (name == "RX") return GateKind::RX;
    if (name == "RY") return GateKind::RY;
    if (name == "RZ") return GateKind::RZ;
    if (name == "CNOT") return GateKind::CNOT;
    if (name == "CZ") return GateKind::CZ;
    throw UsageError("unknown gate kind: " + name);
}

void GateOp::validate(int n_qubits) const {
    const int expected = gate_is_two_qubit(kind) ? 2 : 1;
    if (n_targets != expected) {
        throw UsageError(std::string(gate_name(kind)) + ": expected " +
                         std::to_string(expected) + " target(s)");
    }
    for (int i = 0; i < n_targets; ++i) {
        if (targets[static_cast<std::size_t>(i)] < 0 ||
            targets[static_cast<std::size_t>(i)] >= n_qubits) {
            throw UsageError(std::string(gate_name(kind)) + ": target " +
                             std::to_string(targets[static_cast<std::size_t>(i)]) +
                             " out of range for " + std::to_string(n_qubits) + " qubits");
        }
    }
    if (n_targets == 2 && targets[0] == targets[1]) {
        throw UsageError(std::string(gate_name(kind)) + ": duplicate target qubit " +
                         std::to_string(targets[0]));
    }
    if (gate_is_rotation(kind) && !std::isfinite(angle)) {
        throw UsageError(std::string(gate_name(kind)) + ": non-finite angle");
    }
}

void Circuit::add_layer(std::vector<GateOp> gates) {
    std::uint64_t written = 0;
    for (const GateOp &g : gates) {
        g.validate(n_qubits);
        const std::uint64_t bit = std::uint64_t{1} << g.written_qubit();
        if (written & bit) {
            throw UsageError("layer writes qubit " + std::to_string(g.written_qubit()) +
                             " more than once");
        }
        written |= bit;
    }
    layers.push_back(std::move(gates));
}

std::size_t Circuit::gate_count() const {
    std::size_t count = 0;
    for (const auto &layer : layers) {
        count += layer.size();
    }
    return count;
}

StateVector init_zero_state(int n_qubits) {
    if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
        throw ConfigError("qubit count " + std::to_string(n_qubits) + " outside supported range [" +
                          std::to_string(kMinQubits) + ", " + std::to_string(kMaxQubits) + "]");
    }
    StateVector state;
    state.n_qubits = n_qubits;
    state.amps.assign(std::size_t{1} << n_qubits, cplx(0, 0));
    state.amps[0] = cplx(1, 0);
    return state;
}

void apply_gate(StateVector &state, const GateOp &gate) {
    gate.validate(state.n_qubits);
    cplx *amps = state.amps.data();
    const std::size_t dim = state.dim();
    switch (gate.kind) {
    case GateKind::X:
        kernels::apply_x(amps, dim, gate.targets[0]);
        break;
    case GateKind::CNOT:
        kernels::apply_cnot(amps, dim, gate.targets[0], gate.targets[1]);
        break;
    case GateKind::CZ:
        kernels::apply_cz(amps, dim, gate.targets[0], gate.targets[1]);
        break;
    default:
        kernels::apply_single_qubit(amps, dim, gate.targets[0], single_qubit_unitary(gate));
        break;
    }
}

void apply_circuit(StateVector &state, const Circuit &circuit) {
    if (circuit.n_qubits != state.n_qubits) {
        throw UsageError("circuit is on " + std::to_string(circuit.n_qubits) +
                         " qubits but state has " + std::to_string(state.n_qubits));
    }
    for (const auto &layer : circuit.layers) {
        for (const GateOp &gate : layer) {
            apply_gate(state, gate);
        }
    }
}

double expectation_z(const StateVector &state, int qubit) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw UsageError("expectation_z: qubit " + std::to_string(qubit) + " out of range");
    }
    return kernels::expectation_z(state.amps.data(), state.dim(), qubit);
}

double norm_sq(const StateVector &state) {
    return kernels::norm_sq(state.amps.data(), state.dim());
}

} // namespace qlstm
