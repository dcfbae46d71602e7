#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qlstm/errors.hpp"

namespace qlstm {

using cplx = std::complex<double>;

inline constexpr int kMinQubits = 2;
inline constexpr int kMaxQubits = 14;

enum class GateKind { H, X, RX, RY, RZ, CNOT, CZ };

bool gate_is_rotation(GateKind kind);
bool gate_is_two_qubit(GateKind kind);
const char *gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string &name);

/// One gate application. Single-qubit gates use targets[0]; CNOT is
/// (control, target) = (targets[0], targets[1]); CZ is symmetric.
struct GateOp {
    GateKind kind = GateKind::H;
    std::array<int, 2> targets{0, 0};
    int n_targets = 1;
    double angle = 0.0; // meaningful iff gate_is_rotation(kind)

    static GateOp h(int q) { return {GateKind::H, {q, 0}, 1, 0.0}; }
    static GateOp x(int q) { return {GateKind::X, {q, 0}, 1, 0.0}; }
    static GateOp rx(int q, double a) { return {GateKind::RX, {q, 0}, 1, a}; }
    static GateOp ry(int q, double a) { return {GateKind::RY, {q, 0}, 1, a}; }
    static GateOp rz(int q, double a) { return {GateKind::RZ, {q, 0}, 1, a}; }
    static GateOp cnot(int control, int target) {
        return {GateKind::CNOT, {control, target}, 2, 0.0};
    }
    static GateOp cz(int a, int b) { return {GateKind::CZ, {a, b}, 2, 0.0}; }

    /// The qubit the gate writes to (flip/rotation target); for CZ the
    /// second operand by convention.
    int written_qubit() const { return targets[n_targets - 1]; }

    /// Throws UsageError on out-of-range or duplicate targets, or a
    /// non-finite angle.
    void validate(int n_qubits) const;
};

/// Layered gate sequence. Layers model parallel depth: within a layer no two
/// gates may write to the same qubit. Gates run left to right within a layer,
/// layers run top to bottom.
struct Circuit {
    int n_qubits = 0;
    std::vector<std::vector<GateOp>> layers;

    explicit Circuit(int n = 0) : n_qubits(n) {}

    /// Appends a layer after validating each gate and the per-layer
    /// written-qubit disjointness rule. Empty layers are allowed.
    void add_layer(std::vector<GateOp> gates);

    std::size_t gate_count() const;
    std::size_t layer_count() const { return layers.size(); }
};

/// Dense complex amplitudes over n qubits, little-endian: qubit 0 is the
/// least significant bit of the amplitude index.
struct StateVector {
    int n_qubits = 0;
    std::vector<cplx> amps;

    std::size_t dim() const { return amps.size(); }
};

/// |0...0> on n_qubits in [2, 14]. Throws ConfigError outside that range.
StateVector init_zero_state(int n_qubits);

/// Applies one gate in place. Norm is preserved up to rounding.
void apply_gate(StateVector &state, const GateOp &gate);

/// Applies all layers in order. Throws UsageError on qubit-count mismatch.
void apply_circuit(StateVector &state, const Circuit &circuit);

/// <Z_qubit> = sum_k (+/-1) |amps[k]|^2 with the sign given by the qubit's
/// bit of k. Always in [-1, 1].
double expectation_z(const StateVector &state, int qubit);

double norm_sq(const StateVector &state);

} // namespace qlstm
