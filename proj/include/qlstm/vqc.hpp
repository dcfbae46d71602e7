#pragma once

#include <span>
#include <vector>

#include "qlstm/statevector.hpp"

namespace qlstm {

enum class Entangler { ring_cnot, none };

const char *entangler_name(Entangler e);
Entangler entangler_from_name(const std::string &name);

/// Shape of one variational circuit: Hadamard + angle-encoding layers,
/// `depth` repetitions of [entangler, RX/RY/RZ rotation layers], Z readout
/// on the first `output_dim` qubits.
struct VqcSpec {
    int n_qubits = 2;
    int depth = 1;
    Entangler entangler = Entangler::ring_cnot;
    int output_dim = 2;

    void validate() const;
    /// Trainable angle count: depth * n_qubits * 3.
    std::size_t param_count() const {
        return static_cast<std::size_t>(depth) * static_cast<std::size_t>(n_qubits) * 3;
    }
    std::size_t flat_index(int layer, int qubit, int axis) const {
        return (static_cast<std::size_t>(layer) * static_cast<std::size_t>(n_qubits) +
                static_cast<std::size_t>(qubit)) *
                   3 +
               static_cast<std::size_t>(axis);
    }
};

/// Trainable rotation angles, flat [depth][qubit][axis] with axis 0/1/2 for
/// RX/RY/RZ.
struct VqcParams {
    std::vector<double> thetas;

    static VqcParams zeros(const VqcSpec &spec) { return {std::vector<double>(spec.param_count(), 0.0)}; }
    double &at(const VqcSpec &spec, int layer, int qubit, int axis) {
        return thetas[spec.flat_index(layer, qubit, axis)];
    }
    std::span<const double> view() const { return thetas; }
};

struct VqcGradient {
    std::vector<double> d_thetas; // same flat shape as VqcParams
    std::vector<double> d_input;  // length n_qubits
};

/// Encoding block: one layer of H, then RY(arctan x_i), then RZ(arctan x_i^2)
/// per qubit. Requires len(x) == n_qubits.
std::vector<std::vector<GateOp>> encode_input(std::span<const double> x, int n_qubits);

/// Position of one gate inside a Circuit.
struct GateRef {
    int layer = 0;
    int index = 0;
};

/// A constructed VQC circuit plus the coordinates of every tunable angle,
/// so shifted evaluations perturb exactly the gate the forward pass ran.
struct BuiltVqc {
    Circuit circuit;
    std::vector<GateRef> theta_refs; // flat [depth][qubit][axis]
    std::vector<GateRef> encode_ry;  // per qubit
    std::vector<GateRef> encode_rz;  // per qubit
};

BuiltVqc build_vqc(const VqcSpec &spec, std::span<const double> thetas, std::span<const double> x);

Circuit build_vqc_circuit(const VqcSpec &spec, std::span<const double> thetas,
                          std::span<const double> x);

/// Runs a circuit from |0...0> and returns [<Z_0>, ..., <Z_{output_dim-1}>].
std::vector<double> measure_z_all(const Circuit &circuit, int output_dim);

/// [<Z_0>, ..., <Z_{output_dim-1}>] of the VQC applied to |0...0>.
std::vector<double> vqc_forward(const VqcSpec &spec, std::span<const double> thetas,
                                std::span<const double> x);

/// Exact gradients by the parameter-shift rule. d_thetas[k] is the derivative
/// of dot(upstream, output) w.r.t. theta k; d_input flows through the
/// arctan encoding by the chain rule. Shifted evaluations run independently
/// and reduce in a fixed order.
VqcGradient parameter_shift_grad(const VqcSpec &spec, std::span<const double> thetas,
                                 std::span<const double> x, std::span<const double> upstream);

/// Convenience overloads on the typed parameter bundle.
std::vector<double> vqc_forward(const VqcSpec &spec, const VqcParams &params,
                                std::span<const double> x);
VqcGradient parameter_shift_grad(const VqcSpec &spec, const VqcParams &params,
                                 std::span<const double> x, std::span<const double> upstream);

} // namespace qlstm
