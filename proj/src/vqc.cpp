#include "qlstm/vqc.hpp"

#include <cmath>
#include <cstdint>

namespace qlstm {

namespace {
constexpr double kHalfPi = 1.57079632679489661923;
}

const char *entangler_name(Entangler e) {
    return e == Entangler::ring_cnot ? "ring_cnot" : "none";
}

Entangler entangler_from_name(const std::string &name) {
    if (name == "ring_cnot") return Entangler::ring_cnot;
    if (name == "none") return Entangler::none;
    throw ConfigError("unknown entangler: " + name);
}

void VqcSpec::validate() const {
    if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
        throw ConfigError("VqcSpec: n_qubits " + std::to_string(n_qubits) +
                          " outside supported range");
    }
    if (depth < 1) {
        throw ConfigError("VqcSpec: depth must be >= 1");
    }
    if (output_dim < 1 || output_dim > n_qubits) {
        throw ConfigError("VqcSpec: output_dim must be in [1, n_qubits]");
    }
}

std::vector<std::vector<GateOp>> encode_input(std::span<const double> x, int n_qubits) {
    if (static_cast<int>(x.size()) != n_qubits) {
        throw UsageError("encode_input: got " + std::to_string(x.size()) + " values for " +
                         std::to_string(n_qubits) + " qubits");
    }
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw UsageError("encode_input: non-finite input value");
        }
    }
    std::vector<std::vector<GateOp>> layers(3);
    for (int q = 0; q < n_qubits; ++q) {
        const double v = x[static_cast<std::size_t>(q)];
        layers[0].push_back(GateOp::h(q));
        layers[1].push_back(GateOp::ry(q, std::atan(v)));
        layers[2].push_back(GateOp::rz(q, std::atan(v * v)));
    }
    return layers;
}

BuiltVqc build_vqc(const VqcSpec &spec, std::span<const double> thetas,
                   std::span<const double> x) {
    spec.validate();
    if (thetas.size() != spec.param_count()) {
        throw UsageError("build_vqc: theta count " + std::to_string(thetas.size()) +
                         " does not match spec (" + std::to_string(spec.param_count()) + ")");
    }
    for (double t : thetas) {
        if (!std::isfinite(t)) {
            throw UsageError("build_vqc: non-finite theta");
        }
    }

    BuiltVqc built;
    built.circuit = Circuit(spec.n_qubits);
    built.theta_refs.resize(spec.param_count());
    built.encode_ry.resize(static_cast<std::size_t>(spec.n_qubits));
    built.encode_rz.resize(static_cast<std::size_t>(spec.n_qubits));

    auto layers = encode_input(x, spec.n_qubits);
    for (auto &layer : layers) {
        built.circuit.add_layer(std::move(layer));
    }
    for (int q = 0; q < spec.n_qubits; ++q) {
        built.encode_ry[static_cast<std::size_t>(q)] = GateRef{1, q};
        built.encode_rz[static_cast<std::size_t>(q)] = GateRef{2, q};
    }

    int layer_index = 3;
    for (int l = 0; l < spec.depth; ++l) {
        if (spec.entangler == Entangler::ring_cnot) {
            std::vector<GateOp> ring;
            for (int q = 0; q < spec.n_qubits; ++q) {
                ring.push_back(GateOp::cnot(q, (q + 1) % spec.n_qubits));
            }
            built.circuit.add_layer(std::move(ring));
            ++layer_index;
        }
        const GateKind axes[3] = {GateKind::RX, GateKind::RY, GateKind::RZ};
        for (int a = 0; a < 3; ++a) {
            std::vector<GateOp> rot;
            for (int q = 0; q < spec.n_qubits; ++q) {
                GateOp g;
                g.kind = axes[a];
                g.targets = {q, 0};
                g.n_targets = 1;
                g.angle = thetas[spec.flat_index(l, q, a)];
                built.theta_refs[spec.flat_index(l, q, a)] = GateRef{layer_index, q};
                rot.push_back(g);
            }
            built.circuit.add_layer(std::move(rot));
            ++layer_index;
        }
    }
    return built;
}

Circuit build_vqc_circuit(const VqcSpec &spec, std::span<const double> thetas,
                          std::span<const double> x) {
    return build_vqc(spec, thetas, x).circuit;
}

std::vector<double> measure_z_all(const Circuit &circuit, int output_dim) {
    StateVector state = init_zero_state(circuit.n_qubits);
    apply_circuit(state, circuit);
    std::vector<double> out(static_cast<std::size_t>(output_dim));
    for (int q = 0; q < output_dim; ++q) {
        out[static_cast<std::size_t>(q)] = expectation_z(state, q);
    }
    return out;
}

std::vector<double> vqc_forward(const VqcSpec &spec, std::span<const double> thetas,
                                std::span<const double> x) {
    return measure_z_all(build_vqc(spec, thetas, x).circuit, spec.output_dim);
}

namespace {

double shifted_eval(const Circuit &base, const GateRef &ref, double delta, int output_dim,
                    std::span<const double> upstream) {
    Circuit shifted = base;
    shifted.layers[static_cast<std::size_t>(ref.layer)][static_cast<std::size_t>(ref.index)]
        .angle += delta;
    const std::vector<double> out = measure_z_all(shifted, output_dim);
    double acc = 0.0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        acc += upstream[k] * out[k];
    }
    return acc;
}

} // namespace

VqcGradient parameter_shift_grad(const VqcSpec &spec, std::span<const double> thetas,
                                 std::span<const double> x, std::span<const double> upstream) {
    if (static_cast<int>(upstream.size()) != spec.output_dim) {
        throw UsageError("parameter_shift_grad: upstream length " +
                         std::to_string(upstream.size()) + " != output_dim " +
                         std::to_string(spec.output_dim));
    }
    const BuiltVqc built = build_vqc(spec, thetas, x);

    VqcGradient grad;
    grad.d_thetas.assign(spec.param_count(), 0.0);
    grad.d_input.assign(static_cast<std::size_t>(spec.n_qubits), 0.0);

    // One task per shiftable angle: all thetas plus the two encoding
    // rotations per qubit. Tasks write disjoint slots, so the loop may run
    // in parallel without changing results.
    const std::size_t n_thetas = spec.param_count();
    const std::size_t n_tasks = n_thetas + 2 * static_cast<std::size_t>(spec.n_qubits);
    std::vector<double> slot(n_tasks, 0.0);

    const std::int64_t total = static_cast<std::int64_t>(n_tasks);
#pragma omp parallel for schedule(dynamic) if (total > 1)
    for (std::int64_t t = 0; t < total; ++t) {
        const std::size_t idx = static_cast<std::size_t>(t);
        const GateRef ref =
            idx < n_thetas
                ? built.theta_refs[idx]
                : (idx - n_thetas < static_cast<std::size_t>(spec.n_qubits)
                       ? built.encode_ry[idx - n_thetas]
                       : built.encode_rz[idx - n_thetas - static_cast<std::size_t>(spec.n_qubits)]);
        const double plus = shifted_eval(built.circuit, ref, kHalfPi, spec.output_dim, upstream);
        const double minus = shifted_eval(built.circuit, ref, -kHalfPi, spec.output_dim, upstream);
        slot[idx] = (plus - minus) / 2.0;
    }

    for (std::size_t k = 0; k < n_thetas; ++k) {
        grad.d_thetas[k] = slot[k];
    }
    for (int q = 0; q < spec.n_qubits; ++q) {
        const double v = x[static_cast<std::size_t>(q)];
        const double d_ry = slot[n_thetas + static_cast<std::size_t>(q)];
        const double d_rz =
            slot[n_thetas + static_cast<std::size_t>(spec.n_qubits) + static_cast<std::size_t>(q)];
        // d/dv arctan(v) = 1/(1+v^2); d/dv arctan(v^2) = 2v/(1+v^4)
        grad.d_input[static_cast<std::size_t>(q)] =
            d_ry / (1.0 + v * v) + d_rz * (2.0 * v) / (1.0 + v * v * v * v);
    }
    return grad;
}

std::vector<double> vqc_forward(const VqcSpec &spec, const VqcParams &params,
                                std::span<const double> x) {
    return vqc_forward(spec, params.view(), x);
}

VqcGradient parameter_shift_grad(const VqcSpec &spec, const VqcParams &params,
                                 std::span<const double> x, std::span<const double> upstream) {
    return parameter_shift_grad(spec, params.view(), x, upstream);
}

} // namespace qlstm
