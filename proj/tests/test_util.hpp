#pragma once

#include <vector>

#include "qlstm/rng.hpp"
#include "qlstm/statevector.hpp"

namespace qlstm::testutil {

inline GateOp random_gate(Rng &rng, int n_qubits, bool allow_two_qubit = true) {
    const int n_kinds = allow_two_qubit ? 7 : 5;
    const auto kind = static_cast<GateKind>(rng.next_below(static_cast<std::uint64_t>(n_kinds)));
    const int q0 = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_qubits)));
    if (gate_is_two_qubit(kind)) {
        int q1 = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_qubits - 1)));
        if (q1 >= q0) {
            ++q1;
        }
        return kind == GateKind::CNOT ? GateOp::cnot(q0, q1) : GateOp::cz(q0, q1);
    }
    const double angle = rng.next_double(-3.2, 3.2);
    switch (kind) {
    case GateKind::H:
        return GateOp::h(q0);
    case GateKind::X:
        return GateOp::x(q0);
    case GateKind::RX:
        return GateOp::rx(q0, angle);
    case GateKind::RY:
        return GateOp::ry(q0, angle);
    default:
        return GateOp::rz(q0, angle);
    }
}

/// Random circuit with one gate per layer (keeps layer rules trivially met).
inline Circuit random_circuit(Rng &rng, int n_qubits, int n_gates, bool allow_two_qubit = true) {
    Circuit c(n_qubits);
    for (int i = 0; i < n_gates; ++i) {
        c.add_layer({random_gate(rng, n_qubits, allow_two_qubit)});
    }
    return c;
}

/// Random normalized state.
inline StateVector random_state(Rng &rng, int n_qubits) {
    StateVector s = init_zero_state(n_qubits);
    for (auto &a : s.amps) {
        a = cplx(rng.next_double(-1, 1), rng.next_double(-1, 1));
    }
    double norm = 0.0;
    for (const auto &a : s.amps) {
        norm += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto &a : s.amps) {
        a *= scale;
    }
    return s;
}

} // namespace qlstm::testutil
