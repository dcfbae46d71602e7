#include "qlstm/gates.hpp"

#include <cmath>

namespace qlstm {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
} // namespace

Mat2 single_qubit_unitary(const GateOp &gate) {
    Mat2 u;
    switch (gate.kind) {
    case GateKind::H:
        u.m = {cplx(kInvSqrt2, 0), cplx(kInvSqrt2, 0), cplx(kInvSqrt2, 0), cplx(-kInvSqrt2, 0)};
        break;
    case GateKind::X:
        u.m = {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)};
        break;
    case GateKind::RX: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        u.m = {cplx(c, 0), cplx(0, -s), cplx(0, -s), cplx(c, 0)};
        break;
    }
    case GateKind::RY: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        u.m = {cplx(c, 0), cplx(-s, 0), cplx(s, 0), cplx(c, 0)};
        break;
    }
    case GateKind::RZ: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        u.m = {cplx(c, -s), cplx(0, 0), cplx(0, 0), cplx(c, s)};
        break;
    }
    default:
        throw UsageError("single_qubit_unitary: gate is two-qubit");
    }
    return u;
}

Mat4 two_qubit_unitary(const GateOp &gate) {
    Mat4 u;
    switch (gate.kind) {
    case GateKind::CNOT:
        // targets[0] = control (bit 0 of the basis index), targets[1] = target
        // (bit 1). Basis states 1 (=|01>, control set) and 3 swap.
        u.m[0 * 4 + 0] = cplx(1, 0);
        u.m[2 * 4 + 2] = cplx(1, 0);
        u.m[1 * 4 + 3] = cplx(1, 0);
        u.m[3 * 4 + 1] = cplx(1, 0);
        break;
    case GateKind::CZ:
        u.m[0 * 4 + 0] = cplx(1, 0);
        u.m[1 * 4 + 1] = cplx(1, 0);
        u.m[2 * 4 + 2] = cplx(1, 0);
        u.m[3 * 4 + 3] = cplx(-1, 0);
        break;
    default:
        throw UsageError("two_qubit_unitary: gate is single-qubit");
    }
    return u;
}

GateMatrix gate_unitary(const GateOp &gate) {
    GateMatrix g;
    if (gate_is_two_qubit(gate.kind)) {
        g.dim = 4;
        g.m = two_qubit_unitary(gate).m;
    } else {
        g.dim = 2;
        const Mat2 u = single_qubit_unitary(gate);
        for (int i = 0; i < 4; ++i) {
            g.m[static_cast<std::size_t>(i)] = u.m[static_cast<std::size_t>(i)];
        }
    }
    return g;
}

} // namespace qlstm
