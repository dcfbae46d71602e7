#pragma once

#include <array>

#include "qlstm/statevector.hpp"

namespace qlstm {

/// Row-major 2x2 complex matrix.
struct Mat2 {
    std::array<cplx, 4> m{};
    cplx at(int r, int c) const { return m[static_cast<std::size_t>(r * 2 + c)]; }
};

/// Row-major 4x4 complex matrix. Basis index b = b0 + 2*b1 where b0 is the
/// state of targets[0] and b1 the state of targets[1].
struct Mat4 {
    std::array<cplx, 16> m{};
    cplx at(int r, int c) const { return m[static_cast<std::size_t>(r * 4 + c)]; }
};

/// Dense unitary of a gate, dim 2 for single-qubit kinds and 4 for
/// CNOT/CZ, row-major with the Mat4 basis convention above.
struct GateMatrix {
    int dim = 2;
    std::array<cplx, 16> m{};
    cplx at(int r, int c) const { return m[static_cast<std::size_t>(r * dim + c)]; }
};

Mat2 single_qubit_unitary(const GateOp &gate);
Mat4 two_qubit_unitary(const GateOp &gate);
GateMatrix gate_unitary(const GateOp &gate);

} // namespace qlstm
