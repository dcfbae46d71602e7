#include "oracles.hpp"

#include <cmath>

#include "qlstm/gates.hpp"

namespace qlstm::oracle {

DenseMatrix DenseMatrix::identity(int dim) {
    DenseMatrix out;
    out.dim = dim;
    out.m.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), cplx(0, 0));
    for (int i = 0; i < dim; ++i) {
        out.at(i, i) = cplx(1, 0);
    }
    return out;
}

DenseMatrix matmul(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out;
    out.dim = a.dim;
    out.m.assign(a.m.size(), cplx(0, 0));
    for (int r = 0; r < a.dim; ++r) {
        for (int k = 0; k < a.dim; ++k) {
            const cplx ark = a.at(r, k);
            if (ark == cplx(0, 0)) {
                continue;
            }
            for (int c = 0; c < a.dim; ++c) {
                out.at(r, c) += ark * b.at(k, c);
            }
        }
    }
    return out;
}

std::vector<cplx> matvec(const DenseMatrix &a, const std::vector<cplx> &v) {
    std::vector<cplx> out(v.size(), cplx(0, 0));
    for (int r = 0; r < a.dim; ++r) {
        cplx acc(0, 0);
        for (int c = 0; c < a.dim; ++c) {
            acc += a.at(r, c) * v[static_cast<std::size_t>(c)];
        }
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

DenseMatrix dagger(const DenseMatrix &a) {
    DenseMatrix out;
    out.dim = a.dim;
    out.m.assign(a.m.size(), cplx(0, 0));
    for (int r = 0; r < a.dim; ++r) {
        for (int c = 0; c < a.dim; ++c) {
            out.at(r, c) = std::conj(a.at(c, r));
        }
    }
    return out;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out;
    out.dim = a.dim * b.dim;
    out.m.assign(static_cast<std::size_t>(out.dim) * static_cast<std::size_t>(out.dim),
                 cplx(0, 0));
    for (int ar = 0; ar < a.dim; ++ar) {
        for (int ac = 0; ac < a.dim; ++ac) {
            for (int br = 0; br < b.dim; ++br) {
                for (int bc = 0; bc < b.dim; ++bc) {
                    out.at(ar * b.dim + br, ac * b.dim + bc) = a.at(ar, ac) * b.at(br, bc);
                }
            }
        }
    }
    return out;
}

DenseMatrix full_gate_matrix(const GateOp &gate, int n_qubits) {
    const GateMatrix u = gate_unitary(gate);
    if (u.dim == 2) {
        DenseMatrix u2;
        u2.dim = 2;
        u2.m = {u.m[0], u.m[1], u.m[2], u.m[3]};
        const int t = gate.targets[0];
        DenseMatrix out = kron(DenseMatrix::identity(1 << (n_qubits - 1 - t)),
                               kron(u2, DenseMatrix::identity(1 << t)));
        return out;
    }
    // Two-qubit: place the 4x4 at arbitrary target bits. Basis index of the
    // small matrix is b0 + 2*b1 with b0 = bit of targets[0].
    const int q0 = gate.targets[0];
    const int q1 = gate.targets[1];
    const int dim = 1 << n_qubits;
    DenseMatrix out;
    out.dim = dim;
    out.m.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), cplx(0, 0));
    for (int col = 0; col < dim; ++col) {
        const int b0 = (col >> q0) & 1;
        const int b1 = (col >> q1) & 1;
        const int small_col = b0 + 2 * b1;
        for (int small_row = 0; small_row < 4; ++small_row) {
            const cplx entry = u.at(small_row, small_col);
            if (entry == cplx(0, 0)) {
                continue;
            }
            int row = col;
            row = (row & ~(1 << q0)) | ((small_row & 1) << q0);
            row = (row & ~(1 << q1)) | (((small_row >> 1) & 1) << q1);
            out.at(row, col) += entry;
        }
    }
    return out;
}

DenseMatrix circuit_matrix(const Circuit &circuit) {
    DenseMatrix total = DenseMatrix::identity(1 << circuit.n_qubits);
    for (const auto &layer : circuit.layers) {
        for (const GateOp &gate : layer) {
            total = matmul(full_gate_matrix(gate, circuit.n_qubits), total);
        }
    }
    return total;
}

double central_difference(const std::function<double(double)> &f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

bool close_rel_abs(double got, double want, double rel_tol, double abs_tol) {
    const double diff = std::abs(got - want);
    if (diff <= abs_tol) {
        return true;
    }
    return diff <= rel_tol * std::abs(want);
}

DensityMatrix::DensityMatrix(int n_qubits) : n_qubits_(n_qubits) {
    const int dim = 1 << n_qubits;
    rho_.dim = dim;
    rho_.m.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), cplx(0, 0));
    rho_.at(0, 0) = cplx(1, 0);
}

void DensityMatrix::apply_gate(const GateOp &gate) {
    const DenseMatrix u = full_gate_matrix(gate, n_qubits_);
    rho_ = matmul(u, matmul(rho_, dagger(u)));
}

void DensityMatrix::apply_bit_flip_all(double p) {
    for (int q = 0; q < n_qubits_; ++q) {
        const DenseMatrix x = full_gate_matrix(GateOp::x(q), n_qubits_);
        DenseMatrix flipped = matmul(x, matmul(rho_, dagger(x)));
        for (std::size_t k = 0; k < rho_.m.size(); ++k) {
            rho_.m[k] = (1.0 - p) * rho_.m[k] + p * flipped.m[k];
        }
    }
}

void DensityMatrix::apply_circuit_with_noise(const Circuit &circuit, double p) {
    for (const auto &layer : circuit.layers) {
        for (const GateOp &gate : layer) {
            apply_gate(gate);
        }
        apply_bit_flip_all(p);
    }
}

double DensityMatrix::expectation_z(int qubit) const {
    double acc = 0.0;
    for (int k = 0; k < rho_.dim; ++k) {
        const double sign = ((k >> qubit) & 1) ? -1.0 : 1.0;
        acc += sign * rho_.at(k, k).real();
    }
    return acc;
}

} // namespace qlstm::oracle
