#pragma once

// Brute-force reference implementations used only by tests. These follow a
// different computational route than the library (explicit dense matrices
// and Kronecker products instead of strided in-place updates; density
// matrices instead of trajectory sampling) so agreement is meaningful.

#include <complex>
#include <functional>
#include <vector>

#include "qlstm/statevector.hpp"

namespace qlstm::oracle {

struct DenseMatrix {
    int dim = 0;
    std::vector<cplx> m; // row-major dim x dim

    static DenseMatrix identity(int dim);
    cplx &at(int r, int c) { return m[static_cast<std::size_t>(r) * dim + c]; }
    const cplx &at(int r, int c) const { return m[static_cast<std::size_t>(r) * dim + c]; }
};

DenseMatrix matmul(const DenseMatrix &a, const DenseMatrix &b);
std::vector<cplx> matvec(const DenseMatrix &a, const std::vector<cplx> &v);
DenseMatrix dagger(const DenseMatrix &a);

/// kron(a, b) acts on a tensor product where b addresses the low-order bits.
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// The 2^n x 2^n unitary of one gate, built from gate_unitary() by Kronecker
/// expansion (single-qubit) or basis-index embedding (two-qubit).
DenseMatrix full_gate_matrix(const GateOp &gate, int n_qubits);

/// Product of all gate matrices in execution order.
DenseMatrix circuit_matrix(const Circuit &circuit);

/// Central finite difference (f(x+h) - f(x-h)) / 2h.
double central_difference(const std::function<double(double)> &f, double x, double h);

/// True if |got - want| <= abs_tol or relative error <= rel_tol.
bool close_rel_abs(double got, double want, double rel_tol, double abs_tol);

/// Density-matrix evolution of `circuit` from |0..0><0..0| with an
/// independent bit-flip channel of probability p applied to every qubit
/// after each layer. Exact counterpart of trajectory sampling; O(4^n),
/// intended for n <= 3.
class DensityMatrix {
  public:
    explicit DensityMatrix(int n_qubits);

    void apply_gate(const GateOp &gate);
    void apply_bit_flip_all(double p);
    void apply_circuit_with_noise(const Circuit &circuit, double p);
    double expectation_z(int qubit) const;

  private:
    int n_qubits_;
    DenseMatrix rho_;
};

} // namespace qlstm::oracle
