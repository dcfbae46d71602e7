#pragma once

#include <cstddef>

#include "qlstm/gates.hpp"

namespace qlstm::kernels {

// Amplitude-array kernels. The unqualified versions parallelize with OpenMP
// once the state is large enough; kernels::serial holds the plain-loop
// reference used by the equivalence tests and the benchmark. Both paths
// perform the same arithmetic per amplitude, so results agree bitwise except
// for expectation_z, whose serial reference accumulates in a single running
// sum (compare with a tolerance).

/// States at or above this dimension use OpenMP worksharing.
inline constexpr std::size_t kParallelCutoff = std::size_t{1} << 11;

void apply_single_qubit(cplx *amps, std::size_t dim, int target, const Mat2 &u);
void apply_x(cplx *amps, std::size_t dim, int target);
void apply_cnot(cplx *amps, std::size_t dim, int control, int target);
void apply_cz(cplx *amps, std::size_t dim, int q0, int q1);
double expectation_z(const cplx *amps, std::size_t dim, int qubit);
double norm_sq(const cplx *amps, std::size_t dim);

namespace serial {
void apply_single_qubit(cplx *amps, std::size_t dim, int target, const Mat2 &u);
void apply_x(cplx *amps, std::size_t dim, int target);
void apply_cnot(cplx *amps, std::size_t dim, int control, int target);
void apply_cz(cplx *amps, std::size_t dim, int q0, int q1);
double expectation_z(const cplx *amps, std::size_t dim, int qubit);
double norm_sq(const cplx *amps, std::size_t dim);
} // namespace serial

} // namespace qlstm::kernels
