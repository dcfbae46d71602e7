#include "qlstm/kernels.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace qlstm::kernels {

namespace {

// Index of the k-th basis state whose `target` bit is 0: spread k around
// the target bit position.
inline std::size_t insert_zero_bit(std::size_t k, std::size_t mask_lo, std::size_t mask_hi) {
    return ((k & mask_hi) << 1) | (k & mask_lo);
}

} // namespace

namespace serial {

void apply_single_qubit(cplx *amps, std::size_t dim, int target, const Mat2 &u) {
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t mask_lo = mask - 1;
    const std::size_t mask_hi = ~mask_lo;
    const cplx u00 = u.m[0], u01 = u.m[1], u10 = u.m[2], u11 = u.m[3];
    for (std::size_t k = 0; k < dim / 2; ++k) {
        const std::size_t i0 = insert_zero_bit(k, mask_lo, mask_hi);
        const std::size_t i1 = i0 | mask;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = u00 * a0 + u01 * a1;
        amps[i1] = u10 * a0 + u11 * a1;
    }
}

void apply_x(cplx *amps, std::size_t dim, int target) {
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t mask_lo = mask - 1;
    const std::size_t mask_hi = ~mask_lo;
    for (std::size_t k = 0; k < dim / 2; ++k) {
        const std::size_t i0 = insert_zero_bit(k, mask_lo, mask_hi);
        std::swap(amps[i0], amps[i0 | mask]);
    }
}

void apply_cnot(cplx *amps, std::size_t dim, int control, int target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t k = 0; k < dim; ++k) {
        if ((k & cmask) != 0 && (k & tmask) == 0) {
            std::swap(amps[k], amps[k | tmask]);
        }
    }
}

void apply_cz(cplx *amps, std::size_t dim, int q0, int q1) {
    const std::size_t mask = (std::size_t{1} << q0) | (std::size_t{1} << q1);
    for (std::size_t k = 0; k < dim; ++k) {
        if ((k & mask) == mask) {
            amps[k] = -amps[k];
        }
    }
}

double expectation_z(const cplx *amps, std::size_t dim, int qubit) {
    const std::size_t mask = std::size_t{1} << qubit;
    double acc = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        const double p = amps[k].real() * amps[k].real() + amps[k].imag() * amps[k].imag();
        acc += (k & mask) ? -p : p;
    }
    return acc;
}

double norm_sq(const cplx *amps, std::size_t dim) {
    double acc = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        acc += amps[k].real() * amps[k].real() + amps[k].imag() * amps[k].imag();
    }
    return acc;
}

} // namespace serial

void apply_single_qubit(cplx *amps, std::size_t dim, int target, const Mat2 &u) {
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t mask_lo = mask - 1;
    const std::size_t mask_hi = ~mask_lo;
    const cplx u00 = u.m[0], u01 = u.m[1], u10 = u.m[2], u11 = u.m[3];
    const std::int64_t half = static_cast<std::int64_t>(dim / 2);
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(k), mask_lo, mask_hi);
        const std::size_t i1 = i0 | mask;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = u00 * a0 + u01 * a1;
        amps[i1] = u10 * a0 + u11 * a1;
    }
}

void apply_x(cplx *amps, std::size_t dim, int target) {
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t mask_lo = mask - 1;
    const std::size_t mask_hi = ~mask_lo;
    const std::int64_t half = static_cast<std::int64_t>(dim / 2);
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(k), mask_lo, mask_hi);
        std::swap(amps[i0], amps[i0 | mask]);
    }
}

void apply_cnot(cplx *amps, std::size_t dim, int control, int target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
    for (std::int64_t k = 0; k < n; ++k) {
        const std::size_t idx = static_cast<std::size_t>(k);
        if ((idx & cmask) != 0 && (idx & tmask) == 0) {
            std::swap(amps[idx], amps[idx | tmask]);
        }
    }
}

void apply_cz(cplx *amps, std::size_t dim, int q0, int q1) {
    const std::size_t mask = (std::size_t{1} << q0) | (std::size_t{1} << q1);
    const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
    for (std::int64_t k = 0; k < n; ++k) {
        const std::size_t idx = static_cast<std::size_t>(k);
        if ((idx & mask) == mask) {
            amps[idx] = -amps[idx];
        }
    }
}

namespace {

// Fixed-size blocks keep the reduction order independent of the thread
// count: block partials are computed in parallel and summed in block order.
constexpr std::size_t kReduceBlock = std::size_t{1} << 10;

template <typename PerAmp>
double blocked_reduce(const cplx *amps, std::size_t dim, PerAmp per_amp) {
    const std::size_t n_blocks = (dim + kReduceBlock - 1) / kReduceBlock;
    if (n_blocks <= 1) {
        double acc = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            acc += per_amp(amps[k], k);
        }
        return acc;
    }
    std::vector<double> partial(n_blocks, 0.0);
    const std::int64_t nb = static_cast<std::int64_t>(n_blocks);
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
    for (std::int64_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
        const std::size_t hi = lo + kReduceBlock < dim ? lo + kReduceBlock : dim;
        double acc = 0.0;
        for (std::size_t k = lo; k < hi; ++k) {
            acc += per_amp(amps[k], k);
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

} // namespace

double expectation_z(const cplx *amps, std::size_t dim, int qubit) {
    const std::size_t mask = std::size_t{1} << qubit;
    return blocked_reduce(amps, dim, [mask](const cplx &a, std::size_t k) {
        const double p = a.real() * a.real() + a.imag() * a.imag();
        return (k & mask) ? -p : p;
    });
}

double norm_sq(const cplx *amps, std::size_t dim) {
    return blocked_reduce(amps, dim, [](const cplx &a, std::size_t) {
        return a.real() * a.real() + a.imag() * a.imag();
    });
}

} // namespace qlstm::kernels
