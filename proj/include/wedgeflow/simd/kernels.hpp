#pragma once

#include <cstddef>
#include <string>

// Data-parallel inner kernels for the quadrature hot path. Each kernel has a
// scalar reference implementation and an AVX2 variant selected at runtime.
// Both perform the identical sequence of IEEE operations per element (no FMA,
// no reassociation), so results are bit-identical whichever backend runs;
// reductions happen elsewhere in a fixed deterministic order.

namespace wedgeflow::simd {

enum class Backend { scalar, avx2 };

enum class BumpPart { value, ddx, ddy };

/// Parameters of a tensor-product bump (1-s^2)^3 * (1-t^2)^3 with
/// s = (x-cx)/rx, t = (y-cy)/ry, clamped to zero outside |s|,|t| < 1.
struct BumpSpec {
    double cx, cy;
    double inv_rx, inv_ry;
};

/// out[i] = qw[i] * part(x[i], y[i]) for the bump above.
using BumpKernelFn = void (*)(const BumpSpec&, BumpPart,
                              const double* x, const double* y,
                              const double* qw, double* out, std::size_t n);

/// io[i] *= (sigma * x[i] < y[i]) ? up : down
/// Two-sector piecewise-constant density along the ray y = sigma * x.
using SectorKernelFn = void (*)(double sigma, double up, double down,
                                const double* x, const double* y,
                                double* io, std::size_t n);

// Reference implementations (always available).
void bump_weighted_scalar(const BumpSpec&, BumpPart, const double* x,
                          const double* y, const double* qw, double* out,
                          std::size_t n);
void sector_scale_scalar(double sigma, double up, double down, const double* x,
                         const double* y, double* io, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
#define WEDGEFLOW_HAVE_AVX2_KERNELS 1
void bump_weighted_avx2(const BumpSpec&, BumpPart, const double* x,
                        const double* y, const double* qw, double* out,
                        std::size_t n);
void sector_scale_avx2(double sigma, double up, double down, const double* x,
                       const double* y, double* io, std::size_t n);
#endif

/// Backend in use; defaults to the best the CPU supports.
Backend active_backend();
std::string backend_name(Backend b);

/// Overrides auto-detection (tests and benchmarks). Selecting avx2 on a CPU
/// without it throws std::runtime_error.
void set_backend(Backend b);

bool cpu_has_avx2();

BumpKernelFn bump_kernel();
SectorKernelFn sector_kernel();

}  // namespace wedgeflow::simd
