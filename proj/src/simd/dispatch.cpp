#include "wedgeflow/simd/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace wedgeflow::simd {

namespace {

Backend detect()
{
#ifdef WEDGEFLOW_HAVE_AVX2_KERNELS
    if (cpu_has_avx2()) return Backend::avx2;
#endif
    return Backend::scalar;
}

std::atomic<Backend>& backend_slot()
{
    static std::atomic<Backend> slot{detect()};
    return slot;
}

}  // namespace

bool cpu_has_avx2()
{
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend()
{
    return backend_slot().load(std::memory_order_relaxed);
}

std::string backend_name(Backend b)
{
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void set_backend(Backend b)
{
    if (b == Backend::avx2 && !cpu_has_avx2())
        throw std::runtime_error("set_backend: avx2 not supported on this CPU");
    backend_slot().store(b, std::memory_order_relaxed);
}

BumpKernelFn bump_kernel()
{
#ifdef WEDGEFLOW_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::avx2) return &bump_weighted_avx2;
#endif
    return &bump_weighted_scalar;
}

SectorKernelFn sector_kernel()
{
#ifdef WEDGEFLOW_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::avx2) return &sector_scale_avx2;
#endif
    return &sector_scale_scalar;
}

}  // namespace wedgeflow::simd
