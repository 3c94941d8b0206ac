#pragma once
#include <cstddef>
#include <cstdint>

// Index-gather kernels shared by permutation arithmetic and coset-table walks.
// The scalar versions are the reference; the AVX2 versions must agree bit for
// bit and are selected at runtime from CPU flags.

namespace tensorsq::pk {

using u32 = std::uint32_t;

namespace scalar {
void gather_map(u32* dst, const u32* idx, const u32* map, std::size_t n);
bool is_identity(const u32* p, std::size_t n);
void invert(u32* dst, const u32* p, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void gather_map(u32* dst, const u32* idx, const u32* map, std::size_t n);
bool is_identity(const u32* p, std::size_t n);
}  // namespace avx2
#endif

bool avx2_compiled();
bool avx2_available();            // compiled in and reported by the CPU
void force_scalar(bool on);       // testing hook, overrides dispatch
const char* active_backend();     // "avx2" or "scalar"

// dst[i] = map[idx[i]]; dst must not alias idx or map
void gather_map(u32* dst, const u32* idx, const u32* map, std::size_t n);
bool is_identity(const u32* p, std::size_t n);
// dst[p[i]] = i; p must be a permutation of 0..n-1
void invert(u32* dst, const u32* p, std::size_t n);

}  // namespace tensorsq::pk
