#include "tensorsq/permkernel.hpp"

#include <atomic>

namespace tensorsq::pk {

namespace scalar {

void gather_map(u32* dst, const u32* idx, const u32* map, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = map[idx[i]];
}

bool is_identity(const u32* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != i) return false;
  return true;
}

void invert(u32* dst, const u32* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[p[i]] = static_cast<u32>(i);
}

}  // namespace scalar

bool avx2_compiled() {
#ifdef TSQ_HAVE_AVX2_TU
  return true;
#else
  return false;
#endif
}

namespace {

std::atomic<bool> g_force_scalar{false};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool dispatch_avx2() {
  static const bool ok = avx2_compiled() && cpu_has_avx2();
  return ok && !g_force_scalar.load(std::memory_order_relaxed);
}

}  // namespace

bool avx2_available() { return avx2_compiled() && cpu_has_avx2(); }

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

const char* active_backend() { return dispatch_avx2() ? "avx2" : "scalar"; }

void gather_map(u32* dst, const u32* idx, const u32* map, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
  if (dispatch_avx2()) {
#ifdef TSQ_HAVE_AVX2_TU
    avx2::gather_map(dst, idx, map, n);
    return;
#endif
  }
#endif
  scalar::gather_map(dst, idx, map, n);
}

bool is_identity(const u32* p, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
  if (dispatch_avx2()) {
#ifdef TSQ_HAVE_AVX2_TU
    return avx2::is_identity(p, n);
#endif
  }
#endif
  return scalar::is_identity(p, n);
}

void invert(u32* dst, const u32* p, std::size_t n) { scalar::invert(dst, p, n); }

}  // namespace tensorsq::pk
