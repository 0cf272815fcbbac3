#include <atomic>
#include <cstdlib>
#include <vector>

#include "kernels_internal.hpp"

namespace orbitslice::simd {
namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::vector<const MonomialKernels*> detect() {
  std::vector<const MonomialKernels*> out{&scalar_kernels()};
  if (const auto* k = sse2_kernels()) out.push_back(k);
  if (const auto* k = neon_kernels()) out.push_back(k);
  if (const auto* k = avx2_kernels(); k != nullptr && cpu_has_avx2()) out.push_back(k);
  return out;
}

const std::vector<const MonomialKernels*>& registry() {
  static const std::vector<const MonomialKernels*> kAll = detect();
  return kAll;
}

const MonomialKernels* find(std::string_view name) {
  for (const auto* k : registry()) {
    if (k->name == name) return k;
  }
  return nullptr;
}

std::atomic<const MonomialKernels*>& slot() {
  static std::atomic<const MonomialKernels*> active = [] {
    if (const char* env = std::getenv("ORBITSLICE_SIMD")) {
      if (const auto* k = find(env)) return k;
    }
    return registry().back();
  }();
  return active;
}

}  // namespace

std::span<const MonomialKernels* const> available_kernels() { return registry(); }

const MonomialKernels& active_kernels() { return *slot().load(std::memory_order_relaxed); }

bool select_kernels(std::string_view name) {
  const auto* k = find(name);
  if (k == nullptr) return false;
  slot().store(k, std::memory_order_relaxed);
  return true;
}

}  // namespace orbitslice::simd
