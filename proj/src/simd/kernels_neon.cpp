#include "kernels_internal.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace orbitslice::simd {
namespace {

struct Pair {
  uint8x16_t lo, hi;
};

inline Pair load(const Exponents& a) { return {vld1q_u8(a.e), vld1q_u8(a.e + 16)}; }

inline void store(Exponents& out, uint8x16_t lo, uint8x16_t hi) {
  vst1q_u8(out.e, lo);
  vst1q_u8(out.e + 16, hi);
}

// Nibble-per-byte mask: 4 bits per lane, set where a and b differ.
inline std::uint64_t diff_nibbles(uint8x16_t a, uint8x16_t b) {
  const uint8x16_t ne = vmvnq_u8(vceqq_u8(a, b));
  const uint8x8_t narrowed = vshrn_n_u16(vreinterpretq_u16_u8(ne), 4);
  return vget_lane_u64(vreinterpret_u64_u8(narrowed), 0);
}

inline bool all_equal(const Pair& a, const Pair& b) {
  const uint8x16_t eq = vandq_u8(vceqq_u8(a.lo, b.lo), vceqq_u8(a.hi, b.hi));
  return vminvq_u8(eq) == 0xff;
}

bool mul(const Exponents& a, const Exponents& b, Exponents& out) {
  const Pair x = load(a), y = load(b);
  const Pair sat{vqaddq_u8(x.lo, y.lo), vqaddq_u8(x.hi, y.hi)};
  const Pair wrap{vaddq_u8(x.lo, y.lo), vaddq_u8(x.hi, y.hi)};
  store(out, wrap.lo, wrap.hi);
  return all_equal(sat, wrap);
}

bool divides(const Exponents& a, const Exponents& b) {
  const Pair x = load(a), y = load(b);
  const uint8x16_t le = vandq_u8(vcleq_u8(x.lo, y.lo), vcleq_u8(x.hi, y.hi));
  return vminvq_u8(le) == 0xff;
}

void quotient(const Exponents& b, const Exponents& a, Exponents& out) {
  const Pair x = load(b), y = load(a);
  store(out, vsubq_u8(x.lo, y.lo), vsubq_u8(x.hi, y.hi));
}

void lcm(const Exponents& a, const Exponents& b, Exponents& out) {
  const Pair x = load(a), y = load(b);
  store(out, vmaxq_u8(x.lo, y.lo), vmaxq_u8(x.hi, y.hi));
}

bool coprime(const Exponents& a, const Exponents& b) {
  const Pair x = load(a), y = load(b);
  return vmaxvq_u8(vorrq_u8(vminq_u8(x.lo, y.lo), vminq_u8(x.hi, y.hi))) == 0;
}

unsigned degree(const Exponents& a) {
  const Pair x = load(a);
  return vaddlvq_u8(x.lo) + vaddlvq_u8(x.hi);
}

int first_diff(const Exponents& a, const Exponents& b) {
  const Pair x = load(a), y = load(b);
  const std::uint64_t lo = diff_nibbles(x.lo, y.lo);
  if (lo != 0) return __builtin_ctzll(lo) / 4;
  const std::uint64_t hi = diff_nibbles(x.hi, y.hi);
  if (hi != 0) return 16 + __builtin_ctzll(hi) / 4;
  return -1;
}

int last_diff(const Exponents& a, const Exponents& b) {
  const Pair x = load(a), y = load(b);
  const std::uint64_t hi = diff_nibbles(x.hi, y.hi);
  if (hi != 0) return 16 + (63 - __builtin_clzll(hi)) / 4;
  const std::uint64_t lo = diff_nibbles(x.lo, y.lo);
  if (lo != 0) return (63 - __builtin_clzll(lo)) / 4;
  return -1;
}

int cmp_lex(const Exponents& a, const Exponents& b) {
  const int i = first_diff(a, b);
  if (i < 0) return 0;
  return a.e[i] > b.e[i] ? 1 : -1;
}

int cmp_grevlex(const Exponents& a, const Exponents& b) {
  const unsigned da = degree(a), db = degree(b);
  if (da != db) return da > db ? 1 : -1;
  const int i = last_diff(a, b);
  if (i < 0) return 0;
  return a.e[i] < b.e[i] ? 1 : -1;
}

constexpr MonomialKernels kNeon{"neon", mul, divides, quotient, lcm, coprime, degree, cmp_lex, cmp_grevlex};

}  // namespace

const MonomialKernels* neon_kernels() { return &kNeon; }

}  // namespace orbitslice::simd

#else

namespace orbitslice::simd {
const MonomialKernels* neon_kernels() { return nullptr; }
}  // namespace orbitslice::simd

#endif
