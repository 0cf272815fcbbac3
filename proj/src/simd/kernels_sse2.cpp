#include "kernels_internal.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <emmintrin.h>

namespace orbitslice::simd {
namespace {

struct Pair {
  __m128i lo, hi;
};

inline Pair load(const Exponents& a) {
  return {_mm_load_si128(reinterpret_cast<const __m128i*>(a.e)),
          _mm_load_si128(reinterpret_cast<const __m128i*>(a.e + 16))};
}

inline void store(Exponents& out, __m128i lo, __m128i hi) {
  _mm_store_si128(reinterpret_cast<__m128i*>(out.e), lo);
  _mm_store_si128(reinterpret_cast<__m128i*>(out.e + 16), hi);
}

// Bit i set where byte i of a and b differ, over all 32 bytes.
inline std::uint32_t diff_mask(const Pair& a, const Pair& b) {
  const auto lo = static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpeq_epi8(a.lo, b.lo)));
  const auto hi = static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpeq_epi8(a.hi, b.hi)));
  return ~(lo | (hi << 16));
}

bool mul(const Exponents& a, const Exponents& b, Exponents& out) {
  const Pair x = load(a), y = load(b);
  const Pair sat{_mm_adds_epu8(x.lo, y.lo), _mm_adds_epu8(x.hi, y.hi)};
  const Pair wrap{_mm_add_epi8(x.lo, y.lo), _mm_add_epi8(x.hi, y.hi)};
  store(out, wrap.lo, wrap.hi);
  return diff_mask(sat, wrap) == 0;
}

bool divides(const Exponents& a, const Exponents& b) {
  const Pair x = load(a), y = load(b);
  const Pair m{_mm_max_epu8(x.lo, y.lo), _mm_max_epu8(x.hi, y.hi)};
  return diff_mask(m, y) == 0;
}

void quotient(const Exponents& b, const Exponents& a, Exponents& out) {
  const Pair x = load(b), y = load(a);
  store(out, _mm_sub_epi8(x.lo, y.lo), _mm_sub_epi8(x.hi, y.hi));
}

void lcm(const Exponents& a, const Exponents& b, Exponents& out) {
  const Pair x = load(a), y = load(b);
  store(out, _mm_max_epu8(x.lo, y.lo), _mm_max_epu8(x.hi, y.hi));
}

bool coprime(const Exponents& a, const Exponents& b) {
  const Pair x = load(a), y = load(b);
  const __m128i m = _mm_or_si128(_mm_min_epu8(x.lo, y.lo), _mm_min_epu8(x.hi, y.hi));
  return _mm_movemask_epi8(_mm_cmpeq_epi8(m, _mm_setzero_si128())) == 0xffff;
}

unsigned degree(const Exponents& a) {
  const Pair x = load(a);
  const __m128i zero = _mm_setzero_si128();
  const __m128i s = _mm_add_epi64(_mm_sad_epu8(x.lo, zero), _mm_sad_epu8(x.hi, zero));
  return static_cast<unsigned>(_mm_cvtsi128_si32(s) + _mm_cvtsi128_si32(_mm_srli_si128(s, 8)));
}

int cmp_lex(const Exponents& a, const Exponents& b) {
  const std::uint32_t m = diff_mask(load(a), load(b));
  if (m == 0) return 0;
  const int i = __builtin_ctz(m);
  return a.e[i] > b.e[i] ? 1 : -1;
}

int cmp_grevlex(const Exponents& a, const Exponents& b) {
  const unsigned da = degree(a), db = degree(b);
  if (da != db) return da > db ? 1 : -1;
  const std::uint32_t m = diff_mask(load(a), load(b));
  if (m == 0) return 0;
  const int i = 31 - __builtin_clz(m);
  return a.e[i] < b.e[i] ? 1 : -1;
}

constexpr MonomialKernels kSse2{"sse2", mul, divides, quotient, lcm, coprime, degree, cmp_lex, cmp_grevlex};

}  // namespace

const MonomialKernels* sse2_kernels() { return &kSse2; }

}  // namespace orbitslice::simd

#else

namespace orbitslice::simd {
const MonomialKernels* sse2_kernels() { return nullptr; }
}  // namespace orbitslice::simd

#endif
