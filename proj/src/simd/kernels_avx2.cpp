// Built with -mavx2; only reached after a runtime CPU check.
#include "kernels_internal.hpp"

#if (defined(__x86_64__) || defined(_M_X64)) && defined(__AVX2__)
#include <immintrin.h>

namespace orbitslice::simd {
namespace {

inline __m256i load(const Exponents& a) { return _mm256_load_si256(reinterpret_cast<const __m256i*>(a.e)); }

inline void store(Exponents& out, __m256i v) { _mm256_store_si256(reinterpret_cast<__m256i*>(out.e), v); }

inline std::uint32_t diff_mask(__m256i a, __m256i b) {
  return ~static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(a, b)));
}

bool mul(const Exponents& a, const Exponents& b, Exponents& out) {
  const __m256i x = load(a), y = load(b);
  const __m256i wrap = _mm256_add_epi8(x, y);
  store(out, wrap);
  return diff_mask(_mm256_adds_epu8(x, y), wrap) == 0;
}

bool divides(const Exponents& a, const Exponents& b) {
  const __m256i y = load(b);
  return diff_mask(_mm256_max_epu8(load(a), y), y) == 0;
}

void quotient(const Exponents& b, const Exponents& a, Exponents& out) { store(out, _mm256_sub_epi8(load(b), load(a))); }

void lcm(const Exponents& a, const Exponents& b, Exponents& out) { store(out, _mm256_max_epu8(load(a), load(b))); }

bool coprime(const Exponents& a, const Exponents& b) {
  const __m256i m = _mm256_min_epu8(load(a), load(b));
  return _mm256_testz_si256(m, m) != 0;
}

unsigned degree(const Exponents& a) {
  const __m256i s = _mm256_sad_epu8(load(a), _mm256_setzero_si256());
  const __m128i t = _mm_add_epi64(_mm256_castsi256_si128(s), _mm256_extracti128_si256(s, 1));
  return static_cast<unsigned>(_mm_cvtsi128_si32(t) + _mm_cvtsi128_si32(_mm_srli_si128(t, 8)));
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

constexpr MonomialKernels kAvx2{"avx2", mul, divides, quotient, lcm, coprime, degree, cmp_lex, cmp_grevlex};

}  // namespace

const MonomialKernels* avx2_kernels() { return &kAvx2; }

}  // namespace orbitslice::simd

#else

namespace orbitslice::simd {
const MonomialKernels* avx2_kernels() { return nullptr; }
}  // namespace orbitslice::simd

#endif
