#include "kernels_internal.hpp"

namespace orbitslice::simd {
namespace {

bool mul(const Exponents& a, const Exponents& b, Exponents& out) {
  bool ok = true;
  for (int i = 0; i < kMaxVars; ++i) {
    const unsigned s = unsigned{a.e[i]} + unsigned{b.e[i]};
    ok &= s <= 255u;
    out.e[i] = static_cast<std::uint8_t>(s);
  }
  return ok;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

void quotient(const Exponents& b, const Exponents& a, Exponents& out) {
  for (int i = 0; i < kMaxVars; ++i) out.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
}

void lcm(const Exponents& a, const Exponents& b, Exponents& out) {
  for (int i = 0; i < kMaxVars; ++i) out.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  }
  return true;
}

unsigned degree(const Exponents& a) {
  unsigned d = 0;
  for (int i = 0; i < kMaxVars; ++i) d += a.e[i];
  return d;
}

int cmp_lex(const Exponents& a, const Exponents& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

int cmp_grevlex(const Exponents& a, const Exponents& b) {
  const unsigned da = degree(a), db = degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

constexpr MonomialKernels kScalar{"scalar", mul, divides, quotient, lcm, coprime, degree, cmp_lex, cmp_grevlex};

}  // namespace

const MonomialKernels& scalar_kernels() { return kScalar; }

}  // namespace orbitslice::simd
