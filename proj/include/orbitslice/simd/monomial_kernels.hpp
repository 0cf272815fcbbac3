#pragma once

// Exponent-vector kernels for the Groebner engine.
//
// A monomial in at most kMaxVars variables is a 32-byte block of unsigned
// 8-bit exponents; unused trailing variables are zero. Every kernel has a
// scalar reference implementation and vector variants that must agree with it
// bit-for-bit (see tests/test_simd.cpp).

#include <cstdint>
#include <span>
#include <string_view>

namespace orbitslice::simd {

inline constexpr int kMaxVars = 32;

struct alignas(32) Exponents {
  std::uint8_t e[kMaxVars] = {};

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

struct MonomialKernels {
  std::string_view name;
  /// out = a * b. Returns false if any exponent would exceed 255.
  bool (*mul)(const Exponents& a, const Exponents& b, Exponents& out);
  /// a | b
  bool (*divides)(const Exponents& a, const Exponents& b);
  /// out = b / a, assuming a | b.
  void (*quotient)(const Exponents& b, const Exponents& a, Exponents& out);
  void (*lcm)(const Exponents& a, const Exponents& b, Exponents& out);
  /// gcd(a, b) == 1
  bool (*coprime)(const Exponents& a, const Exponents& b);
  unsigned (*degree)(const Exponents& a);
  /// Sign of a - b in lexicographic order with variable 0 most significant.
  int (*cmp_lex)(const Exponents& a, const Exponents& b);
  /// Sign of a - b in graded reverse lexicographic order.
  int (*cmp_grevlex)(const Exponents& a, const Exponents& b);
};

const MonomialKernels& scalar_kernels();

/// Every variant compiled into this binary that the running CPU supports,
/// scalar first.
std::span<const MonomialKernels* const> available_kernels();

/// The variant in use. Chosen once: the widest supported variant, unless the
/// ORBITSLICE_SIMD environment variable names another available one.
const MonomialKernels& active_kernels();

/// Override the active variant; returns false if `name` is not available.
bool select_kernels(std::string_view name);

}  // namespace orbitslice::simd
