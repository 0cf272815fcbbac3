#pragma once

#include "orbitslice/simd/monomial_kernels.hpp"

namespace orbitslice::simd {

// Each returns nullptr when the variant was not compiled for this target.
const MonomialKernels* sse2_kernels();
const MonomialKernels* avx2_kernels();
const MonomialKernels* neon_kernels();

}  // namespace orbitslice::simd
