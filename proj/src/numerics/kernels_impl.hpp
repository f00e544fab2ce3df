#pragma once

#include "tdsce/numerics/kernels.hpp"

namespace tdsce::kernels {

#if defined(TDSCE_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace tdsce::kernels
