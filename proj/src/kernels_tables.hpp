#pragma once

#include "rsim/kernels.hpp"

// Internal: per-ISA tables defined in their own translation units so each can
// be compiled with the matching target flags. Only referenced when the build
// enables the lane.
namespace rsim::kernels {

#if defined(RSIM_HAVE_AVX2)
const Table& avx2_table();
#endif

#if defined(RSIM_HAVE_NEON)
const Table& neon_table();
#endif

}  // namespace rsim::kernels
