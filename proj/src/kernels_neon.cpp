#include <arm_neon.h>

#include "kernels_tables.hpp"

// NEON variants for aarch64, where NEON is baseline and needs no runtime
// check. The cheap clip/expand kernels stay scalar; only the hot loops get
// vector code.
namespace rsim::kernels {
namespace {

void bitor_words_neon(std::uint64_t* dst, const std::uint64_t* a,
                      const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t va = vld1q_u64(a + i);
    const uint64x2_t vb = vld1q_u64(b + i);
    vst1q_u64(dst + i, vorrq_u64(va, vb));
  }
  for (; i < words; ++i) dst[i] = a[i] | b[i];
}

void matvec_rows_i8_neon(const std::int8_t* rows, std::size_t cols,
                         std::size_t n_rows, const std::uint8_t* vec,
                         std::int32_t* out) {
  for (std::size_t r = 0; r < n_rows; ++r) {
    const std::int8_t* row = rows + r * cols;
    int32x4_t acc = vdupq_n_s32(0);
    for (std::size_t j = 0; j < cols; j += 16) {
      const int8x16_t a = vld1q_s8(row + j);
      // vec entries are 0/1, so reinterpreting as signed is exact
      const int8x16_t t = vreinterpretq_s8_u8(vld1q_u8(vec + j));
      const int16x8_t p0 = vmull_s8(vget_low_s8(a), vget_low_s8(t));
      const int16x8_t p1 = vmull_s8(vget_high_s8(a), vget_high_s8(t));
      acc = vpadalq_s16(acc, p0);
      acc = vpadalq_s16(acc, p1);
    }
    out[r] = vaddvq_s32(acc);
  }
}

void accumulate_row_u8_neon(std::int32_t* acc, const std::uint8_t* row,
                            std::size_t cols) {
  std::uint32_t* uacc = reinterpret_cast<std::uint32_t*>(acc);
  for (std::size_t j = 0; j < cols; j += 16) {
    const uint8x16_t b = vld1q_u8(row + j);
    const uint16x8_t w0 = vmovl_u8(vget_low_u8(b));
    const uint16x8_t w1 = vmovl_u8(vget_high_u8(b));
    vst1q_u32(uacc + j, vaddw_u16(vld1q_u32(uacc + j), vget_low_u16(w0)));
    vst1q_u32(uacc + j + 4, vaddw_u16(vld1q_u32(uacc + j + 4), vget_high_u16(w0)));
    vst1q_u32(uacc + j + 8, vaddw_u16(vld1q_u32(uacc + j + 8), vget_low_u16(w1)));
    vst1q_u32(uacc + j + 12, vaddw_u16(vld1q_u32(uacc + j + 12), vget_high_u16(w1)));
  }
}

}  // namespace

const Table& neon_table() {
  static const Table table{
      "neon",
      &bitor_words_neon,
      scalar().bits_to_bytes,
      &matvec_rows_i8_neon,
      &accumulate_row_u8_neon,
      scalar().clip_ge_i32,
      scalar().clip_pos_bits,
  };
  return table;
}

}  // namespace rsim::kernels
