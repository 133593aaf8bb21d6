#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace rsim::kernels {

// Word- and byte-level primitives behind the simulation inner loops.
// Every entry has a portable scalar implementation; vector variants
// (AVX2 on x86-64, NEON on aarch64) are selected at runtime and must be
// bit-exact with scalar.
//
// Layout contracts shared by all implementations:
//  - bitor_words:   dst/a/b hold `words` 64-bit words; dst may alias a or b.
//  - bits_to_bytes: writes words*64 bytes, one 0/1 byte per bit.
//  - matvec_rows_i8: `rows` is row-major with `cols` entries per row,
//    cols % 32 == 0; `vec` holds cols 0/1 bytes; out gets one int32 per row.
//  - accumulate_row_u8: acc[j] += row[j] for cols entries, cols % 32 == 0.
//  - clip_ge_i32:   out[i] = (x[i] >= thr[i]) ? 1 : 0 for any n.
//  - clip_pos_bits: bit i of out = (x[i] > 0), writing ceil(bits/64) whole
//    words; x must be zero-padded up to that word boundary.
struct Table {
  std::string_view name;
  void (*bitor_words)(std::uint64_t* dst, const std::uint64_t* a,
                      const std::uint64_t* b, std::size_t words);
  void (*bits_to_bytes)(const std::uint64_t* bits, std::size_t words,
                        std::uint8_t* out);
  void (*matvec_rows_i8)(const std::int8_t* rows, std::size_t cols,
                         std::size_t n_rows, const std::uint8_t* vec,
                         std::int32_t* out);
  void (*accumulate_row_u8)(std::int32_t* acc, const std::uint8_t* row,
                            std::size_t cols);
  void (*clip_ge_i32)(const std::int32_t* x, const std::int32_t* thr,
                      std::size_t n, std::uint8_t* out);
  void (*clip_pos_bits)(const std::int32_t* x, std::size_t bits,
                        std::uint64_t* out);
};

// Portable reference kernels.
const Table& scalar();

// Every table usable on this machine, scalar first.
std::vector<const Table*> available();

// The table simulations use: the widest supported lane, unless the
// RSIM_KERNELS environment variable ({auto, scalar, avx2, neon}) asks for a
// specific one. An unsupported request falls back to auto with a warning.
const Table& active();

}  // namespace rsim::kernels
