#include <immintrin.h>

#include <cstring>

#include "kernels_tables.hpp"

// AVX2 variants of the simulation kernels. This file is compiled with -mavx2;
// callers reach it only through the dispatch table after a runtime CPU check.
namespace rsim::kernels {
namespace {

void bitor_words_avx2(std::uint64_t* dst, const std::uint64_t* a,
                      const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(va, vb));
  }
  for (; i < words; ++i) dst[i] = a[i] | b[i];
}

// Expands one 32-bit half-word into 32 bytes of 0/1.
inline void expand32(std::uint32_t v, std::uint8_t* out) {
  const __m256i sel = _mm256_setr_epi8(0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1,
                                       2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3);
  const __m256i bit = _mm256_set1_epi64x(static_cast<long long>(0x8040201008040201ULL));
  const __m256i one = _mm256_set1_epi8(1);
  const __m256i spread = _mm256_shuffle_epi8(_mm256_set1_epi32(static_cast<int>(v)), sel);
  const __m256i hit = _mm256_cmpeq_epi8(_mm256_and_si256(spread, bit), bit);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), _mm256_and_si256(hit, one));
}

void bits_to_bytes_avx2(const std::uint64_t* bits, std::size_t words,
                        std::uint8_t* out) {
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t v = bits[w];
    expand32(static_cast<std::uint32_t>(v), out + w * 64);
    expand32(static_cast<std::uint32_t>(v >> 32), out + w * 64 + 32);
  }
}

inline std::int32_t hsum_epi32(__m256i v) {
  __m128i s = _mm_add_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(s);
}

void matvec_rows_i8_avx2(const std::int8_t* rows, std::size_t cols,
                         std::size_t n_rows, const std::uint8_t* vec,
                         std::int32_t* out) {
  // maddubs needs the unsigned operand first; vec entries are 0/1 so the
  // i16 pair sums stay within [-2, 2] and never saturate.
  const __m256i ones16 = _mm256_set1_epi16(1);
  for (std::size_t r = 0; r < n_rows; ++r) {
    const std::int8_t* row = rows + r * cols;
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t j = 0; j < cols; j += 32) {
      const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(vec + j));
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
      const __m256i prod16 = _mm256_maddubs_epi16(t, a);
      acc = _mm256_add_epi32(acc, _mm256_madd_epi16(prod16, ones16));
    }
    out[r] = hsum_epi32(acc);
  }
}

void accumulate_row_u8_avx2(std::int32_t* acc, const std::uint8_t* row,
                            std::size_t cols) {
  for (std::size_t j = 0; j < cols; j += 32) {
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
    const __m128i lo = _mm256_castsi256_si128(b);
    const __m128i hi = _mm256_extracti128_si256(b, 1);
    __m256i* a0 = reinterpret_cast<__m256i*>(acc + j);
    __m256i* a1 = reinterpret_cast<__m256i*>(acc + j + 8);
    __m256i* a2 = reinterpret_cast<__m256i*>(acc + j + 16);
    __m256i* a3 = reinterpret_cast<__m256i*>(acc + j + 24);
    _mm256_storeu_si256(a0, _mm256_add_epi32(_mm256_loadu_si256(a0), _mm256_cvtepu8_epi32(lo)));
    _mm256_storeu_si256(a1, _mm256_add_epi32(_mm256_loadu_si256(a1),
                                             _mm256_cvtepu8_epi32(_mm_srli_si128(lo, 8))));
    _mm256_storeu_si256(a2, _mm256_add_epi32(_mm256_loadu_si256(a2), _mm256_cvtepu8_epi32(hi)));
    _mm256_storeu_si256(a3, _mm256_add_epi32(_mm256_loadu_si256(a3),
                                             _mm256_cvtepu8_epi32(_mm_srli_si128(hi, 8))));
  }
}

void clip_ge_i32_avx2(const std::int32_t* x, const std::int32_t* thr,
                      std::size_t n, std::uint8_t* out) {
  const __m256i one = _mm256_set1_epi32(1);
  const __m128i pick_low_bytes = _mm_setr_epi8(0, 4, 8, 12, -1, -1, -1, -1,
                                               -1, -1, -1, -1, -1, -1, -1, -1);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i tv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(thr + i));
    const __m256i lt = _mm256_cmpgt_epi32(tv, xv);           // x < thr
    const __m256i ge01 = _mm256_andnot_si256(lt, one);       // !(x < thr) ? 1 : 0
    const __m128i lo = _mm_shuffle_epi8(_mm256_castsi256_si128(ge01), pick_low_bytes);
    const __m128i hi = _mm_shuffle_epi8(_mm256_extracti128_si256(ge01, 1), pick_low_bytes);
    const std::uint32_t lo4 = static_cast<std::uint32_t>(_mm_cvtsi128_si32(lo));
    const std::uint32_t hi4 = static_cast<std::uint32_t>(_mm_cvtsi128_si32(hi));
    std::memcpy(out + i, &lo4, 4);
    std::memcpy(out + i + 4, &hi4, 4);
  }
  for (; i < n; ++i) out[i] = x[i] >= thr[i] ? 1 : 0;
}

void clip_pos_bits_avx2(const std::int32_t* x, std::size_t bits,
                        std::uint64_t* out) {
  const std::size_t words = (bits + 63) / 64;
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t word = 0;
    const std::int32_t* base = x + w * 64;
    for (std::size_t k = 0; k < 8; ++k) {
      const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + k * 8));
      const __m256i pos = _mm256_cmpgt_epi32(xv, zero);
      const std::uint32_t m =
          static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(pos)));
      word |= static_cast<std::uint64_t>(m) << (k * 8);
    }
    out[w] = word;
  }
}

}  // namespace

const Table& avx2_table() {
  static const Table table{
      "avx2",
      &bitor_words_avx2,
      &bits_to_bytes_avx2,
      &matvec_rows_i8_avx2,
      &accumulate_row_u8_avx2,
      &clip_ge_i32_avx2,
      &clip_pos_bits_avx2,
  };
  return table;
}

}  // namespace rsim::kernels
