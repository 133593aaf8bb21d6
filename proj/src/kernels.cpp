#include "rsim/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <string_view>

#include "kernels_tables.hpp"

namespace rsim::kernels {
namespace {

void bitor_words_scalar(std::uint64_t* dst, const std::uint64_t* a,
                        const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] | b[i];
}

void bits_to_bytes_scalar(const std::uint64_t* bits, std::size_t words,
                          std::uint8_t* out) {
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t v = bits[w];
    std::uint8_t* o = out + w * 64;
    for (std::size_t k = 0; k < 64; ++k) o[k] = static_cast<std::uint8_t>((v >> k) & 1u);
  }
}

void matvec_rows_i8_scalar(const std::int8_t* rows, std::size_t cols,
                           std::size_t n_rows, const std::uint8_t* vec,
                           std::int32_t* out) {
  for (std::size_t r = 0; r < n_rows; ++r) {
    const std::int8_t* row = rows + r * cols;
    std::int32_t sum = 0;
    for (std::size_t j = 0; j < cols; ++j)
      sum += static_cast<std::int32_t>(row[j]) * static_cast<std::int32_t>(vec[j]);
    out[r] = sum;
  }
}

void accumulate_row_u8_scalar(std::int32_t* acc, const std::uint8_t* row,
                              std::size_t cols) {
  for (std::size_t j = 0; j < cols; ++j) acc[j] += row[j];
}

void clip_ge_i32_scalar(const std::int32_t* x, const std::int32_t* thr,
                        std::size_t n, std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] >= thr[i] ? 1 : 0;
}

void clip_pos_bits_scalar(const std::int32_t* x, std::size_t bits,
                          std::uint64_t* out) {
  const std::size_t words = (bits + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t word = 0;
    const std::int32_t* base = x + w * 64;
    for (std::size_t k = 0; k < 64; ++k)
      if (base[k] > 0) word |= std::uint64_t{1} << k;
    out[w] = word;
  }
}

const Table* pick_active() {
  const auto tables = available();
  const char* env = std::getenv("RSIM_KERNELS");
  const std::string_view want = env != nullptr ? env : "auto";
  if (want.empty() || want == "auto") return tables.back();
  for (const Table* t : tables)
    if (t->name == want) return t;
  std::fprintf(stderr, "rsim: kernels '%.*s' not available on this machine, using '%.*s'\n",
               static_cast<int>(want.size()), want.data(),
               static_cast<int>(tables.back()->name.size()), tables.back()->name.data());
  return tables.back();
}

}  // namespace

const Table& scalar() {
  static const Table table{
      "scalar",
      &bitor_words_scalar,
      &bits_to_bytes_scalar,
      &matvec_rows_i8_scalar,
      &accumulate_row_u8_scalar,
      &clip_ge_i32_scalar,
      &clip_pos_bits_scalar,
  };
  return table;
}

std::vector<const Table*> available() {
  std::vector<const Table*> tables{&scalar()};
#if defined(RSIM_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) tables.push_back(&avx2_table());
#endif
#if defined(RSIM_HAVE_NEON)
  tables.push_back(&neon_table());
#endif
  return tables;
}

const Table& active() {
  static const Table* chosen = pick_active();
  return *chosen;
}

}  // namespace rsim::kernels
