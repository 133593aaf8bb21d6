#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "rsim/kernels.hpp"

namespace rsim {

// Fixed-width bit vector; bit i set means element i is present. Unused bits
// of the last word are kept zero, so equality, popcount and word-level
// kernels operate on whole words without masking.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

  static BitVec with_bits(std::size_t bits, std::initializer_list<std::uint32_t> set) {
    BitVec v(bits);
    for (std::uint32_t i : set) v.set(i);
    return v;
  }

  std::size_t size() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }

  bool test(std::size_t i) const {
    assert(i < bits_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void clear_all() { words_.assign(words_.size(), 0); }

  void set_all() {
    words_.assign(words_.size(), ~std::uint64_t{0});
    mask_tail();
  }

  // Resizes to `bits` and clears everything.
  void assign_zero(std::size_t bits) {
    bits_ = bits;
    words_.assign(words_for(bits), 0);
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const { return !any(); }

  // this = a | b, using the given kernel table (active() when null).
  void assign_or(const BitVec& a, const BitVec& b, const kernels::Table* k = nullptr) {
    assert(a.bits_ == b.bits_);
    if (bits_ != a.bits_) assign_zero(a.bits_);
    if (k == nullptr) k = &kernels::active();
    k->bitor_words(words_.data(), a.words_.data(), b.words_.data(), words_.size());
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::uint64_t* data() { return words_.data(); }
  const std::uint64_t* data() const { return words_.data(); }

  template <typename Fn>
  void for_each_set_bit(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t v = words_[w];
      while (v != 0) {
        const int k = std::countr_zero(v);
        fn(w * 64 + static_cast<std::size_t>(k));
        v &= v - 1;
      }
    }
  }

  std::vector<std::uint32_t> set_bits() const {
    std::vector<std::uint32_t> out;
    for_each_set_bit([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  static std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

  void mask_tail() {
    const std::size_t rem = bits_ & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// The state of a simulation: one bit per entity of the background set.
using State = BitVec;

}  // namespace rsim
