#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace valueset {

// Fixed-length bit array over 64-bit words. Bits past size() are kept zero.
class BitArray {
 public:
  BitArray() = default;
  explicit BitArray(std::uint64_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::uint64_t size() const { return size_; }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::uint64_t count() const {
    std::uint64_t n = 0;
    for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
  }

  // Index of the first set bit at or after `from`, or size() if none.
  std::uint64_t next_set(std::uint64_t from) const {
    if (from >= size_) return size_;
    std::uint64_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (w == 0) {
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
    return (wi << 6) + static_cast<std::uint64_t>(std::countr_zero(w));
  }

  // Calls fn(i) for every set bit in increasing order.
  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for (std::uint64_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        fn((wi << 6) + static_cast<std::uint64_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  friend bool operator==(const BitArray&, const BitArray&) = default;

 private:
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace valueset
