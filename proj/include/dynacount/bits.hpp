#ifndef DYNACOUNT_BITS_HPP
#define DYNACOUNT_BITS_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace dynacount {

// Inserts a zero bit at position pos, shifting higher bits up.
inline uint32_t insert_zero_bit(uint32_t mask, unsigned pos) {
  uint32_t low = mask & ((1u << pos) - 1u);
  uint32_t high = (pos < 31) ? ((mask >> pos) << (pos + 1)) : 0u;
  return high | low;
}

// Drops the bit at position pos, shifting higher bits down.
inline uint32_t remove_bit(uint32_t mask, unsigned pos) {
  uint32_t low = mask & ((1u << pos) - 1u);
  uint32_t high = (pos < 31) ? ((mask >> (pos + 1)) << pos) : 0u;
  return high | low;
}

// Calls f(sub) for every submask of mask, including mask and 0.
template <typename F>
inline void for_each_submask(uint32_t mask, F&& f) {
  uint32_t sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

// Growable bitset over atom ids; used for interpretations and rule sets
// outside the width-bounded DP tables.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  size_t universe_size() const { return size_; }

  bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  size_t count() const {
    size_t c = 0;
    for (uint64_t w : words_) c += static_cast<size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const AtomSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const AtomSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  friend bool operator==(const AtomSet& a, const AtomSet& b) {
    return a.words_ == b.words_;
  }

 private:
  size_t size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace dynacount

#endif
