#pragma once

#include <cstdint>
#include <vector>

namespace srmatch {

/* fixed-capacity bitset; comparison treats the words as one wide unsigned
   integer, which gives every family of subsets a stable, documented order */
class Bits {
public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits operator&(const Bits& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
  Bits operator|(const Bits& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
  Bits minus(const Bits& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }
  /* most significant word first, so the order matches the integer value */
  bool operator<(const Bits& o) const {
    for (size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  uint64_t hash_value() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ uint64_t(n_);
    for (uint64_t w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

private:
  template <class F>
  Bits apply(const Bits& o, F f) const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = f(w_[i], o.w_[i]);
    return r;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace srmatch
