#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

#include "krull/errors.hpp"

namespace krull {

// Bitset over a fixed universe chosen at construction. All binary operations
// require both operands to share the same universe size; the word vector
// never reallocates after construction, so values are cheap to copy and hash.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
    if (universe < 0) throw contract_error("Bits: negative universe");
  }

  static Bits full(int universe) {
    Bits b(universe);
    for (int i = 0; i < universe; ++i) b.set(i);
    return b;
  }

  int universe() const { return n_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  bool none() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  // Smallest set index >= from, or -1.
  int next(int from = 0) const {
    if (from < 0) from = 0;
    if (from >= n_) return -1;
    int word = from >> 6;
    uint64_t cur = w_[word] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (cur) return (word << 6) + __builtin_ctzll(cur);
      if (++word >= (int)w_.size()) return -1;
      cur = w_[word];
    }
  }

  bool subset_of(const Bits& o) const {
    check(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    check(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits operator&(const Bits& o) const {
    check(o);
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  Bits operator|(const Bits& o) const {
    check(o);
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  // Set difference: bits of *this not in o.
  Bits minus(const Bits& o) const {
    check(o);
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }

  Bits& operator|=(const Bits& o) {
    check(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  Bits& operator&=(const Bits& o) {
    check(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // Lexicographic on words; used only to fix a canonical element order.
  bool word_less(const Bits& o) const { return w_ < o.w_; }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return (size_t)(h ^ (uint64_t)n_);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
    return out;
  }

 private:
  void check(const Bits& o) const {
    if (n_ != o.n_) throw contract_error("Bits: universe mismatch");
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsHash {
  size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace krull
