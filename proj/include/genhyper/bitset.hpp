#ifndef GENHYPER_BITSET_HPP
#define GENHYPER_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace genhyper {

// Fixed-universe bitset used for membership masks over element indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(unsigned universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  unsigned universe() const { return n_; }

  void set(unsigned i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(unsigned i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(unsigned i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  unsigned count() const {
    unsigned c = 0;
    for (std::uint64_t x : w_) c += static_cast<unsigned>(std::popcount(x));
    return c;
  }

  bool none() const {
    for (std::uint64_t x : w_)
      if (x) return false;
    return true;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // Fixed total order (word-lexicographic); used only for canonical sorting.
  bool mask_less(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  // Calls f(i) for every set bit, in ascending order.
  template <typename F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t x = w_[wi];
      while (x) {
        unsigned b = static_cast<unsigned>(std::countr_zero(x));
        f(static_cast<unsigned>(wi * 64 + b));
        x &= x - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t x : w_) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  unsigned n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace genhyper

#endif  // GENHYPER_BITSET_HPP
