#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "simpcodes/errors.hpp"

namespace simpcodes {

// Widths are capped so a subset of [m] always fits one machine word.
inline constexpr int kMaxWidth = 24;

// Element of Z2^m / subset of {1,...,m}, stored as an m-bit mask.
// Index i (1-based, as in set notation) lives at bit i-1.
class BitVec {
 public:
  BitVec() = default;

  BitVec(int width, uint32_t bits) : width_(width), bits_(bits) {
    if (width < 1 || width > kMaxWidth)
      throw InvalidSpecError("BitVec width must be in [1, " +
                             std::to_string(kMaxWidth) + "], got " +
                             std::to_string(width));
    if (bits >> width)
      throw InvalidSpecError("BitVec bits exceed width " +
                             std::to_string(width));
  }

  static BitVec from_indices(int width, const std::vector<int>& one_based) {
    uint32_t bits = 0;
    for (int i : one_based) {
      if (i < 1 || i > width)
        throw InvalidSpecError("index " + std::to_string(i) +
                               " outside [1, " + std::to_string(width) + "]");
      bits |= uint32_t{1} << (i - 1);
    }
    return BitVec(width, bits);
  }

  int width() const { return width_; }
  uint32_t bits() const { return bits_; }
  int weight() const { return std::popcount(bits_); }
  bool is_zero() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_mask(); }
  uint32_t full_mask() const { return (uint32_t{1} << width_) - 1; }

  bool get(int one_based) const {
    return (bits_ >> (one_based - 1)) & 1u;
  }

  // Supp(this) contained in Supp(w).
  bool covered_by(const BitVec& w) const {
    check_same_width(w);
    return (bits_ & ~w.bits_) == 0;
  }

  BitVec operator^(const BitVec& o) const {
    check_same_width(o);
    return BitVec(width_, bits_ ^ o.bits_);
  }
  BitVec operator&(const BitVec& o) const {
    check_same_width(o);
    return BitVec(width_, bits_ & o.bits_);
  }
  BitVec operator|(const BitVec& o) const {
    check_same_width(o);
    return BitVec(width_, bits_ | o.bits_);
  }
  BitVec complement() const { return BitVec(width_, full_mask() & ~bits_); }

  bool operator==(const BitVec& o) const = default;

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= width_; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }

  void check_same_width(const BitVec& o) const {
    if (width_ != o.width_)
      throw InvalidSpecError("width mismatch: " + std::to_string(width_) +
                             " vs " + std::to_string(o.width_));
  }

 private:
  int width_ = 1;
  uint32_t bits_ = 0;
};

inline int parity32(uint32_t x) { return std::popcount(x) & 1; }

// Arbitrary-length bit string; backs Gray images, codeword planes and
// generator-matrix rows, which outgrow a single word.
class Bits {
 public:
  Bits() = default;
  explicit Bits(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  bool empty_length() const { return n_ == 0; }

  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(size_t i, bool v) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }

  size_t count() const {
    size_t c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  bool is_zero() const {
    return std::all_of(w_.begin(), w_.end(),
                       [](uint64_t x) { return x == 0; });
  }

  // Supp(this) contained in Supp(o); early exit on the first witness word.
  bool covered_by(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  void xor_with(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }

  int parity_and(const Bits& o) const {
    uint64_t acc = 0;
    for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
  }

  size_t count_and(const Bits& o) const {
    size_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  bool operator==(const Bits& o) const = default;

  const std::vector<uint64_t>& words() const { return w_; }
  std::vector<uint64_t>& words() { return w_; }

  std::string to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace simpcodes
