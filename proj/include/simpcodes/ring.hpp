#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "simpcodes/bitvec.hpp"
#include "simpcodes/errors.hpp"

namespace simpcodes {

// Coordinates of x in the direct decomposition
//   x = (1+u^2) alpha + u^2 beta + (u+u^2) gamma,
// the basis in which multiplication and the Gray map act componentwise.
struct AlphaBetaGamma {
  uint8_t alpha = 0;
  uint8_t beta = 0;
  uint8_t gamma = 0;
  bool operator==(const AlphaBetaGamma&) const = default;
};

// Element a + u b + u^2 d of Z2[u]/(u^3 - u), one bit per coefficient.
class RingElement {
 public:
  constexpr RingElement() = default;
  constexpr RingElement(int a, int b, int d)
      : a_(uint8_t(a & 1)), b_(uint8_t(b & 1)), d_(uint8_t(d & 1)) {}

  static constexpr RingElement from_code(int code) {
    return RingElement(code & 1, (code >> 1) & 1, (code >> 2) & 1);
  }
  constexpr int code() const { return a_ | (b_ << 1) | (d_ << 2); }

  constexpr int a() const { return a_; }
  constexpr int b() const { return b_; }
  constexpr int d() const { return d_; }
  constexpr bool is_zero() const { return code() == 0; }

  constexpr RingElement operator+(const RingElement& o) const {
    return RingElement(a_ ^ o.a_, b_ ^ o.b_, d_ ^ o.d_);
  }

  // Polynomial product reduced by u^3 = u, u^4 = u^2.
  constexpr RingElement operator*(const RingElement& o) const {
    int a = a_ & o.a_;
    int b = (a_ & o.b_) ^ (b_ & o.a_) ^ (b_ & o.d_) ^ (d_ & o.b_);
    int d = (a_ & o.d_) ^ (b_ & o.b_) ^ (d_ & o.a_) ^ (d_ & o.d_);
    return RingElement(a, b, d);
  }

  constexpr bool operator==(const RingElement&) const = default;

  constexpr AlphaBetaGamma decompose() const {
    return AlphaBetaGamma{a_, uint8_t(a_ ^ b_ ^ d_), b_};
  }

  static constexpr RingElement compose(const AlphaBetaGamma& p) {
    return RingElement(p.alpha, p.gamma, p.alpha ^ p.beta ^ p.gamma);
  }

  // Gray image (a+b, b+d, d) in Z2^3.
  constexpr std::array<int, 3> gray() const {
    return {a_ ^ b_, b_ ^ d_, d_};
  }

  constexpr int lee_weight() const {
    auto g = gray();
    return g[0] + g[1] + g[2];
  }

  bool is_unit() const {
    for (int y = 0; y < 8; ++y)
      if ((*this * from_code(y)).code() == 1) return true;
    return false;
  }

  std::string to_string() const;

 private:
  uint8_t a_ = 0, b_ = 0, d_ = 0;
};

inline std::string RingElement::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  auto app = [&s](const char* t) {
    if (!s.empty()) s += "+";
    s += t;
  };
  if (a_) app("1");
  if (b_) app("u");
  if (d_) app("u^2");
  return s;
}

// Vector over the ring, stored as three bit-planes in the
// (alpha, beta, gamma) decomposition.  Plane-wise XOR is vector addition
// because the decomposition is additive.
class RingVector {
 public:
  RingVector() = default;
  explicit RingVector(size_t len)
      : len_(len), alpha_(len), beta_(len), gamma_(len) {}

  RingVector(Bits alpha, Bits beta, Bits gamma)
      : len_(alpha.size()),
        alpha_(std::move(alpha)),
        beta_(std::move(beta)),
        gamma_(std::move(gamma)) {
    if (beta_.size() != len_ || gamma_.size() != len_)
      throw InvalidSpecError("RingVector planes disagree in length");
  }

  // Convenience for word-sized vectors: planes given as masks.
  static RingVector from_planes(int width, uint32_t alpha, uint32_t beta,
                                uint32_t gamma) {
    BitVec guard(width, alpha);  // validates width and range
    BitVec gb(width, beta), gg(width, gamma);
    (void)guard;
    (void)gb;
    (void)gg;
    RingVector v{size_t(width)};
    v.alpha_.words()[0] = alpha;
    v.beta_.words()[0] = beta;
    v.gamma_.words()[0] = gamma;
    return v;
  }

  static RingVector from_elements(const std::vector<RingElement>& es) {
    RingVector v(es.size());
    for (size_t i = 0; i < es.size(); ++i) v.set_element(i, es[i]);
    return v;
  }

  size_t length() const { return len_; }
  const Bits& alpha() const { return alpha_; }
  const Bits& beta() const { return beta_; }
  const Bits& gamma() const { return gamma_; }

  RingElement element(size_t i) const {
    return RingElement::compose(AlphaBetaGamma{
        uint8_t(alpha_.get(i)), uint8_t(beta_.get(i)), uint8_t(gamma_.get(i))});
  }

  void set_element(size_t i, const RingElement& e) {
    auto p = e.decompose();
    alpha_.set(i, p.alpha);
    beta_.set(i, p.beta);
    gamma_.set(i, p.gamma);
  }

  RingVector operator+(const RingVector& o) const {
    check_len(o);
    RingVector v = *this;
    v.alpha_.xor_with(o.alpha_);
    v.beta_.xor_with(o.beta_);
    v.gamma_.xor_with(o.gamma_);
    return v;
  }

  RingVector operator*(const RingElement& s) const {
    RingVector v(len_);
    for (size_t i = 0; i < len_; ++i) v.set_element(i, element(i) * s);
    return v;
  }

  // Euclidean inner product sum_i x_i y_i.  Componentwise the product is
  // (aa', bb', bc' + cb'), so each component of the sum is one parity.
  RingElement dot(const RingVector& o) const {
    check_len(o);
    uint8_t a = uint8_t(alpha_.parity_and(o.alpha_));
    uint8_t b = uint8_t(beta_.parity_and(o.beta_));
    uint8_t g =
        uint8_t(beta_.parity_and(o.gamma_) ^ gamma_.parity_and(o.beta_));
    return RingElement::compose(AlphaBetaGamma{a, b, g});
  }

  // Gray image: three length-len blocks (r+s | s+t | t) for x = r+us+u^2t,
  // which in plane terms are (alpha^gamma | alpha^beta | alpha^beta^gamma).
  Bits gray() const {
    Bits out(3 * len_);
    for (size_t i = 0; i < len_; ++i) {
      int al = alpha_.get(i), be = beta_.get(i), ga = gamma_.get(i);
      if (al ^ ga) out.set(i, true);
      if (al ^ be) out.set(len_ + i, true);
      if (al ^ be ^ ga) out.set(2 * len_ + i, true);
    }
    return out;
  }

  uint64_t lee_weight() const {
    uint64_t w = 0;
    const auto &a = alpha_.words(), &b = beta_.words(), &g = gamma_.words();
    for (size_t i = 0; i < a.size(); ++i) {
      w += std::popcount(a[i] ^ g[i]);
      w += std::popcount(a[i] ^ b[i]);
      w += std::popcount(a[i] ^ b[i] ^ g[i]);
    }
    return w;
  }

  bool is_zero() const {
    return alpha_.is_zero() && beta_.is_zero() && gamma_.is_zero();
  }

  bool operator==(const RingVector& o) const = default;

 private:
  void check_len(const RingVector& o) const {
    if (len_ != o.len_)
      throw InvalidSpecError("RingVector length mismatch: " +
                             std::to_string(len_) + " vs " +
                             std::to_string(o.len_));
  }

  size_t len_ = 0;
  Bits alpha_, beta_, gamma_;
};

}  // namespace simpcodes
