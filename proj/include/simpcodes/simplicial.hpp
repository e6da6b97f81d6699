#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simpcodes/bitvec.hpp"

namespace simpcodes {

// chi(v|S) = 1 iff Supp(v) and S are disjoint.
inline int chi(const BitVec& v, const BitVec& s) {
  v.check_same_width(s);
  return (v.bits() & s.bits()) ? 0 : 1;
}

// The complex generated by one subset L: all v with Supp(v) inside L.
// With `complemented` set it denotes Z2^m minus that complex.
struct ComplexSpec {
  int m = 1;
  BitVec generator;  // L
  bool complemented = false;

  ComplexSpec() = default;
  ComplexSpec(int m_, BitVec gen, bool comp = false)
      : m(m_), generator(gen), complemented(comp) {
    if (gen.width() != m)
      throw InvalidSpecError("generator width differs from m");
  }

  uint64_t size() const {
    uint64_t full = uint64_t{1} << m;
    uint64_t inner = uint64_t{1} << generator.weight();
    return complemented ? full - inner : inner;
  }

  bool contains(const BitVec& v) const {
    bool in = v.covered_by(generator);
    return complemented ? !in : in;
  }
};

// Members in ascending mask order.
std::vector<uint32_t> enumerate_complex(const ComplexSpec& spec);

// Character sum sum_{t in spec} (-1)^{alpha . t}, in closed form:
//   2^|L| chi(alpha|L)            for the complex itself,
//   2^m [alpha=0] - 2^|L| chi     for its complement.
int64_t char_sum(const ComplexSpec& spec, const BitVec& alpha);

// A complex given by its maximal faces.  Construction rejects a face list
// where one face covers another, so the list is a maximality antichain.
class GeneralComplex {
 public:
  GeneralComplex(int m, std::vector<BitVec> maximal_faces);

  int m() const { return m_; }
  const std::vector<BitVec>& faces() const { return faces_; }

  bool contains(const BitVec& v) const;

  // |complex| by inclusion-exclusion over nonempty face subsets:
  //   sum_{S} (-1)^{|S|+1} 2^{|intersection of S|}.
  // Face count is capped so the 2^|F| subset walk stays cheap.
  uint64_t generating_function_size() const;

  // Reference path: mark all members explicitly.
  uint64_t enumeration_size() const;

  static constexpr int kMaxFaces = 20;

 private:
  int m_ = 1;
  std::vector<BitVec> faces_;
};

// Closed-form counting toolkit used by the weight tables.  Parts follow a
// fixed catalogue over subsets L (parts 1a/1b) or M, N (the rest); parts
// 3a/3b additionally fix a vector v with chi(v|M) = 0.
enum class CountPart { p1a, p1b, p2, p3a, p3b, p4, p5, p6, p7 };

struct CountQuery {
  int m = 1;
  BitVec L, M, N;
  std::optional<BitVec> v;  // required by p3a / p3b
};

// Closed-form value.
uint64_t count_part(CountPart part, const CountQuery& q);

// Same quantity by direct predicate enumeration (the arbiter in sweeps).
uint64_t count_part_brute(CountPart part, const CountQuery& q);

}  // namespace simpcodes
