#include "simpcodes/simplicial.hpp"

#include <algorithm>

namespace simpcodes {

std::vector<uint32_t> enumerate_complex(const ComplexSpec& spec) {
  std::vector<uint32_t> out;
  out.reserve(size_t(spec.size()));
  if (!spec.complemented) {
    // (sub - gen) & gen steps through the submasks of L in ascending order.
    uint32_t gen = spec.generator.bits();
    uint32_t sub = 0;
    while (true) {
      out.push_back(sub);
      if (sub == gen) break;
      sub = (sub - gen) & gen;
    }
  } else {
    uint32_t full = spec.generator.full_mask();
    uint32_t gen = spec.generator.bits();
    for (uint32_t v = 0; v <= full; ++v)
      if (v & ~gen) out.push_back(v);
  }
  return out;
}

int64_t char_sum(const ComplexSpec& spec, const BitVec& alpha) {
  if (alpha.width() != spec.m)
    throw InvalidSpecError("char_sum: alpha width differs from m");
  int64_t inner = int64_t{1} << spec.generator.weight();
  int64_t val = chi(alpha, spec.generator) ? inner : 0;
  if (!spec.complemented) return val;
  int64_t full = alpha.is_zero() ? (int64_t{1} << spec.m) : 0;
  return full - val;
}

GeneralComplex::GeneralComplex(int m, std::vector<BitVec> maximal_faces)
    : m_(m), faces_(std::move(maximal_faces)) {
  if (faces_.size() > kMaxFaces)
    throw InvalidSpecError("face list exceeds " + std::to_string(kMaxFaces));
  for (const auto& f : faces_)
    if (f.width() != m_)
      throw InvalidSpecError("face width differs from m");
  for (size_t i = 0; i < faces_.size(); ++i)
    for (size_t j = 0; j < faces_.size(); ++j)
      if (i != j && faces_[i].covered_by(faces_[j]))
        throw InvalidSpecError("face list is not an antichain of maximal faces");
}

bool GeneralComplex::contains(const BitVec& v) const {
  return std::any_of(faces_.begin(), faces_.end(),
                     [&](const BitVec& f) { return v.covered_by(f); });
}

uint64_t GeneralComplex::generating_function_size() const {
  int64_t total = 0;
  uint32_t nf = uint32_t(faces_.size());
  for (uint32_t s = 1; s < (uint32_t{1} << nf); ++s) {
    uint32_t meet = BitVec(m_, 0).full_mask();
    for (uint32_t i = 0; i < nf; ++i)
      if ((s >> i) & 1) meet &= faces_[i].bits();
    int64_t term = int64_t{1} << std::popcount(meet);
    total += (std::popcount(s) & 1) ? term : -term;
  }
  return uint64_t(total);
}

uint64_t GeneralComplex::enumeration_size() const {
  uint64_t count = 0;
  uint32_t full = (uint32_t{1} << m_) - 1;
  for (uint32_t v = 0;; ++v) {
    if (contains(BitVec(m_, v))) ++count;
    if (v == full) break;
  }
  return count;
}

namespace {

// Pairwise-disjointness count #{v : chi(v|M)=0 and chi(v|N)=0}.
int64_t count_joint_blocked(int m, const BitVec& M, const BitVec& N) {
  auto blocked = [m](int k) {
    return ((int64_t{1} << k) - 1) << (m - k);
  };
  int union_sz = (M | N).weight();
  return blocked(M.weight()) + blocked(N.weight()) - blocked(union_sz);
}

int64_t count_pair_second(int m, const BitVec& M) {
  // #{w : chi(w|M)=0, chi(v+w|M)=0} for any fixed v with chi(v|M)=0.
  return ((int64_t{1} << M.weight()) - 2) << (m - M.weight());
}

int64_t count_pair_second_disjoint(int m, const BitVec& M) {
  // #{w != v : chi(w|M)=0, chi(v+w|M)=1} for such v.
  return (int64_t{1} << (m - M.weight())) - 1;
}

int64_t count_m_only(int m, const BitVec& M, const BitVec& N) {
  // #{v : chi(v|M)=0, chi(v|N)=1}.
  int m_minus_n = std::popcount(M.bits() & ~N.bits());
  int union_sz = (M | N).weight();
  return ((int64_t{1} << m_minus_n) - 1) << (m - union_sz);
}

void require_v(const CountQuery& q) {
  if (!q.v) throw InvalidSpecError("count part needs a fixed vector v");
  if (q.v->width() != q.m) throw InvalidSpecError("v width differs from m");
  if (chi(*q.v, q.M) != 0)
    throw InvalidSpecError("fixed v must meet M (chi(v|M) = 0)");
}

}  // namespace

uint64_t count_part(CountPart part, const CountQuery& q) {
  const int m = q.m;
  if (q.L.width() != m || q.M.width() != m || q.N.width() != m)
    throw InvalidSpecError("subset width differs from m");
  int64_t r = 0;
  switch (part) {
    case CountPart::p1a:
      r = int64_t{1} << (m - q.L.weight());
      break;
    case CountPart::p1b:
      r = ((int64_t{1} << q.L.weight()) - 1) << (m - q.L.weight());
      break;
    case CountPart::p2:
      r = count_joint_blocked(m, q.M, q.N);
      break;
    case CountPart::p3a:
      require_v(q);
      r = count_pair_second(m, q.M);
      break;
    case CountPart::p3b:
      require_v(q);
      r = count_pair_second_disjoint(m, q.M);
      break;
    case CountPart::p4:
      r = count_joint_blocked(m, q.M, q.N) * count_pair_second(m, q.M);
      break;
    case CountPart::p5:
      r = count_m_only(m, q.M, q.N);
      break;
    case CountPart::p6:
      r = count_m_only(m, q.M, q.N) * count_pair_second(m, q.M);
      break;
    case CountPart::p7:
      r = count_joint_blocked(m, q.M, q.N) *
          count_pair_second_disjoint(m, q.M);
      break;
  }
  if (r < 0) throw InvalidSpecError("count formula out of domain (negative)");
  return uint64_t(r);
}

uint64_t count_part_brute(CountPart part, const CountQuery& q) {
  const int m = q.m;
  if (q.L.width() != m || q.M.width() != m || q.N.width() != m)
    throw InvalidSpecError("subset width differs from m");
  const uint32_t full = (uint32_t{1} << m) - 1;
  auto ch = [&](uint32_t v, const BitVec& s) {
    return (v & s.bits()) ? 0 : 1;
  };
  uint64_t count = 0;
  switch (part) {
    case CountPart::p1a:
      for (uint32_t v = 0; v <= full; ++v)
        if (ch(v, q.L) == 1) ++count;
      break;
    case CountPart::p1b:
      for (uint32_t v = 0; v <= full; ++v)
        if (ch(v, q.L) == 0) ++count;
      break;
    case CountPart::p2:
      for (uint32_t v = 0; v <= full; ++v)
        if (ch(v, q.M) == 0 && ch(v, q.N) == 0) ++count;
      break;
    case CountPart::p3a: {
      require_v(q);
      uint32_t v = q.v->bits();
      for (uint32_t w = 0; w <= full; ++w)
        if (ch(w, q.M) == 0 && ch(v ^ w, q.M) == 0) ++count;
      break;
    }
    case CountPart::p3b: {
      require_v(q);
      uint32_t v = q.v->bits();
      for (uint32_t w = 0; w <= full; ++w)
        if (w != v && ch(w, q.M) == 0 && ch(v ^ w, q.M) == 1) ++count;
      break;
    }
    case CountPart::p4:
      for (uint32_t v = 0; v <= full; ++v) {
        if (ch(v, q.M) != 0 || ch(v, q.N) != 0) continue;
        for (uint32_t w = 0; w <= full; ++w)
          if (ch(w, q.M) == 0 && ch(v ^ w, q.M) == 0) ++count;
      }
      break;
    case CountPart::p5:
      for (uint32_t v = 0; v <= full; ++v)
        if (ch(v, q.M) == 0 && ch(v, q.N) == 1) ++count;
      break;
    case CountPart::p6:
      for (uint32_t v = 0; v <= full; ++v) {
        if (ch(v, q.M) != 0 || ch(v, q.N) != 1) continue;
        for (uint32_t w = 0; w <= full; ++w)
          if (ch(w, q.M) == 0 && ch(v ^ w, q.M) == 0) ++count;
      }
      break;
    case CountPart::p7:
      for (uint32_t v = 0; v <= full; ++v) {
        if (ch(v, q.M) != 0 || ch(v, q.N) != 0) continue;
        for (uint32_t w = 0; w <= full; ++w)
          if (w != v && ch(w, q.M) == 0 && ch(v ^ w, q.M) == 1) ++count;
      }
      break;
  }
  return count;
}

}  // namespace simpcodes
