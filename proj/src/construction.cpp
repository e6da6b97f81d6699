#include "simpcodes/construction.hpp"

#include <bit>
#include <string>

namespace simpcodes {

DefiningSetSpec::DefiningSetSpec(int m_, BitVec l, BitVec mm, BitVec n,
                                 bool cl, bool cm, bool cn)
    : m(m_), L(l), M(mm), N(n), comp_l(cl), comp_m(cm), comp_n(cn) {
  if (L.width() != m || M.width() != m || N.width() != m)
    throw InvalidSpecError("subset width differs from m");
}

CodeHandle::CodeHandle(DefiningSetSpec spec, std::vector<uint32_t> d1,
                       std::vector<uint32_t> d2, std::vector<uint32_t> d3)
    : spec_(spec), d1_(std::move(d1)), d2_(std::move(d2)), d3_(std::move(d3)) {
  dsize_ = uint64_t(d1_.size()) * d2_.size() * d3_.size();
}

CodeHandle CodeHandle::build(const DefiningSetSpec& spec,
                             const Budgets& budgets) {
  uint64_t size = spec.defining_set_size();
  if (size == 0)
    throw InvalidSpecError(
        "defining set is empty (a complemented factor generated by the full "
        "set)");
  if (size > budgets.max_defining_set)
    throw BudgetExceededError("|D| = " + std::to_string(size) +
                              " exceeds budget " +
                              std::to_string(budgets.max_defining_set));
  return CodeHandle(spec, enumerate_complex(spec.factor1()),
                    enumerate_complex(spec.factor2()),
                    enumerate_complex(spec.factor3()));
}

RingVector CodeHandle::defining_element(uint64_t flat) const {
  uint64_t b23 = uint64_t(d2_.size()) * d3_.size();
  uint32_t t1 = d1_[size_t(flat / b23)];
  uint64_t rem = flat % b23;
  uint32_t t2 = d2_[size_t(rem / d3_.size())];
  uint32_t t3 = d3_[size_t(rem % d3_.size())];
  return RingVector::from_planes(spec_.m, t1, t2, t3);
}

RingVector CodeHandle::codeword(const RingVector& message) const {
  if (message.length() != size_t(spec_.m))
    throw InvalidSpecError("message length differs from m");
  uint32_t ma = uint32_t(message.alpha().words()[0]);
  uint32_t mb = uint32_t(message.beta().words()[0]);
  uint32_t mg = uint32_t(message.gamma().words()[0]);

  Bits A{size_t(dsize_)}, B{size_t(dsize_)}, G{size_t(dsize_)};
  size_t flat = 0;
  for (uint32_t t1 : d1_) {
    int a = parity32(ma & t1);
    for (uint32_t t2 : d2_) {
      int b = parity32(mb & t2);
      int g2 = parity32(mg & t2);
      for (uint32_t t3 : d3_) {
        int g = g2 ^ parity32(mb & t3);
        if (a) A.set(flat, true);
        if (b) B.set(flat, true);
        if (g) G.set(flat, true);
        ++flat;
      }
    }
  }
  return RingVector(std::move(A), std::move(B), std::move(G));
}

uint64_t CodeHandle::kernel_size(const Budgets& budgets) const {
  if (kernel_) return *kernel_;
  const int m = spec_.m;
  uint64_t messages = uint64_t{1} << (3 * m);
  if (messages > budgets.max_messages)
    throw BudgetExceededError("2^{3m} = " + std::to_string(messages) +
                              " exceeds message budget");
  const uint32_t full = (uint32_t{1} << m) - 1;
  uint64_t count = 0;
  // c_D(v) = 0 iff every factor parity vanishes: alpha against all of D1,
  // beta against all of D2, and gamma.D2[j] ^ beta.D3[k] == 0 for all j, k.
  for (uint32_t al = 0; al <= full; ++al) {
    bool a_ok = true;
    for (uint32_t t1 : d1_)
      if (parity32(al & t1)) {
        a_ok = false;
        break;
      }
    if (!a_ok) continue;
    for (uint32_t be = 0; be <= full; ++be) {
      bool b_ok = true;
      for (uint32_t t2 : d2_)
        if (parity32(be & t2)) {
          b_ok = false;
          break;
        }
      if (!b_ok) continue;
      int h0 = parity32(be & d3_[0]);
      bool h_const = true;
      for (uint32_t t3 : d3_)
        if (parity32(be & t3) != h0) {
          h_const = false;
          break;
        }
      if (!h_const) continue;
      for (uint32_t ga = 0; ga <= full; ++ga) {
        bool g_ok = true;
        for (uint32_t t2 : d2_)
          if (parity32(ga & t2) != h0) {
            g_ok = false;
            break;
          }
        if (g_ok) ++count;
      }
    }
  }
  kernel_ = count;
  return count;
}

std::vector<Bits> CodeHandle::gray_generator_matrix() const {
  std::vector<Bits> rows;
  rows.reserve(3 * size_t(spec_.m));
  // e_i = 1 at coordinate i has planes (e, e, 0); u e_i -> (0, e, e);
  // u^2 e_i -> (0, e, 0).
  for (int unit = 0; unit < 3; ++unit) {
    for (int i = 0; i < spec_.m; ++i) {
      uint32_t e = uint32_t{1} << i;
      RingVector msg =
          unit == 0   ? RingVector::from_planes(spec_.m, e, e, 0)
          : unit == 1 ? RingVector::from_planes(spec_.m, 0, e, e)
                      : RingVector::from_planes(spec_.m, 0, e, 0);
      rows.push_back(codeword(msg).gray());
    }
  }
  return rows;
}

size_t gf2_rank(std::vector<Bits> rows) {
  size_t rank = 0;
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  size_t nwords = rows.empty() ? 0 : rows[0].words().size();
  size_t pivot_row = 0;
  for (size_t wi = 0; wi < nwords && pivot_row < rows.size(); ++wi) {
    for (int bit = 0; bit < 64 && pivot_row < rows.size(); ++bit) {
      if (wi * 64 + bit >= ncols) break;
      uint64_t mask = uint64_t{1} << bit;
      size_t sel = pivot_row;
      while (sel < rows.size() && !(rows[sel].words()[wi] & mask)) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[sel], rows[pivot_row]);
      for (size_t r = 0; r < rows.size(); ++r)
        if (r != pivot_row && (rows[r].words()[wi] & mask))
          rows[r].xor_with(rows[pivot_row]);
      ++pivot_row;
      ++rank;
    }
  }
  return rank;
}

}  // namespace simpcodes
