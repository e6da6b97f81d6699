#include "simpcodes/verify.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <sstream>

namespace simpcodes {

namespace {

std::string set_string(const BitVec& s, bool complemented) {
  std::ostringstream os;
  if (complemented) os << "~";
  os << "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) os << ",";
    first = false;
    os << i;
  }
  os << "}";
  return os.str();
}

// Nonzero proper mask; needs m >= 2.
uint32_t random_proper_mask(std::mt19937_64& rng, int m) {
  const uint32_t full = (uint32_t{1} << m) - 1;
  while (true) {
    uint32_t r = uint32_t(rng()) & full;
    if (r != 0 && r != full) return r;
  }
}

// Inverse of the case numbering over (comp_l, comp_m, comp_n) bits.
constexpr int kCompBits[9] = {-1, 0, 1, 2, 4, 3, 5, 6, 7};

DefiningSetSpec random_spec(std::mt19937_64& rng, int m, int case_index) {
  const int bits = kCompBits[case_index];
  DefiningSetSpec spec;
  spec.m = m;
  spec.L = BitVec(m, random_proper_mask(rng, m));
  spec.M = BitVec(m, random_proper_mask(rng, m));
  spec.N = BitVec(m, random_proper_mask(rng, m));
  spec.comp_l = bits & 1;
  spec.comp_m = (bits >> 1) & 1;
  spec.comp_n = (bits >> 2) & 1;
  return spec;
}

}  // namespace

std::string describe_spec(const DefiningSetSpec& spec) {
  std::ostringstream os;
  os << "case " << spec.case_index() << ": m=" << spec.m
     << ", L=" << set_string(spec.L, spec.comp_l)
     << ", M=" << set_string(spec.M, spec.comp_m)
     << ", N=" << set_string(spec.N, spec.comp_n);
  return os.str();
}

VerifySummary verify_tables(const SweepConfig& config) {
  VerifySummary sum;
  sum.what = "tables";
  std::mt19937_64 rng(config.seed);
  for (int c : config.cases) {
    if (c < 1 || c > 8) throw InvalidSpecError("case index outside [1, 8]");
    for (int m : config.ms) {
      if (m < 2) throw InvalidSpecError("sweep needs m >= 2");
      for (int trial = 0; trial < config.trials; ++trial) {
        const DefiningSetSpec spec = random_spec(rng, m, c);
        CodeHandle code = CodeHandle::build(spec, config.budgets);
        const auto brute =
            brute_force_distribution(code, Level::message, config.budgets);
        const auto charsum =
            charsum_distribution(code, Level::message, config.budgets);
        const auto table = table_distribution(spec);
        auto check = [&](const char* pair, const WeightDistribution& a,
                         const WeightDistribution& b) {
          ++sum.checks;
          if (a.entries != b.entries)
            sum.mismatches.push_back(
                {pair, describe_spec(spec) + ": " + first_difference(a, b)});
        };
        check("brute_vs_charsum", brute, charsum);
        check("brute_vs_table", brute, table);

        ++sum.checks;
        const uint64_t messages = uint64_t{1} << (3 * m);
        const uint64_t enumerated =
            messages / code.kernel_size(config.budgets);
        if (enumerated != table_code_size(spec))
          sum.mismatches.push_back(
              {"code_size", describe_spec(spec) + ": enumerated " +
                                std::to_string(enumerated) + ", predicted " +
                                std::to_string(table_code_size(spec))});
      }
    }
  }
  return sum;
}

VerifySummary verify_counting(int m_max, int trials, uint64_t seed) {
  VerifySummary sum;
  sum.what = "counting";
  std::mt19937_64 rng(seed);
  const CountPart plain[] = {CountPart::p1a, CountPart::p1b, CountPart::p2,
                             CountPart::p4,  CountPart::p5,  CountPart::p6,
                             CountPart::p7};
  const char* plain_names[] = {"p1a", "p1b", "p2", "p4", "p5", "p6", "p7"};
  for (int m = 2; m <= m_max; ++m) {
    for (int trial = 0; trial < trials; ++trial) {
      CountQuery q;
      q.m = m;
      q.L = BitVec(m, random_proper_mask(rng, m));
      q.M = BitVec(m, random_proper_mask(rng, m));
      q.N = BitVec(m, random_proper_mask(rng, m));
      auto where = [&](const char* part) {
        std::ostringstream os;
        os << part << " at m=" << m << ", L=" << set_string(q.L, false)
           << ", M=" << set_string(q.M, false)
           << ", N=" << set_string(q.N, false);
        if (q.v) os << ", v=" << set_string(*q.v, false);
        return os.str();
      };
      for (size_t i = 0; i < std::size(plain); ++i) {
        ++sum.checks;
        const uint64_t closed = count_part(plain[i], q);
        const uint64_t brute = count_part_brute(plain[i], q);
        if (closed != brute)
          sum.mismatches.push_back(
              {"counting", where(plain_names[i]) + ": closed " +
                               std::to_string(closed) + ", brute " +
                               std::to_string(brute)});
      }
      // Parts fixing v: every admissible v, verifying the count is the
      // same whichever v is picked.
      const uint32_t full = (uint32_t{1} << m) - 1;
      for (uint32_t v = 0; v <= full; ++v) {
        if ((v & q.M.bits()) == 0) continue;  // needs chi(v|M) = 0
        q.v = BitVec(m, v);
        for (CountPart part : {CountPart::p3a, CountPart::p3b}) {
          ++sum.checks;
          const uint64_t closed = count_part(part, q);
          const uint64_t brute = count_part_brute(part, q);
          if (closed != brute)
            sum.mismatches.push_back(
                {"counting",
                 where(part == CountPart::p3a ? "p3a" : "p3b") + ": closed " +
                     std::to_string(closed) + ", brute " +
                     std::to_string(brute)});
        }
      }
      q.v.reset();
    }
  }
  return sum;
}

VerifySummary verify_charsum(int m_max) {
  VerifySummary sum;
  sum.what = "charsum";
  for (int m = 1; m <= m_max; ++m) {
    const uint32_t full = (uint32_t{1} << m) - 1;
    for (uint32_t gen = 0; gen <= full; ++gen) {
      for (bool comp : {false, true}) {
        const ComplexSpec spec(m, BitVec(m, gen), comp);
        const auto members = enumerate_complex(spec);
        for (uint32_t a = 0; a <= full; ++a) {
          const BitVec alpha(m, a);
          int64_t literal = 0;
          for (uint32_t t : members)
            literal += parity32(a & t) ? -1 : 1;
          ++sum.checks;
          if (literal != char_sum(spec, alpha)) {
            std::ostringstream os;
            os << "m=" << m << ", generator="
               << set_string(BitVec(m, gen), comp) << ", alpha="
               << set_string(alpha, false) << ": literal " << literal
               << ", closed " << char_sum(spec, alpha);
            sum.mismatches.push_back({"charsum", os.str()});
          }
        }
      }
    }
  }
  return sum;
}

VerifySummary verify_generating(int m_max, int trials, uint64_t seed) {
  VerifySummary sum;
  sum.what = "generating";
  std::mt19937_64 rng(seed);
  for (int m = 2; m <= m_max; ++m) {
    const uint32_t full = (uint32_t{1} << m) - 1;
    for (int trial = 0; trial < trials; ++trial) {
      const int draw = 1 + int(rng() % 4);
      std::vector<uint32_t> masks;
      for (int i = 0; i < draw; ++i) masks.push_back(uint32_t(rng()) & full);
      std::sort(masks.begin(), masks.end());
      masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
      // Keep only the maximal masks so the face list is an antichain.
      std::vector<BitVec> faces;
      for (uint32_t a : masks) {
        bool maximal = true;
        for (uint32_t b : masks)
          if (a != b && (a & ~b) == 0) {
            maximal = false;
            break;
          }
        if (maximal) faces.emplace_back(m, a);
      }
      const GeneralComplex complex(m, faces);
      ++sum.checks;
      const uint64_t gen = complex.generating_function_size();
      const uint64_t direct = complex.enumeration_size();
      if (gen != direct) {
        std::ostringstream os;
        os << "m=" << m << ", faces=[";
        for (size_t i = 0; i < faces.size(); ++i)
          os << (i ? " " : "") << set_string(faces[i], false);
        os << "]: inclusion-exclusion " << gen << ", enumeration " << direct;
        sum.mismatches.push_back({"generating", os.str()});
      }
    }
  }
  return sum;
}

}  // namespace simpcodes
