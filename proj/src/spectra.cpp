#include "simpcodes/spectra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "simpcodes/tables.hpp"

namespace simpcodes {

uint64_t WeightDistribution::total() const {
  uint64_t t = 0;
  for (auto& [w, f] : entries) t += f;
  return t;
}

bool WeightDistribution::has_nonzero_weight() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](auto& e) { return e.first > 0; });
}

uint64_t WeightDistribution::min_nonzero_weight() const {
  for (auto& [w, f] : entries)
    if (w > 0) return w;
  throw InvalidSpecError("zero code has no nonzero weight");
}

uint64_t WeightDistribution::max_weight() const {
  if (entries.empty()) throw InvalidSpecError("empty distribution");
  return entries.back().first;
}

int WeightDistribution::distinct_nonzero_weights() const {
  int c = 0;
  for (auto& [w, f] : entries)
    if (w > 0) ++c;
  return c;
}

WeightDistribution WeightDistribution::to_codeword_level(
    uint64_t kernel_size) const {
  if (level == Level::codeword) return *this;
  WeightDistribution out;
  out.level = Level::codeword;
  out.entries.reserve(entries.size());
  for (auto& [w, f] : entries) {
    if (f % kernel_size)
      throw InvalidSpecError("message frequency not a kernel multiple");
    out.entries.emplace_back(w, f / kernel_size);
  }
  return out;
}

namespace {

WeightDistribution finish(std::map<uint64_t, uint64_t> hist, Level level,
                          uint64_t kernel) {
  WeightDistribution dist;
  dist.level = Level::message;
  dist.entries.assign(hist.begin(), hist.end());
  if (level == Level::codeword) dist = dist.to_codeword_level(kernel);
  return dist;
}

void check_message_budget(int m, const Budgets& budgets) {
  if (uint64_t{1} << (3 * m) > budgets.max_messages)
    throw BudgetExceededError("2^{3m} exceeds the message budget");
}

// Lee weight of the ring element with decomposition planes (a, b, g):
// bit count of (a^g, a^b, a^b^g).
constexpr int lee3(int a, int b, int g) {
  return ((a ^ g) + (a ^ b) + (a ^ b ^ g));
}

}  // namespace

WeightDistribution brute_force_distribution(const CodeHandle& code,
                                            Level level,
                                            const Budgets& budgets) {
  const int m = code.spec().m;
  check_message_budget(m, budgets);
  const uint64_t messages = uint64_t{1} << (3 * m);
  if (messages > budgets.max_weight_ops / std::max<uint64_t>(
                                              code.defining_set_size(), 1))
    throw BudgetExceededError("2^{3m} * |D| exceeds the direct-path budget");

  const auto &d1 = code.factor1(), &d2 = code.factor2(), &d3 = code.factor3();
  const uint32_t mask = (uint32_t{1} << m) - 1;

  unsigned nt = budgets.threads > 0
                    ? unsigned(budgets.threads)
                    : std::max(1u, std::thread::hardware_concurrency());
  nt = unsigned(std::min<uint64_t>(nt, messages));

  std::vector<std::map<uint64_t, uint64_t>> parts(nt);
  auto worker = [&](unsigned id) {
    auto& hist = parts[id];
    const uint64_t lo = messages * id / nt, hi = messages * (id + 1) / nt;
    for (uint64_t msg = lo; msg < hi; ++msg) {
      const uint32_t al = uint32_t(msg) & mask;
      const uint32_t be = uint32_t(msg >> m) & mask;
      const uint32_t ga = uint32_t(msg >> (2 * m)) & mask;
      uint64_t wt = 0;
      for (uint32_t t1 : d1) {
        const int a = parity32(al & t1);
        for (uint32_t t2 : d2) {
          const int b = parity32(be & t2);
          const int g2 = parity32(ga & t2);
          for (uint32_t t3 : d3)
            wt += lee3(a, b, g2 ^ parity32(be & t3));
        }
      }
      ++hist[wt];
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < nt; ++id) pool.emplace_back(worker, id);
  worker(0);
  for (auto& th : pool) th.join();

  std::map<uint64_t, uint64_t> hist;
  for (auto& part : parts)
    for (auto& [w, f] : part) hist[w] += f;
  return finish(std::move(hist), level,
                level == Level::codeword ? code.kernel_size(budgets) : 1);
}

WeightDistribution charsum_distribution(const CodeHandle& code, Level level,
                                        const Budgets& budgets) {
  const DefiningSetSpec& spec = code.spec();
  const int m = spec.m;
  check_message_budget(m, budgets);
  const uint32_t mask = (uint32_t{1} << m) - 1;
  const ComplexSpec f1 = spec.factor1(), f2 = spec.factor2(),
                    f3 = spec.factor3();
  const int64_t dsize = int64_t(code.defining_set_size());
  const int64_t d3size = int64_t(code.factor3().size());

  // char_sum reduced to masks: chi is one AND, sizes are constants.
  auto make_sum = [m](const ComplexSpec& f) {
    const uint32_t gen = f.generator.bits();
    const int64_t inner = int64_t{1} << f.generator.weight();
    const int64_t full = int64_t{1} << m;
    const bool comp = f.complemented;
    return [gen, inner, full, comp](uint32_t v) -> int64_t {
      int64_t val = (v & gen) ? 0 : inner;
      if (!comp) return val;
      return (v == 0 ? full : 0) - val;
    };
  };
  auto s1 = make_sum(f1), s2 = make_sum(f2), s3 = make_sum(f3);

  std::map<uint64_t, uint64_t> hist;
  for (uint32_t al = 0; al <= mask; ++al) {
    const int64_t v1 = s1(al);
    for (uint32_t be = 0; be <= mask; ++be) {
      const int64_t s2b = s2(be), s3b = s3(be);
      const int64_t base = s2b * d3size;
      for (uint32_t ga = 0; ga <= mask; ++ga) {
        const int64_t bracket = s2(ga) * s3b + base + s2(be ^ ga) * s3b;
        const int64_t twice = 3 * dsize - v1 * bracket;
        if (twice < 0 || (twice & 1))
          throw InvalidSpecError("character-sum weight not a nonnegative "
                                 "integer; internal inconsistency");
        ++hist[uint64_t(twice / 2)];
      }
    }
  }
  return finish(std::move(hist), level,
                level == Level::codeword ? code.kernel_size(budgets) : 1);
}

WeightDistribution table_distribution(const DefiningSetSpec& spec) {
  WeightDistribution dist;
  dist.level = Level::message;
  dist.entries = table_rows(spec);
  return dist;
}

std::string EnumeratorPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c;
    const uint64_t xe = n - w;
    if (xe > 0) os << "X^" << xe;
    if (w > 0) os << "Y^" << w;
    if (c == 1 && xe == 0 && w == 0) os << "1";
  }
  return os.str();
}

EnumeratorPolynomial enumerator(const WeightDistribution& codeword_level,
                                uint64_t gray_length) {
  if (codeword_level.level != Level::codeword)
    throw InvalidSpecError("enumerator wants a codeword-level distribution");
  EnumeratorPolynomial poly;
  poly.n = gray_length;
  poly.terms = codeword_level.entries;
  return poly;
}

std::string distribution_csv(const WeightDistribution& dist) {
  std::ostringstream os;
  os << "weight,frequency\n";
  for (auto& [w, f] : dist.entries) os << w << "," << f << "\n";
  return os.str();
}

std::string first_difference(const WeightDistribution& a,
                             const WeightDistribution& b) {
  std::ostringstream os;
  size_t i = 0, j = 0;
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j == b.entries.size() ||
        (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
      os << "weight " << a.entries[i].first << ": " << a.entries[i].second
         << " vs absent";
      return os.str();
    }
    if (i == a.entries.size() || a.entries[i].first > b.entries[j].first) {
      os << "weight " << b.entries[j].first << ": absent vs "
         << b.entries[j].second;
      return os.str();
    }
    if (a.entries[i].second != b.entries[j].second) {
      os << "weight " << a.entries[i].first << ": " << a.entries[i].second
         << " vs " << b.entries[j].second;
      return os.str();
    }
    ++i;
    ++j;
  }
  return "identical";
}

}  // namespace simpcodes
