#include "simpcodes/analysis.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace simpcodes {

bool ashikhmin_barg(const WeightDistribution& codeword_level) {
  if (!codeword_level.has_nonzero_weight())
    throw InvalidSpecError("minimality of the zero code is vacuous");
  return 2 * codeword_level.min_nonzero_weight() >
         codeword_level.max_weight();
}

MinimalityCheck exact_minimality(const std::vector<Bits>& codewords) {
  // Sort nonzero words by weight: a proper cover strictly increases weight.
  std::vector<std::pair<size_t, const Bits*>> by_weight;
  by_weight.reserve(codewords.size());
  for (const Bits& c : codewords)
    if (!c.is_zero()) by_weight.emplace_back(c.count(), &c);
  std::sort(by_weight.begin(), by_weight.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  for (size_t i = 0; i < by_weight.size(); ++i) {
    for (size_t j = i + 1; j < by_weight.size(); ++j) {
      if (by_weight[i].first == by_weight[j].first) continue;
      if (by_weight[i].second->covered_by(*by_weight[j].second))
        return {false,
                std::make_pair(*by_weight[i].second, *by_weight[j].second)};
    }
  }
  return {true, std::nullopt};
}

namespace {

size_t leading_bit(const Bits& b) {
  for (size_t w = 0; w < b.words().size(); ++w)
    if (b.words()[w])
      return w * 64 + size_t(std::countr_zero(b.words()[w]));
  return b.size();
}

}  // namespace

std::vector<Bits> gray_codewords(const CodeHandle& code,
                                 const Budgets& budgets) {
  // XOR basis keyed by leading bit: each elimination strictly raises the
  // leading bit, so a row either lands on a free pivot or vanishes.
  std::map<size_t, Bits> pivots;
  for (Bits& row : code.gray_generator_matrix()) {
    while (!row.is_zero()) {
      auto it = pivots.find(leading_bit(row));
      if (it == pivots.end()) {
        pivots.emplace(leading_bit(row), std::move(row));
        break;
      }
      row.xor_with(it->second);
    }
  }
  std::vector<Bits> basis;
  basis.reserve(pivots.size());
  for (auto& [piv, b] : pivots) basis.push_back(std::move(b));
  const size_t k = basis.size();
  if (k >= 63 || (uint64_t{1} << k) > budgets.max_codewords_exact)
    throw BudgetExceededError("2^k codewords exceed the covering budget");
  const uint64_t total = uint64_t{1} << k;
  std::vector<Bits> words;
  words.reserve(size_t(total));
  Bits cur(code.gray_length());
  words.push_back(cur);
  for (uint64_t i = 1; i < total; ++i) {
    cur.xor_with(basis[size_t(std::countr_zero(i))]);  // Gray-counter step
    words.push_back(cur);
  }
  return words;
}

MinimalityCheck exact_minimality(const CodeHandle& code,
                                 const Budgets& budgets) {
  return exact_minimality(gray_codewords(code, budgets));
}

SelfOrthogonality self_orthogonality(
    const CodeHandle& code, const WeightDistribution& codeword_level) {
  SelfOrthogonality result;
  result.weights_mod4 = true;
  for (auto& [w, f] : codeword_level.entries)
    if (w % 4 != 0) {
      result.weights_mod4 = false;
      break;
    }
  std::vector<Bits> rows = code.gray_generator_matrix();
  result.gram_zero = true;
  for (size_t i = 0; i < rows.size() && result.gram_zero; ++i)
    for (size_t j = i; j < rows.size(); ++j)
      if (rows[i].parity_and(rows[j])) {
        result.gram_zero = false;
        break;
      }
  return result;
}

CodeParams code_params(const CodeHandle& code,
                       const WeightDistribution& codeword_level,
                       uint64_t code_size) {
  if (!codeword_level.has_nonzero_weight())
    throw InvalidSpecError("zero code: minimum distance undefined");
  CodeParams p;
  p.n = code.gray_length();
  p.k = std::countr_zero(code_size);
  p.d = codeword_level.min_nonzero_weight();
  return p;
}

Method method_from_string(const std::string& s) {
  if (s == "brute") return Method::brute;
  if (s == "charsum") return Method::charsum;
  if (s == "table") return Method::table;
  if (s == "all") return Method::all;
  throw InvalidSpecError("unknown method '" + s + "'");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::charsum: return "charsum";
    case Method::table: return "table";
    default: return "all";
  }
}

AnalysisReport analyze(const DefiningSetSpec& spec,
                       const AnalyzeOptions& options) {
  AnalysisReport rep;
  rep.spec = spec;
  rep.case_index = spec.case_index();

  CodeHandle code = CodeHandle::build(spec, options.budgets);
  rep.defining_set_size = code.defining_set_size();
  rep.gray_length = code.gray_length();

  const Method method = options.method;
  const bool want_brute = method == Method::brute || method == Method::all;
  const bool want_charsum =
      method == Method::charsum || method == Method::all;
  const bool want_table = method == Method::table || method == Method::all;

  std::optional<WeightDistribution> brute, charsum, table;
  if (want_brute) {
    brute = brute_force_distribution(code, Level::message, options.budgets);
    rep.methods.push_back("brute");
  }
  if (want_charsum) {
    charsum = charsum_distribution(code, Level::message, options.budgets);
    rep.methods.push_back("charsum");
  }
  if (want_table) {
    if (spec.proper_nonempty()) {
      table = table_distribution(spec);
      rep.methods.push_back("table");
    } else if (method == Method::table) {
      throw InvalidSpecError(
          "closed-form rows need proper nonempty L, M, N; use brute or "
          "charsum");
    }
  }

  auto compare = [&rep](const char* na, const WeightDistribution& a,
                        const char* nb, const WeightDistribution& b) {
    if (a.entries != b.entries)
      rep.discrepancies.push_back(
          {"distribution_mismatch", std::string(na) + " vs " + nb + ": " +
                                        first_difference(a, b)});
  };
  if (brute && charsum) compare("brute", *brute, "charsum", *charsum);
  if (brute && table) compare("brute", *brute, "table", *table);
  if (!brute && charsum && table) compare("charsum", *charsum, "table", *table);

  // Ground-truth precedence: direct enumeration, then character sums,
  // then the closed-form rows.
  const WeightDistribution& message =
      brute ? *brute : (charsum ? *charsum : *table);
  rep.message_dist = message;

  const uint64_t all_messages = uint64_t{1} << (3 * spec.m);
  if (message.total() != all_messages)
    rep.discrepancies.push_back(
        {"conservation_violation",
         "message frequencies sum to " + std::to_string(message.total()) +
             ", expected " + std::to_string(all_messages)});

  uint64_t kernel;
  if (all_messages <= options.budgets.max_messages && (brute || charsum)) {
    kernel = code.kernel_size(options.budgets);
  } else {
    kernel = all_messages / table_code_size(spec);
  }
  rep.kernel = kernel;
  rep.code_size = all_messages / kernel;
  rep.dimension = std::countr_zero(rep.code_size);
  rep.codeword_dist = message.to_codeword_level(kernel);

  const size_t rank = gf2_rank(code.gray_generator_matrix());
  if (rank != size_t(rep.dimension))
    rep.discrepancies.push_back(
        {"rank_mismatch", "generator rank " + std::to_string(rank) +
                              " differs from log2 of the code size " +
                              std::to_string(rep.dimension)});

  if (spec.proper_nonempty() &&
      table_code_size(spec) != rep.code_size)
    rep.discrepancies.push_back(
        {"code_size_mismatch",
         "enumerated size " + std::to_string(rep.code_size) +
             " differs from predicted " +
             std::to_string(table_code_size(spec))});

  rep.distinct_nonzero_weights = rep.codeword_dist.distinct_nonzero_weights();
  if (rep.codeword_dist.has_nonzero_weight()) {
    rep.w0 = rep.codeword_dist.min_nonzero_weight();
    rep.w_inf = rep.codeword_dist.max_weight();
    rep.min_distance = *rep.w0;
    rep.ab_minimal = ashikhmin_barg(rep.codeword_dist);
  }
  rep.enumerator_str =
      enumerator(rep.codeword_dist, rep.gray_length).to_string();

  rep.table_rule = minimality_rule(spec);
  if (rep.codeword_dist.has_nonzero_weight() && rep.table_rule.applicable) {
    if (rep.table_rule.w0 && *rep.table_rule.w0 > *rep.w0)
      rep.discrepancies.push_back(
          {"w0_mismatch", "rule bounds w0 from below by " +
                              std::to_string(*rep.table_rule.w0) +
                              ", distribution has " + std::to_string(*rep.w0)});
    // The predicted maximum is generic; a parameter corner can zero the
    // top row's frequency, so a smaller realized maximum is legitimate.
    // A larger one never is.
    if (rep.table_rule.w_inf && *rep.table_rule.w_inf < *rep.w_inf)
      rep.discrepancies.push_back(
          {"w_inf_mismatch",
           "rule bounds w_inf by " + std::to_string(*rep.table_rule.w_inf) +
               ", distribution has " + std::to_string(*rep.w_inf)});
  }

  if (rep.code_size <= options.budgets.max_codewords_exact)
    rep.exact_minimal = exact_minimality(code, options.budgets).minimal;

  rep.orthogonality = self_orthogonality(code, rep.codeword_dist);

  if (options.with_generator_matrix) {
    std::vector<std::string> out;
    for (const Bits& row : code.gray_generator_matrix())
      out.push_back(row.to_string());
    rep.generator_matrix = std::move(out);
  }
  return rep;
}

}  // namespace simpcodes
