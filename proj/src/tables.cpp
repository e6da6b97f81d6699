#include "simpcodes/tables.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace simpcodes {

namespace {

using i128 = __int128;

i128 p2(int e) {
  if (e < 0 || e > 100) throw InvalidSpecError("exponent out of range");
  return i128{1} << e;
}

struct Row {
  i128 w;
  i128 f;
};

// Parameter pack shared by all eight tables.
struct Params {
  int m, A, B, C, U;
  i128 P, Q, R;  // 2^m - 2^|L|, 2^m - 2^|M|, 2^m - 2^|N|
};

Params make_params(const DefiningSetSpec& s) {
  Params p;
  p.m = s.m;
  p.A = s.L.weight();
  p.B = s.M.weight();
  p.C = s.N.weight();
  p.U = (s.M | s.N).weight();
  p.P = p2(p.m) - p2(p.A);
  p.Q = p2(p.m) - p2(p.B);
  p.R = p2(p.m) - p2(p.C);
  return p;
}

std::vector<Row> rows_case1(const Params& t) {
  auto [m, A, B, C, U, P, Q, R] = t;
  return {
      {3 * p2(A + B + C - 1),
       p2(3 * m) + p2(3 * m - A - B - U + 1) - p2(3 * m - A - B) -
           p2(3 * m - A - B - C + 1)},
      {p2(A + B + C),
       p2(3 * m - A - B) + p2(3 * m - A - B - C + 1) -
           3 * p2(3 * m - A - B - U)},
      {0, p2(3 * m - A - B - U)},
  };
}

std::vector<Row> rows_case2(const Params& t) {
  auto [m, A, B, C, U, P, Q, R] = t;
  return {
      {3 * p2(m + B + C - 1), (p2(m - A) - 1) * p2(2 * m - B - U)},
      {p2(B + C - 1) * (3 * p2(m) - p2(A + 1)),
       (p2(m - A) - 1) *
           (p2(2 * m - B - C + 1) + p2(2 * m - B) - 3 * p2(2 * m - B - U))},
      {3 * P * p2(B + C - 1),
       p2(3 * m) - p2(3 * m - A - B) - p2(3 * m - A - B - C + 1) +
           p2(3 * m - A - B - U + 1)},
      {P * p2(B + C),
       p2(2 * m - B - C + 1) + p2(2 * m - B) - 3 * p2(2 * m - B - U)},
      {0, p2(2 * m - B - U)},
  };
}

std::vector<Row> rows_case3(const Params& t) {
  auto [m, A, B, C, U, P, Q, R] = t;
  return {
      {3 * p2(m + A + C - 1),
       p2(3 * m - A - B - U) - p2(2 * m - A - U + 1) - p2(2 * m - A - B) +
           p2(m - A + 1)},
      {(3 * p2(m - 1) - p2(B)) * p2(A + C),
       p2(3 * m - A - B - C + 1) - p2(2 * m - A - C + 1) + p2(3 * m - A - B) -
           3 * p2(3 * m - A - B - U) - p2(2 * m - A) + p2(2 * m - A - B) +
           p2(2 * m - A - U + 1)},
      {3 * Q * p2(A + C - 1),
       p2(3 * m) - p2(3 * m - A - B) - p2(3 * m - A - B - C + 1) +
           p2(3 * m - A - B - U + 1)},
      {p2(m + A + C),
       p2(2 * m - A - U + 1) + p2(2 * m - A - B) - 3 * p2(m - A)},
      {Q * p2(A + C),
       p2(2 * m - A - C + 1) + p2(2 * m - A) - p2(2 * m - A - B) -
           p2(2 * m - A - U + 1)},
      {0, p2(m - A)},
  };
}

std::vector<Row> rows_case4(const Params& t) {
  auto [m, A, B, C, U, P, Q, R] = t;
  return {
      {p2(A + B - 1) * (3 * p2(m) - p2(C + 1)),
       p2(3 * m - A - B - C + 1) - p2(3 * m - A - B - U + 1)},
      {3 * p2(A + B - 1) * R,
       p2(3 * m) - p2(3 * m - A - B) - p2(3 * m - A - B - C + 1) +
           p2(3 * m - A - B - U + 1)},
      {p2(m + A + B), p2(3 * m - A - B - U) - p2(2 * m - A - B)},
      {p2(A + B) * R, p2(3 * m - A - B) - p2(3 * m - A - B - U)},
      {0, p2(2 * m - A - B)},
  };
}

std::vector<Row> rows_case5(const Params& t) {
  auto [m, A, B, C, U, P, Q, R] = t;
  return {
      {3 * P * p2(m + C - 1),
       p2(2 * m - B - U) - p2(m - B) - p2(m - U + 1) + 2},
      {3 * Q * p2(m + C - 1), p2(m - A) - 1},
      {P * (3 * p2(m - 1) - p2(B)) * p2(C),
       p2(m - B) - p2(m - C + 1) + p2(2 * m - B - C + 1) -
           3 * p2(2 * m - B - U) + p2(2 * m - B) - p2(m) + p2(m - U + 1)},
      {(3 * p2(m - 1) - p2(A)) * Q * p2(C),
       p2(2 * m - A - C + 1) - p2(m - C + 1) - p2(2 * m - A - U + 1) +
           p2(m - U + 1) + p2(2 * m - A) - p2(m) - p2(2 * m - A - B) +
           p2(m - B)},
      {3 * p2(m + C - 1) * Q - p2(m + A + C),
       p2(2 * m - A - U + 1) - p2(m - U + 1) - 3 * p2(m - A) - p2(m - B) +
           p2(2 * m - A - B) + 3},
      {3 * P * Q * p2(C - 1),
       p2(3 * m) - p2(3 * m - A - B) - p2(3 * m - A - B - C + 1) +
           p2(3 * m - A - B - U + 1)},
      {3 * p2(m + C - 1) * (p2(m) - p2(A) - p2(B)) + p2(A + B + C),
       p2(3 * m - A - B - C + 1) - p2(2 * m - A - C + 1) -
           p2(2 * m - B - C + 1) + p2(m - C + 1) + p2(2 * m - A - U + 1) -
           p2(m - U + 1) + p2(3 * m - A - B) - p2(2 * m - B) - p2(2 * m - A) +
           p2(m) - 3 * p2(3 * m - A - B - U) + p2(2 * m - A - B) +
           3 * p2(2 * m - B - U) - p2(m - B)},
      {3 * (p2(m) - p2(A) - p2(B)) * p2(m + C - 1),
       p2(3 * m - A - B - U) - p2(2 * m - A - B) - p2(2 * m - B - U) +
           p2(m - B) - p2(2 * m - A - U + 1) + p2(m - A + 1) + p2(m - U + 1) -
           2},
      {P * p2(m + C), p2(m - U + 1) + p2(m - B) - 3},
      {P * Q * p2(C), p2(m) + p2(m - C + 1) - p2(m - B) - p2(m - U + 1)},
      {0, 1},
  };
}

std::vector<Row> rows_case6(const Params& t) {
  auto [m, A, B, C, U, P, Q, R] = t;
  return {
      {P * (3 * p2(m) - p2(C + 1)) * p2(B - 1),
       p2(2 * m - B - C + 1) - p2(2 * m - B - U + 1)},
      {P * p2(m + B), p2(2 * m - B - U) - p2(m - B)},
      {3 * R * p2(m + B - 1), p2(2 * m - A - B) - p2(m - B)},
      {(3 * p2(m) - p2(A + 1)) * R * p2(B - 1),
       p2(3 * m - A - B) - p2(2 * m - B) - p2(3 * m - A - B - U) +
           p2(2 * m - B - U)},
      {(3 * p2(m) - p2(A + 1)) * R * p2(B - 1) - p2(A + B + C),
       p2(3 * m - A - B - U) - p2(2 * m - B - U) - p2(2 * m - A - B) +
           p2(m - B)},
      {3 * P * R * p2(B - 1),
       p2(3 * m) - p2(3 * m - A - B) - p2(3 * m - A - B - C + 1) +
           p2(3 * m - A - B - U + 1)},
      {3 * P * R * p2(B - 1) - p2(A + B + C - 1),
       p2(3 * m - A - B - C + 1) - p2(2 * m - B - C + 1) -
           p2(3 * m - A - B - U + 1) + p2(2 * m - B - U + 1)},
      {P * R * p2(B), p2(2 * m - B) - p2(2 * m - B - U)},
      {0, p2(m - B)},
  };
}

std::vector<Row> rows_case7(const Params& t) {
  auto [m, A, B, C, U, P, Q, R] = t;
  return {
      {Q * (3 * p2(m) - p2(C + 1)) * p2(A - 1) + R * p2(A + B - 1) -
           p2(A + B + C - 1),
       p2(2 * m - A - U + 1) - p2(m - A + 1)},
      {R * p2(m + A), p2(2 * m - A - B) - p2(m - A)},
      {Q * (3 * p2(m) - p2(C + 1)) * p2(A - 1),
       p2(2 * m - A - C + 1) - p2(2 * m - A - U + 1)},
      {(3 * p2(m) - p2(B + 1)) * R * p2(A - 1),
       p2(3 * m - A - B) - p2(2 * m - A) + p2(2 * m - A - B) -
           p2(3 * m - A - B - U)},
      {(3 * p2(m) - p2(B + 1)) * R * p2(A - 1) - p2(A + B + C),
       p2(3 * m - A - B - U) - p2(2 * m - A - B) - p2(2 * m - A - U + 1) +
           p2(m - A + 1)},
      {3 * Q * R * p2(A - 1),
       p2(3 * m) - p2(3 * m - A - B) - p2(3 * m - A - B - C + 1) +
           p2(3 * m - A - B - U + 1)},
      {3 * Q * R * p2(A - 1) - p2(A + B + C - 1),
       p2(3 * m - A - B - C + 1) - p2(3 * m - A - B - U + 1) -
           p2(2 * m - A - C + 1) + p2(2 * m - A - U + 1)},
      {Q * R * p2(A), p2(2 * m - A) - p2(2 * m - A - B)},
      {0, p2(m - A)},
  };
}

std::vector<Row> rows_case8(const Params& t) {
  auto [m, A, B, C, U, P, Q, R] = t;
  i128 core = 3 * P * Q * (p2(m - 1) - p2(C - 1));  // shared leading term
  return {
      {P * Q * (3 * p2(m - 1) - p2(C)) + P * (p2(m) - p2(C + 1)) * p2(B - 1),
       p2(m - U + 1) - 2},
      {3 * Q * R * p2(m - 1), p2(m - A) - 1},
      {P * Q * (3 * p2(m - 1) - p2(C)), p2(m - C + 1) - p2(m - U + 1)},
      {P * (3 * p2(m - 1) - p2(B)) * R,
       p2(m - B) + p2(2 * m - B) - p2(m) - p2(2 * m - B - U)},
      {core + p2(A + B + C - 1),
       p2(3 * m - A - B - C + 1) - p2(2 * m - A - C + 1) -
           p2(2 * m - B - C + 1) + p2(m - C + 1) -
           p2(3 * m - A - B - U + 1) + p2(2 * m - A - U + 1) +
           p2(2 * m - B - U + 1) - p2(m - U + 1)},
      {(3 * p2(m - 1) - p2(A)) * Q * R,
       p2(2 * m - A) - p2(m) - p2(2 * m - A - B) + p2(m - B)},
      // the -P*2^(B+C) term is required for agreement with enumeration
      {P * ((3 * p2(m - 1) - p2(B)) * R - p2(B + C)),
       p2(2 * m - B - U) - p2(m - B) - p2(m - U + 1) + 2},
      {(3 * p2(m - 1) - p2(A)) * Q * R - R * p2(A + B),
       p2(2 * m - A - B) - p2(m - B) - p2(m - A) + 1},
      {core - R * p2(A + B - 1) + p2(A + B + C),
       p2(3 * m - A - B - U) - p2(2 * m - B - U) - p2(2 * m - A - B) +
           p2(m - B) - p2(2 * m - A - U + 1) + p2(m - U + 1) +
           p2(m - A + 1) - 2},
      {core - Q * p2(A + C - 1) - R * p2(A + B - 1) + p2(A + B + C - 1),
       p2(2 * m - A - U + 1) - p2(m - U + 1) - p2(m - A + 1) + 2},
      {core - P * p2(B + C - 1),
       p2(2 * m - B - C + 1) - p2(2 * m - B - U + 1) - p2(m - C + 1) +
           p2(m - U + 1)},
      {core - Q * p2(A + C - 1),
       p2(2 * m - A - C + 1) - p2(m - C + 1) - p2(2 * m - A - U + 1) +
           p2(m - U + 1)},
      {core - R * p2(A + B - 1),
       p2(m) - p2(m - B) + p2(3 * m - A - B) - p2(2 * m - B) - p2(2 * m - A) -
           p2(3 * m - A - B - U) + p2(2 * m - B - U) + p2(2 * m - A - B)},
      {P * R * p2(m), p2(m - B) - 1},
      {core, p2(3 * m) - p2(3 * m - A - B) - p2(3 * m - A - B - C + 1) +
                 p2(3 * m - A - B - U + 1)},
      {P * Q * R, p2(m) - p2(m - B)},
      {0, 1},
  };
}

std::vector<Row> raw_rows(const DefiningSetSpec& spec) {
  const Params t = make_params(spec);
  switch (spec.case_index()) {
    case 1: return rows_case1(t);
    case 2: return rows_case2(t);
    case 3: return rows_case3(t);
    case 4: return rows_case4(t);
    case 5: return rows_case5(t);
    case 6: return rows_case6(t);
    case 7: return rows_case7(t);
    default: return rows_case8(t);
  }
}

uint64_t to_u64(i128 v, const char* what) {
  if (v < 0)
    throw InvalidSpecError(std::string(what) +
                           " is negative: table hypotheses violated");
  if (v > i128(UINT64_MAX))
    throw BudgetExceededError(std::string(what) + " overflows 64 bits");
  return uint64_t(v);
}

}  // namespace

std::vector<std::pair<uint64_t, uint64_t>> table_rows(
    const DefiningSetSpec& spec) {
  if (!spec.proper_nonempty())
    throw InvalidSpecError(
        "row tables require L, M, N nonempty and proper in [m]");
  if (spec.m > 21)
    throw BudgetExceededError("table frequencies overflow past m = 21");
  std::map<i128, i128> merged;
  for (const Row& r : raw_rows(spec)) merged[r.w] += r.f;
  std::vector<std::pair<uint64_t, uint64_t>> out;
  for (auto& [w, f] : merged) {
    if (f == 0) continue;
    out.emplace_back(to_u64(w, "table weight"), to_u64(f, "table frequency"));
  }
  return out;
}

int advertised_weight_count(int case_index) {
  static constexpr int counts[9] = {0, 2, 4, 5, 4, 10, 8, 8, 16};
  if (case_index < 1 || case_index > 8)
    throw InvalidSpecError("case index out of range");
  return counts[case_index];
}

uint64_t table_code_size(const DefiningSetSpec& spec) {
  const Params t = make_params(spec);
  int e = 0;
  switch (spec.case_index()) {
    case 1: e = t.A + t.B + t.U; break;
    case 2: e = t.m + t.B + t.U; break;
    case 3: e = 2 * t.m + t.A; break;
    case 4: e = t.m + t.A + t.B; break;
    case 5: e = 3 * t.m; break;
    case 6: e = 2 * t.m + t.B; break;
    case 7: e = 2 * t.m + t.A; break;
    default: e = 3 * t.m; break;
  }
  return to_u64(p2(e), "code size");
}

MinimalityRule minimality_rule(const DefiningSetSpec& spec) {
  MinimalityRule rule;
  if (!spec.proper_nonempty()) {
    rule.detail = "hypotheses not met (L, M, N must be proper nonempty)";
    return rule;
  }
  const Params t = make_params(spec);
  auto [m, A, B, C, U, P, Q, R] = t;
  i128 w0 = 0, winf = 0;
  bool applicable = true, satisfied = false;
  std::string detail;
  switch (spec.case_index()) {
    case 1:
      w0 = p2(A + B + C);
      winf = 3 * p2(A + B + C - 1);
      satisfied = true;
      detail = "unconditional";
      break;
    case 2:
      w0 = P * p2(B + C);
      winf = 3 * p2(m + B + C - 1);
      // 2 w0 > w_inf reduces to 2^{m-1} > 2^{A+1}; at A = m-2 the ratio
      // is exactly 1/2 and the certificate fails.
      satisfied = A <= m - 3;
      detail = "|L| <= m-3";
      break;
    case 3:
      w0 = Q * p2(A + C);
      winf = 3 * p2(m + A + C - 1);
      satisfied = B <= m - 3;
      detail = "|M| <= m-3";
      break;
    case 4:
      w0 = R * p2(A + B);
      winf = p2(A + B - 1) * (3 * p2(m) - p2(C + 1));
      satisfied = C <= m - 2;
      detail = "|N| <= m-2";
      break;
    case 5:
      w0 = P * Q * p2(C);
      if (A <= B) {
        winf = 3 * P * p2(m + C - 1);
        satisfied = B <= m - 3;
        detail = "|L| <= |M| branch, |M| <= m-3";
      } else {
        winf = 3 * Q * p2(m + C - 1);
        satisfied = A <= m - 3;
        detail = "|L| >= |M|+1 branch, |L| <= m-3";
      }
      break;
    case 6:
      w0 = P * R * p2(B);
      if (C <= A + 1) {
        winf = 3 * R * p2(m + B - 1);
        satisfied = A <= m - 3;
        detail = "|N| <= |L|+1 branch, |L| <= m-3";
      } else if (!spec.M.covered_by(spec.N)) {
        winf = P * (3 * p2(m) - p2(C + 1)) * p2(B - 1);
        satisfied = C <= m - 2;
        detail = "|N| >= |L|+2, M not within N branch, |N| <= m-2";
      } else {
        applicable = false;
        detail = "no sub-row: |N| >= |L|+2 with M within N";
      }
      break;
    case 7:
      w0 = Q * R * p2(A);
      if (B <= m - 2 && C <= m - 2) {
        winf = Q * (3 * p2(m) - p2(C + 1)) * p2(A - 1) + R * p2(A + B - 1) -
               p2(A + B + C - 1);
        satisfied = true;
        detail = "unconditional (w_inf valid for |M|,|N| <= m-2)";
      } else {
        applicable = false;
        detail = "w_inf formula needs |M| <= m-2 and |N| <= m-2";
      }
      break;
    default: {
      w0 = P * Q * R;
      // Two sub-rows without a printed guard; as in the other two-row
      // patterns, the dominant w_inf candidate selects the sub-row.
      i128 w1 =
          P * Q * (3 * p2(m - 1) - p2(C)) + P * (p2(m) - p2(C + 1)) * p2(B - 1);
      i128 w2 = 3 * Q * R * p2(m - 1);
      bool cond1 = B <= m - 2 && C <= m - 2;
      bool cond2 = A <= m - 3;
      if (w1 == w2) {
        winf = w1;
        satisfied = cond1 || cond2;
        detail = "sub-rows tie, either condition";
      } else if (w1 > w2) {
        winf = w1;
        satisfied = cond1;
        detail = "first sub-row dominates, |M|,|N| <= m-2";
      } else {
        winf = w2;
        satisfied = cond2;
        detail = "second sub-row dominates, |L| <= m-3";
      }
      break;
    }
  }
  rule.applicable = applicable;
  rule.satisfied = applicable && satisfied;
  rule.detail = detail;
  if (applicable) {
    rule.w0 = to_u64(w0, "w0");
    rule.w_inf = to_u64(winf, "w_inf");
  }
  return rule;
}

}  // namespace simpcodes
