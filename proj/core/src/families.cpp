#include "nestoh/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nestoh/btrees.hpp"
#include "nestoh/posets.hpp"

namespace nestoh {

namespace {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (int j = 0; j < k; ++j) out = out * (n - j) / (j + 1);
  return out;
}

// Subsets of {1..n} of size m in colexicographic order.
void for_each_colex_subset(int n, int m,
                           const std::function<void(std::span<const int>)>& fn) {
  if (m == 0) {
    fn({});
    return;
  }
  std::vector<int> a(m);
  std::iota(a.begin(), a.end(), 1);
  for (;;) {
    fn(a);
    int i = 0;
    while (i < m) {
      int limit = i + 1 < m ? a[i + 1] - 1 : n;
      if (a[i] < limit) break;
      ++i;
    }
    if (i == m) return;
    ++a[i];
    std::iota(a.begin(), a.begin() + i, 1);
  }
}

}  // namespace

Polynomial snk_closed_form(int n, int k) {
  if (n < 2 || k < 2 || k > n)
    throw error(errc::bad_params, "snk closed form requires 2 <= k <= n");
  Polynomial out;
  int m = n - k + 1;
  for_each_colex_subset(n, m, [&](std::span<const int> a) {
    std::uint64_t in_a = 0;
    for (int e : a) in_a |= std::uint64_t(1) << (e - 1);
    std::vector<int> word(a.begin(), a.end());  // already ascending
    do {
      PermStats s = perm_stats(word);
      int c = 0;
      for (int j = 1; j <= n; ++j)
        if (!(in_a >> (j - 1) & 1) && j > word[0]) ++c;
      out.add_term({s.des + c, s.maj + s.des + c, 0}, 1);
    } while (std::next_permutation(word.begin(), word.end()));
  });
  return out;
}

bool snk_palindromicity_check(int n, int k) {
  Polynomial h = snk_closed_form(n, k);
  std::int64_t e =
      (std::int64_t(k) * k - 2 * std::int64_t(k) * n - k +
       std::int64_t(n) * n + 3 * n - 2) /
      2;
  for (const auto& [m, c] : h.terms()) {
    std::int64_t rt = n - 1 - m.t;
    std::int64_t rq = e - m.q;
    if (rt < 0 || rq < 0) return false;
    if (h.coefficient({rt, rq, 0}) != c) return false;
  }
  return true;
}

void for_each_partial_permutation(
    int n, const std::function<void(std::span<const int>)>& fn) {
  if (n < 0) throw error(errc::bad_params, "negative length");
  std::vector<int> word;
  std::vector<char> used(n + 1, 0);
  fn({});
  // Stream by length, then lexicographically within a length.
  std::function<void(int)> emit_len = [&](int target) {
    if (static_cast<int>(word.size()) == target) {
      fn(word);
      return;
    }
    for (int e = 1; e <= n; ++e) {
      if (used[e]) continue;
      used[e] = 1;
      word.push_back(e);
      emit_len(target);
      word.pop_back();
      used[e] = 0;
    }
  };
  for (int len = 1; len <= n; ++len) emit_len(len);
}

std::vector<std::vector<int>> partial_permutations(int n) {
  std::vector<std::vector<int>> out;
  for_each_partial_permutation(n, [&](std::span<const int> w) {
    out.emplace_back(w.begin(), w.end());
  });
  return out;
}

namespace {

Polynomial stellohedron_sum(int n, bool rank_exact) {
  if (n < 1) throw error(errc::bad_params, "stellohedron requires n >= 1");
  Polynomial out = 1;
  for_each_partial_permutation(n, [&](std::span<const int> w) {
    if (w.empty()) return;
    PermStats s = perm_stats(w);
    std::int64_t qexp = rank_exact && static_cast<int>(w.size()) == n
                            ? s.maj + s.des + 1
                            : s.maj + 2 * s.des + 2;
    out.add_term({s.des + 1, qexp, 0}, 1);
  });
  return out;
}

}  // namespace

Polynomial stellohedron_closed_form(int n) { return stellohedron_sum(n, false); }

Polynomial stellohedron_rank_exact(int n) { return stellohedron_sum(n, true); }

Polynomial stanley_pitman_closed_form(int n) {
  if (n < 2) throw error(errc::bad_params, "stanley_pitman closed form requires n >= 2");
  Polynomial out;
  for (std::int64_t l = 0; l <= n - 2; ++l) {
    Int c = binomial(n - 2, static_cast<int>(l));
    std::int64_t base = (l * l + 3 * l + 2) / 2;
    out.add_term({l + 1, base, 0}, c);
    out.add_term({l, base + l, 0}, c);
  }
  return out;
}

Polynomial stanley_pitman_rank_exact(int n) {
  if (n < 2) throw error(errc::bad_params, "stanley_pitman rank-exact form requires n >= 2");
  Polynomial sum;
  for (std::int64_t l = 0; l <= n - 2; ++l)
    sum.add_term({l, l * (l + 3) / 2, 0}, binomial(n - 2, static_cast<int>(l)));
  return sum * Polynomial::from_terms({{{0, 0, 0}, 1}, {{1, 1, 0}, 1}});
}

std::string_view formula_family_name(FormulaFamily f) {
  switch (f) {
    case FormulaFamily::snk: return "snk";
    case FormulaFamily::stellohedron_printed: return "stellohedron_printed";
    case FormulaFamily::stellohedron_rank_exact: return "stellohedron_rank_exact";
    case FormulaFamily::stanley_pitman_printed: return "stanley_pitman_printed";
    case FormulaFamily::stanley_pitman_rank_exact:
      return "stanley_pitman_rank_exact";
  }
  return "unknown";
}

FormulaReport compare_with_oracle(FormulaFamily f, int n, int k) {
  FormulaReport r;
  r.family = formula_family_name(f);
  r.n = n;
  BuildingSet b = BuildingSet::simplex(1);
  switch (f) {
    case FormulaFamily::snk:
      r.k = k;
      r.formula = snk_closed_form(n, k);
      b = BuildingSet::snk(n, k);
      break;
    case FormulaFamily::stellohedron_printed:
      r.formula = stellohedron_closed_form(n);
      b = BuildingSet::star(n);
      break;
    case FormulaFamily::stellohedron_rank_exact:
      r.formula = stellohedron_rank_exact(n);
      b = BuildingSet::star(n);
      break;
    case FormulaFamily::stanley_pitman_printed:
      r.formula = stanley_pitman_closed_form(n);
      b = BuildingSet::stanley_pitman(n);
      break;
    case FormulaFamily::stanley_pitman_rank_exact:
      r.formula = stanley_pitman_rank_exact(n);
      b = BuildingSet::stanley_pitman(n);
      break;
  }
  r.oracle = h_polynomial(b, HVars::tq);
  r.agree = r.formula == r.oracle;
  r.q1_agree = r.formula.specialized(Var::q) == r.oracle.specialized(Var::q);
  if (!r.agree) {
    Polynomial diff = r.formula - r.oracle;
    r.first_difference = diff.terms().begin()->first;
  }
  return r;
}

std::string to_json(const FormulaReport& r) {
  std::ostringstream os;
  os << "{\"family\":\"" << r.family << "\",\"params\":{\"n\":" << r.n;
  if (r.k) os << ",\"k\":" << *r.k;
  os << "},\"agree\":" << (r.agree ? "true" : "false")
     << ",\"q1_agree\":" << (r.q1_agree ? "true" : "false")
     << ",\"first_difference\":";
  if (r.first_difference)
    os << "{\"t\":" << r.first_difference->t << ",\"q\":" << r.first_difference->q
       << ",\"u\":" << r.first_difference->u << "}";
  else
    os << "null";
  os << ",\"formula\":" << r.formula.str(PolyFormat::json)
     << ",\"oracle\":" << r.oracle.str(PolyFormat::json) << "}";
  return os.str();
}

}  // namespace nestoh
