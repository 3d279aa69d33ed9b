// Closed-form h-polynomials for named families, plus comparison of each
// closed form against the enumeration engine. Where a closed form is known
// to be wrong beyond q=1, a rank-exact variant is provided alongside the
// original so the disagreement itself can be machine-checked.
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "nestoh/polynomial.hpp"

namespace nestoh {

// Double sum over (n-k+1)-subsets A and permutations of A, with the
// correction count c = #{j outside A : j > first letter}.
Polynomial snk_closed_form(int n, int k);

// Coefficientwise check of h(t,q) = t^(n-1) q^E h(1/t, 1/q) with
// E = (k^2 - 2kn - k + n^2 + 3n - 2) / 2.
bool snk_palindromicity_check(int n, int k);

// Words over {1..n} with distinct letters, the empty word included,
// streamed by length and then lexicographically.
void for_each_partial_permutation(
    int n, const std::function<void(std::span<const int>)>& fn);
std::vector<std::vector<int>> partial_permutations(int n);

// 1 + sum over nonempty words of t^(des+1) q^(maj+2des+2).
Polynomial stellohedron_closed_form(int n);
// Same, except full-length words contribute q^(maj+des+1).
Polynomial stellohedron_rank_exact(int n);

// sum_{l=0}^{n-2} C(n-2,l) t^l q^((l^2+3l+2)/2) (t + q^l), n >= 2.
Polynomial stanley_pitman_closed_form(int n);
// (1 + tq) * sum_{l=0}^{n-2} C(n-2,l) t^l q^(l(l+3)/2), n >= 2.
Polynomial stanley_pitman_rank_exact(int n);

enum class FormulaFamily {
  snk,
  stellohedron_printed,
  stellohedron_rank_exact,
  stanley_pitman_printed,
  stanley_pitman_rank_exact,
};

std::string_view formula_family_name(FormulaFamily f);

struct FormulaReport {
  std::string family;
  int n = 0;
  std::optional<int> k;
  Polynomial formula;
  Polynomial oracle;
  bool agree = false;
  bool q1_agree = false;
  std::optional<Monomial> first_difference;  // smallest disagreeing monomial
};

// Evaluates the closed form and the B-tree enumeration of the matching
// building set, and reports where they first differ (if anywhere).
FormulaReport compare_with_oracle(FormulaFamily f, int n, int k = 0);

std::string to_json(const FormulaReport& report);

}  // namespace nestoh
