// Sparse exact polynomials in t, q, u over the integers.
//
// Terms are kept in lexicographic (t, q, u) exponent order with no explicit
// zero coefficients, so equal polynomials compare equal and every textual
// rendering is byte-deterministic. Values are plain value types and safe to
// share across threads once built.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "nestoh/errors.hpp"

namespace nestoh {

using Int = boost::multiprecision::cpp_int;

enum class Var { t, q, u };

enum class PolyFormat { plain, latex, json, csv };

struct Monomial {
  std::int64_t t = 0;
  std::int64_t q = 0;
  std::int64_t u = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long long constant);  // implicit: lets 0 and 1 read naturally

  static Polynomial term(const Monomial& m, Int coeff = 1);
  static Polynomial from_terms(
      std::initializer_list<std::pair<Monomial, long long>> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  Int coefficient(const Monomial& m) const;

  // Adds c * m, erasing the term if the coefficient cancels.
  void add_term(const Monomial& m, const Int& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  bool operator==(const Polynomial&) const = default;

  // Substitutes 1 for the given variable.
  Polynomial specialized(Var v) const;

  // t^d * p(1/t, 1/q, q*u): monomial (a, b, c) -> (d-a, c-b, c).
  // Throws exponent_underflow naming the first offending term.
  Polynomial reverse_transformed(std::int64_t d) const;

  // Coefficient symmetry t^i <-> t^(d-i). Throws not_univariate if any
  // q or u exponent is present.
  bool is_palindromic_in_t(std::int64_t d) const;

  // Terms whose t-exponent equals e, with t dropped.
  Polynomial t_coefficient(std::int64_t e) const;

  std::int64_t max_exponent(Var v) const;  // 0 for the zero polynomial

  Int evaluate(const Int& t0, const Int& q0, const Int& u0) const;

  std::string str(PolyFormat f = PolyFormat::plain) const;

 private:
  std::map<Monomial, Int> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace nestoh
