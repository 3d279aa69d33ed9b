#include <doctest.h>

#include <sstream>

#include "nestoh/polynomial.hpp"
#include "support/random_gen.hpp"

using namespace nestoh;

namespace {

Polynomial random_poly(testsupport::SplitMix64& rng) {
  Polynomial p;
  int terms = rng.uniform(0, 6);
  for (int i = 0; i < terms; ++i)
    p.add_term({rng.uniform(0, 4), rng.uniform(0, 4), rng.uniform(0, 3)},
               rng.uniform(-5, 5));
  return p;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("monomials order lexicographically by (t, q, u)") {
  CHECK(Monomial{0, 0, 0} < Monomial{0, 0, 1});
  CHECK(Monomial{0, 5, 9} < Monomial{1, 0, 0});
  CHECK(Monomial{1, 1, 0} < Monomial{1, 2, 0});
  CHECK(Monomial{2, 0, 0} == Monomial{2, 0, 0});
}

TEST_CASE("constants and term construction") {
  Polynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero == Polynomial(0));
  Polynomial one = 1;
  CHECK(one.term_count() == 1);
  CHECK(one.coefficient({0, 0, 0}) == 1);
  Polynomial t2q = Polynomial::term({2, 1, 0}, 3);
  CHECK(t2q.coefficient({2, 1, 0}) == 3);
  CHECK(t2q.coefficient({1, 2, 0}) == 0);
}

TEST_CASE("add_term cancels to zero") {
  Polynomial p = Polynomial::term({1, 1, 0}, 2);
  p.add_term({1, 1, 0}, -2);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
}

TEST_CASE("arithmetic agrees with hand computation") {
  Polynomial a = Polynomial::from_terms({{{0, 0, 0}, 1}, {{1, 1, 0}, 1}});
  Polynomial b = Polynomial::from_terms({{{0, 0, 0}, 1}, {{1, 2, 0}, 1}});
  CHECK(a + b == Polynomial::from_terms(
                     {{{0, 0, 0}, 2}, {{1, 1, 0}, 1}, {{1, 2, 0}, 1}}));
  CHECK(a * b ==
        Polynomial::from_terms({{{0, 0, 0}, 1},
                                {{1, 1, 0}, 1},
                                {{1, 2, 0}, 1},
                                {{2, 3, 0}, 1}}));
  CHECK(a - a == Polynomial(0));
}

TEST_CASE("ring axioms on seeded random polynomials") {
  testsupport::SplitMix64 rng(0xabcdef12345ull);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Polynomial(0) == a);
    CHECK(a * Polynomial(1) == a);
    CHECK(a * Polynomial(0) == Polynomial(0));
  }
}

TEST_CASE("specialization is a ring homomorphism") {
  testsupport::SplitMix64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng);
    for (Var v : {Var::t, Var::q, Var::u}) {
      CHECK((a * b).specialized(v) == a.specialized(v) * b.specialized(v));
      CHECK((a + b).specialized(v) == a.specialized(v) + b.specialized(v));
    }
  }
}

TEST_CASE("evaluation matches specialization at numeric points") {
  testsupport::SplitMix64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = random_poly(rng);
    Int coeff_sum = 0;
    for (const auto& [m, c] : a.terms()) coeff_sum += c;
    CHECK(a.evaluate(1, 1, 1) == coeff_sum);
    Polynomial fully =
        a.specialized(Var::t).specialized(Var::q).specialized(Var::u);
    if (coeff_sum == 0)
      CHECK(fully.is_zero());
    else
      CHECK(fully == Polynomial::term({0, 0, 0}, coeff_sum));
  }
  Polynomial p = Polynomial::from_terms({{{2, 0, 0}, 1}, {{0, 1, 1}, -3}});
  CHECK(p.evaluate(5, 2, 7) == 25 - 3 * 2 * 7);
}

TEST_CASE("reverse transform maps (a,b,c) to (d-a, c-b, c)") {
  Polynomial p = Polynomial::from_terms({{{0, 0, 2}, 1}, {{1, 1, 2}, 4}});
  Polynomial r = p.reverse_transformed(3);
  CHECK(r == Polynomial::from_terms({{{3, 2, 2}, 1}, {{2, 1, 2}, 4}}));
  CHECK(r.reverse_transformed(3) == p);
}

TEST_CASE("reverse transform is an involution on random inputs") {
  testsupport::SplitMix64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p;
    int terms = rng.uniform(1, 5);
    for (int i = 0; i < terms; ++i) {
      int u = rng.uniform(0, 4);
      p.add_term({rng.uniform(0, 6), rng.uniform(0, u), u}, rng.uniform(1, 9));
    }
    CHECK(p.reverse_transformed(6).reverse_transformed(6) == p);
  }
}

TEST_CASE("reverse transform rejects exponent underflow") {
  Polynomial p = Polynomial::term({4, 0, 0});
  CHECK_THROWS_AS(p.reverse_transformed(3), error);
  try {
    p.reverse_transformed(3);
  } catch (const error& e) {
    CHECK(e.code() == errc::exponent_underflow);
    CHECK(std::string(e.what()).find("t^4") != std::string::npos);
  }
  Polynomial q = Polynomial::term({0, 3, 1});  // q exponent above u exponent
  CHECK_THROWS_AS(q.reverse_transformed(2), error);
}

TEST_CASE("palindromicity in t") {
  Polynomial p = Polynomial::from_terms(
      {{{0, 0, 0}, 1}, {{1, 0, 0}, 3}, {{2, 0, 0}, 1}});
  CHECK(p.is_palindromic_in_t(2));
  CHECK_FALSE(p.is_palindromic_in_t(3));
  Polynomial skew = Polynomial::from_terms({{{0, 0, 0}, 1}, {{1, 0, 0}, 2}});
  CHECK_FALSE(skew.is_palindromic_in_t(1));
  Polynomial bivariate = Polynomial::term({1, 1, 0});
  CHECK_THROWS_AS(bivariate.is_palindromic_in_t(2), error);
}

TEST_CASE("t_coefficient extracts a row") {
  Polynomial p = Polynomial::from_terms(
      {{{0, 0, 0}, 1}, {{1, 1, 0}, 2}, {{1, 2, 0}, 1}, {{2, 3, 0}, 1}});
  CHECK(p.t_coefficient(1) ==
        Polynomial::from_terms({{{0, 1, 0}, 2}, {{0, 2, 0}, 1}}));
  CHECK(p.t_coefficient(5) == Polynomial(0));
}

TEST_CASE("max_exponent per variable") {
  Polynomial p = Polynomial::from_terms({{{1, 4, 0}, 1}, {{3, 0, 2}, 1}});
  CHECK(p.max_exponent(Var::t) == 3);
  CHECK(p.max_exponent(Var::q) == 4);
  CHECK(p.max_exponent(Var::u) == 2);
  CHECK(Polynomial(0).max_exponent(Var::t) == 0);
}

TEST_CASE("plain rendering is canonical") {
  Polynomial p = Polynomial::from_terms(
      {{{0, 0, 0}, 1}, {{1, 1, 0}, 2}, {{1, 2, 0}, 1}, {{2, 3, 0}, 1}});
  CHECK(p.str() == "1 + 2*t*q + t*q^2 + t^2*q^3");
  CHECK(Polynomial(0).str() == "0");
  CHECK(Polynomial::term({0, 0, 0}, -2).str() == "-2");
  Polynomial m = Polynomial::from_terms({{{1, 0, 0}, 1}, {{0, 1, 0}, -1}});
  CHECK(m.str() == "-q + t");
  std::ostringstream os;
  os << p;
  CHECK(os.str() == p.str());
}

TEST_CASE("latex, json and csv renderings") {
  Polynomial p = Polynomial::from_terms({{{2, 3, 0}, 1}, {{0, 0, 0}, 1}});
  CHECK(p.str(PolyFormat::latex) == "1 + t^{2}q^{3}");
  CHECK(p.str(PolyFormat::json) ==
        "{\"terms\":[{\"t\":0,\"q\":0,\"u\":0,\"coeff\":1},"
        "{\"t\":2,\"q\":3,\"u\":0,\"coeff\":1}]}");
  CHECK(p.str(PolyFormat::csv) == "t,q,u,coeff\n0,0,0,1\n2,3,0,1");
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  Polynomial p = Polynomial::term({0, 0, 0}, 1);
  Polynomial big = Polynomial::term({0, 0, 0}, Int(1) << 100);
  Polynomial prod = big * big;
  CHECK(prod.coefficient({0, 0, 0}) == Int(1) << 200);
  CHECK(prod.str(PolyFormat::json).find("\"coeff\":\"") != std::string::npos);
  CHECK(p.str(PolyFormat::json).find("\"coeff\":1") != std::string::npos);
}

}  // TEST_SUITE
