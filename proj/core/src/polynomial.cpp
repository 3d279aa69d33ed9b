#include "nestoh/polynomial.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace nestoh {

const char* errc_name(errc c) {
  switch (c) {
    case errc::exponent_underflow: return "ExponentUnderflow";
    case errc::not_univariate: return "NotUnivariate";
    case errc::not_tree_poset: return "NotTreePoset";
    case errc::missing_singleton: return "MissingSingleton";
    case errc::union_closure_violation: return "UnionClosureViolation";
    case errc::overlapping_supports: return "OverlappingSupports";
    case errc::not_connected: return "NotConnected";
    case errc::not_omega_invariant: return "NotOmegaInvariant";
    case errc::not_maximal: return "NotMaximal";
    case errc::bad_params: return "BadParams";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Polynomial::Polynomial(long long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Int(constant));
}

Polynomial Polynomial::term(const Monomial& m, Int coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace(m, std::move(coeff));
  return p;
}

Polynomial Polynomial::from_terms(
    std::initializer_list<std::pair<Monomial, long long>> terms) {
  Polynomial p;
  for (const auto& [m, c] : terms) p.add_term(m, Int(c));
  return p;
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_)
      out.add_term({ma.t + mb.t, ma.q + mb.q, ma.u + mb.u}, ca * cb);
  return out;
}

Polynomial Polynomial::specialized(Var v) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    switch (v) {
      case Var::t: s.t = 0; break;
      case Var::q: s.q = 0; break;
      case Var::u: s.u = 0; break;
    }
    out.add_term(s, c);
  }
  return out;
}

Polynomial Polynomial::reverse_transformed(std::int64_t d) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.t > d || m.q > m.u) {
      std::ostringstream msg;
      msg << "term t^" << m.t << " q^" << m.q << " u^" << m.u
          << " cannot be reversed with d=" << d;
      throw error(errc::exponent_underflow, msg.str());
    }
    out.add_term({d - m.t, m.u - m.q, m.u}, c);
  }
  return out;
}

bool Polynomial::is_palindromic_in_t(std::int64_t d) const {
  for (const auto& [m, c] : terms_)
    if (m.q != 0 || m.u != 0)
      throw error(errc::not_univariate,
                  "palindromicity in t is defined for polynomials in t alone");
  for (const auto& [m, c] : terms_) {
    if (m.t > d) return false;
    if (coefficient({d - m.t, 0, 0}) != c) return false;
  }
  return true;
}

Polynomial Polynomial::t_coefficient(std::int64_t e) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m.t == e) out.add_term({0, m.q, m.u}, c);
  return out;
}

std::int64_t Polynomial::max_exponent(Var v) const {
  std::int64_t best = 0;
  for (const auto& [m, c] : terms_) {
    std::int64_t e = v == Var::t ? m.t : v == Var::q ? m.q : m.u;
    if (e > best) best = e;
  }
  return best;
}

namespace {

Int int_pow(const Int& base, std::int64_t e) {
  Int out = 1;
  Int b = base;
  for (std::int64_t k = e; k > 0; k >>= 1) {
    if (k & 1) out *= b;
    if (k > 1) b *= b;
  }
  return out;
}

void append_plain_term(std::ostringstream& os, const Monomial& m, const Int& c) {
  Int mag = c < 0 ? Int(-c) : c;
  bool has_var = m.t || m.q || m.u;
  if (!has_var || mag != 1) {
    os << mag.str();
    if (has_var) os << "*";
  }
  const char* sep = "";
  auto var = [&](const char* name, std::int64_t e) {
    if (e == 0) return;
    os << sep << name;
    if (e > 1) os << "^" << e;
    sep = "*";
  };
  var("t", m.t);
  var("q", m.q);
  var("u", m.u);
}

void append_latex_term(std::ostringstream& os, const Monomial& m, const Int& c) {
  Int mag = c < 0 ? Int(-c) : c;
  bool has_var = m.t || m.q || m.u;
  if (!has_var || mag != 1) os << mag.str();
  auto var = [&](const char* name, std::int64_t e) {
    if (e == 0) return;
    os << name;
    if (e > 1) os << "^{" << e << "}";
  };
  var("t", m.t);
  var("q", m.q);
  var("u", m.u);
}

}  // namespace

Int Polynomial::evaluate(const Int& t0, const Int& q0, const Int& u0) const {
  Int out = 0;
  for (const auto& [m, c] : terms_)
    out += c * int_pow(t0, m.t) * int_pow(q0, m.q) * int_pow(u0, m.u);
  return out;
}

std::string Polynomial::str(PolyFormat f) const {
  std::ostringstream os;
  switch (f) {
    case PolyFormat::plain:
    case PolyFormat::latex: {
      if (terms_.empty()) return "0";
      bool first = true;
      for (const auto& [m, c] : terms_) {
        if (first)
          os << (c < 0 ? "-" : "");
        else
          os << (c < 0 ? " - " : " + ");
        if (f == PolyFormat::plain)
          append_plain_term(os, m, c);
        else
          append_latex_term(os, m, c);
        first = false;
      }
      return os.str();
    }
    case PolyFormat::json: {
      os << "{\"terms\":[";
      bool first = true;
      for (const auto& [m, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "{\"t\":" << m.t << ",\"q\":" << m.q << ",\"u\":" << m.u
           << ",\"coeff\":";
        // Coefficients beyond the integer range of common JSON readers are
        // emitted as decimal strings.
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max())
          os << c.str();
        else
          os << '"' << c.str() << '"';
        os << "}";
      }
      os << "]}";
      return os.str();
    }
    case PolyFormat::csv: {
      os << "t,q,u,coeff";
      for (const auto& [m, c] : terms_)
        os << "\n" << m.t << "," << m.q << "," << m.u << "," << c.str();
      return os.str();
    }
  }
  return "";
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.str();
}

}  // namespace nestoh
