#include "btws/laurent.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace btws::freegroup {

LaurentPoly::LaurentPoly(Int c) {
  if (c != 0) {
    _terms.emplace(0, std::move(c));
  }
}

LaurentPoly LaurentPoly::monomial(Int c, long exponent) {
  LaurentPoly p;
  p.add_term(c, exponent);
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::vector<long> const& coefficients, long low) {
  LaurentPoly p;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    p.add_term(coefficients[k], low + static_cast<long>(k));
  }
  return p;
}

Int LaurentPoly::coefficient(long exponent) const {
  auto it = _terms.find(exponent);
  return it == _terms.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(Int const& c, long exponent) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = _terms.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      _terms.erase(it);
    }
  }
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly p;
  for (auto const& [e, c] : _terms) {
    p._terms.emplace_hint(p._terms.end(), e + k, c);
  }
  return p;
}

Int LaurentPoly::evaluate(Int const& t) const {
  Int result = 0;
  for (auto const& [e, c] : _terms) {
    if (e < 0 && abs(t) != 1) {
      throw std::domain_error("LaurentPoly::evaluate: negative exponent at |t| != 1");
    }
    // t^-k == t^k when t = +-1
    result += c * boost::multiprecision::pow(t, static_cast<unsigned>(e < 0 ? -e : e));
  }
  return result;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (auto const& [e, c] : _terms) {
    g = btws::gcd(g, c);
  }
  return g;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) {
    return {};
  }
  LaurentPoly p = shifted(-low_degree());
  if (p.leading_coefficient() < 0) {
    p = -p;
  }
  return p;
}

std::vector<Int> LaurentPoly::coefficients() const {
  if (is_zero()) {
    return {};
  }
  std::vector<Int> out(static_cast<std::size_t>(high_degree() - low_degree() + 1));
  for (auto const& [e, c] : _terms) {
    out[static_cast<std::size_t>(e - low_degree())] = c;
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& other) {
  for (auto const& [e, c] : other._terms) {
    add_term(c, e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& other) {
  for (auto const& [e, c] : other._terms) {
    add_term(-c, e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(LaurentPoly const& other) {
  LaurentPoly product;
  for (auto const& [ea, ca] : _terms) {
    for (auto const& [eb, cb] : other._terms) {
      product.add_term(ca * cb, ea + eb);
    }
  }
  *this = std::move(product);
  return *this;
}

LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) { return a -= b; }
LaurentPoly operator-(LaurentPoly const& a) { return LaurentPoly() - a; }
LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
  LaurentPoly p = a;
  return p *= b;
}

LaurentPoly exact_divide(LaurentPoly const& a, LaurentPoly const& b) {
  if (b.is_zero()) {
    throw std::domain_error("exact_divide: division by zero");
  }
  if (a.is_zero()) {
    return {};
  }
  // t is a unit, so it suffices to divide the shifted polynomials in Z[t].
  LaurentPoly       r  = a.shifted(-a.low_degree());
  LaurentPoly const d  = b.shifted(-b.low_degree());
  long const        dd = d.high_degree();
  Int const&        lc = d.leading_coefficient();
  LaurentPoly       q;
  while (!r.is_zero()) {
    long const shift = r.high_degree() - dd;
    if (shift < 0 || r.leading_coefficient() % lc != 0) {
      throw std::domain_error("exact_divide: not divisible");
    }
    LaurentPoly term = LaurentPoly::monomial(r.leading_coefficient() / lc, shift);
    r -= term * d;
    q += term;
  }
  return q.shifted(a.low_degree() - b.low_degree());
}

namespace {

  LaurentPoly primitive_part(LaurentPoly const& p) {
    Int const   c = p.content();
    LaurentPoly out;
    for (auto const& [e, v] : p.terms()) {
      out.add_term(v / c, e);
    }
    return out;
  }

  // Pseudo-remainder of polynomials with low degree 0.
  LaurentPoly pseudo_remainder(LaurentPoly a, LaurentPoly const& b) {
    long const db = b.high_degree();
    Int const& lb = b.leading_coefficient();
    while (!a.is_zero() && a.high_degree() >= db) {
      LaurentPoly term = LaurentPoly::monomial(a.leading_coefficient(), a.high_degree() - db);
      a *= LaurentPoly(lb);
      a -= term * b;
    }
    return a;
  }

}  // namespace

LaurentPoly gcd(LaurentPoly const& a, LaurentPoly const& b) {
  if (a.is_zero()) {
    return b.normalized();
  }
  if (b.is_zero()) {
    return a.normalized();
  }
  Int const   g = btws::gcd(a.content(), b.content());
  LaurentPoly x = primitive_part(a.normalized());
  LaurentPoly y = primitive_part(b.normalized());
  if (x.high_degree() < y.high_degree()) {
    std::swap(x, y);
  }
  while (!y.is_zero()) {
    LaurentPoly r = pseudo_remainder(x, y);
    x             = std::move(y);
    y             = r.is_zero() ? LaurentPoly() : primitive_part(r.normalized());
  }
  return (LaurentPoly(g) * x).normalized();
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  std::size_t const n = m.size();
  if (n == 0) {
    return LaurentPoly(1);
  }
  for (auto const& row : m) {
    if (row.size() != n) {
      throw std::invalid_argument("determinant: matrix is not square");
    }
  }
  int         sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) {
        ++p;
      }
      if (p == n) {
        return {};
      }
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::ostream& operator<<(std::ostream& os, LaurentPoly const& p) {
  if (p.is_zero()) {
    return os << '0';
  }
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto const& [e, c] = *it;
    Int const   mag    = abs(c);
    if (first) {
      os << (c < 0 ? "-" : "");
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) {
      os << mag;
    }
    if (e != 0) {
      os << 't';
      if (e != 1) {
        os << '^' << e;
      }
    }
  }
  return os;
}

}  // namespace btws::freegroup
