#pragma once

#include "btws/integer.hpp"

#include <iosfwd>
#include <map>
#include <vector>

namespace btws::freegroup {

// Integer Laurent polynomial in one variable t. Zero coefficients are never
// stored, so the zero polynomial has no terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Int c);  // NOLINT: constants convert implicitly
  LaurentPoly(int c) : LaurentPoly(Int(c)) {}

  static LaurentPoly monomial(Int c, long exponent);
  // coefficients[k] is the coefficient of t^(low + k).
  static LaurentPoly from_coefficients(std::vector<long> const& coefficients, long low = 0);

  std::map<long, Int> const& terms() const noexcept { return _terms; }

  bool is_zero() const noexcept { return _terms.empty(); }
  // Only meaningful for nonzero polynomials.
  long low_degree() const { return _terms.begin()->first; }
  long high_degree() const { return _terms.rbegin()->first; }
  Int  coefficient(long exponent) const;
  Int  leading_coefficient() const { return _terms.rbegin()->second; }

  void add_term(Int const& c, long exponent);

  LaurentPoly shifted(long k) const;  // multiply by t^k
  Int         evaluate(Int const& t) const;  // requires t = +-1 if negative exponents occur
  Int         content() const;

  // Canonical associate: lowest exponent 0, positive leading coefficient.
  LaurentPoly normalized() const;
  // Dense coefficient list from low_degree() up to high_degree().
  std::vector<Int> coefficients() const;

  LaurentPoly& operator+=(LaurentPoly const& other);
  LaurentPoly& operator-=(LaurentPoly const& other);
  LaurentPoly& operator*=(LaurentPoly const& other);

  bool operator==(LaurentPoly const&) const = default;

 private:
  std::map<long, Int> _terms;
};

LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b);
LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b);
LaurentPoly operator-(LaurentPoly const& a);
LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b);

// Exact quotient a / b in Z[t, 1/t]; throws std::domain_error when b does not
// divide a.
LaurentPoly exact_divide(LaurentPoly const& a, LaurentPoly const& b);

// Greatest common divisor up to units +-t^k, returned normalized. gcd(0, 0) = 0.
LaurentPoly gcd(LaurentPoly const& a, LaurentPoly const& b);

// Determinant of a square matrix of Laurent polynomials (Bareiss).
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m);

std::ostream& operator<<(std::ostream& os, LaurentPoly const& p);

}  // namespace btws::freegroup
