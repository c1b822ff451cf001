#pragma once

// Dense univariate polynomials with exact arbitrary-precision integer
// coefficients.  Just enough algebra for the counting formulas: ring
// operations, powers, evaluation, and the variable shift x -> x+1 used to
// re-express counts in r = p-1 (or r = q-1).  No division is ever needed.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace utn {

using BigInt = boost::multiprecision::cpp_int;

class IntPoly {
 public:
  IntPoly() = default;  // zero
  explicit IntPoly(BigInt constant);
  /// Coefficients in ascending degree order; trailing zeros are trimmed.
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly variable();  // x
  static IntPoly monomial(int degree, BigInt coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k (zero beyond the degree).
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const BigInt& c) const;
  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly pow(int e) const;
  BigInt eval(const BigInt& x) const;
  /// The polynomial q(y) with q(y) = p(y + delta).
  IntPoly shift(const BigInt& delta) const;

  /// Renders in descending powers with the given variable name, e.g.
  /// "r^4+7r^3+19r^2+25r+19"; the zero polynomial renders as "0".
  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;  // ascending degree; empty means zero
};

/// Binomial coefficient, exact.
BigInt binomial(int n, int k);

}  // namespace utn
