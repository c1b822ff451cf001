#include "utn/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace utn {

IntPoly::IntPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::variable() { return monomial(1); }

IntPoly IntPoly::monomial(int degree, BigInt coeff) {
  IntPoly p;
  if (coeff != 0) {
    p.coeffs_.assign(degree + 1, 0);
    p.coeffs_[degree] = std::move(coeff);
  }
  return p;
}

const BigInt& IntPoly::coeff(int k) const {
  static const BigInt zero = 0;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[k];
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  r += o;
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r = *this;
  r -= o;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(c));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly IntPoly::operator*(const BigInt& c) const {
  std::vector<BigInt> out = coeffs_;
  for (BigInt& x : out) x *= c;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const { return *this * BigInt(-1); }

IntPoly IntPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("IntPoly::pow: negative exponent");
  IntPoly r(BigInt(1));
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

IntPoly IntPoly::shift(const BigInt& delta) const {
  // Horner in the shifted variable: p(y+delta) built from the top down.
  IntPoly acc;
  IntPoly lin(std::vector<BigInt>{delta, 1});  // y + delta
  for (size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * lin + IntPoly(coeffs_[k]);
  }
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    if (k == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str();
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace utn
