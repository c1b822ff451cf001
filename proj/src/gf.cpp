#include "utn/gf.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace utn {
namespace {

constexpr int kMaxTableOrder = 512;

// Dense polynomials over F_p as coefficient vectors, constant term first.
// Minimal helpers for modulus handling only; field arithmetic proper goes
// through the tables.

std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(c));
}

// Remainder of a modulo monic m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m,
                          int p) {
  a = poly_trim(std::move(a));
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int lead = a.back();
    for (int k = 0; k <= dm; ++k) {
      a[k + shift] = ((a[k + shift] - lead * m[k]) % p + p) % p;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

std::vector<int> poly_from_encoding(long long code, int p) {
  std::vector<int> c;
  while (code > 0) {
    c.push_back(static_cast<int>(code % p));
    code /= p;
  }
  return c;
}

bool poly_is_irreducible(const std::vector<int>& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  if (dm < 1 || m.back() != 1) return false;
  if (dm == 1) return true;
  // Trial division by every monic polynomial of degree 1..dm/2.
  for (int deg = 1; deg <= dm / 2; ++deg) {
    long long count = 1;
    for (int k = 0; k < deg; ++k) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> div = poly_from_encoding(code, p);
      div.resize(deg + 1, 0);
      div[deg] = 1;
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

// Default moduli for the most common small orders (verified irreducible at
// construction like any other modulus).  Constant term first.
std::vector<int> default_modulus(int p, int d) {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},     // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},  // x^3 + x + 1
      {{3, 2}, {1, 0, 1}},     // x^2 + 1
      {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
      {{5, 2}, {2, 0, 1}},     // x^2 + 2
      {{3, 3}, {1, 2, 0, 1}},  // x^3 + 2x + 1
  };
  auto it = table.find({p, d});
  if (it != table.end()) return it->second;
  // Search in increasing integer encoding of the non-leading coefficients.
  long long count = 1;
  for (int k = 0; k < d; ++k) count *= p;
  for (long long code = 0; code < count; ++code) {
    std::vector<int> m = poly_from_encoding(code, p);
    m.resize(d + 1, 0);
    m[d] = 1;
    if (poly_is_irreducible(m, p)) return m;
  }
  throw UsageError("no irreducible modulus found (unreachable for prime p)");
}

}  // namespace

bool is_prime(int m) {
  if (m < 2) return false;
  for (int k = 2; static_cast<long long>(k) * k <= m; ++k)
    if (m % k == 0) return false;
  return true;
}

std::pair<int, int> factor_prime_power(int q) {
  if (q < 2) throw UsageError("field order must be at least 2");
  int p = q;
  for (int k = 2; static_cast<long long>(k) * k <= q; ++k) {
    if (q % k == 0) {
      p = k;
      break;
    }
  }
  if (!is_prime(p)) throw UsageError(std::to_string(q) + " is not a prime power");
  int d = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++d;
  }
  if (rest != 1) throw UsageError(std::to_string(q) + " is not a prime power");
  return {p, d};
}

Field::Field(int p) : Field(p, 1) {}

Field::Field(int p, int d, std::vector<int> modulus) : p_(p), d_(d) {
  if (!is_prime(p)) throw UsageError("characteristic " + std::to_string(p) + " is not prime");
  if (d < 1) throw UsageError("extension degree must be positive");
  long long q = 1;
  for (int k = 0; k < d; ++k) {
    q *= p;
    if (q > kMaxTableOrder) {
      throw ResourceError("field order exceeds the table cap of " +
                          std::to_string(kMaxTableOrder));
    }
  }
  q_ = static_cast<int>(q);
  if (d_ == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = modulus.empty() ? default_modulus(p_, d_) : std::move(modulus);
    if (static_cast<int>(modulus_.size()) != d_ + 1 || modulus_.back() != 1) {
      throw UsageError("modulus must be monic of degree " + std::to_string(d_) +
                       " with constant term first");
    }
    for (int& c : modulus_) {
      c %= p_;
      if (c < 0) c += p_;
    }
    if (modulus_.back() != 1) throw UsageError("modulus must be monic");
    if (!poly_is_irreducible(modulus_, p_)) {
      throw ValidationError("modulus is reducible over F_" + std::to_string(p_));
    }
  }
  build_tables();
}

Field Field::of_order(int q) {
  auto [p, d] = factor_prime_power(q);
  return Field(p, d);
}

void Field::build_tables() {
  add_.assign(static_cast<size_t>(q_) * q_, 0);
  mul_.assign(static_cast<size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (fel a = 0; a < q_; ++a) {
    // Digit-wise negation and addition in base p.
    int na = 0, pw = 1, ra = a;
    for (int k = 0; k < d_; ++k) {
      na += ((p_ - ra % p_) % p_) * pw;
      ra /= p_;
      pw *= p_;
    }
    neg_[a] = na;
    for (fel b = 0; b < q_; ++b) {
      int s = 0;
      int xa = a, xb = b;
      pw = 1;
      for (int k = 0; k < d_; ++k) {
        s += ((xa % p_ + xb % p_) % p_) * pw;
        xa /= p_;
        xb /= p_;
        pw *= p_;
      }
      add_[a * q_ + b] = s;
    }
  }
  for (fel a = 0; a < q_; ++a) {
    std::vector<int> pa = poly_trim(coeffs(a));
    for (fel b = a; b < q_; ++b) {
      std::vector<int> pb = poly_trim(coeffs(b));
      std::vector<int> prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
      fel v = from_coeffs(prod);
      mul_[a * q_ + b] = v;
      mul_[b * q_ + a] = v;
    }
  }
  for (fel a = 1; a < q_; ++a) {
    for (fel b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
    assert(inv_[a] != 0 && "every nonzero element must be invertible");
  }
}

fel Field::gen() const {
  if (d_ < 2) throw UsageError("prime field has no designated generator t");
  return p_;
}

fel Field::inv(fel a) const {
  check(a);
  if (a == 0) throw UsageError("division by zero in F_" + std::to_string(q_));
  return inv_[a];
}

fel Field::pow(fel a, long long e) const {
  check(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  fel r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

fel Field::from_int(long long c) const {
  long long r = c % p_;
  if (r < 0) r += p_;
  return static_cast<fel>(r);
}

std::vector<int> Field::coeffs(fel a) const {
  check(a);
  std::vector<int> c(d_, 0);
  for (int k = 0; k < d_; ++k) {
    c[k] = a % p_;
    a /= p_;
  }
  return c;
}

fel Field::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > d_) {
    throw UsageError("coefficient vector longer than extension degree");
  }
  fel a = 0;
  int pw = 1;
  for (int k = 0; k < d_; ++k) {
    int digit = k < static_cast<int>(c.size()) ? ((c[k] % p_) + p_) % p_ : 0;
    a += digit * pw;
    pw *= p_;
  }
  return a;
}

std::string Field::to_string(fel a) const {
  check(a);
  if (d_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::ostringstream os;
  auto c = coeffs(a);
  bool first = true;
  for (int k = d_ - 1; k >= 0; --k) {
    if (c[k] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << c[k];
    } else {
      if (c[k] != 1) os << c[k];
      os << 't';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

void Field::check(fel a) const {
  if (a < 0 || a >= q_) {
    throw UsageError("value " + std::to_string(a) + " is not an element of F_" +
                     std::to_string(q_));
  }
}

}  // namespace utn
