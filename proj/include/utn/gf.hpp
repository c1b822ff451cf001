#pragma once

// Finite-field arithmetic F_{p^d} with table-based multiplication.
//
// Elements are encoded as integers 0..q-1: the element with polynomial
// representative c_0 + c_1 x + ... + c_{d-1} x^{d-1} over F_p is encoded as
// c_0 + c_1 p + ... + c_{d-1} p^{d-1} (constant digit first).  Under this
// encoding 0 and 1 are the additive and multiplicative identities and, for
// d > 1, the integer p encodes the residue of x, written t in documentation.
//
// Arithmetic is realised with full q-by-q add/mul tables plus an inverse
// table, built once at construction; construction is refused above the
// desk-scale cap q <= 512.

#include <string>
#include <vector>

#include "utn/common.hpp"

namespace utn {

/// Field element encoding (0..q-1).  Plain int keeps call sites simple.
using fel = int;

class Field {
 public:
  /// Prime field F_p.
  explicit Field(int p);

  /// F_{p^d}.  `modulus`, if given, lists the coefficients of a monic
  /// irreducible degree-d polynomial over F_p, constant term first
  /// (size d+1, last entry 1).  Without it a default modulus is used for
  /// common small orders, otherwise the lexicographically smallest monic
  /// irreducible (by integer encoding of the non-leading coefficients)
  /// is found by search.  The modulus is verified irreducible either way.
  Field(int p, int d, std::vector<int> modulus = {});

  /// Factors q as p^d and delegates; rejects non-prime-powers.
  static Field of_order(int q);

  int p() const { return p_; }
  int d() const { return d_; }
  int q() const { return q_; }
  bool is_prime_field() const { return d_ == 1; }

  /// Modulus coefficients, constant term first (size d+1); for d == 1
  /// returns {0, 1} (the polynomial x, a convenient placeholder).
  const std::vector<int>& modulus() const { return modulus_; }

  /// The prime subfield F_p.
  Field prime_field() const { return Field(p_); }

  fel zero() const { return 0; }
  fel one() const { return 1; }
  /// Encoding of the generator t (= residue of x); requires d > 1.
  fel gen() const;

  fel add(fel a, fel b) const { return add_[a * q_ + b]; }
  fel neg(fel a) const { return neg_[a]; }
  fel sub(fel a, fel b) const { return add_[a * q_ + neg_[b]]; }
  fel mul(fel a, fel b) const { return mul_[a * q_ + b]; }
  fel inv(fel a) const;
  fel div(fel a, fel b) const { return mul(a, inv(b)); }
  fel pow(fel a, long long e) const;

  /// Embeds an integer (reduced mod p) into the prime subfield.
  fel from_int(long long c) const;

  /// Digits of a in base p, constant term first, length d.
  std::vector<int> coeffs(fel a) const;
  /// Inverse of coeffs (entries reduced mod p; shorter vectors are padded).
  fel from_coeffs(const std::vector<int>& c) const;

  /// Human-readable form: "3" for prime fields, "t^2+2t+1"-style otherwise.
  std::string to_string(fel a) const;

  /// Range check helper: throws UsageError unless 0 <= a < q.
  void check(fel a) const;

 private:
  void build_tables();

  int p_ = 0, d_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<fel> add_, mul_, neg_, inv_;
};

/// True when m is prime (trial division; desk scale).
bool is_prime(int m);

/// Factors q = p^d with p prime; throws UsageError otherwise.
std::pair<int, int> factor_prime_power(int q);

}  // namespace utn
