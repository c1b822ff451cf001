#pragma once

// Dense linear algebra over a finite field: reduced row echelon forms,
// subspace queries (membership, containment, sum, intersection), canonical
// enumeration of all subspaces of F_q^m, kernels, quotient coordinates, and
// the restriction of scalars from F_{p^d} to F_p.
//
// A subspace is always carried in its unique reduced-row-echelon basis, so
// two Subspace values describe the same space iff they compare equal
// field-by-field.  Rows are coordinate vectors of length `ambient` with
// entries encoded as in gf.hpp.

#include <functional>
#include <vector>

#include "utn/gf.hpp"

namespace utn {

using Vec = std::vector<fel>;

Vec vec_zero(int m);
Vec vec_add(const Field& F, const Vec& a, const Vec& b);
Vec vec_sub(const Field& F, const Vec& a, const Vec& b);
Vec vec_scale(const Field& F, fel c, const Vec& a);
bool vec_is_zero(const Vec& a);
/// a += c*b, in place.
void vec_axpy(const Field& F, Vec& a, fel c, const Vec& b);

/// A subspace of F_q^ambient in reduced row echelon form: each row leads
/// with 1 at its pivot column, pivot columns strictly increase, and every
/// pivot column is zero in the other rows.
struct Subspace {
  int ambient = 0;
  std::vector<Vec> rows;
  std::vector<int> pivots;

  int dim() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

/// Reduced row echelon span of the given generators.
Subspace rre(const Field& F, int ambient, std::vector<Vec> gens);

/// The zero subspace of F^m.
Subspace zero_space(int m);

/// F^m itself.
Subspace full_space(int m);

/// Residue of v after eliminating the pivot coordinates of S; zero iff
/// v lies in S.
Vec reduce(const Field& F, const Subspace& S, Vec v);

bool member(const Field& F, const Subspace& S, const Vec& v);
bool contains(const Field& F, const Subspace& outer, const Subspace& inner);
Subspace space_sum(const Field& F, const Subspace& A, const Subspace& B);
Subspace space_intersection(const Field& F, const Subspace& A,
                            const Subspace& B);

/// Kernel of the linear map F^k -> F^m sending the standard basis vector
/// e_i to images[i]; returned as a subspace of F^k.
Subspace kernel_of_images(const Field& F, const std::vector<Vec>& images,
                          int m);

/// Visits every subspace of F_q^m exactly once, in a deterministic order:
/// by dimension, then by pivot-column set (lexicographic), then by the
/// free entries of the canonical form read row-major as an odometer in
/// ascending encoded value.  Throws ResourceError when m > limit_dim.
void enumerate_subspaces(const Field& F, int m, int limit_dim,
                         const std::function<void(const Subspace&)>& fn);

/// Number of subspaces of F_q^m of dimension k (Galois number summand),
/// as unsigned 64-bit; desk-scale sizes only.  Used by tests as a cross
/// check on enumerate_subspaces.
unsigned long long subspace_count(int q, int m, int k);

// --- restriction of scalars -------------------------------------------------
//
// For F = F_{p^d}, an F-vector v in F^m is re-read as a vector over F_p of
// length d*m: coordinate c contributes its base-p digits to positions
// c*d .. c*d+d-1 (constant digit first).  This identification is additive,
// and multiplication by the field generator t becomes an F_p-linear map,
// so F-subspaces of F^m become t-stable F_p-subspaces of F_p^{d m}.

Vec expand_vec(const Field& F, const Vec& v);
Vec contract_vec(const Field& F, const Vec& vp);

/// The F_p-subspace of F_p^{d m} corresponding to the F-subspace S
/// (spanned by t^e * row for every RRE row and 0 <= e < d).
Subspace expand_subspace(const Field& F, const Field& Fp, const Subspace& S);

/// Is the F_p-subspace Sp (in expanded coordinates) stable under
/// multiplication by t — i.e. the expansion of an F-subspace?
bool t_stable(const Field& F, const Field& Fp, const Subspace& Sp);

/// Inverse of expand_subspace; requires t_stable(Sp).
Subspace contract_subspace(const Field& F, const Subspace& Sp);

/// Coordinates in a quotient: fixes a list of transversal vectors b_0..b_{k-1}
/// and a denominator subspace D with span(b_*) ∩ D = 0; maps any
/// v ∈ span(b_*) + D to its unique coefficient vector (a_0..a_{k-1}) with
/// v ≡ Σ a_i b_i (mod D).
class QuotientMap {
 public:
  QuotientMap(const Field& F, const std::vector<Vec>& transversal,
              const Subspace& denominator);

  int coord_count() const { return k_; }
  bool in_domain(const Field& F, const Vec& v) const;
  /// Throws ValidationError when v is outside span(b_*) + D.
  Vec coords(const Field& F, const Vec& v) const;

 private:
  int ambient_ = 0;
  int k_ = 0;
  Subspace elim_;  // RRE of (b_i | e_i) and (d_j | 0) rows, width ambient+k
};

}  // namespace utn
