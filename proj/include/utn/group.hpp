#pragma once

// The unitriangular group UT_n(F_q) and its normal subgroups.
//
// Normal subgroups are stored additively: N = 1 + n with n an F_p-subspace
// of ut_n (prime-field-expanded coordinates of length d*|[[n]]|).  The
// additive encoding is lossless: N is a normal subgroup exactly when n is an
// additive subgroup stable under bracketing with ut_n, and then the group
// and the coset 1 + n coincide elementwise.
//
// For a labeled tight splice (S,sigma), the normal subgroups N with support
// data (S,sigma) correspond to the F_p-subspaces W of Z/D (an F_q-space of
// dimension |CR|, viewed over F_p with dimension d|CR|) such that
//   * every column coordinate appears with a nonzero coefficient in some
//     element of W, and
//   * no full line F_q*b_R (R a row) is contained in W.

#include <functional>
#include <vector>

#include "utn/lie.hpp"

namespace utn {

/// A unitriangular matrix, stored densely row-major including the diagonal.
struct UTMatrix {
  int n = 0;
  std::vector<fel> a;  // n*n entries

  fel at(int i, int j) const { return a[(i - 1) * n + (j - 1)]; }  // 1-based
  fel& at(int i, int j) { return a[(i - 1) * n + (j - 1)]; }
  friend bool operator==(const UTMatrix&, const UTMatrix&) = default;
  friend auto operator<=>(const UTMatrix&, const UTMatrix&) = default;
};

UTMatrix ut_identity(int n);
/// Throws ValidationError unless unit diagonal and zero below.
void check_unitriangular(const Field& F, const UTMatrix& M);

UTMatrix ut_mul(const Field& F, const UTMatrix& A, const UTMatrix& B);
UTMatrix ut_inv(const Field& F, const UTMatrix& A);
/// g h g^{-1}.
UTMatrix ut_conj(const Field& F, const UTMatrix& g, const UTMatrix& h);
/// [a, b] = a^{-1} b^{-1} a b.
UTMatrix ut_commutator(const Field& F, const UTMatrix& a, const UTMatrix& b);

/// 1 + a for a strictly-upper coordinate vector, and back.
UTMatrix from_lie(int n, const Vec& v);
Vec to_lie(const Field& F, const UTMatrix& M);

/// [1 + x e_{s,t}, a] evaluated by the closed formula
/// 1 + x * sum over (r,u) strictly above (s,t) of (a^{-1})_{r,s} a_{t,u} e_{r,u};
/// used as an independent cross-check of ut_commutator.
UTMatrix root_commutator_formula(const Field& F, fel x, Edge st,
                                 const UTMatrix& a);

/// N = 1 + n with n an F_p-subspace in prime-field-expanded coordinates
/// (ambient d * |[[n]]|).
struct NormalSubgroupDesc {
  int n = 0;
  Subspace fp_space;
};

/// Wraps an F_q-subspace of ut_n as a (candidate) normal subgroup.
NormalSubgroupDesc nsg_from_fq(const Field& F, const Field& Fp, int n,
                               const Subspace& fq_space);

/// Is 1 + n closed under multiplication?  By bilinearity of the matrix
/// product it suffices that v*w + v + w stays in n for basis pairs.
bool is_subgroup(const Field& F, const Field& Fp, const NormalSubgroupDesc& N);

/// Is 1 + n a normal subgroup?  Checks is_subgroup first (reported via the
/// optional flag), then closure under conjugation by the root generators
/// 1 + t^m e_{j,j+1}.
bool is_normal(const Field& F, const Field& Fp, const NormalSubgroupDesc& N,
               bool* subgroup_ok = nullptr);

struct TheoremACheck {
  bool is_normal_group = false;           // group side, by closure tests
  bool is_bracket_stable_additive = false;  // Lie side, by bracket stability
};

/// Evaluates both sides of the additive correspondence independently.
TheoremACheck theoremA_check(const Field& F, const Field& Fp,
                             const NormalSubgroupDesc& N);

/// [UT_n, N] = 1 + [ut_n, span_{F_q} n], returned additively.
NormalSubgroupDesc commutator_subgroup(const Field& F, const Field& Fp,
                                       const NormalSubgroupDesc& N);

/// Brute-force [G, N]: closes the literal commutator set {[g, h]} under
/// multiplication.  Enumerates all of UT_n(F_q) — tiny n and q only.
/// Returns the subgroup as a sorted list of matrices.
std::vector<UTMatrix> brute_commutator_set(const Field& F,
                                           const NormalSubgroupDesc& N);

/// All group elements 1 + v for v in the F_p-space of N, as matrices.
std::vector<UTMatrix> subgroup_elements(const Field& F, const Field& Fp,
                                        const NormalSubgroupDesc& N);

/// All of UT_n(F_q).
std::vector<UTMatrix> all_group_elements(const Field& F, int n);

/// The normal subgroups attached to the labeled tight splice (S,sigma):
/// F_p-subspaces W of Z/D satisfying the column/row conditions, lifted to
/// 1 + (preimage).  Enumeration order: subspace enumeration order of W over
/// the expanded CR coordinates.
void enumerate_nsg_family(
    const Field& F, const Field& Fp, const LabeledSplice& LS, int limit_dim,
    const std::function<void(const NormalSubgroupDesc&)>& fn);

/// All normal subgroups of UT_n(F_q), grouped by labeled splice in
/// enumeration order.
void enumerate_normal_subgroups(
    const Field& F, const Field& Fp, int n, int limit_dim,
    const std::function<void(const LabeledSplice&, const NormalSubgroupDesc&)>& fn);

/// Support data of a normal subgroup: the labeled splice whose family
/// contains it (unique).  Throws ValidationError if N is not normal.
LabeledSplice classify_normal_subgroup(const Field& F, const Field& Fp,
                                       const NormalSubgroupDesc& N);

enum class GeneratorMode { normal, ideal };

/// The smallest normal subgroup (mode normal) or ideal subgroup 1 + ideal
/// (mode ideal) containing 1 + a: builds lambda from a's support, the
/// maximal tight splice K on it, the labeling theta from a's ratios, and
/// returns 1 + F_p a + D (mode normal) or 1 + F_q a + D (mode ideal).
NormalSubgroupDesc generated_normal_subgroup(const Field& F, const Field& Fp,
                                             int n, const Vec& a,
                                             GeneratorMode mode);

enum class LatticeOp { join, meet };

/// join = 1 + (n + m), meet = 1 + (n ∩ m).
NormalSubgroupDesc lattice_ops(const Field& F, const Field& Fp,
                               const NormalSubgroupDesc& N,
                               const NormalSubgroupDesc& M, LatticeOp op);

/// Normal subgroups covering exactly one element in the lattice.
std::vector<NormalSubgroupDesc> join_irreducibles(const Field& F,
                                                  const Field& Fp, int n,
                                                  int limit_dim);

}  // namespace utn
