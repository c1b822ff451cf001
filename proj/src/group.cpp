#include "utn/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace utn {

namespace {

// Strictly-upper associative product of coordinate vectors.
Vec ut_assoc_product(const Field& F, int n, const Vec& a, const Vec& b) {
  const int m = edge_count(n);
  Vec out(m, 0);
  for (int idx = 0; idx < m; ++idx) {
    if (a[idx] == 0) continue;
    Edge e = edge_at(n, idx);
    for (int j = e.j + 1; j <= n; ++j) {
      fel bkj = b[edge_index(n, Edge{e.j, j})];
      if (bkj == 0) continue;
      int target = edge_index(n, Edge{e.i, j});
      out[target] = F.add(out[target], F.mul(a[idx], bkj));
    }
  }
  return out;
}

// Minimal elements of an arbitrary position set (not necessarily an upper
// set) in the containment order.
std::vector<Edge> minimal_of_set(const std::vector<Edge>& set) {
  std::vector<Edge> mins;
  for (Edge e : set) {
    bool minimal = true;
    for (Edge f : set) {
      if (f != e && leq(f, e)) {
        minimal = false;
        break;
      }
    }
    if (minimal) mins.push_back(e);
  }
  std::sort(mins.begin(), mins.end());
  return mins;
}

constexpr long long kBruteElementCap = 1 << 21;

}  // namespace

UTMatrix ut_identity(int n) {
  UTMatrix M;
  M.n = n;
  M.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i) M.at(i, i) = 1;
  return M;
}

void check_unitriangular(const Field& F, const UTMatrix& M) {
  if (M.n < 1 || static_cast<int>(M.a.size()) != M.n * M.n) {
    throw ValidationError("matrix storage does not match its size");
  }
  for (int i = 1; i <= M.n; ++i) {
    for (int j = 1; j <= M.n; ++j) {
      F.check(M.at(i, j));
      if (i == j && M.at(i, j) != 1) {
        throw ValidationError("diagonal entry is not 1");
      }
      if (i > j && M.at(i, j) != 0) {
        throw ValidationError("entry below the diagonal is not 0");
      }
    }
  }
}

UTMatrix ut_mul(const Field& F, const UTMatrix& A, const UTMatrix& B) {
  if (A.n != B.n) throw UsageError("matrix product: size mismatch");
  const int n = A.n;
  UTMatrix C;
  C.n = n;
  C.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      fel s = 0;
      for (int k = i; k <= j; ++k) s = F.add(s, F.mul(A.at(i, k), B.at(k, j)));
      C.at(i, j) = s;
    }
  }
  return C;
}

UTMatrix ut_inv(const Field& F, const UTMatrix& A) {
  // A = 1 + N with N nilpotent: A^{-1} = 1 - N + N^2 - ... (n-1 terms).
  const int n = A.n;
  UTMatrix N = A;
  for (int i = 1; i <= n; ++i) N.at(i, i) = 0;
  UTMatrix acc = ut_identity(n);
  UTMatrix power = ut_identity(n);
  fel sign = F.neg(1);
  for (int t = 1; t < n; ++t) {
    // power <- power * N (loses the unit diagonal; do it manually).
    UTMatrix next;
    next.n = n;
    next.a.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        fel s = 0;
        for (int k = i; k <= j; ++k)
          s = F.add(s, F.mul(power.at(i, k), N.at(k, j)));
        next.at(i, j) = s;
      }
    power = next;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        acc.at(i, j) = F.add(acc.at(i, j), F.mul(sign, power.at(i, j)));
    sign = F.neg(sign);
  }
  return acc;
}

UTMatrix ut_conj(const Field& F, const UTMatrix& g, const UTMatrix& h) {
  return ut_mul(F, ut_mul(F, g, h), ut_inv(F, g));
}

UTMatrix ut_commutator(const Field& F, const UTMatrix& a, const UTMatrix& b) {
  return ut_mul(F, ut_mul(F, ut_inv(F, a), ut_inv(F, b)), ut_mul(F, a, b));
}

UTMatrix from_lie(int n, const Vec& v) {
  if (static_cast<int>(v.size()) != edge_count(n)) {
    throw UsageError("from_lie: coordinate length does not match n");
  }
  UTMatrix M = ut_identity(n);
  for (int idx = 0; idx < edge_count(n); ++idx) {
    Edge e = edge_at(n, idx);
    M.at(e.i, e.j) = v[idx];
  }
  return M;
}

Vec to_lie(const Field& F, const UTMatrix& M) {
  check_unitriangular(F, M);
  Vec v(edge_count(M.n), 0);
  for (int idx = 0; idx < edge_count(M.n); ++idx) {
    Edge e = edge_at(M.n, idx);
    v[idx] = M.at(e.i, e.j);
  }
  return v;
}

UTMatrix root_commutator_formula(const Field& F, fel x, Edge st,
                                 const UTMatrix& a) {
  const int n = a.n;
  check_edge(n, st);
  UTMatrix ainv = ut_inv(F, a);
  UTMatrix out = ut_identity(n);
  for (int r = 1; r <= st.i; ++r) {
    for (int u = st.j; u <= n; ++u) {
      if (r == st.i && u == st.j) continue;
      fel term = F.mul(x, F.mul(ainv.at(r, st.i), a.at(st.j, u)));
      out.at(r, u) = F.add(out.at(r, u), term);
    }
  }
  return out;
}

NormalSubgroupDesc nsg_from_fq(const Field& F, const Field& Fp, int n,
                               const Subspace& fq_space) {
  if (fq_space.ambient != edge_count(n)) {
    throw UsageError("nsg_from_fq: ambient dimension does not match n");
  }
  NormalSubgroupDesc N;
  N.n = n;
  N.fp_space = expand_subspace(F, Fp, fq_space);
  return N;
}

bool is_subgroup(const Field& F, const Field& Fp, const NormalSubgroupDesc& N) {
  // (1+v)(1+w) = 1 + (v + w + vw): closure reduces to vw staying inside,
  // bilinearly in (v, w), so ordered basis pairs suffice.
  for (const Vec& vp : N.fp_space.rows) {
    Vec v = contract_vec(F, vp);
    for (const Vec& wp : N.fp_space.rows) {
      Vec w = contract_vec(F, wp);
      Vec prod = ut_assoc_product(F, N.n, v, w);
      if (!member(Fp, N.fp_space, expand_vec(F, prod))) return false;
    }
  }
  return true;
}

bool is_normal(const Field& F, const Field& Fp, const NormalSubgroupDesc& N,
               bool* subgroup_ok) {
  const bool sub = is_subgroup(F, Fp, N);
  if (subgroup_ok) *subgroup_ok = sub;
  if (!sub) return false;
  // Conjugate basis representatives by the root generators 1 + t^m e_{j,j+1};
  // these generate UT_n and conjugation is F_p-linear in the member.
  for (int j = 1; j < N.n; ++j) {
    fel x = 1;
    for (int m = 0; m < F.d(); ++m) {
      UTMatrix g = from_lie(N.n, ut_unit(N.n, Edge{j, j + 1}, x));
      for (const Vec& vp : N.fp_space.rows) {
        UTMatrix h = from_lie(N.n, contract_vec(F, vp));
        Vec conj = to_lie(F, ut_conj(F, g, h));
        if (!member(Fp, N.fp_space, expand_vec(F, conj))) return false;
      }
      if (m + 1 < F.d()) x = F.mul(x, F.gen());
    }
  }
  return true;
}

TheoremACheck theoremA_check(const Field& F, const Field& Fp,
                             const NormalSubgroupDesc& N) {
  TheoremACheck out;
  out.is_normal_group = is_normal(F, Fp, N);
  out.is_bracket_stable_additive = true;
  // Lie side: [t^m e_{s,t}, v] in n for every F_p-basis element of ut_n and
  // of n; independent of the group-side computation.
  for (Edge st : all_edges(N.n)) {
    fel x = 1;
    for (int m = 0; m < F.d(); ++m) {
      Vec gen = ut_unit(N.n, st, x);
      for (const Vec& vp : N.fp_space.rows) {
        Vec br = bracket(F, N.n, gen, contract_vec(F, vp));
        if (!member(Fp, N.fp_space, expand_vec(F, br))) {
          out.is_bracket_stable_additive = false;
        }
      }
      if (m + 1 < F.d()) x = F.mul(x, F.gen());
    }
  }
  return out;
}

NormalSubgroupDesc commutator_subgroup(const Field& F, const Field& Fp,
                                       const NormalSubgroupDesc& N) {
  if (!is_normal(F, Fp, N)) {
    throw ValidationError("commutator_subgroup requires a normal subgroup");
  }
  // span_{F_q}(n), then its bracket with all of ut_n.
  std::vector<Vec> fq_gens;
  for (const Vec& vp : N.fp_space.rows) fq_gens.push_back(contract_vec(F, vp));
  Subspace closure = rre(F, edge_count(N.n), std::move(fq_gens));
  std::vector<Vec> brackets;
  for (Edge e : all_edges(N.n)) {
    Vec gen = ut_unit(N.n, e);
    for (const Vec& row : closure.rows) {
      brackets.push_back(bracket(F, N.n, gen, row));
    }
  }
  Subspace derived = rre(F, edge_count(N.n), std::move(brackets));
  NormalSubgroupDesc out;
  out.n = N.n;
  out.fp_space = expand_subspace(F, Fp, derived);
  return out;
}

std::vector<UTMatrix> subgroup_elements(const Field& F, const Field& Fp,
                                        const NormalSubgroupDesc& N) {
  const int dim = N.fp_space.dim();
  long long count = 1;
  for (int k = 0; k < dim; ++k) {
    count *= Fp.q();
    if (count > kBruteElementCap) {
      throw ResourceError("subgroup too large for explicit element listing");
    }
  }
  std::vector<UTMatrix> out;
  out.reserve(count);
  std::vector<fel> coeff(dim, 0);
  while (true) {
    Vec vp(N.fp_space.ambient, 0);
    for (int k = 0; k < dim; ++k) vec_axpy(Fp, vp, coeff[k], N.fp_space.rows[k]);
    out.push_back(from_lie(N.n, contract_vec(F, vp)));
    int pos = dim;
    while (pos > 0) {
      if (coeff[pos - 1] + 1 < Fp.q()) {
        ++coeff[pos - 1];
        break;
      }
      coeff[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UTMatrix> all_group_elements(const Field& F, int n) {
  const int m = edge_count(n);
  long long count = 1;
  for (int k = 0; k < m; ++k) {
    count *= F.q();
    if (count > kBruteElementCap) {
      throw ResourceError("group too large for explicit element listing");
    }
  }
  std::vector<UTMatrix> out;
  out.reserve(count);
  Vec v(m, 0);
  while (true) {
    out.push_back(from_lie(n, v));
    int pos = m;
    while (pos > 0) {
      if (v[pos - 1] + 1 < F.q()) {
        ++v[pos - 1];
        break;
      }
      v[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

std::vector<UTMatrix> brute_commutator_set(const Field& F,
                                           const NormalSubgroupDesc& N) {
  const Field Fp = F.prime_field();
  std::vector<UTMatrix> members = subgroup_elements(F, Fp, N);
  std::vector<UTMatrix> group = all_group_elements(F, N.n);
  std::set<UTMatrix> closure;
  std::vector<UTMatrix> work;
  for (const UTMatrix& g : group) {
    for (const UTMatrix& h : members) {
      UTMatrix c = ut_commutator(F, g, h);
      if (closure.insert(c).second) work.push_back(c);
    }
  }
  // Close the commutator set under multiplication.
  while (!work.empty()) {
    UTMatrix x = work.back();
    work.pop_back();
    std::vector<UTMatrix> snapshot(closure.begin(), closure.end());
    for (const UTMatrix& y : snapshot) {
      for (const UTMatrix& prod : {ut_mul(F, x, y), ut_mul(F, y, x)}) {
        if (closure.insert(prod).second) work.push_back(prod);
      }
    }
  }
  return std::vector<UTMatrix>(closure.begin(), closure.end());
}

void enumerate_nsg_family(
    const Field& F, const Field& Fp, const LabeledSplice& LS, int limit_dim,
    const std::function<void(const NormalSubgroupDesc&)>& fn) {
  const int n = LS.S.n;
  const int d = F.d();
  const int k = LS.shape.cr_size();
  const int cols = static_cast<int>(LS.shape.cols.size());
  const std::vector<Vec> b = basis_bCR(F, LS);
  const Subspace D = build_D(F, LS);
  const Subspace Dp = expand_subspace(F, Fp, D);

  // Precompute the expanded lines F_q b_R per row position (d vectors each,
  // in CR coordinates).
  std::vector<std::vector<Vec>> row_lines;
  for (int r = cols; r < k; ++r) {
    std::vector<Vec> line;
    fel scalar = 1;
    for (int m = 0; m < d; ++m) {
      Vec cr(k, 0);
      cr[r] = scalar;
      line.push_back(expand_vec(F, cr));
      if (m + 1 < d) scalar = F.mul(scalar, F.gen());
    }
    row_lines.push_back(std::move(line));
  }

  enumerate_subspaces(Fp, d * k, limit_dim, [&](const Subspace& W) {
    // Column condition: every column block is hit by some basis row.
    for (int c = 0; c < cols; ++c) {
      bool hit = false;
      for (const Vec& row : W.rows) {
        for (int m = 0; m < d; ++m) {
          if (row[c * d + m] != 0) {
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      if (!hit) return;
    }
    // Row condition: no full line F_q b_R inside W.
    for (const auto& line : row_lines) {
      bool whole_line = true;
      for (const Vec& lv : line) {
        if (!member(Fp, W, lv)) {
          whole_line = false;
          break;
        }
      }
      if (whole_line) return;
    }
    // Lift: each W row encodes sum_v alpha_v b_v with alpha_v read off the
    // d-digit block at position v.
    std::vector<Vec> gens = Dp.rows;
    for (const Vec& row : W.rows) {
      Vec alpha = contract_vec(F, row);  // length k over F_q
      Vec u(edge_count(n), 0);
      for (int v = 0; v < k; ++v) vec_axpy(F, u, alpha[v], b[v]);
      gens.push_back(expand_vec(F, u));
    }
    NormalSubgroupDesc desc;
    desc.n = n;
    desc.fp_space = rre(Fp, d * edge_count(n), std::move(gens));
    assert(is_normal(F, Fp, desc) && "family lifts must be normal");
    fn(desc);
  });
}

void enumerate_normal_subgroups(
    const Field& F, const Field& Fp, int n, int limit_dim,
    const std::function<void(const LabeledSplice&, const NormalSubgroupDesc&)>&
        fn) {
  enumerate_all_labeled_splices(
      n, F,
      [&](const Splice& S, const SpliceShape& shape,
          const SpliceLabeling& sigma) {
        LabeledSplice LS{S, shape, sigma};
        enumerate_nsg_family(F, Fp, LS, limit_dim,
                             [&](const NormalSubgroupDesc& desc) {
                               fn(LS, desc);
                             });
      });
}

LabeledSplice classify_normal_subgroup(const Field& F, const Field& Fp,
                                       const NormalSubgroupDesc& N) {
  if (!is_normal(F, Fp, N)) {
    throw ValidationError("classify_normal_subgroup requires a normal subgroup");
  }
  const int n = N.n;
  std::set<Edge> supp_set;
  std::vector<Vec> contracted;
  for (const Vec& vp : N.fp_space.rows) {
    Vec v = contract_vec(F, vp);
    for (Edge e : vec_support(n, v)) supp_set.insert(e);
    contracted.push_back(std::move(v));
  }
  std::vector<Edge> supp(supp_set.begin(), supp_set.end());
  std::vector<Edge> lambda = min_elements(n, supp);

  Splice S;
  S.n = n;
  S.lambda = lambda;
  std::vector<Edge> up2 = upper_set(n, lambda, 2);
  std::set<Edge> up2s(up2.begin(), up2.end());
  for (Edge e : upper_set(n, lambda, 1)) {
    if (up2s.count(e)) continue;
    // The full line F_q e is inside n iff all t^m e are members.
    bool line_in = true;
    fel x = 1;
    for (int m = 0; m < F.d(); ++m) {
      if (!member(Fp, N.fp_space, expand_vec(F, ut_unit(n, e, x)))) {
        line_in = false;
        break;
      }
      if (m + 1 < F.d()) x = F.mul(x, F.gen());
    }
    if (!line_in) S.nu.push_back(e);
  }
  auto violations = validate_splice(S, /*require_tight=*/true);
  if (!violations.empty()) {
    throw ValidationError(
        "classify_normal_subgroup: recovered pair is not a tight splice: " +
        violations.front().kind);
  }
  SpliceShape shape = decompose_splice(S);
  SpliceLabeling sigma;
  for (const Binding& bind : shape.bindings) {
    const int upper = edge_index(n, Edge{bind.i, bind.j});
    const int lower = edge_index(n, Edge{bind.k, bind.l});
    fel label = 0;
    for (const Vec& v : contracted) {
      if (v[upper] != 0) {
        label = F.div(v[lower], v[upper]);
        break;
      }
    }
    if (label == 0) {
      throw ValidationError("classify_normal_subgroup: no witness for binding " +
                            to_string(bind));
    }
    sigma.push_back(label);
  }
  LabeledSplice LS = make_labeled_splice(F, S, sigma);
  // Verify the family conditions: containment below Z and above D.
  Subspace Zp = expand_subspace(F, Fp, build_Z(F, LS));
  Subspace Dp = expand_subspace(F, Fp, build_D(F, LS));
  if (!contains(Fp, Zp, N.fp_space) || !contains(Fp, N.fp_space, Dp)) {
    throw ValidationError(
        "classify_normal_subgroup: bounding containments failed");
  }
  return LS;
}

NormalSubgroupDesc generated_normal_subgroup(const Field& F, const Field& Fp,
                                             int n, const Vec& a,
                                             GeneratorMode mode) {
  if (static_cast<int>(a.size()) != edge_count(n)) {
    throw UsageError("generated_normal_subgroup: coordinate length mismatch");
  }
  NormalSubgroupDesc out;
  out.n = n;
  if (vec_is_zero(a)) {
    out.fp_space = zero_space(F.d() * edge_count(n));
    return out;
  }
  std::vector<Edge> lambda = minimal_of_set(vec_support(n, a));
  Splice K = maximal_tight_splice(n, lambda);
  SpliceShape shape = decompose_splice(K);
  SpliceLabeling theta;
  for (const Binding& bind : shape.bindings) {
    fel upper = a[edge_index(n, Edge{bind.i, bind.j})];
    fel lower = a[edge_index(n, Edge{bind.k, bind.l})];
    assert(upper != 0 && lower != 0 &&
           "binding arcs lie in the generator's support minimum");
    theta.push_back(F.div(lower, upper));
  }
  LabeledSplice LS{std::move(K), std::move(shape), std::move(theta)};
  Subspace D = build_D(F, LS);
  std::vector<Vec> gens;
  if (mode == GeneratorMode::ideal) {
    // F_q a + D, expanded.
    Subspace fq = rre(F, edge_count(n), {a});
    Subspace sum = space_sum(F, fq, D);
    out.fp_space = expand_subspace(F, Fp, sum);
  } else {
    // F_p a + D, expanded.
    gens = expand_subspace(F, Fp, D).rows;
    gens.push_back(expand_vec(F, a));
    out.fp_space = rre(Fp, F.d() * edge_count(n), std::move(gens));
  }
  return out;
}

NormalSubgroupDesc lattice_ops(const Field& F, const Field& Fp,
                               const NormalSubgroupDesc& N,
                               const NormalSubgroupDesc& M, LatticeOp op) {
  (void)F;
  if (N.n != M.n || N.fp_space.ambient != M.fp_space.ambient) {
    throw UsageError("lattice_ops: mismatched ambient spaces");
  }
  NormalSubgroupDesc out;
  out.n = N.n;
  out.fp_space = op == LatticeOp::join
                     ? space_sum(Fp, N.fp_space, M.fp_space)
                     : space_intersection(Fp, N.fp_space, M.fp_space);
  return out;
}

std::vector<NormalSubgroupDesc> join_irreducibles(const Field& F,
                                                  const Field& Fp, int n,
                                                  int limit_dim) {
  std::vector<NormalSubgroupDesc> all;
  enumerate_normal_subgroups(
      F, Fp, n, limit_dim,
      [&](const LabeledSplice&, const NormalSubgroupDesc& desc) {
        all.push_back(desc);
      });
  const int count = static_cast<int>(all.size());
  // containment[i][j]: subgroup i strictly contains subgroup j.
  std::vector<std::vector<char>> strictly_above(count,
                                                std::vector<char>(count, 0));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (i == j) continue;
      if (all[i].fp_space.dim() > all[j].fp_space.dim() &&
          contains(Fp, all[i].fp_space, all[j].fp_space)) {
        strictly_above[i][j] = 1;
      }
    }
  }
  std::vector<NormalSubgroupDesc> irreducibles;
  for (int i = 0; i < count; ++i) {
    int covered = 0;
    for (int j = 0; j < count; ++j) {
      if (!strictly_above[i][j]) continue;
      bool has_middle = false;
      for (int l = 0; l < count; ++l) {
        if (strictly_above[i][l] && strictly_above[l][j]) {
          has_middle = true;
          break;
        }
      }
      if (!has_middle) ++covered;
    }
    if (covered == 1) irreducibles.push_back(all[i]);
  }
  return irreducibles;
}

}  // namespace utn
