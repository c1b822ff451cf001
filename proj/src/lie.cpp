#include "utn/lie.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace utn {

Vec ut_unit(int n, Edge e, fel c) {
  Vec v(edge_count(n), 0);
  v[edge_index(n, e)] = c;
  return v;
}

Subspace ut_space(const Field& F, int n, const std::vector<Edge>& edges) {
  std::vector<Vec> gens;
  gens.reserve(edges.size());
  for (Edge e : edges) gens.push_back(ut_unit(n, e));
  return rre(F, edge_count(n), std::move(gens));
}

Vec bracket(const Field& F, int n, const Vec& a, const Vec& b) {
  const int m = edge_count(n);
  if (static_cast<int>(a.size()) != m || static_cast<int>(b.size()) != m) {
    throw UsageError("bracket: coordinate length does not match n");
  }
  Vec out(m, 0);
  // (ab)_{i,j} = sum_k a_{i,k} b_{k,j}; both factors strictly upper.
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
  for (int idx = 0; idx < m; ++idx) {
    if (b[idx] == 0) continue;
    Edge e = edge_at(n, idx);
    for (int j = e.j + 1; j <= n; ++j) {
      fel akj = a[edge_index(n, Edge{e.j, j})];
      if (akj == 0) continue;
      int target = edge_index(n, Edge{e.i, j});
      out[target] = F.sub(out[target], F.mul(b[idx], akj));
    }
  }
  return out;
}

std::vector<Edge> vec_support(int n, const Vec& v) {
  std::vector<Edge> out;
  for (int idx = 0; idx < static_cast<int>(v.size()); ++idx) {
    if (v[idx] != 0) out.push_back(edge_at(n, idx));
  }
  return out;
}

std::vector<Edge> space_support(int n, const Subspace& W) {
  std::set<Edge> supp;
  for (const Vec& row : W.rows) {
    for (Edge e : vec_support(n, row)) supp.insert(e);
  }
  return std::vector<Edge>(supp.begin(), supp.end());
}

bool is_ideal(const Field& F, int n, const Subspace& W) {
  if (W.ambient != edge_count(n)) {
    throw UsageError("is_ideal: ambient dimension does not match n");
  }
  for (Edge g : all_edges(n)) {
    Vec gen = ut_unit(n, g);
    for (const Vec& x : W.rows) {
      if (!member(F, W, bracket(F, n, gen, x))) return false;
    }
  }
  return true;
}

LabeledSplice make_labeled_splice(const Field& F, Splice S,
                                  SpliceLabeling sigma) {
  auto violations = validate_splice(S, /*require_tight=*/true);
  if (!violations.empty()) {
    throw ValidationError("labeled splice: " + violations.front().kind + ": " +
                          violations.front().detail);
  }
  SpliceShape shape = decompose_splice(S);
  LabeledSplice LS{std::move(S), std::move(shape), std::move(sigma)};
  if (LS.sigma.size() != LS.shape.bindings.size()) {
    throw UsageError("labeled splice: one label per binding required");
  }
  for (fel c : LS.sigma) {
    F.check(c);
    if (c == 0) throw UsageError("labeled splice: labels must be nonzero");
  }
  return LS;
}

namespace {

// Product of the labels of the bindings of column `col` lying strictly above
// the arc e, i.e. bindings whose lower lambda-arc starts at or before e's
// left endpoint.
fel column_coefficient(const Field& F, const LabeledSplice& LS,
                       const std::vector<Edge>& col, Edge e) {
  fel coeff = 1;
  for (size_t b = 0; b < LS.shape.bindings.size(); ++b) {
    const Binding& bind = LS.shape.bindings[b];
    Edge upper{bind.i, bind.j}, lower{bind.k, bind.l};
    bool in_col = std::binary_search(col.begin(), col.end(), upper) &&
                  std::binary_search(col.begin(), col.end(), lower);
    if (in_col && bind.k <= e.i) coeff = F.mul(coeff, LS.sigma[b]);
  }
  return coeff;
}

}  // namespace

Subspace build_Z(const Field& F, const LabeledSplice& LS) {
  const int n = LS.S.n;
  std::vector<Vec> gens;
  for (Edge e : upper_set(n, LS.S.lambda, 1)) gens.push_back(ut_unit(n, e));
  for (const auto& col : LS.shape.cols) {
    Vec v(edge_count(n), 0);
    for (Edge e : col) {
      v[edge_index(n, e)] = column_coefficient(F, LS, col, e);
    }
    gens.push_back(std::move(v));
  }
  return rre(F, edge_count(n), std::move(gens));
}

Subspace build_D(const Field& F, const LabeledSplice& LS) {
  const int n = LS.S.n;
  std::set<Edge> in_S(LS.S.lambda.begin(), LS.S.lambda.end());
  in_S.insert(LS.S.nu.begin(), LS.S.nu.end());
  std::vector<Vec> gens;
  for (Edge e : upper_set(n, LS.S.lambda, 0)) {
    if (!in_S.count(e)) gens.push_back(ut_unit(n, e));
  }
  for (size_t b = 0; b < LS.shape.bindings.size(); ++b) {
    const Binding& bind = LS.shape.bindings[b];
    // nu-arcs (i,j+1) and (j,l); k = j+1 by tightness.
    Vec v(edge_count(n), 0);
    v[edge_index(n, Edge{bind.i, bind.k})] = 1;
    v[edge_index(n, Edge{bind.j, bind.l})] = F.neg(LS.sigma[b]);
    gens.push_back(std::move(v));
  }
  return rre(F, edge_count(n), std::move(gens));
}

std::vector<Vec> basis_bCR(const Field& F, const LabeledSplice& LS) {
  const int n = LS.S.n;
  std::vector<Vec> out;
  for (const auto& col : LS.shape.cols) {
    Vec v(edge_count(n), 0);
    for (Edge e : col) {
      v[edge_index(n, e)] = column_coefficient(F, LS, col, e);
    }
    out.push_back(std::move(v));
  }
  for (const auto& row : LS.shape.rows) {
    out.push_back(ut_unit(n, row.front()));
  }
  return out;
}

Subspace build_ideal(const Field& F, const IdealIndex& idx) {
  const LabeledSplice& LS = idx.ls;
  const int n = LS.S.n;
  if (idx.graph.k != LS.shape.cr_size()) {
    throw UsageError("build_ideal: graph ground set does not match CR index");
  }
  validate_stanley_graph(idx.graph);
  if (idx.tau.size() != idx.graph.edges.size()) {
    throw UsageError("build_ideal: one label per graph edge required");
  }
  for (fel c : idx.tau) {
    F.check(c);
    if (c == 0) throw UsageError("build_ideal: labels must be nonzero");
  }
  const std::vector<Vec> b = basis_bCR(F, LS);
  const int cols = static_cast<int>(LS.shape.cols.size());
  Subspace D = build_D(F, LS);
  std::vector<Vec> gens = D.rows;
  for (int u = 0; u < idx.graph.k; ++u) {
    if (idx.graph.in_v[u]) continue;
    bool has_edge = false;
    Vec v = b[u];
    for (size_t e = 0; e < idx.graph.edges.size(); ++e) {
      if (idx.graph.edges[e].first != u) continue;
      has_edge = true;
      vec_axpy(F, v, idx.tau[e], b[idx.graph.edges[e].second]);
    }
    if (has_edge || u < cols) gens.push_back(std::move(v));
  }
  return rre(F, edge_count(n), std::move(gens));
}

bool in_family(const Field& F, const LabeledSplice& LS, const Subspace& W) {
  const int n = LS.S.n;
  if (!is_ideal(F, n, W)) return false;
  std::vector<Edge> up = upper_set(n, LS.S.lambda, 0);
  if (space_support(n, W) != up) return false;
  std::set<Edge> nu(LS.S.nu.begin(), LS.S.nu.end());
  for (Edge e : upper_set(n, LS.S.lambda, 1)) {
    const bool line_in = member(F, W, ut_unit(n, e));
    const bool in_nu = nu.count(e) != 0;
    if (line_in == in_nu) return false;
  }
  return contains(F, build_Z(F, LS), W);
}

IdealIndex classify_ideal(const Field& F, int n, const Subspace& W) {
  if (!is_ideal(F, n, W)) {
    throw ValidationError("classify_ideal: subspace is not an ideal");
  }
  // lambda = minimal support positions; the support of an ideal is an upper
  // set, which min_elements validates.
  std::vector<Edge> supp = space_support(n, W);
  std::vector<Edge> lambda = min_elements(n, supp);

  Splice S;
  S.n = n;
  S.lambda = lambda;
  std::vector<Edge> up1 = upper_set(n, lambda, 1);
  std::vector<Edge> up2 = upper_set(n, lambda, 2);
  std::set<Edge> up2s(up2.begin(), up2.end());
  for (Edge e : up1) {
    if (up2s.count(e)) {
      assert(member(F, W, ut_unit(n, e)) &&
             "ideal must contain the lines two levels above its minimum");
      continue;
    }
    if (!member(F, W, ut_unit(n, e))) S.nu.push_back(e);
  }
  auto violations = validate_splice(S, /*require_tight=*/true);
  if (!violations.empty()) {
    throw ValidationError("classify_ideal: recovered pair is not a tight splice: " +
                          violations.front().kind);
  }
  SpliceShape shape = decompose_splice(S);

  // sigma from the first basis witness with a nonzero upper coordinate.
  SpliceLabeling sigma;
  for (const Binding& b : shape.bindings) {
    const int upper = edge_index(n, Edge{b.i, b.j});
    const int lower = edge_index(n, Edge{b.k, b.l});
    fel label = 0;
    for (const Vec& row : W.rows) {
      if (row[upper] != 0) {
        label = F.div(row[lower], row[upper]);
        break;
      }
    }
    if (label == 0) {
      throw ValidationError("classify_ideal: no witness for binding " +
                            to_string(b) + " (or degenerate ratio)");
    }
#ifndef NDEBUG
    for (const Vec& row : W.rows) {
      assert(row[lower] == F.mul(label, row[upper]) &&
             "all members must share the binding ratio");
    }
#endif
    sigma.push_back(label);
  }

  IdealIndex idx;
  idx.ls = make_labeled_splice(F, S, sigma);
  if (!in_family(F, idx.ls, W)) {
    throw ValidationError("classify_ideal: family membership checks failed");
  }

  // Project W/D onto CR coordinates and read the graph off the RRE form.
  const std::vector<Vec> b = basis_bCR(F, idx.ls);
  const Subspace D = build_D(F, idx.ls);
#ifndef NDEBUG
  assert(contains(F, W, D) && "family members contain the lower bound");
#endif
  QuotientMap qm(F, b, D);
  std::vector<Vec> cr_rows;
  for (const Vec& row : W.rows) cr_rows.push_back(qm.coords(F, row));
  const int k = idx.ls.shape.cr_size();
  Subspace X = rre(F, k, std::move(cr_rows));

  const int cols = static_cast<int>(idx.ls.shape.cols.size());
  std::vector<char> is_pivot(k, 0);
  for (int piv : X.pivots) is_pivot[piv] = 1;
  std::vector<char> in_v(k, 0);
  for (int v = 0; v < k; ++v) {
    if (is_pivot[v]) continue;
    for (const Vec& row : X.rows) {
      if (row[v] != 0) {
        in_v[v] = 1;
        break;
      }
    }
  }
  idx.graph.k = k;
  idx.graph.in_v = in_v;
  for (int r = 0; r < X.dim(); ++r) {
    for (int v = 0; v < k; ++v) {
      if (in_v[v] && X.rows[r][v] != 0) {
        idx.graph.edges.push_back({X.pivots[r], v});
        idx.tau.push_back(X.rows[r][v]);
      }
    }
  }
  // RRE rows scan (pivot asc) x column asc yields lex-sorted edges already;
  // assert rather than re-sort so tau stays aligned.
  assert(std::is_sorted(idx.graph.edges.begin(), idx.graph.edges.end()));
  validate_stanley_graph(idx.graph);

  // Lemma guarantees: every column position is spanned (pivot or hit) and no
  // row position forms a bare unit row.
  for (int c = 0; c < cols; ++c) {
    bool hit = is_pivot[c] || in_v[c];
    if (!hit) {
      throw ValidationError(
          "classify_ideal: column coordinate absent from the quotient image");
    }
  }
#ifndef NDEBUG
  Subspace rebuilt = build_ideal(F, idx);
  assert(rebuilt == W && "classification must invert construction");
#endif
  return idx;
}

void enumerate_ideals(
    const Field& F, int n,
    const std::function<void(const IdealIndex&, const Subspace&)>& fn) {
  enumerate_all_labeled_splices(
      n, F,
      [&](const Splice& S, const SpliceShape& shape, const SpliceLabeling& sigma) {
        LabeledSplice LS{S, shape, sigma};
        enumerate_labeled_graphs(
            shape.cr_size(), F,
            [&](const StanleyGraph& G, const EdgeLabeling& tau) {
              IdealIndex idx{LS, G, tau};
              fn(idx, build_ideal(F, idx));
            });
      });
}

void oracle_enumerate_ideals(const Field& F, int n, int limit_dim,
                             const std::function<void(const Subspace&)>& fn) {
  const int m = edge_count(n);
  enumerate_nnsp(n, [&](const std::vector<Edge>& lambda) {
    const std::vector<Edge> up = upper_set(n, lambda, 0);
    const std::vector<Edge> up2 = upper_set(n, lambda, 2);
    std::set<Edge> up2s(up2.begin(), up2.end());
    // Quotient coordinates: positions of uplambda not two levels up.
    std::vector<int> coord;
    for (Edge e : up) {
      if (!up2s.count(e)) coord.push_back(edge_index(n, e));
    }
    std::vector<Vec> floor_rows;
    for (Edge e : up2) floor_rows.push_back(ut_unit(n, e));

    enumerate_subspaces(F, static_cast<int>(coord.size()), limit_dim,
                        [&](const Subspace& Q) {
                          std::vector<Vec> gens = floor_rows;
                          for (const Vec& qrow : Q.rows) {
                            Vec v(m, 0);
                            for (size_t c = 0; c < coord.size(); ++c) {
                              v[coord[c]] = qrow[c];
                            }
                            gens.push_back(std::move(v));
                          }
                          Subspace W = rre(F, m, std::move(gens));
                          if (space_support(n, W) != up) return;
                          if (!is_ideal(F, n, W)) return;
                          fn(W);
                        });
  });
}

}  // namespace utn
