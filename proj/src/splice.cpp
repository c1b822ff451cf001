#include "utn/splice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace utn {

std::string to_string(const Binding& b) {
  return "<" + std::to_string(b.i) + "," + std::to_string(b.j) + "|" +
         std::to_string(b.k) + "," + std::to_string(b.l) + ">";
}

std::vector<SpliceViolation> validate_splice(const Splice& S,
                                             bool require_tight) {
  std::vector<SpliceViolation> out;
  const int n = S.n;
  if (n < 1) {
    out.push_back({"usage", "n must be positive"});
    return out;
  }
  for (Edge e : S.lambda) check_edge(n, e);
  for (Edge e : S.nu) check_edge(n, e);
  if (!is_set_partition(n, S.lambda)) {
    out.push_back({"lambda-not-partition",
                   "lambda arcs share a left or right endpoint"});
  }
  if (!is_set_partition(n, S.nu)) {
    out.push_back({"nu-not-partition",
                   "nu arcs share a left or right endpoint"});
  }
  std::set<Edge> lam(S.lambda.begin(), S.lambda.end());
  std::set<Edge> nus(S.nu.begin(), S.nu.end());
  for (Edge e : S.nu) {
    if (lam.count(e)) {
      out.push_back({"overlap", "arc " + to_string(e) + " lies in both layers"});
    }
  }
  if (!out.empty()) return out;  // axioms below assume well-formed layers

  // S1: witnessing lambda-arc strictly inside each nu-arc.
  for (Edge e : S.nu) {
    bool witnessed = false;
    for (Edge f : S.lambda) {
      if ((f.i == e.i && f.j < e.j) || (f.j == e.j && f.i > e.i)) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) {
      out.push_back({"S1", "nu arc " + to_string(e) +
                               " has no lambda arc sharing an endpoint "
                               "strictly inside it"});
    }
  }

  // S2: left/right continuation parity for every vertex pair j < k.
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      bool left = false, right = false;
      for (int i = 1; i < j; ++i) {
        if (lam.count({i, j}) && nus.count({i, k})) {
          left = true;
          break;
        }
      }
      for (int l = k + 1; l <= n; ++l) {
        if (lam.count({k, l}) && nus.count({j, l})) {
          right = true;
          break;
        }
      }
      if (left != right) {
        out.push_back({"S2", "vertex pair (" + std::to_string(j) + "," +
                                 std::to_string(k) + ") continues " +
                                 (left ? "left" : "right") + " but not " +
                                 (left ? "right" : "left")});
      }
    }
  }

  if (require_tight) {
    std::vector<Edge> up2 = upper_set(n, S.lambda, 2);
    std::set<Edge> up2s(up2.begin(), up2.end());
    for (Edge e : S.lambda) {
      if (up2s.count(e)) {
        out.push_back({"lambda-not-tight",
                       "lambda arc " + to_string(e) +
                           " nests two or more levels above another"});
      }
    }
    for (Edge e : S.nu) {
      if (up2s.count(e)) {
        out.push_back({"nu-not-tight",
                       "nu arc " + to_string(e) +
                           " sits two or more levels above lambda"});
      }
    }
  }
  return out;
}

bool is_valid_splice(const Splice& S, bool require_tight) {
  return validate_splice(S, require_tight).empty();
}

namespace {

// Union-find over indices 0..m-1.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int m) : parent(m) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<Edge>> classes_of(const std::vector<Edge>& arcs,
                                          Dsu& dsu) {
  std::map<int, std::vector<Edge>> groups;
  for (size_t k = 0; k < arcs.size(); ++k) {
    groups[dsu.find(static_cast<int>(k))].push_back(arcs[k]);
  }
  std::vector<std::vector<Edge>> out;
  for (auto& [root, arcs_in_class] : groups) {
    std::sort(arcs_in_class.begin(), arcs_in_class.end());
    out.push_back(std::move(arcs_in_class));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

std::vector<std::string> SpliceShape::cr_labels() const {
  std::vector<std::string> out;
  for (size_t c = 0; c < cols.size(); ++c)
    out.push_back("C" + std::to_string(c + 1));
  for (size_t r = 0; r < rows.size(); ++r)
    out.push_back("R" + std::to_string(r + 1));
  return out;
}

SpliceShape decompose_splice(const Splice& S) {
  auto violations = validate_splice(S, /*require_tight=*/false);
  if (!violations.empty()) {
    throw ValidationError("decompose_splice: " + violations.front().kind +
                          ": " + violations.front().detail);
  }
  std::vector<Edge> lam = S.lambda;
  std::vector<Edge> nus = S.nu;
  std::sort(lam.begin(), lam.end());
  std::sort(nus.begin(), nus.end());
  auto lam_index = [&](Edge e) {
    return static_cast<int>(std::lower_bound(lam.begin(), lam.end(), e) -
                            lam.begin());
  };
  auto nu_index = [&](Edge e) {
    return static_cast<int>(std::lower_bound(nus.begin(), nus.end(), e) -
                            nus.begin());
  };
  std::set<Edge> nuset(nus.begin(), nus.end());

  SpliceShape shape;
  Dsu col_dsu(static_cast<int>(lam.size()));
  Dsu row_dsu(static_cast<int>(nus.size()));
  for (const Edge a : lam) {
    for (const Edge b : lam) {
      if (a.j >= b.i) continue;  // bindings need j < k
      if (nuset.count({a.i, b.i}) && nuset.count({a.j, b.j})) {
        shape.bindings.push_back({a.i, a.j, b.i, b.j});
        col_dsu.unite(lam_index(a), lam_index(b));
        row_dsu.unite(nu_index({a.i, b.i}), nu_index({a.j, b.j}));
      }
    }
  }
  std::sort(shape.bindings.begin(), shape.bindings.end());
  shape.cols = classes_of(lam, col_dsu);
  shape.rows = classes_of(nus, row_dsu);
  return shape;
}

namespace {

// Successor/predecessor within a sorted block vertex list; -1 when absent.
int block_succ(const std::vector<int>& block, int v) {
  auto it = std::upper_bound(block.begin(), block.end(), v);
  return it == block.end() ? -1 : *it;
}
int block_pred(const std::vector<int>& block, int v) {
  auto it = std::lower_bound(block.begin(), block.end(), v);
  return it == block.begin() ? -1 : *(it - 1);
}
bool block_has(const std::vector<int>& block, int v) {
  return std::binary_search(block.begin(), block.end(), v);
}

// Attempts to build the row of the maximal tight splice running from block I
// (top) to block K (bottom); returns the nu-arcs or empty when none exists.
//
// The row's top vertices are consecutive in I and end at max(I); its bottom
// vertices are consecutive in K and start at min(K); and each binding is
// tight, which pins bottom m against top m+1 via k_m = i_{m+1} + 1.
std::vector<Edge> candidate_row(const std::vector<int>& I,
                                const std::vector<int>& K) {
  const int i2 = K.front() - 1;
  if (!block_has(I, i2)) return {};
  const int i1 = block_pred(I, i2);
  if (i1 < 0) return {};
  std::vector<int> tops = {i1, i2};
  std::vector<int> bottoms = {K.front()};
  while (tops.back() != I.back()) {
    const int next_i = block_succ(I, tops.back());
    const int next_k = block_succ(K, bottoms.back());
    if (next_i < 0 || next_k < 0 || next_k != next_i + 1) return {};
    tops.push_back(next_i);
    bottoms.push_back(next_k);
  }
  const int last_k = block_succ(K, bottoms.back());
  if (last_k < 0) return {};
  bottoms.push_back(last_k);
  assert(tops.size() == bottoms.size());
  std::vector<Edge> arcs;
  for (size_t m = 0; m < tops.size(); ++m) {
    arcs.push_back(Edge{tops[m], bottoms[m]});
  }
  return arcs;
}

}  // namespace

Splice maximal_tight_splice(int n, const std::vector<Edge>& lambda) {
  if (!is_nonnesting(n, lambda)) {
    throw ValidationError(
        "maximal_tight_splice requires a nonnesting set partition");
  }
  Splice S;
  S.n = n;
  S.lambda = lambda;
  std::sort(S.lambda.begin(), S.lambda.end());
  const auto blocks = partition_blocks(n, lambda);
  for (size_t a = 0; a < blocks.size(); ++a) {
    for (size_t b = 0; b < blocks.size(); ++b) {
      if (a == b) continue;
      auto arcs = candidate_row(blocks[a], blocks[b]);
      S.nu.insert(S.nu.end(), arcs.begin(), arcs.end());
    }
  }
  std::sort(S.nu.begin(), S.nu.end());
  auto violations = validate_splice(S, /*require_tight=*/true);
  if (!violations.empty()) {
    throw ValidationError("maximal_tight_splice: assembled splice invalid: " +
                          violations.front().kind + ": " +
                          violations.front().detail);
  }
  return S;
}

std::vector<Splice> enumerate_tight_splices(int n,
                                            const std::vector<Edge>& lambda) {
  const Splice maximal = maximal_tight_splice(n, lambda);
  const SpliceShape shape = decompose_splice(maximal);
  const size_t r = shape.rows.size();
  std::vector<Splice> out;
  out.reserve(size_t{1} << r);
  for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
    Splice S;
    S.n = n;
    S.lambda = maximal.lambda;
    for (size_t row = 0; row < r; ++row) {
      if (mask & (size_t{1} << row)) {
        S.nu.insert(S.nu.end(), shape.rows[row].begin(), shape.rows[row].end());
      }
    }
    std::sort(S.nu.begin(), S.nu.end());
    out.push_back(std::move(S));
  }
  return out;
}

std::vector<Splice> enumerate_tight_splices_brute(
    int n, const std::vector<Edge>& lambda) {
  if (!is_nonnesting(n, lambda)) {
    throw ValidationError(
        "enumerate_tight_splices_brute requires a nonnesting set partition");
  }
  // S1 confines nu to the first level above lambda; tightness excludes the
  // second level and up.  Scan every subset of that candidate band.
  std::vector<Edge> up1 = upper_set(n, lambda, 1);
  std::vector<Edge> up2 = upper_set(n, lambda, 2);
  std::set<Edge> up2s(up2.begin(), up2.end());
  std::vector<Edge> band;
  for (Edge e : up1) {
    if (!up2s.count(e)) band.push_back(e);
  }
  if (band.size() > 24) {
    throw ResourceError("brute-force splice enumeration band too wide");
  }
  std::vector<Splice> out;
  for (size_t mask = 0; mask < (size_t{1} << band.size()); ++mask) {
    Splice S;
    S.n = n;
    S.lambda = lambda;
    std::sort(S.lambda.begin(), S.lambda.end());
    for (size_t k = 0; k < band.size(); ++k) {
      if (mask & (size_t{1} << k)) S.nu.push_back(band[k]);
    }
    std::sort(S.nu.begin(), S.nu.end());
    if (is_valid_splice(S, /*require_tight=*/true)) out.push_back(std::move(S));
  }
  return out;
}

void enumerate_labeled_splices(
    int n, const std::vector<Edge>& lambda, const Field& F,
    const std::function<void(const Splice&, const SpliceShape&,
                             const SpliceLabeling&)>& fn) {
  for (const Splice& S : enumerate_tight_splices(n, lambda)) {
    const SpliceShape shape = decompose_splice(S);
    SpliceLabeling sigma(shape.bindings.size(), 1);
    while (true) {
      fn(S, shape, sigma);
      size_t pos = sigma.size();
      while (pos > 0) {
        if (sigma[pos - 1] + 1 < F.q()) {
          ++sigma[pos - 1];
          break;
        }
        sigma[pos - 1] = 1;
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

void enumerate_all_labeled_splices(
    int n, const Field& F,
    const std::function<void(const Splice&, const SpliceShape&,
                             const SpliceLabeling&)>& fn) {
  enumerate_nnsp(n, [&](const std::vector<Edge>& lambda) {
    enumerate_labeled_splices(n, lambda, F, fn);
  });
}

}  // namespace utn
