#include "utn/jsonio.hpp"

#include <limits>

namespace utn {

namespace {

long long get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ValidationError(std::string(what) + ": expected an integer");
  }
  return j.get<long long>();
}

const Json& get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json edge_to_json(Edge e) { return Json::array({e.i, e.j}); }

Edge edge_from_json(int n, const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError("position: expected a two-element array");
  }
  Edge e{static_cast<int>(get_int(j[0], "position")),
         static_cast<int>(get_int(j[1], "position"))};
  check_edge(n, e);
  return e;
}

Json edges_to_json(const std::vector<Edge>& es) {
  Json out = Json::array();
  for (Edge e : es) out.push_back(edge_to_json(e));
  return out;
}

std::vector<Edge> edges_from_json(int n, const Json& j) {
  if (!j.is_array()) throw ValidationError("position list: expected an array");
  std::vector<Edge> out;
  for (const Json& item : j) out.push_back(edge_from_json(n, item));
  return out;
}

Json splice_to_json(const Splice& S) {
  Json out = Json::object();
  out["n"] = S.n;
  out["lambda"] = edges_to_json(S.lambda);
  out["nu"] = edges_to_json(S.nu);
  return out;
}

Splice splice_from_json(const Json& j) {
  Splice S;
  S.n = static_cast<int>(get_int(get_field(j, "n"), "n"));
  if (S.n < 1) throw ValidationError("splice: n must be positive");
  S.lambda = edges_from_json(S.n, get_field(j, "lambda"));
  S.nu = edges_from_json(S.n, get_field(j, "nu"));
  return S;
}

Json fel_to_json(const Field& F, fel a) {
  F.check(a);
  if (F.is_prime_field()) return Json(a);
  return Json(F.coeffs(a));
}

fel fel_from_json(const Field& F, const Json& j) {
  if (j.is_number_integer()) {
    if (!F.is_prime_field()) {
      throw ValidationError(
          "field element: coefficient array required when d > 1");
    }
    long long v = j.get<long long>();
    if (v < 0 || v >= F.q()) {
      throw ValidationError("field element out of range");
    }
    return static_cast<fel>(v);
  }
  if (j.is_array()) {
    if (static_cast<int>(j.size()) > F.d()) {
      throw ValidationError("field element: too many coefficients");
    }
    std::vector<int> c;
    for (const Json& item : j) {
      long long v = get_int(item, "field element coefficient");
      if (v < 0 || v >= F.p()) {
        throw ValidationError("field element coefficient out of range");
      }
      c.push_back(static_cast<int>(v));
    }
    return F.from_coeffs(c);
  }
  throw ValidationError("field element: expected an integer or array");
}

Json labeling_to_json(const Field& F, const SpliceShape& shape,
                      const SpliceLabeling& sigma) {
  if (sigma.size() != shape.bindings.size()) {
    throw UsageError("labeling does not match the binding list");
  }
  Json out = Json::array();
  for (size_t t = 0; t < sigma.size(); ++t) {
    const Binding& b = shape.bindings[t];
    Json item = Json::object();
    item["binding"] = Json::array({b.i, b.j, b.k, b.l});
    item["value"] = fel_to_json(F, sigma[t]);
    out.push_back(std::move(item));
  }
  return out;
}

SpliceLabeling labeling_from_json(const Field& F, const SpliceShape& shape,
                                  const Json& j) {
  if (!j.is_array() || j.size() != shape.bindings.size()) {
    throw ValidationError("labeling: expected one entry per binding");
  }
  SpliceLabeling sigma(shape.bindings.size(), 0);
  std::vector<char> seen(shape.bindings.size(), 0);
  for (const Json& item : j) {
    const Json& bj = get_field(item, "binding");
    if (!bj.is_array() || bj.size() != 4) {
      throw ValidationError("labeling: binding must be [i,j,k,l]");
    }
    Binding b{static_cast<int>(get_int(bj[0], "binding")),
              static_cast<int>(get_int(bj[1], "binding")),
              static_cast<int>(get_int(bj[2], "binding")),
              static_cast<int>(get_int(bj[3], "binding"))};
    size_t pos = 0;
    while (pos < shape.bindings.size() && !(shape.bindings[pos] == b)) ++pos;
    if (pos == shape.bindings.size()) {
      throw ValidationError("labeling names an unknown binding " +
                            to_string(b));
    }
    if (seen[pos]) {
      throw ValidationError("labeling repeats binding " + to_string(b));
    }
    seen[pos] = 1;
    fel v = fel_from_json(F, get_field(item, "value"));
    if (v == 0) throw ValidationError("labeling values must be nonzero");
    sigma[pos] = v;
  }
  for (char s : seen) {
    if (!s) throw ValidationError("labeling misses a binding");
  }
  return sigma;
}

Json graph_to_json(const Field& F, const StanleyGraph& G,
                   const EdgeLabeling& tau) {
  if (tau.size() != G.edges.size()) {
    throw UsageError("edge labeling does not match the edge list");
  }
  Json out = Json::object();
  Json ground = Json::array();
  for (int v = 0; v < G.k; ++v) ground.push_back(v);
  out["ground"] = std::move(ground);
  Json sinks = Json::array();
  for (int v : G.sinks()) sinks.push_back(v);
  out["V"] = std::move(sinks);
  Json edges = Json::array();
  for (size_t t = 0; t < G.edges.size(); ++t) {
    Json item = Json::object();
    item["u"] = G.edges[t].first;
    item["v"] = G.edges[t].second;
    item["label"] = fel_to_json(F, tau[t]);
    edges.push_back(std::move(item));
  }
  out["edges"] = std::move(edges);
  return out;
}

StanleyGraph graph_from_json(const Field& F, const Json& j,
                             EdgeLabeling* tau) {
  const Json& ground = get_field(j, "ground");
  if (!ground.is_array()) throw ValidationError("graph: ground must be a list");
  StanleyGraph G;
  G.k = static_cast<int>(ground.size());
  for (int v = 0; v < G.k; ++v) {
    if (get_int(ground[v], "ground") != v) {
      throw ValidationError("graph: ground set must be 0..k-1 in order");
    }
  }
  G.in_v.assign(G.k, 0);
  for (const Json& item : get_field(j, "V")) {
    long long v = get_int(item, "V");
    if (v < 0 || v >= G.k) throw ValidationError("graph: sink out of range");
    G.in_v[v] = 1;
  }
  EdgeLabeling labels;
  for (const Json& item : get_field(j, "edges")) {
    int u = static_cast<int>(get_int(get_field(item, "u"), "u"));
    int v = static_cast<int>(get_int(get_field(item, "v"), "v"));
    G.edges.emplace_back(u, v);
    fel label = fel_from_json(F, get_field(item, "label"));
    if (label == 0) throw ValidationError("graph: edge labels must be nonzero");
    labels.push_back(label);
  }
  // Sort edges (and labels with them) into canonical order, then validate.
  std::vector<size_t> order(G.edges.size());
  for (size_t t = 0; t < order.size(); ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return G.edges[a] < G.edges[b];
  });
  std::vector<std::pair<int, int>> sorted_edges;
  EdgeLabeling sorted_labels;
  for (size_t t : order) {
    sorted_edges.push_back(G.edges[t]);
    sorted_labels.push_back(labels[t]);
  }
  G.edges = std::move(sorted_edges);
  validate_stanley_graph(G);
  if (tau) *tau = std::move(sorted_labels);
  return G;
}

Json vec_to_json(const Field& F, const Vec& v) {
  Json out = Json::array();
  for (fel a : v) out.push_back(fel_to_json(F, a));
  return out;
}

Vec vec_from_json(const Field& F, int ambient, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != ambient) {
    throw ValidationError("vector has the wrong number of coordinates");
  }
  Vec v;
  for (const Json& item : j) v.push_back(fel_from_json(F, item));
  return v;
}

Json subspace_to_json(const Field& F, int n, const Subspace& W) {
  if (W.ambient != edge_count(n)) {
    throw UsageError("subspace ambient does not match n");
  }
  Json out = Json::object();
  out["index_set"] = edges_to_json(all_edges(n));
  Json basis = Json::array();
  for (const Vec& row : W.rows) basis.push_back(vec_to_json(F, row));
  out["basis"] = std::move(basis);
  return out;
}

Json poly_to_json(const IntPoly& P) {
  Json out = Json::object();
  out["var"] = "r";
  Json coeffs = Json::array();
  for (int k = 0; k <= std::max(0, P.degree()); ++k) {
    const BigInt& c = P.coeff(k);
    if (c >= std::numeric_limits<long long>::min() &&
        c <= std::numeric_limits<long long>::max()) {
      coeffs.push_back(static_cast<long long>(c));
    } else {
      coeffs.push_back(c.str());
    }
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json index_tuple_json(const Field& F, const IdealIndex& idx) {
  Json out = Json::object();
  out["splice"] = splice_to_json(idx.ls.S);
  out["sigma"] = labeling_to_json(F, idx.ls.shape, idx.ls.sigma);
  out["matroid"] = graph_to_json(F, idx.graph, idx.tau);
  return out;
}

Json ideal_record(const Field& F, const IdealIndex& idx, const Subspace& W) {
  Json out = Json::object();
  out["n"] = idx.ls.S.n;
  out["q"] = F.q();
  out["splice"] = splice_to_json(idx.ls.S);
  out["sigma"] = labeling_to_json(F, idx.ls.shape, idx.ls.sigma);
  out["matroid"] = graph_to_json(F, idx.graph, idx.tau);
  Json basis = Json::array();
  for (const Vec& row : W.rows) basis.push_back(vec_to_json(F, row));
  out["rre_basis"] = std::move(basis);
  out["dim"] = W.dim();
  out["supernormal"] = idx.ls.S.nu.empty();
  return out;
}

Subspace ideal_basis_from_json(const Field& F, int n, const Json& j) {
  if (j.contains("n") && get_int(j.at("n"), "n") != n) {
    throw ValidationError("record's n does not match the requested n");
  }
  if (j.contains("q") && get_int(j.at("q"), "q") != F.q()) {
    throw ValidationError("record's q does not match the requested field");
  }
  const Json& basis =
      j.contains("rre_basis") ? j.at("rre_basis") : get_field(j, "basis");
  if (!basis.is_array()) {
    throw ValidationError("basis: expected a list of rows");
  }
  std::vector<Vec> rows;
  for (const Json& row : basis) {
    rows.push_back(vec_from_json(F, edge_count(n), row));
  }
  return rre(F, edge_count(n), std::move(rows));
}

Json nsg_record(const Field& F, const Field& Fp, const LabeledSplice& LS,
                const NormalSubgroupDesc& N) {
  Json out = Json::object();
  out["n"] = N.n;
  out["q"] = F.q();
  out["splice"] = splice_to_json(LS.S);
  out["sigma"] = labeling_to_json(F, LS.shape, LS.sigma);
  const bool fq_stable = t_stable(F, Fp, N.fp_space);
  if (fq_stable) {
    Subspace W = contract_subspace(F, N.fp_space);
    IdealIndex idx = classify_ideal(F, N.n, W);
    out["matroid"] = graph_to_json(F, idx.graph, idx.tau);
    out["dim"] = W.dim();
  } else {
    out["matroid"] = nullptr;
    out["dim"] = nullptr;
  }
  Json basis = Json::array();
  for (const Vec& row : N.fp_space.rows) {
    basis.push_back(vec_to_json(F, contract_vec(F, row)));
  }
  out["rre_basis"] = std::move(basis);
  out["supernormal"] = LS.S.nu.empty();
  out["fp_dim"] = N.fp_space.dim();
  out["is_fq_subspace"] = fq_stable;
  return out;
}

}  // namespace utn
