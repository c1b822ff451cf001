#pragma once
// JSON conversions for the domain types, used by the CLI and the tests.
//
// Conventions: positions are two-element arrays [i, j] (1-based); field
// elements are plain integers over a prime field and coefficient arrays
// (constant term first) otherwise; subspace bases list one coordinate
// vector per basis row against an explicit index set.

#include <string>
#include <vector>

#include "json.hpp"
#include "utn/common.hpp"
#include "utn/gf.hpp"
#include "utn/group.hpp"
#include "utn/intpoly.hpp"
#include "utn/lie.hpp"
#include "utn/linalg.hpp"
#include "utn/splice.hpp"
#include "utn/stanley.hpp"

namespace utn {

using Json = nlohmann::ordered_json;

Json edge_to_json(Edge e);
/// Throws ValidationError unless j is a valid position of [[n]].
Edge edge_from_json(int n, const Json& j);
Json edges_to_json(const std::vector<Edge>& es);
std::vector<Edge> edges_from_json(int n, const Json& j);

/// {"n": ..., "lambda": [...], "nu": [...]}
Json splice_to_json(const Splice& S);
Splice splice_from_json(const Json& j);

Json fel_to_json(const Field& F, fel a);
fel fel_from_json(const Field& F, const Json& j);

/// [{"binding": [i,j,k,l], "value": ...}, ...] in binding order.
Json labeling_to_json(const Field& F, const SpliceShape& shape,
                      const SpliceLabeling& sigma);
SpliceLabeling labeling_from_json(const Field& F, const SpliceShape& shape,
                                  const Json& j);

/// {"ground": [0..k-1], "V": [...], "edges": [{"u","v","label"}, ...]}
Json graph_to_json(const Field& F, const StanleyGraph& G,
                   const EdgeLabeling& tau);
/// Inverse; validates the graph axioms.  tau receives the edge labels.
StanleyGraph graph_from_json(const Field& F, const Json& j, EdgeLabeling* tau);

Json vec_to_json(const Field& F, const Vec& v);
Vec vec_from_json(const Field& F, int ambient, const Json& j);

/// {"index_set": [[i,j],...], "basis": [[...], ...]} over the positions
/// of [[n]] in coordinate order.
Json subspace_to_json(const Field& F, int n, const Subspace& W);

/// {"var": "r", "coeffs": [c0, c1, ...]}; coefficients too large for a
/// 64-bit integer are emitted as decimal strings.
Json poly_to_json(const IntPoly& P);

/// The index tuple alone: {"splice", "sigma", "matroid"}.
Json index_tuple_json(const Field& F, const IdealIndex& idx);

/// Full ideal record: {"n","q","splice","sigma","matroid","rre_basis",
/// "dim","supernormal"} with supernormal = (nu is empty).
Json ideal_record(const Field& F, const IdealIndex& idx, const Subspace& W);

/// Reads the subspace back out of an ideal record ({"rre_basis": ...},
/// basis rows over the positions of [[n]]); n and q must match the record
/// when present.
Subspace ideal_basis_from_json(const Field& F, int n, const Json& j);

/// Normal subgroup record: mirrors the ideal record plus {"fp_dim",
/// "is_fq_subspace"}.  Basis rows are printed as F_q coordinate vectors
/// (one per F_p-basis row); "matroid" and "dim" are null unless the
/// subgroup is an F_q-subspace, in which case they come from its ideal
/// classification.
Json nsg_record(const Field& F, const Field& Fp, const LabeledSplice& LS,
                const NormalSubgroupDesc& N);

}  // namespace utn
