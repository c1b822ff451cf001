#pragma once
// Graphviz (DOT) rendering for splices and Stanley graphs.

#include <string>

#include "utn/gf.hpp"
#include "utn/splice.hpp"
#include "utn/stanley.hpp"

namespace utn {

/// Arc-diagram rendering of a splice: vertices 1..n left to right, the
/// first partition's arcs solid, the second's dashed.  When a labeling is
/// supplied (with its field), each binding's value annotates the dashed
/// arc joining the binding's two left endpoints.
std::string splice_to_dot(const Splice& S, const Field* F = nullptr,
                          const SpliceLabeling* sigma = nullptr);

/// Stanley graph rendering: sinks as double circles, edges left to right;
/// when a labeling is supplied, edge labels are printed.
std::string stanley_to_dot(const StanleyGraph& G, const Field* F = nullptr,
                           const EdgeLabeling* tau = nullptr);

}  // namespace utn
