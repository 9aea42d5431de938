#pragma once

#include <nlohmann/json_fwd.hpp>

#include "plumbcert/graph.hpp"

namespace plumbcert {

/// Full analysis pipeline as one JSON report: graph echo, definiteness,
/// discrepancies (exact strings), topological index, classification, the
/// two structure checks and a certification summary. When the graph is
/// disconnected or the form is not negative definite, only the echo and the
/// two gate flags are present.
nlohmann::json analyze_graph(const WeightedDualGraph& g);

} // namespace plumbcert
