#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plumbcert/graph.hpp"

namespace plumbcert {

enum class KleinianFamily { A, D, E };

/// A recognized Kleinian (Du Val) diagram: A_n, D_n, E_6, E_7 or E_8.
struct KleinianShape {
    KleinianFamily family = KleinianFamily::A;
    int n = 1; // subscript = number of vertices

    bool operator==(const KleinianShape&) const = default;
    std::string str() const;
};

/// Distinguished-class flags for one (graph, canonical cycle) pair. The
/// three specific classes are mutually exclusive; each implies
/// log-canonical, and Kleinian also implies numerically Gorenstein.
struct Classification {
    bool is_kleinian = false;
    bool is_cusp = false;
    bool is_simple_elliptic = false;
    bool is_log_canonical = false;
    bool is_numerically_gorenstein = false;
    std::optional<KleinianShape> kleinian_type;
};

/// Purely structural ADE recognition: connected simple tree, every vertex
/// genus 0 and euler 2, shaped as a path (A_n), a path with a two-pronged
/// end (D_n, n >= 4), or one of the three exceptional forks (E_6, E_7,
/// E_8). Independent of the discrepancy route (all k = 0), which the test
/// suite cross-checks.
std::optional<KleinianShape> recognize_ade(const WeightedDualGraph& g);

/// Classifies against the distinguished classes. Requires the intersection
/// form negative definite (the cycle must come from canonical_cycle on g).
/// Cusp means: >= 2 vertices, all rational, the multigraph is a topological
/// circle (every valency exactly 2 counting multiplicity, first Betti
/// number 1). Simple elliptic means a single vertex of genus 1.
Classification classify(const WeightedDualGraph& g, const CanonicalCycle& z);

struct VeysViolation {
    std::string rule;
    std::string where; // vertex/edge/segment in question
    std::string message;
};

/// Result of a structure check. `applicable` is false when the input is
/// log canonical or not a minimal good model; the check is then vacuous and
/// holds is true with a note.
struct VeysReport {
    bool holds = true;
    bool applicable = false;
    std::string note;
    std::set<int> v_minus; // vertices with k < -1
    std::vector<VeysViolation> violations;
};

/*
 * Structure checks on minimal good, non-log-canonical graphs, run as
 * assertions rather than derived facts:
 *
 *   verify_veys:
 *     (1) the full subgraph on V- = {i : k_i < -1} is connected;
 *     (2) the full subgraph on the complement is a disjoint union of simple
 *         segments of rational vertices, each attached to V- by exactly one
 *         edge at exactly one of its ends, with discrepancies strictly
 *         increasing away from that end;
 *     (3) every discrepancy is strictly negative.
 *
 *   verify_corollaries, for every vertex with k_i = -1:
 *     genus 0 and valency 1 or 2 (counting multiplicity); at valency 1 the
 *     neighbor has k = -2; at valency 2 the two neighbor discrepancies sum
 *     to -2 and neither is -1; and globally no edge joins two k = -1
 *     vertices.
 *
 * Both report violations, never throw.
 */
VeysReport verify_veys(const WeightedDualGraph& g, const CanonicalCycle& z);
VeysReport verify_corollaries(const WeightedDualGraph& g, const CanonicalCycle& z);

nlohmann::json classification_to_json(const Classification& c);
nlohmann::json veys_report_to_json(const VeysReport& r);

} // namespace plumbcert
