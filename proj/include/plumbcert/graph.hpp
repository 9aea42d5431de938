#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plumbcert/matrix.hpp"

namespace plumbcert {

/// Vertex of a weighted dual graph: an exceptional curve of genus `genus`
/// and self-intersection -`euler` (so `euler` >= 1 is stored positive).
struct Vertex {
    int id = 0;
    int genus = 0;
    int euler = 1;

    bool operator==(const Vertex&) const = default;
};

/// Unordered multi-edge; `multiplicity` parallel edges between a and b.
struct GraphEdge {
    int a = 0;
    int b = 0;
    int multiplicity = 1;

    bool operator==(const GraphEdge&) const = default;
};

/// Weighted dual graph of a resolution: loop-free multigraph with genus and
/// euler weights. At most one edge record per unordered vertex pair;
/// multiplicity encodes parallel edges. Immutable after construction.
class WeightedDualGraph {
public:
    /// Validates and normalizes (vertices sorted by id, edge endpoints
    /// ordered a < b, edges sorted). Throws BadParams on loops, duplicate
    /// ids, duplicate pairs, negative ids, genus < 0, euler < 1,
    /// multiplicity < 1, or edges touching unknown vertices.
    static WeightedDualGraph create(std::vector<Vertex> vertices, std::vector<GraphEdge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    bool has_vertex(int id) const { return index_.count(id) != 0; }
    std::size_t index_of(int id) const;
    const Vertex& vertex(int id) const { return vertices_[index_of(id)]; }

    /// Total multiplicity of edges at `id` (an edge of multiplicity 2
    /// contributes 2).
    long valency(int id) const;
    int multiplicity(int a, int b) const;
    /// Adjacent (neighbor id, multiplicity) pairs, ascending by neighbor id.
    std::vector<std::pair<int, int>> neighbors(int id) const;

    bool connected() const;
    std::size_t component_count() const;
    /// First Betti number: total edge multiplicity - vertices + components.
    long first_betti() const;

    bool operator==(const WeightedDualGraph& other) const = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<GraphEdge> edges_;
    std::map<int, std::size_t> index_;
};

/// Exact rational discrepancies of the canonical cycle, keyed by vertex id,
/// together with the topological index r = lcm of their reduced
/// denominators (the least r making every r*k_i integral).
struct CanonicalCycle {
    std::map<int, Rational> discrepancies;
    Int topological_index = 1;

    const Rational& discrepancy(int id) const;
};

/// Intersection matrix in ascending-id vertex order: diagonal -euler,
/// off-diagonal the edge multiplicities.
SymMatrix intersection_matrix(const WeightedDualGraph& g);

/// Solves for the canonical cycle. Adjunction for the curve E_i reads
///   K.E_i = 2 g_i - 2 - E_i^2 = 2 g_i - 2 + e_i,
/// and the canonical cycle is the divisor sum k_i E_i with the same
/// intersection numbers, i.e. the exact solution of M k = b with
/// b_i = 2 g_i - 2 + e_i. Throws NotNegativeDefinite / Disconnected.
CanonicalCycle canonical_cycle(const WeightedDualGraph& g);

/// True iff every discrepancy is an integer (equivalently r = 1).
bool is_numerically_gorenstein(const CanonicalCycle& z);

/// Standard contractibility criterion: false iff some vertex has genus 0,
/// euler 1 and valency <= 2 (a rational (-1)-curve that a smaller good
/// model would absorb). Sound but conservative.
bool is_minimal_good(const WeightedDualGraph& g);

WeightedDualGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const WeightedDualGraph& g);

/// DOT export; labels carry genus, euler and (when a cycle is given) the
/// discrepancy. Parallel edges are emitted once per multiplicity.
std::string to_dot(const WeightedDualGraph& g, const CanonicalCycle* cycle = nullptr);

} // namespace plumbcert
