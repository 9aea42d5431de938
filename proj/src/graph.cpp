#include "plumbcert/graph.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace plumbcert {

WeightedDualGraph WeightedDualGraph::create(std::vector<Vertex> vertices,
                                            std::vector<GraphEdge> edges) {
    if (vertices.empty()) throw BadParams("graph: needs at least one vertex");
    WeightedDualGraph g;
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& x, const Vertex& y) { return x.id < y.id; });
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vertex& v = vertices[i];
        if (v.id < 0) throw BadParams("graph: vertex ids must be >= 0");
        if (v.genus < 0) throw BadParams("graph: vertex " + std::to_string(v.id) + " has genus < 0");
        if (v.euler < 1) throw BadParams("graph: vertex " + std::to_string(v.id) + " has euler < 1");
        if (g.index_.count(v.id)) throw BadParams("graph: duplicate vertex id " + std::to_string(v.id));
        g.index_[v.id] = i;
    }
    std::set<std::pair<int, int>> seen;
    for (GraphEdge& e : edges) {
        if (e.a == e.b) throw BadParams("graph: loop at vertex " + std::to_string(e.a));
        if (e.multiplicity < 1) throw BadParams("graph: edge multiplicity < 1");
        if (!g.index_.count(e.a) || !g.index_.count(e.b))
            throw BadParams("graph: edge touches unknown vertex");
        if (e.a > e.b) std::swap(e.a, e.b);
        if (!seen.insert({e.a, e.b}).second)
            throw BadParams("graph: duplicate edge record {" + std::to_string(e.a) + "," +
                            std::to_string(e.b) + "}");
    }
    std::sort(edges.begin(), edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    return g;
}

std::size_t WeightedDualGraph::index_of(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw BadParams("graph: unknown vertex id " + std::to_string(id));
    return it->second;
}

long WeightedDualGraph::valency(int id) const {
    (void)index_of(id);
    long total = 0;
    for (const GraphEdge& e : edges_)
        if (e.a == id || e.b == id) total += e.multiplicity;
    return total;
}

int WeightedDualGraph::multiplicity(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (const GraphEdge& e : edges_)
        if (e.a == a && e.b == b) return e.multiplicity;
    return 0;
}

std::vector<std::pair<int, int>> WeightedDualGraph::neighbors(int id) const {
    std::vector<std::pair<int, int>> out;
    for (const GraphEdge& e : edges_) {
        if (e.a == id) out.emplace_back(e.b, e.multiplicity);
        else if (e.b == id) out.emplace_back(e.a, e.multiplicity);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t WeightedDualGraph::component_count() const {
    std::map<int, int> color;
    int components = 0;
    for (const Vertex& v : vertices_) {
        if (color.count(v.id)) continue;
        ++components;
        std::vector<int> stack{v.id};
        color[v.id] = components;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (auto [nb, mult] : neighbors(cur)) {
                (void)mult;
                if (!color.count(nb)) {
                    color[nb] = components;
                    stack.push_back(nb);
                }
            }
        }
    }
    return static_cast<std::size_t>(components);
}

bool WeightedDualGraph::connected() const { return component_count() == 1; }

long WeightedDualGraph::first_betti() const {
    long total_mult = 0;
    for (const GraphEdge& e : edges_) total_mult += e.multiplicity;
    return total_mult - static_cast<long>(vertices_.size()) +
           static_cast<long>(component_count());
}

const Rational& CanonicalCycle::discrepancy(int id) const {
    auto it = discrepancies.find(id);
    if (it == discrepancies.end())
        throw BadParams("canonical cycle: unknown vertex id " + std::to_string(id));
    return it->second;
}

SymMatrix intersection_matrix(const WeightedDualGraph& g) {
    const auto& vs = g.vertices();
    SymMatrix m(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) m.set(i, i, Int(-vs[i].euler));
    for (const GraphEdge& e : g.edges())
        m.set(g.index_of(e.a), g.index_of(e.b), Int(e.multiplicity));
    return m;
}

CanonicalCycle canonical_cycle(const WeightedDualGraph& g) {
    if (!g.connected()) throw Disconnected("canonical_cycle: graph is not connected");
    const SymMatrix m = intersection_matrix(g);
    if (!is_negative_definite_minors(m))
        throw NotNegativeDefinite("canonical_cycle: intersection form is not negative definite");

    const auto& vs = g.vertices();
    std::vector<Rational> b(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        b[i] = Rational(2 * vs[i].genus - 2 + vs[i].euler);

    const std::vector<Rational> k = solve_exact(m, b);

    CanonicalCycle z;
    Int index(1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        z.discrepancies[vs[i].id] = k[i];
        mpz_lcm(index.get_mpz_t(), index.get_mpz_t(), k[i].denominator().get_mpz_t());
    }
    z.topological_index = index;
    return z;
}

bool is_numerically_gorenstein(const CanonicalCycle& z) {
    return z.topological_index == 1;
}

bool is_minimal_good(const WeightedDualGraph& g) {
    for (const Vertex& v : g.vertices())
        if (v.genus == 0 && v.euler == 1 && g.valency(v.id) <= 2) return false;
    return true;
}

WeightedDualGraph graph_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
            throw ParseError("graph json: missing \"vertices\" array");
        std::vector<Vertex> vertices;
        for (const auto& jv : j["vertices"]) {
            Vertex v;
            v.id = jv.at("id").get<int>();
            v.genus = jv.at("genus").get<int>();
            v.euler = jv.at("euler").get<int>();
            vertices.push_back(v);
        }
        std::vector<GraphEdge> edges;
        if (j.contains("edges")) {
            if (!j["edges"].is_array()) throw ParseError("graph json: \"edges\" must be an array");
            for (const auto& je : j["edges"]) {
                GraphEdge e;
                e.a = je.at("a").get<int>();
                e.b = je.at("b").get<int>();
                e.multiplicity = je.value("multiplicity", 1);
                edges.push_back(e);
            }
        }
        return WeightedDualGraph::create(std::move(vertices), std::move(edges));
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("graph json: ") + ex.what());
    } catch (const BadParams& ex) {
        throw ParseError(std::string("graph json: ") + ex.what());
    }
}

nlohmann::json graph_to_json(const WeightedDualGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const Vertex& v : g.vertices())
        j["vertices"].push_back({{"id", v.id}, {"genus", v.genus}, {"euler", v.euler}});
    j["edges"] = nlohmann::json::array();
    for (const GraphEdge& e : g.edges())
        j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"multiplicity", e.multiplicity}});
    return j;
}

std::string to_dot(const WeightedDualGraph& g, const CanonicalCycle* cycle) {
    std::string out = "graph dual_graph {\n";
    for (const Vertex& v : g.vertices()) {
        out += "  " + std::to_string(v.id) + " [label=\"" + std::to_string(v.id) +
               " [g=" + std::to_string(v.genus) + ", e=" + std::to_string(v.euler);
        if (cycle) out += ", k=" + cycle->discrepancy(v.id).str();
        out += "]\"];\n";
    }
    for (const GraphEdge& e : g.edges())
        for (int l = 0; l < e.multiplicity; ++l)
            out += "  " + std::to_string(e.a) + " -- " + std::to_string(e.b) + ";\n";
    out += "}\n";
    return out;
}

} // namespace plumbcert
