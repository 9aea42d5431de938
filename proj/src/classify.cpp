#include "plumbcert/classify.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace plumbcert {

std::string KleinianShape::str() const {
    switch (family) {
        case KleinianFamily::A: return "A_" + std::to_string(n);
        case KleinianFamily::D: return "D_" + std::to_string(n);
        case KleinianFamily::E: return "E_" + std::to_string(n);
    }
    return "?";
}

std::optional<KleinianShape> recognize_ade(const WeightedDualGraph& g) {
    const auto& vs = g.vertices();
    for (const Vertex& v : vs)
        if (v.genus != 0 || v.euler != 2) return std::nullopt;
    for (const GraphEdge& e : g.edges())
        if (e.multiplicity != 1) return std::nullopt;
    if (!g.connected()) return std::nullopt;
    const std::size_t n = vs.size();
    if (g.edges().size() != n - 1) return std::nullopt; // connected + n-1 edges = tree

    std::map<int, int> degree;
    for (const Vertex& v : vs) degree[v.id] = 0;
    for (const GraphEdge& e : g.edges()) {
        ++degree[e.a];
        ++degree[e.b];
    }

    std::vector<int> forks;
    for (auto [id, d] : degree) {
        if (d >= 4) return std::nullopt;
        if (d == 3) forks.push_back(id);
    }
    if (forks.empty()) return KleinianShape{KleinianFamily::A, static_cast<int>(n)};
    if (forks.size() != 1) return std::nullopt;

    // Arm lengths (vertex counts) walking away from the unique fork.
    const int center = forks.front();
    std::vector<int> arms;
    for (auto [start, mult] : g.neighbors(center)) {
        (void)mult;
        int length = 0;
        int prev = center;
        int cur = start;
        while (true) {
            ++length;
            int next = -1;
            for (auto [nb, m] : g.neighbors(cur)) {
                (void)m;
                if (nb != prev) next = nb;
            }
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) return std::nullopt;
    if (arms[0] == 1 && arms[1] == 1)
        return KleinianShape{KleinianFamily::D, arms[2] + 3};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return KleinianShape{KleinianFamily::E, arms[2] + 4};
    return std::nullopt;
}

Classification classify(const WeightedDualGraph& g, const CanonicalCycle& z) {
    Classification c;
    c.is_numerically_gorenstein = is_numerically_gorenstein(z);

    Rational min_k = z.discrepancies.begin()->second;
    for (const auto& [id, k] : z.discrepancies)
        if (k < min_k) min_k = k;
    c.is_log_canonical = min_k >= Rational(-1);

    c.kleinian_type = recognize_ade(g);
    c.is_kleinian = c.kleinian_type.has_value();

    const auto& vs = g.vertices();
    if (vs.size() == 1) {
        c.is_simple_elliptic = vs.front().genus == 1;
    } else {
        bool rational_circle = g.connected() && g.first_betti() == 1;
        for (const Vertex& v : vs)
            rational_circle = rational_circle && v.genus == 0 && g.valency(v.id) == 2;
        c.is_cusp = rational_circle;
    }
    return c;
}

namespace {

VeysReport not_applicable(const std::string& why) {
    VeysReport rep;
    rep.holds = true;
    rep.applicable = false;
    rep.note = "not applicable: " + why;
    return rep;
}

// Gate shared by both structure checks; returns a report when vacuous.
std::optional<VeysReport> applicability_gate(const WeightedDualGraph& g, const CanonicalCycle& z) {
    if (!g.connected()) return not_applicable("graph is not connected");
    if (!is_minimal_good(g)) return not_applicable("graph is not a minimal good model");
    bool lc = true;
    for (const auto& [id, k] : z.discrepancies) {
        (void)id;
        lc = lc && k >= Rational(-1);
    }
    if (lc) return not_applicable("graph is log canonical");
    return std::nullopt;
}

std::set<int> core_vertices(const CanonicalCycle& z) {
    std::set<int> v_minus;
    for (const auto& [id, k] : z.discrepancies)
        if (k < Rational(-1)) v_minus.insert(id);
    return v_minus;
}

std::vector<std::vector<int>> induced_components(const WeightedDualGraph& g,
                                                 const std::set<int>& keep) {
    std::vector<std::vector<int>> components;
    std::set<int> seen;
    for (int start : keep) {
        if (seen.count(start)) continue;
        std::vector<int> comp, stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            comp.push_back(cur);
            for (auto [nb, mult] : g.neighbors(cur)) {
                (void)mult;
                if (keep.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    stack.push_back(nb);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::string ids_str(const std::vector<int>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i)
        s += (i ? "," : "") + std::to_string(ids[i]);
    return s + "}";
}

} // namespace

VeysReport verify_veys(const WeightedDualGraph& g, const CanonicalCycle& z) {
    if (auto gated = applicability_gate(g, z)) return *gated;

    VeysReport rep;
    rep.applicable = true;
    rep.v_minus = core_vertices(z);

    // (1) the core is connected
    const auto core_comps = induced_components(g, rep.v_minus);
    if (core_comps.size() != 1)
        rep.violations.push_back({"core-connected", "V-",
                                  "subgraph on k < -1 splits into " +
                                      std::to_string(core_comps.size()) + " components"});

    // (3) strict negativity everywhere
    for (const auto& [id, k] : z.discrepancies)
        if (k.sign() >= 0)
            rep.violations.push_back({"negativity", "vertex " + std::to_string(id),
                                      "discrepancy " + k.str() + " is not negative"});

    // (2) the complement splits into strictly increasing rational segments
    std::set<int> complement;
    for (const Vertex& v : g.vertices())
        if (!rep.v_minus.count(v.id)) complement.insert(v.id);

    for (const std::vector<int>& seg : induced_components(g, complement)) {
        const std::string where = "segment " + ids_str(seg);

        for (int id : seg)
            if (g.vertex(id).genus != 0)
                rep.violations.push_back({"segment-rational", where,
                                          "vertex " + std::to_string(id) + " has genus " +
                                              std::to_string(g.vertex(id).genus)});

        // Shape: a simple path, i.e. a tree with every inner valency <= 2.
        std::map<int, long> inner_val;
        long inner_mult = 0;
        for (int id : seg) {
            long val = 0;
            for (auto [nb, mult] : g.neighbors(id))
                if (complement.count(nb)) val += mult;
            inner_val[id] = val;
            inner_mult += val;
        }
        inner_mult /= 2;
        bool path_shape = inner_mult == static_cast<long>(seg.size()) - 1;
        for (auto [id, val] : inner_val) path_shape = path_shape && val <= 2;
        if (!path_shape) {
            rep.violations.push_back({"segment-shape", where, "not a simple path"});
            continue;
        }

        // Attachment: exactly one edge into the core, at an end of the path.
        long attach_total = 0;
        int attach_vertex = -1;
        for (int id : seg) {
            for (auto [nb, mult] : g.neighbors(id)) {
                if (rep.v_minus.count(nb)) {
                    attach_total += mult;
                    attach_vertex = id;
                }
            }
        }
        if (attach_total != 1) {
            rep.violations.push_back({"segment-attachment", where,
                                      "attached to the core by " + std::to_string(attach_total) +
                                          " edges, expected exactly 1"});
            continue;
        }
        if (inner_val[attach_vertex] > 1) {
            rep.violations.push_back({"segment-attachment", where,
                                      "attached to the core at an interior vertex " +
                                          std::to_string(attach_vertex)});
            continue;
        }

        // Monotonicity: discrepancies strictly increase away from the core.
        int prev = -1;
        int cur = attach_vertex;
        while (true) {
            int next = -1;
            for (auto [nb, mult] : g.neighbors(cur)) {
                (void)mult;
                if (complement.count(nb) && nb != prev) next = nb;
            }
            if (next < 0) break;
            if (!(z.discrepancy(cur) < z.discrepancy(next))) {
                rep.violations.push_back(
                    {"segment-monotone", where,
                     "discrepancies not strictly increasing at " + std::to_string(cur) + " -> " +
                         std::to_string(next) + " (" + z.discrepancy(cur).str() + " -> " +
                         z.discrepancy(next).str() + ")"});
                break;
            }
            prev = cur;
            cur = next;
        }
    }

    rep.holds = rep.violations.empty();
    return rep;
}

VeysReport verify_corollaries(const WeightedDualGraph& g, const CanonicalCycle& z) {
    if (auto gated = applicability_gate(g, z)) return *gated;

    VeysReport rep;
    rep.applicable = true;
    rep.v_minus = core_vertices(z);

    for (const Vertex& v : g.vertices()) {
        if (z.discrepancy(v.id) != Rational(-1)) continue;
        const std::string where = "vertex " + std::to_string(v.id);

        if (v.genus != 0)
            rep.violations.push_back({"minus-one-rational", where,
                                      "k = -1 vertex has genus " + std::to_string(v.genus)});

        // Neighbor slots, one per parallel edge.
        std::vector<int> slots;
        for (auto [nb, mult] : g.neighbors(v.id))
            for (int l = 0; l < mult; ++l) slots.push_back(nb);

        if (slots.size() == 1) {
            const Rational& kj = z.discrepancy(slots[0]);
            if (kj != Rational(-2))
                rep.violations.push_back({"minus-one-valency1-neighbor", where,
                                          "neighbor " + std::to_string(slots[0]) +
                                              " has k = " + kj.str() + ", expected -2"});
        } else if (slots.size() == 2) {
            const Rational& k1 = z.discrepancy(slots[0]);
            const Rational& k2 = z.discrepancy(slots[1]);
            if (k1 + k2 != Rational(-2))
                rep.violations.push_back({"minus-one-valency2-sum", where,
                                          "neighbor discrepancies " + k1.str() + " + " + k2.str() +
                                              " do not sum to -2"});
            if (k1 == Rational(-1) || k2 == Rational(-1))
                rep.violations.push_back({"minus-one-valency2-neighbor", where,
                                          "a neighbor of a k = -1 vertex has k = -1"});
        } else {
            rep.violations.push_back({"minus-one-valency", where,
                                      "k = -1 vertex has valency " + std::to_string(slots.size()) +
                                          ", expected 1 or 2"});
        }
    }

    for (const GraphEdge& e : g.edges())
        if (z.discrepancy(e.a) == Rational(-1) && z.discrepancy(e.b) == Rational(-1))
            rep.violations.push_back({"adjacent-minus-ones",
                                      "edge {" + std::to_string(e.a) + "," + std::to_string(e.b) + "}",
                                      "two adjacent vertices both have k = -1"});

    rep.holds = rep.violations.empty();
    return rep;
}

nlohmann::json classification_to_json(const Classification& c) {
    nlohmann::json j;
    j["kleinian"] = c.is_kleinian;
    j["kleinian_type"] = c.kleinian_type ? nlohmann::json(c.kleinian_type->str()) : nlohmann::json();
    j["cusp"] = c.is_cusp;
    j["simple_elliptic"] = c.is_simple_elliptic;
    j["log_canonical"] = c.is_log_canonical;
    j["numerically_gorenstein"] = c.is_numerically_gorenstein;
    return j;
}

nlohmann::json veys_report_to_json(const VeysReport& r) {
    nlohmann::json j;
    j["holds"] = r.holds;
    j["applicable"] = r.applicable;
    j["note"] = r.note;
    j["v_minus"] = r.v_minus;
    j["violations"] = nlohmann::json::array();
    for (const VeysViolation& v : r.violations)
        j["violations"].push_back({{"rule", v.rule}, {"where", v.where}, {"message", v.message}});
    return j;
}

} // namespace plumbcert
