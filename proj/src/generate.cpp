#include "plumbcert/generate.hpp"

#include <random>

namespace plumbcert {

namespace {

// Bounded draw via modulo; bias is irrelevant here and the output is
// platform-independent, unlike std::uniform_int_distribution.
std::uint64_t draw(std::mt19937_64& eng, std::uint64_t bound) { return eng() % bound; }

} // namespace

WeightedDualGraph make_ade(char family, int n) {
    std::vector<Vertex> vertices;
    std::vector<GraphEdge> edges;
    auto add_vertex = [&vertices](int id) { vertices.push_back({id, 0, 2}); };

    switch (family) {
        case 'A':
        case 'a': {
            if (n < 1) throw BadParams("make_ade: A_n needs n >= 1");
            for (int i = 0; i < n; ++i) add_vertex(i);
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
            break;
        }
        case 'D':
        case 'd': {
            if (n < 4) throw BadParams("make_ade: D_n needs n >= 4");
            // Path 0..n-3 with the two prongs n-2, n-1 on vertex n-3.
            for (int i = 0; i < n; ++i) add_vertex(i);
            for (int i = 0; i + 1 < n - 2; ++i) edges.push_back({i, i + 1, 1});
            edges.push_back({n - 3, n - 2, 1});
            edges.push_back({n - 3, n - 1, 1});
            break;
        }
        case 'E':
        case 'e': {
            if (n < 6 || n > 8) throw BadParams("make_ade: E_n needs n in {6,7,8}");
            // Fork at 0 with arms of 1, 2 and n-4 vertices.
            for (int i = 0; i < n; ++i) add_vertex(i);
            edges.push_back({0, 1, 1});
            edges.push_back({0, 2, 1});
            edges.push_back({2, 3, 1});
            edges.push_back({0, 4, 1});
            for (int i = 4; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
            break;
        }
        default:
            throw BadParams("make_ade: family must be one of A, D, E");
    }
    return WeightedDualGraph::create(std::move(vertices), std::move(edges));
}

WeightedDualGraph make_cusp_cycle(int length, int euler) {
    if (length < 2) throw BadParams("make_cusp_cycle: length must be >= 2");
    if (euler < 3) throw BadParams("make_cusp_cycle: euler must be >= 3");
    std::vector<Vertex> vertices;
    std::vector<GraphEdge> edges;
    for (int i = 0; i < length; ++i) vertices.push_back({i, 0, euler});
    if (length == 2) {
        edges.push_back({0, 1, 2});
    } else {
        for (int i = 0; i < length; ++i) edges.push_back({i, (i + 1) % length, 1});
    }
    return WeightedDualGraph::create(std::move(vertices), std::move(edges));
}

WeightedDualGraph make_simple_elliptic(int euler) {
    if (euler < 1) throw BadParams("make_simple_elliptic: euler must be >= 1");
    return WeightedDualGraph::create({{0, 1, euler}}, {});
}

WeightedDualGraph make_random_negative_definite(std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    const int n = 1 + static_cast<int>(draw(eng, 9)); // 1..9 vertices

    // Genus bag weighted toward small values but with enough genus >= 2
    // mass that most multi-vertex graphs leave the log canonical range.
    static constexpr int genus_bag[] = {0, 0, 0, 0, 1, 1, 2, 3};
    auto pick_genus = [&eng]() { return genus_bag[draw(eng, 8)]; };

    std::vector<Vertex> vertices;
    std::vector<GraphEdge> edges;

    if (n == 1) {
        const int genus = pick_genus();
        const int min_euler = genus == 0 ? 2 : 1; // euler 1 on a rational vertex is not minimal
        vertices.push_back({0, genus, min_euler + static_cast<int>(draw(eng, 5))});
        return WeightedDualGraph::create(std::move(vertices), std::move(edges));
    }

    // Random spanning tree, then occasional extra multiplicity and chords.
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    for (int v = 1; v < n; ++v) {
        const int parent = static_cast<int>(draw(eng, static_cast<std::uint64_t>(v)));
        mult[parent][v] = mult[v][parent] = 1;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mult[a][b] == 1 && draw(eng, 6) == 0) mult[a][b] = mult[b][a] = 2;
    const int chords = static_cast<int>(draw(eng, 3)); // 0..2 extra edges
    for (int c = 0; c < chords; ++c) {
        const int a = static_cast<int>(draw(eng, static_cast<std::uint64_t>(n)));
        const int b = static_cast<int>(draw(eng, static_cast<std::uint64_t>(n)));
        if (a != b && mult[a][b] == 0) mult[a][b] = mult[b][a] = 1;
    }

    for (int v = 0; v < n; ++v) {
        int incident = 0;
        for (int u = 0; u < n; ++u) incident += mult[v][u];
        // Strict dominance: euler exceeds the total incident multiplicity.
        vertices.push_back({v, pick_genus(), incident + 1 + static_cast<int>(draw(eng, 4))});
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mult[a][b] > 0) edges.push_back({a, b, mult[a][b]});

    return WeightedDualGraph::create(std::move(vertices), std::move(edges));
}

std::vector<WeightedDualGraph> make_random_batch(std::uint64_t seed, std::size_t count) {
    std::vector<WeightedDualGraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // splitmix64-style per-graph seed derivation
        std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
        s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ULL;
        s = (s ^ (s >> 27)) * 0x94d049bb133111ebULL;
        out.push_back(make_random_negative_definite(s ^ (s >> 31)));
    }
    return out;
}

} // namespace plumbcert
