#pragma once

#include <cstdint>
#include <vector>

#include "plumbcert/graph.hpp"

namespace plumbcert {

/// A_n (n >= 1), D_n (n >= 4) or E_n (n in {6,7,8}) tree with every vertex
/// genus 0 and euler 2. Throws BadParams on anything else.
WeightedDualGraph make_ade(char family, int n);

/// Cycle of `length` >= 2 rational vertices with the given euler weight
/// (>= 3, keeping the form negative definite); length 2 is a double edge.
WeightedDualGraph make_cusp_cycle(int length, int euler);

/// Single vertex of genus 1 with the given euler weight >= 1.
WeightedDualGraph make_simple_elliptic(int euler);

/// Deterministic random connected graph with euler weights strictly
/// dominating the incident edge multiplicity (which forces the intersection
/// form negative definite) and genera in 0..3. Identical seeds give
/// identical graphs. Every output is a minimal good model: the dominance
/// rule makes euler 1 possible only on an isolated vertex, and the
/// single-vertex draw starts at euler 2 for genus 0.
WeightedDualGraph make_random_negative_definite(std::uint64_t seed);

/// Batch helper: graph i is generated from a seed derived from (seed, i).
std::vector<WeightedDualGraph> make_random_batch(std::uint64_t seed, std::size_t count);

} // namespace plumbcert
