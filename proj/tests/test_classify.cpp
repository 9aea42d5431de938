#include <doctest.h>

#include "plumbcert/classify.hpp"
#include "plumbcert/generate.hpp"

using namespace plumbcert;

namespace {

WeightedDualGraph single(int genus, int euler) {
    return WeightedDualGraph::create({{0, genus, euler}}, {});
}

Classification classify_graph(const WeightedDualGraph& g) {
    return classify(g, canonical_cycle(g));
}

} // namespace

TEST_CASE("single (-2)-vertex is Kleinian A_1") {
    const auto c = classify_graph(single(0, 2));
    CHECK(c.is_kleinian);
    REQUIRE(c.kleinian_type.has_value());
    CHECK(c.kleinian_type->str() == "A_1");
    CHECK(c.is_log_canonical);
    CHECK(c.is_numerically_gorenstein);
    CHECK_FALSE(c.is_cusp);
    CHECK_FALSE(c.is_simple_elliptic);
}

TEST_CASE("triangle of (-3)-curves is a cusp with k = -1") {
    const auto g = make_cusp_cycle(3, 3);
    const auto z = canonical_cycle(g);
    for (const auto& [id, k] : z.discrepancies) {
        (void)id;
        CHECK(k == Rational(-1));
    }
    const auto c = classify(g, z);
    CHECK(c.is_cusp);
    CHECK(c.is_log_canonical);
    CHECK(c.is_numerically_gorenstein);
    CHECK_FALSE(c.is_kleinian);
}

TEST_CASE("two-vertex cycle (double edge) is a cusp") {
    CHECK(classify_graph(make_cusp_cycle(2, 3)).is_cusp);
}

TEST_CASE("single genus-1 vertex is simple elliptic") {
    const auto z = canonical_cycle(single(1, 1));
    CHECK(z.discrepancy(0) == Rational(-1));
    const auto c = classify(single(1, 1), z);
    CHECK(c.is_simple_elliptic);
    CHECK(c.is_log_canonical);
    CHECK_FALSE(c.is_cusp);
}

TEST_CASE("single genus-2 vertex is none of the classes and not log canonical") {
    const auto z = canonical_cycle(single(2, 1));
    CHECK(z.discrepancy(0) == Rational(-3));
    const auto c = classify(single(2, 1), z);
    CHECK_FALSE(c.is_kleinian);
    CHECK_FALSE(c.is_cusp);
    CHECK_FALSE(c.is_simple_elliptic);
    CHECK_FALSE(c.is_log_canonical);
    CHECK(c.is_numerically_gorenstein);
}

TEST_CASE("ADE shape recognition matches the zero-discrepancy oracle up to n = 12") {
    auto check_shape = [](char family, int n, const std::string& want) {
        const auto g = make_ade(family, n);
        const auto shape = recognize_ade(g);
        REQUIRE(shape.has_value());
        CHECK(shape->str() == want);
        // independent oracle: discrepancies vanish identically
        const auto z = canonical_cycle(g);
        for (const auto& [id, k] : z.discrepancies) {
            (void)id;
            CHECK(k == Rational(0));
        }
        CHECK(z.topological_index == 1);
    };
    for (int n = 1; n <= 12; ++n) check_shape('A', n, "A_" + std::to_string(n));
    for (int n = 4; n <= 12; ++n) check_shape('D', n, "D_" + std::to_string(n));
    for (int n = 6; n <= 8; ++n) check_shape('E', n, "E_" + std::to_string(n));
}

TEST_CASE("shape recognizer rejects near misses") {
    // wrong euler weight
    CHECK_FALSE(recognize_ade(single(0, 3)).has_value());
    // wrong genus
    CHECK_FALSE(recognize_ade(single(1, 2)).has_value());
    // multiplicity-2 edge
    CHECK_FALSE(recognize_ade(WeightedDualGraph::create({{0, 0, 2}, {1, 0, 2}}, {{0, 1, 2}}))
                    .has_value());
    // two forks (not any A/D/E shape)
    const auto two_forks = WeightedDualGraph::create(
        {{0, 0, 2}, {1, 0, 2}, {2, 0, 2}, {3, 0, 2}, {4, 0, 2}, {5, 0, 2}, {6, 0, 2}, {7, 0, 2}},
        {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {3, 4, 1}, {4, 5, 1}, {4, 6, 1}, {6, 7, 1}});
    CHECK_FALSE(recognize_ade(two_forks).has_value());
    // degree-4 star
    const auto star4 = WeightedDualGraph::create(
        {{0, 0, 2}, {1, 0, 2}, {2, 0, 2}, {3, 0, 2}, {4, 0, 2}},
        {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
    CHECK_FALSE(recognize_ade(star4).has_value());
    // arm profile (2,2,2) is no E diagram
    const auto e6_tilde_shape = WeightedDualGraph::create(
        {{0, 0, 2}, {1, 0, 2}, {2, 0, 2}, {3, 0, 2}, {4, 0, 2}, {5, 0, 2}, {6, 0, 2}},
        {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 4, 1}, {0, 5, 1}, {5, 6, 1}});
    CHECK_FALSE(recognize_ade(e6_tilde_shape).has_value());
}

TEST_CASE("class equivalence over the generated corpus") {
    // numerically Gorenstein and log canonical iff Kleinian, cusp or
    // simple elliptic
    std::vector<WeightedDualGraph> corpus = make_random_batch(5150, 300);
    for (int n = 1; n <= 8; ++n) corpus.push_back(make_ade('A', n));
    for (int n = 4; n <= 8; ++n) corpus.push_back(make_ade('D', n));
    for (int n = 6; n <= 8; ++n) corpus.push_back(make_ade('E', n));
    for (int len = 2; len <= 6; ++len) corpus.push_back(make_cusp_cycle(len, 3));
    corpus.push_back(make_simple_elliptic(2));

    for (const auto& g : corpus) {
        const auto z = canonical_cycle(g);
        const auto c = classify(g, z);
        const bool lhs = c.is_numerically_gorenstein && c.is_log_canonical;
        const bool rhs = c.is_kleinian || c.is_cusp || c.is_simple_elliptic;
        CHECK(lhs == rhs);
        // flag implications
        int specific = int(c.is_kleinian) + int(c.is_cusp) + int(c.is_simple_elliptic);
        CHECK(specific <= 1);
        if (rhs) CHECK(c.is_log_canonical);
        if (c.is_kleinian) CHECK(c.is_numerically_gorenstein);
    }
}

TEST_CASE("structure check on a one-vertex core") {
    const auto g = single(2, 1);
    const auto rep = verify_veys(g, canonical_cycle(g));
    CHECK(rep.applicable);
    CHECK(rep.holds);
    CHECK(rep.v_minus == std::set<int>{0});
    CHECK(rep.violations.empty());
}

TEST_CASE("structure check is vacuous on log canonical input") {
    const auto g = single(0, 3);
    const auto rep = verify_veys(g, canonical_cycle(g));
    CHECK_FALSE(rep.applicable);
    CHECK(rep.holds);
    CHECK(rep.note.find("log canonical") != std::string::npos);
}

TEST_CASE("structure check is vacuous on non-minimal input") {
    const auto g = single(0, 1); // k = +1, a (-1)-vertex
    const auto rep = verify_veys(g, canonical_cycle(g));
    CHECK_FALSE(rep.applicable);
    CHECK(rep.holds);
}

TEST_CASE("corollary check accepts a genuine k = (-1, -2) chain") {
    const auto g = WeightedDualGraph::create({{0, 0, 2}, {1, 2, 3}}, {{0, 1, 1}});
    const auto z = canonical_cycle(g);
    REQUIRE(z.discrepancy(0) == Rational(-1));
    REQUIRE(z.discrepancy(1) == Rational(-2));
    const auto rep = verify_corollaries(g, z);
    CHECK(rep.applicable);
    CHECK(rep.holds);
}

TEST_CASE("corollary check flags synthetic adjacent k = -1 vertices") {
    const auto g = WeightedDualGraph::create({{0, 0, 2}, {1, 0, 2}, {2, 0, 2}},
                                             {{0, 1, 1}, {1, 2, 1}});
    CanonicalCycle fake;
    fake.discrepancies[0] = Rational(-1);
    fake.discrepancies[1] = Rational(-1);
    fake.discrepancies[2] = Rational(-2);
    fake.topological_index = 1;
    const auto rep = verify_corollaries(g, fake);
    CHECK(rep.applicable);
    CHECK_FALSE(rep.holds);
    bool adjacency_flagged = false;
    for (const auto& v : rep.violations) adjacency_flagged |= v.rule == "adjacent-minus-ones";
    CHECK(adjacency_flagged);
    CHECK(rep.holds == rep.violations.empty());
}

TEST_CASE("each structure rule flags its synthetic counterexample") {
    auto fake_cycle = [](std::initializer_list<std::pair<int, Rational>> ks) {
        CanonicalCycle z;
        for (const auto& [id, k] : ks) z.discrepancies[id] = k;
        return z;
    };
    auto has_rule = [](const VeysReport& rep, const std::string& rule) {
        for (const auto& v : rep.violations)
            if (v.rule == rule) return true;
        return false;
    };

    SUBCASE("disconnected core") {
        const auto g = WeightedDualGraph::create(
            {{0, 0, 3}, {1, 0, 3}, {2, 0, 3}, {3, 0, 3}},
            {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
        const auto rep = verify_veys(
            g, fake_cycle({{0, Rational(-2)}, {1, Rational(-1, 2)}, {2, Rational(-2)},
                           {3, Rational(-1, 2)}}));
        CHECK(rep.applicable);
        CHECK(has_rule(rep, "core-connected"));
    }
    SUBCASE("non-negative discrepancy") {
        const auto g = WeightedDualGraph::create({{0, 0, 3}, {1, 0, 3}}, {{0, 1, 1}});
        const auto rep = verify_veys(g, fake_cycle({{0, Rational(-2)}, {1, Rational(1, 2)}}));
        CHECK(has_rule(rep, "negativity"));
    }
    SUBCASE("segment with decreasing discrepancies") {
        const auto g = WeightedDualGraph::create({{0, 0, 3}, {1, 0, 3}, {2, 0, 3}},
                                                 {{0, 1, 1}, {1, 2, 1}});
        const auto rep = verify_veys(
            g, fake_cycle({{0, Rational(-2)}, {1, Rational(-1, 2)}, {2, Rational(-3, 4)}}));
        CHECK(has_rule(rep, "segment-monotone"));
    }
    SUBCASE("segment attached by two edges") {
        const auto g = WeightedDualGraph::create({{0, 0, 3}, {1, 0, 3}, {2, 0, 3}},
                                                 {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
        const auto rep = verify_veys(
            g, fake_cycle({{0, Rational(-2)}, {1, Rational(-1, 2)}, {2, Rational(-1, 4)}}));
        CHECK(has_rule(rep, "segment-attachment"));
    }
    SUBCASE("segment that is not a simple path") {
        const auto g = WeightedDualGraph::create({{0, 0, 3}, {1, 0, 3}, {2, 0, 3}},
                                                 {{0, 1, 1}, {1, 2, 2}});
        const auto rep = verify_veys(
            g, fake_cycle({{0, Rational(-2)}, {1, Rational(-1, 2)}, {2, Rational(-1, 4)}}));
        CHECK(has_rule(rep, "segment-shape"));
    }
    SUBCASE("irrational segment vertex") {
        const auto g = WeightedDualGraph::create({{0, 0, 3}, {1, 1, 3}}, {{0, 1, 1}});
        const auto rep = verify_veys(g, fake_cycle({{0, Rational(-2)}, {1, Rational(-1, 2)}}));
        CHECK(has_rule(rep, "segment-rational"));
    }
}

TEST_CASE("both structure checks hold across the random corpus") {
    int applicable = 0;
    for (const auto& g : make_random_batch(8088, 300)) {
        const auto z = canonical_cycle(g);
        const auto veys = verify_veys(g, z);
        const auto cor = verify_corollaries(g, z);
        CHECK(veys.holds);
        CHECK(cor.holds);
        CHECK(veys.holds == veys.violations.empty());
        if (veys.applicable) ++applicable;
    }
    CHECK(applicable > 150); // the generator must feed the suite real instances
}
