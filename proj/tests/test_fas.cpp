#include "doctest.h"

#include <random>

#include "mldist/fas.hpp"
#include "mldist/generators.hpp"
#include "mldist/io.hpp"
#include "oracles.hpp"

using namespace mldist;
using testing_oracles::from_text;

namespace {

PreferenceDigraph raw(int n, std::vector<LabeledArc> arcs) {
    PreferenceDigraph d;
    d.n = n;
    for (int v = 0; v < n; ++v) d.names.push_back("n" + std::to_string(v));
    d.arcs = std::move(arcs);
    return d;
}

// label ids are unused by the solvers; -1 marks synthetic arcs
LabeledArc strict(int from, int to) { return {from, to, -1, ArcKind::Strict}; }
LabeledArc tied(int from, int to) { return {from, to, -1, ArcKind::Tied}; }

}  // namespace

TEST_CASE("is_acyclic") {
    CHECK(is_acyclic(raw(3, {})));
    CHECK_FALSE(is_acyclic(raw(2, {strict(0, 1), strict(1, 0)})));
    CHECK_FALSE(is_acyclic(build_digraph(gen_four_cycles(1))));
    CHECK(is_acyclic(raw(3, {strict(0, 1), strict(1, 2), strict(0, 2)})));
}

TEST_CASE("min_fas on small digraphs") {
    auto acyclic = min_fas(raw(3, {strict(0, 1), strict(1, 2)}), 0);
    REQUIRE(acyclic);
    CHECK(acyclic->arc_ids.empty());

    PreferenceDigraph two = raw(2, {strict(0, 1), strict(1, 0)});
    CHECK_FALSE(min_fas(two, 0));
    auto one = min_fas(two, 1);
    REQUIRE(one);
    CHECK(one->arc_ids == std::vector<int>{0});  // lexicographically first

    PreferenceDigraph tri = raw(3, {strict(0, 1), strict(1, 0), strict(1, 2), strict(2, 1),
                                    strict(0, 2), strict(2, 0)});
    auto best = min_fas(tri, 6);
    REQUIRE(best);
    CHECK(best->arc_ids.size() == 3);
    std::vector<std::pair<int, int>> plain;
    for (const auto& a : tri.arcs) plain.push_back({a.from, a.to});
    CHECK(testing_oracles::brute_force_min_fas(3, plain) == 3);
}

TEST_CASE("min_strict_hitting on small digraphs") {
    auto nothing = min_strict_hitting(raw(2, {tied(0, 1), tied(1, 0)}), 0);
    REQUIRE(nothing);
    CHECK(nothing->arc_ids.empty());

    PreferenceDigraph mixed = raw(2, {strict(0, 1), tied(1, 0)});
    CHECK_FALSE(min_strict_hitting(mixed, 0));
    auto one = min_strict_hitting(mixed, 1);
    REQUIRE(one);
    CHECK(one->arc_ids.size() == 1);
}

TEST_CASE("with only strict arcs, hitting equals the feedback arc set") {
    std::mt19937_64 seeds(43);
    for (int trial = 0; trial < 30; ++trial) {
        PreferenceDigraph d = build_digraph(gen_random(5, 0.7, 0.0, seeds()));
        auto h = min_strict_hitting(d, static_cast<int>(d.arcs.size()));
        auto f = min_fas(d, static_cast<int>(d.arcs.size()));
        REQUIRE(h);
        REQUIRE(f);
        CHECK(h->arc_ids == f->arc_ids);
    }
}

TEST_CASE("hitting strict cycles is never harder than a full feedback arc set") {
    std::mt19937_64 seeds(37);
    for (int trial = 0; trial < 60; ++trial) {
        PreferenceDigraph d = build_digraph(gen_random(5, 0.7, 0.5, seeds()));
        auto h = min_strict_hitting(d, static_cast<int>(d.arcs.size()));
        auto f = min_fas(d, static_cast<int>(d.arcs.size()));
        REQUIRE(h);
        REQUIRE(f);
        CHECK(h->arc_ids.size() <= f->arc_ids.size());
    }
}

TEST_CASE("solvers match the brute force on random digraphs with few arcs") {
    std::mt19937_64 seeds(41);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + static_cast<int>(seeds() % 4);
        std::vector<LabeledArc> arcs;
        int m = static_cast<int>(seeds() % 9);
        for (int k = 0; k < m; ++k) {
            int from = static_cast<int>(seeds() % n);
            int to = static_cast<int>(seeds() % n);
            if (from == to) continue;
            arcs.push_back({from, to, -1, (seeds() % 3 == 0) ? ArcKind::Tied : ArcKind::Strict});
        }
        PreferenceDigraph d = raw(n, arcs);

        std::vector<std::pair<int, int>> plain;
        std::vector<testing_oracles::FlatArcRef> flat;
        for (const auto& a : d.arcs) {
            plain.push_back({a.from, a.to});
            flat.push_back({a.from, a.to, a.kind == ArcKind::Strict});
        }

        auto f = min_fas(d, static_cast<int>(arcs.size()));
        REQUIRE(f);
        CHECK(static_cast<int>(f->arc_ids.size()) ==
              testing_oracles::brute_force_min_fas(n, plain));

        auto h = min_strict_hitting(d, static_cast<int>(arcs.size()));
        REQUIRE(h);
        CHECK(static_cast<int>(h->arc_ids.size()) ==
              testing_oracles::brute_force_min_strict_hitting(n, flat));

        // removing the returned sets leaves nothing bad behind
        std::vector<char> alive(arcs.size(), 1);
        for (int id : f->arc_ids) alive[static_cast<std::size_t>(id)] = 0;
        CHECK(testing_oracles::digraph_acyclic(n, plain, alive));

        std::vector<char> alive_h(arcs.size(), 1);
        for (int id : h->arc_ids) alive_h[static_cast<std::size_t>(id)] = 0;
        CHECK_FALSE(testing_oracles::has_strict_cycle(n, flat, alive_h));
    }
}

TEST_CASE("budget semantics") {
    PreferenceDigraph d = build_digraph(gen_four_cycles(2));
    CHECK_FALSE(min_fas(d, 3));  // needs four deletions
    auto ok = min_fas(d, 4);
    REQUIRE(ok);
    CHECK(ok->arc_ids.size() == 4);
}

TEST_CASE("canonical minimum is the lexicographically smallest") {
    // two disjoint 2-cycles admit four minimum solutions
    PreferenceDigraph d =
        raw(4, {strict(0, 1), strict(1, 0), strict(2, 3), strict(3, 2)});
    auto best = min_fas(d, 4);
    REQUIRE(best);
    CHECK(best->arc_ids == std::vector<int>{0, 2});
}
