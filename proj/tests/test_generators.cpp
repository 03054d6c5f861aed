#include "doctest.h"

#include <random>

#include "mldist/distances.hpp"
#include "mldist/generators.hpp"
#include "mldist/io.hpp"
#include "mldist/matching.hpp"
#include "oracles.hpp"

using namespace mldist;

namespace {

long long binomial(int n, int k) {
    long long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

}  // namespace

TEST_CASE("gen_four_cycles") {
    CHECK(gen_four_cycles(0).num_vertices() == 0);

    PreferenceSystem i1 = gen_four_cycles(1);
    CHECK(i1.num_vertices() == 4);
    CHECK(i1.num_edges() == 4);
    CHECK(enum_stable(i1).size() == 2);

    PreferenceSystem i3 = gen_four_cycles(3);
    auto e = delta_edge_exact(i3, 3);
    REQUIRE(e);
    CHECK(e->edges.size() == 3);
    auto s = delta_swap(i3, 6);
    REQUIRE(s);
    CHECK(s->value == 6);
}

TEST_CASE("gen_jkn shape and stable counts") {
    CHECK_THROWS_AS(gen_jkn(3, 2), InvalidParamsError);
    CHECK_THROWS_AS(gen_jkn(0, 2), InvalidParamsError);

    PreferenceSystem j12 = gen_jkn(1, 2);
    CHECK(j12.num_vertices() == 4);
    CHECK(enum_stable(j12).size() == 2);

    PreferenceSystem j35 = gen_jkn(3, 5);
    CHECK(j35.num_vertices() == 10);
    CHECK(enum_stable(j35).size() == 10);

    CHECK(enum_stable(gen_jkn(2, 4)).size() == 6);
}

TEST_CASE("gen_jkn stable counts match the brute force for small parameters") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= n; ++k) {
            PreferenceSystem j = gen_jkn(k, n);
            auto stable = brute_force_stable(j);
            CHECK(static_cast<long long>(stable.size()) == binomial(n, k));
            CHECK(enum_stable(j) == stable);
        }
    }
}

TEST_CASE("reduce_fas_to_ml") {
    RawDigraph none;
    none.names = {"p", "q"};
    PreferenceSystem trivial = reduce_fas_to_ml(none);
    CHECK(trivial.num_edges() == 0);
    CHECK(admits_master_list(trivial).has_value());

    RawDigraph two_cycle;
    two_cycle.names = {"p", "q"};
    two_cycle.arcs = {{0, 1}, {1, 0}};
    PreferenceSystem i = reduce_fas_to_ml(two_cycle);
    auto s = delta_swap(i, 10);
    auto e = delta_edge_exact(i, 10);
    REQUIRE(s);
    REQUIRE(e);
    CHECK(s->value == 1);
    CHECK(e->edges.size() == 1);

    RawDigraph dag;
    dag.names = {"p", "q", "r"};
    dag.arcs = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(admits_master_list(reduce_fas_to_ml(dag)).has_value());

    RawDigraph loop;
    loop.names = {"p"};
    loop.arcs = {{0, 0}};
    CHECK_THROWS_AS(reduce_fas_to_ml(loop), InvalidParamsError);
}

TEST_CASE("reduce_hitting_set_to_mlvd") {
    HittingSetInstance empty;
    empty.universe = {"u", "w"};
    PreferenceSystem nothing = reduce_hitting_set_to_mlvd(empty);
    CHECK(admits_master_list(nothing).has_value());
    auto zero = delta_vert_exact(nothing, 0);
    REQUIRE(zero);
    CHECK(zero->vertices.empty());

    // single singleton set: the gadget forces one deletion
    HittingSetInstance singleton;
    singleton.universe = {"u"};
    singleton.sets = {{0}};
    PreferenceSystem forced = reduce_hitting_set_to_mlvd(singleton);
    CHECK_FALSE(admits_master_list(forced));
    auto one = delta_vert_exact(forced, forced.num_vertices());
    REQUIRE(one);
    CHECK(one->vertices.size() == 1);

    HittingSetInstance pair_sets;
    pair_sets.universe = {"1", "2", "3"};
    pair_sets.sets = {{0, 1}, {1, 2}};
    auto hit = delta_vert_exact(reduce_hitting_set_to_mlvd(pair_sets), 5);
    REQUIRE(hit);
    CHECK(hit->vertices.size() == 1);

    HittingSetInstance bad;
    bad.universe = {"u"};
    bad.sets = {{}};
    CHECK_THROWS_AS(reduce_hitting_set_to_mlvd(bad), InvalidParamsError);
}

TEST_CASE("hitting-set reduction matches the brute force on random families") {
    std::mt19937_64 seeds(127);
    for (int trial = 0; trial < 20; ++trial) {
        int u = 2 + static_cast<int>(seeds() % 4);
        HittingSetInstance h;
        for (int x = 0; x < u; ++x) h.universe.push_back("u" + std::to_string(x + 1));
        int m = 1 + static_cast<int>(seeds() % 3);
        for (int s = 0; s < m; ++s) {
            std::vector<int> set;
            for (int x = 0; x < u; ++x)
                if (seeds() % 2) set.push_back(x);
            if (set.empty()) set.push_back(static_cast<int>(seeds() % u));
            h.sets.push_back(set);
        }
        PreferenceSystem i = reduce_hitting_set_to_mlvd(h);
        auto r = delta_vert_exact(i, i.num_vertices());
        REQUIRE(r);
        CHECK(static_cast<int>(r->vertices.size()) ==
              testing_oracles::brute_force_min_hitting_set(h));
    }
}

TEST_CASE("gen_random") {
    CHECK(gen_random(0, 0.5, 0.5, 1).num_vertices() == 0);
    CHECK(gen_random(5, 0.0, 0.5, 1).num_edges() == 0);

    PreferenceSystem complete = gen_random(5, 1.0, 0.0, 42);
    CHECK(complete.num_edges() == 10);
    CHECK(complete.is_strict());

    CHECK(serialize_instance(gen_random(6, 0.5, 0.3, 7)) ==
          serialize_instance(gen_random(6, 0.5, 0.3, 7)));
    CHECK(serialize_instance(gen_random(6, 0.5, 0.3, 7)) !=
          serialize_instance(gen_random(6, 0.5, 0.3, 8)));

    CHECK_THROWS_AS(gen_random(3, 1.5, 0.0, 1), InvalidParamsError);
}

TEST_CASE("generated instances always pass symmetry validation") {
    // construction succeeding is the check: create() validates symmetry
    std::mt19937_64 seeds(131);
    for (int trial = 0; trial < 20; ++trial) {
        gen_random(7, 0.5, 0.4, seeds());
        gen_four_cycles(static_cast<int>(seeds() % 4));
        int n = 1 + static_cast<int>(seeds() % 4);
        int k = 1 + static_cast<int>(seeds() % n);
        gen_jkn(k, n);
    }
}
