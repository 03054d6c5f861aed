#include "doctest.h"

#include <random>

#include "mldist/generators.hpp"
#include "mldist/io.hpp"
#include "mldist/popular.hpp"
#include "oracles.hpp"

using namespace mldist;
using testing_oracles::from_text;

namespace {

Matching by_names(const PreferenceSystem& i,
                  std::initializer_list<std::pair<const char*, const char*>> pairs) {
    Matching m;
    for (const auto& [a, b] : pairs) m.push_back(make_edge(i.require(a), i.require(b)));
    std::sort(m.begin(), m.end());
    return m;
}

MupmicInstance unit_cost_instance(PreferenceSystem sys, std::mt19937_64& rng,
                                  long long max_utility, long long target,
                                  long long budget) {
    MupmicInstance inst;
    inst.system = std::move(sys);
    for (const Edge& e : inst.system.edges()) {
        inst.utility[e] = static_cast<long long>(rng() % (max_utility + 1));
        inst.cost[e] = 1;
    }
    inst.target = target;
    inst.budget = budget;
    return inst;
}

// definitional optimum: scan every matching, keep popular ones within budget
std::optional<long long> brute_force_mupmic(const MupmicInstance& inst) {
    std::optional<long long> best;
    for (const Matching& m : all_matchings(inst.system)) {
        long long utility = 0;
        for (const Edge& e : m) utility += inst.utility.at(e);
        if (utility < inst.target) continue;
        long long block_cost = 0;
        for (const Edge& e : blocking_edges(inst.system, m))
            block_cost += inst.cost.at(e);
        if (block_cost > inst.budget) continue;
        bool beaten = false;
        for (const Matching& rival : all_matchings(inst.system)) {
            VoteTally t = compare(inst.system, rival, m);
            if (t.for_first > t.for_second) beaten = true;
        }
        if (beaten) continue;
        if (!best || utility > *best) best = utility;
    }
    return best;
}

}  // namespace

TEST_CASE("compare") {
    PreferenceSystem single = from_text("a : b\nb : a\n");
    Matching both = by_names(single, {{"a", "b"}});
    VoteTally same = compare(single, both, both);
    CHECK(same.for_first == 0);
    CHECK(same.for_second == 0);

    VoteTally matched = compare(single, both, {});
    CHECK(matched.for_first == 2);
    CHECK(matched.for_second == 0);

    PreferenceSystem i1 = gen_four_cycles(1);
    VoteTally split = compare(i1, by_names(i1, {{"1", "2"}, {"3", "4"}}),
                              by_names(i1, {{"2", "3"}, {"4", "1"}}));
    CHECK(split.for_first == 2);
    CHECK(split.for_second == 2);
}

TEST_CASE("compare is antisymmetric") {
    std::mt19937_64 seeds(103);
    for (int trial = 0; trial < 20; ++trial) {
        PreferenceSystem i = gen_random(6, 0.6, 0.0, seeds());
        auto matchings = all_matchings(i);
        for (int pick = 0; pick < 10; ++pick) {
            const Matching& m1 = matchings[seeds() % matchings.size()];
            const Matching& m2 = matchings[seeds() % matchings.size()];
            VoteTally ab = compare(i, m1, m2);
            VoteTally ba = compare(i, m2, m1);
            CHECK(ab.for_first == ba.for_second);
            CHECK(ab.for_second == ba.for_first);
        }
    }
}

TEST_CASE("is_popular on tiny instances") {
    PreferenceSystem single = from_text("a : b\nb : a\n");
    CHECK(is_popular(single, by_names(single, {{"a", "b"}})));
    CHECK_FALSE(is_popular(single, {}));

    PreferenceSystem tri = from_text("a : b > c\nb : a > c\nc : a > b\n");
    auto ml = admits_master_list(tri);
    REQUIRE(ml);
    CHECK(is_popular(tri, unique_stable_ml(tri, *ml)));
}

TEST_CASE("exhaustive and weighted popularity modes agree") {
    std::mt19937_64 seeds(107);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(seeds() % 5);
        PreferenceSystem i = gen_random(n, 0.6, 0.0, seeds());
        for (const Matching& m : all_matchings(i)) {
            bool a = is_popular(i, m, PopularityMode::Exhaustive);
            bool b = is_popular(i, m, PopularityMode::WeightedMatching);
            CHECK(a == b);
        }
    }
}

TEST_CASE("mupmic validation") {
    MupmicInstance inst;
    inst.system = from_text("a : b\nb : a\n");
    inst.utility[make_edge(0, 1)] = 1;
    inst.cost[make_edge(0, 1)] = 0;  // must be at least one
    CHECK_THROWS_AS(inst.validate(), InvalidParamsError);
    inst.cost[make_edge(0, 1)] = 1;
    inst.validate();

    MupmicInstance missing;
    missing.system = from_text("a : b\nb : a\n");
    CHECK_THROWS_AS(missing.validate(), InvalidParamsError);
}

TEST_CASE("mupmic on a master-list instance with zero budget") {
    std::mt19937_64 rng(5);
    PreferenceSystem tri = from_text("a : b > c\nb : a > c\nc : a > b\n");
    MupmicInstance inst = unit_cost_instance(tri, rng, 5, 0, 0);
    auto r = solve_mupmic(inst, Modulator{std::vector<Edge>{}});
    REQUIRE(r);
    auto ml = admits_master_list(tri);
    CHECK(r->matching == unique_stable_ml(tri, *ml));
    CHECK(r->cost == 0);
    CHECK(is_popular(tri, r->matching));
}

TEST_CASE("mupmic is NONE when the target exceeds every utility") {
    std::mt19937_64 rng(6);
    MupmicInstance inst =
        unit_cost_instance(from_text("a : b\nb : a\n"), rng, 3, 1000, 2);
    CHECK_FALSE(solve_mupmic_auto(inst));
}

TEST_CASE("mupmic agrees with the brute force on random instances") {
    std::mt19937_64 seeds(109);
    int solved = 0, none = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(seeds() % 5);
        std::mt19937_64 rng(seeds());
        PreferenceSystem sys = gen_random(n, 0.5, 0.0, seeds());
        if (sys.num_edges() > 10) continue;
        long long target = static_cast<long long>(rng() % 8);
        long long budget = static_cast<long long>(rng() % 3);
        MupmicInstance inst = unit_cost_instance(sys, rng, 5, target, budget);

        auto expected = brute_force_mupmic(inst);
        auto got = solve_mupmic_auto(inst);
        CHECK(expected.has_value() == got.has_value());
        if (expected && got) {
            CHECK(got->utility == *expected);
            // post-hoc contract on the returned matching
            auto blocking = blocking_edges(inst.system, got->matching);
            long long cost = 0;
            for (const Edge& e : blocking) cost += inst.cost.at(e);
            CHECK(cost == got->cost);
            CHECK(cost <= inst.budget);
            CHECK(is_popular(inst.system, got->matching));
            ++solved;
        } else {
            ++none;
        }
    }
    CHECK(solved >= 5);
    CHECK(none >= 1);
}

TEST_CASE("mupmic answers are independent of the modulator") {
    std::mt19937_64 seeds(113);
    for (int trial = 0; trial < 10; ++trial) {
        std::mt19937_64 rng(seeds());
        PreferenceSystem sys = gen_random(5, 0.6, 0.0, seeds());
        if (sys.num_edges() > 9) continue;
        MupmicInstance inst = unit_cost_instance(
            sys, rng, 4, static_cast<long long>(rng() % 6), static_cast<long long>(rng() % 3));

        // any valid modulators will do; take the full edge set and vertex set
        auto with_edges = solve_mupmic(inst, Modulator{inst.system.edges()});
        std::vector<Vertex> everything;
        for (Vertex v = 0; v < inst.system.num_vertices(); ++v) everything.push_back(v);
        auto with_vertices = solve_mupmic(inst, Modulator{everything});
        auto automatic = solve_mupmic_auto(inst);

        CHECK(with_edges.has_value() == with_vertices.has_value());
        CHECK(with_edges.has_value() == automatic.has_value());
        if (with_edges && with_vertices && automatic) {
            CHECK(with_edges->utility == with_vertices->utility);
            CHECK(with_edges->utility == automatic->utility);
        }
    }
}
