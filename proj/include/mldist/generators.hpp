#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mldist/core.hpp"

namespace mldist {

// Unlabeled digraph input for the feedback-arc-set reduction. Parallel arcs
// are allowed, loops are not.
struct RawDigraph {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> arcs;
};

struct HittingSetInstance {
    std::vector<std::string> universe;
    std::vector<std::vector<int>> sets;  // indices into universe, non-empty
};

// k disjoint four-cycles with rotating preferences: each vertex prefers its
// clockwise neighbor to its counter-clockwise one. Vertices are named 1..4k.
PreferenceSystem gen_four_cycles(int k);

// The layered family on vertices a_1..a_n, b_1..b_{n-k}, s_1..s_k: every a_i
// is adjacent to all of S and to b_j for i-k <= j <= i; B ranks A by
// ascending index, S by descending index, and a_i interleaves
// b_i, s_1, b_{i-1}, s_2, ..., s_k, b_{i-k} (undefined entries omitted).
PreferenceSystem gen_jkn(int k, int n);

// One dummy vertex per arc (a,b), adjacent to a and b and preferring b;
// original vertices rank their dummies along a fixed order. The edge and
// swap distances of the result equal the digraph's minimum feedback arc set.
PreferenceSystem reduce_fas_to_ml(const RawDigraph& d);

// One agent per set slot, wired into a cyclic ordering conflict per set that
// only vertex deletions inside the set's gadget can resolve; the vertex
// deletion distance equals the minimum hitting set size. Singleton sets are
// padded with a fresh dummy element (the padded instance has the same
// minimum hitting set).
PreferenceSystem reduce_hitting_set_to_mlvd(const HittingSetInstance& h);

// Seeded random instance: each vertex pair becomes an edge with probability
// edge_prob, neighbor lists are random permutations, and adjacent positions
// merge into a tie with probability tie_prob. Deterministic per argument set.
PreferenceSystem gen_random(int n, double edge_prob, double tie_prob, std::uint64_t seed);

}  // namespace mldist
