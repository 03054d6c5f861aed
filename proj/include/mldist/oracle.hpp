#pragma once

#include <optional>
#include <vector>

#include "mldist/core.hpp"
#include "mldist/prefdigraph.hpp"

namespace mldist {

// Definitional brute-force counterparts of the solvers. These deliberately
// avoid the preference digraph: master-list existence is decided by trying
// every weak order over the vertex set.

// All weak orders over {0..n-1} as group lists, most preferred first.
std::vector<std::vector<std::vector<Vertex>>> all_weak_orders(int n);

// First weak order consistent with every vertex's preferences, or nullopt.
std::optional<MasterList> oracle_master_list(const PreferenceSystem& i, int vertex_cap = 7);

// Minimum swap distance to any instance derived from a weak order over V.
std::optional<long long> oracle_delta_swap(const PreferenceSystem& i, long long budget,
                                           int vertex_cap = 7);

std::optional<std::vector<Edge>> oracle_delta_edge(const PreferenceSystem& i, int budget,
                                                   int vertex_cap = 7, int edge_cap = 16);

std::optional<std::vector<Vertex>> oracle_delta_vert(const PreferenceSystem& i, int budget,
                                                     int vertex_cap = 7);

}  // namespace mldist
