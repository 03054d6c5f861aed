#pragma once

#include <optional>
#include <vector>

#include "mldist/prefdigraph.hpp"

namespace mldist {

// Arc ids (indices into the digraph's arc list), sorted ascending.
struct ArcSet {
    std::vector<int> arc_ids;

    std::size_t size() const { return arc_ids.size(); }
};

// True if the digraph has no directed cycle (parallel arcs collapse).
bool is_acyclic(const PreferenceDigraph& d);

// Minimum feedback arc set of size <= budget, or nullopt. Branch and bound on
// shortest cycles; among minimum solutions returns the lexicographically
// smallest by sorted arc ids.
std::optional<ArcSet> min_fas(const PreferenceDigraph& d, int budget);

// Minimum arc set hitting every cycle that contains a strict arc, within
// budget; same search and tie-break as min_fas.
std::optional<ArcSet> min_strict_hitting(const PreferenceDigraph& d, int budget);

namespace fas_detail {

struct FlatArc {
    int from;
    int to;
    bool strict;
};

// Minimum set of arc ids hitting every cycle that contains a strict arc.
// Marking every arc strict turns this into plain feedback arc set.
std::optional<std::vector<int>> min_strict_hitting_flat(int n,
                                                        const std::vector<FlatArc>& arcs,
                                                        int budget);

// Shortest cycle through at least one alive strict arc, as arc ids.
std::optional<std::vector<int>> shortest_strict_cycle_flat(int n,
                                                           const std::vector<FlatArc>& arcs,
                                                           const std::vector<char>& alive);

}  // namespace fas_detail

}  // namespace mldist
