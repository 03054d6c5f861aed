#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mldist/core.hpp"
#include "mldist/prefdigraph.hpp"

namespace mldist {

// A matching is a sorted list of disjoint edges of the instance.
using Matching = std::vector<Edge>;

bool is_valid_matching(const PreferenceSystem& i, const Matching& m);

// Edges whose two endpoints are each unmatched or strictly prefer the other
// endpoint to their current partner.
std::vector<Edge> blocking_edges(const PreferenceSystem& i, const Matching& m);

// The unique stable matching of a strict instance consistent with a strict
// master list: scan the list from the most preferred vertex down, each
// unmatched vertex grabbing its favorite still-unmatched neighbor.
Matching unique_stable_ml(const PreferenceSystem& i, const MasterList& ml);

// All matchings whose blocking set is exactly `blocking`, given a set of
// edges whose deletion yields a master list. Output is deduplicated and
// sorted; size is at most 2^|modulator|.
std::vector<Matching> enum_bp_edge_modulator(const PreferenceSystem& i,
                                             const std::vector<Edge>& blocking,
                                             const std::vector<Edge>& modulator);

// Vertex-modulator variant; size is at most |V|^|modulator|.
std::vector<Matching> enum_bp_vertex_modulator(const PreferenceSystem& i,
                                               const std::vector<Edge>& blocking,
                                               const std::vector<Vertex>& modulator);

// All stable matchings, with the modulator found automatically.
std::vector<Matching> enum_stable(const PreferenceSystem& i);

// Test oracle: enumerate every matching and keep the stable ones.
std::vector<Matching> brute_force_stable(const PreferenceSystem& i, int edge_cap = 26);

std::vector<Matching> all_matchings(const PreferenceSystem& i, int edge_cap = 26);

enum class Direction { Minimize, Maximize };

// Extremal stable matching under the objective; ties resolved towards the
// canonically smaller matching. Empty result when no stable matching exists.
std::optional<std::pair<Matching, long long>> optimize_over_stable(
    const PreferenceSystem& i, const std::function<long long(const Matching&)>& objective,
    Direction direction);

// Built-in objectives.
long long egalitarian_cost(const PreferenceSystem& i, const Matching& m);
long long cardinality(const Matching& m);

// Modulator selection shared by enum_stable and the popular-matching solver:
// a small exact vertex modulator when enumeration through it is cheap,
// otherwise the approximate edge modulator.
struct AutoModulator {
    bool use_vertices = false;
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;
};
AutoModulator choose_modulator(const PreferenceSystem& i);

}  // namespace mldist
