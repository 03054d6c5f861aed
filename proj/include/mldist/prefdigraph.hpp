#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mldist/core.hpp"

namespace mldist {

enum class ArcKind { Strict, Tied };

// Directed arc (from -> to) recorded on behalf of the vertex `label`,
// pointing from the less preferred neighbor towards the more preferred one.
struct LabeledArc {
    Vertex from;
    Vertex to;
    Vertex label;
    ArcKind kind;
};

// Labeled multidigraph over the instance's vertices. One strict arc per
// strictly ordered neighbor pair per vertex; a pair of opposite tied arcs per
// tied neighbor pair per vertex. Arc ids are indices into `arcs`.
struct PreferenceDigraph {
    int n = 0;
    std::vector<std::string> names;
    std::vector<LabeledArc> arcs;
};

// A weak order over all vertices, most preferred group first.
struct MasterList {
    std::vector<std::vector<Vertex>> groups;

    bool is_strict() const;
    // position of v, or -1 if absent; smaller means more preferred
    int position(Vertex v, int num_vertices) const;
};

PreferenceDigraph build_digraph(const PreferenceSystem& i);

// Shortest directed cycle containing at least one strict arc, as a list of
// arc ids, or nullopt. Found by searching, for each strict arc (a,b), a
// shortest b->a path over all arcs. `alive` restricts the arc set.
std::optional<std::vector<int>> find_strict_cycle(const PreferenceDigraph& d);
std::optional<std::vector<int>> find_strict_cycle(const PreferenceDigraph& d,
                                                  const std::vector<char>& alive);

// Master list detection. Returns nullopt exactly when the preference digraph
// has a strict cycle. Otherwise groups vertices that are mutually reachable
// via tied arcs, contracts the groups and orders them topologically; ties in
// the topological order are broken towards the smallest internal id.
std::optional<MasterList> admits_master_list(const PreferenceSystem& i);

// True if every vertex's order equals the restriction of `ml` to its
// neighborhood, ties included. `ml` must partition the vertex set.
bool is_consistent(const PreferenceSystem& i, const MasterList& ml);

// Builds the instance on the given graph whose preferences are the
// restrictions of `ml` to each neighborhood.
PreferenceSystem instance_from_master_list(const std::vector<std::string>& names,
                                           const MasterList& ml,
                                           const std::vector<Edge>& edges);

// Same graph and vertex names as `like`, preferences derived from `ml`.
PreferenceSystem derive_from_master_list(const MasterList& ml, const PreferenceSystem& like);

// Serialized form: groups joined by " > ", members within a group by " = ".
std::string format_master_list(const MasterList& ml, const std::vector<std::string>& names);

}  // namespace mldist
