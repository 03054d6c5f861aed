#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mldist/core.hpp"
#include "mldist/fas.hpp"
#include "mldist/prefdigraph.hpp"

namespace mldist {

// Result of a swap-distance computation. The witness instance always admits
// a master list and lies at swap distance `value` from the input. For strict
// inputs, `strict_swaps` is an admissible sequence realizing the witness.
struct SwapWitness {
    long long value = 0;
    std::optional<std::vector<Swap>> strict_swaps;
    PreferenceSystem witness_instance;
};

struct EdgeWitness {
    std::vector<Edge> edges;  // sorted; deleting them yields a master list
};

struct VertexWitness {
    std::vector<Vertex> vertices;  // sorted
};

// The auxiliary digraph used by the edge-deletion 2-approximation. Each
// incidence (a, v) gets an incoming gate a_v^- and an outgoing gate a_v^+,
// each tie of a vertex gets a hub node, and each strictly ordered neighbor
// pair of a vertex gets a relevant node z. All cycles through a z node
// correspond to strict cycles of the preference digraph.
struct AuxiliaryDigraph {
    enum class NodeKind { Original, TieHub, GateMinus, GatePlus, StrictPair };
    struct Node {
        NodeKind kind;
        Vertex orig = -1;     // Original: the vertex
        Vertex inc_a = -1;    // gates: the ranked neighbor a of (a, v)
        Vertex inc_v = -1;    // gates / hubs / pairs: the ranking vertex v
        Vertex pair_a = -1;   // StrictPair: a with a less preferred than b by v
        Vertex pair_b = -1;
        std::string name;
    };
    enum class ArcClass { T, U, Z };
    struct Arc {
        int from;
        int to;
        ArcClass cls;
    };

    std::vector<Node> nodes;
    std::vector<Arc> arcs;
    std::map<std::pair<Vertex, Vertex>, int> gate_minus;  // (a, v) -> node id
    std::map<std::pair<Vertex, Vertex>, int> gate_plus;

    int count(NodeKind k) const;
    int count(ArcClass c) const;
};

// Exact swap distance with witness, or nullopt beyond budget. Strict inputs
// go through a minimum feedback arc set of the preference digraph, converted
// into an admissible swap sequence; weak inputs go through a minimum
// strict-cycle hitting set and a reconstructed master-list instance.
std::optional<SwapWitness> delta_swap(const PreferenceSystem& i, int budget);

// Minimum edge set whose deletion yields a master list, by exhaustive search
// over subsets in increasing size (lexicographic tie-break within a size).
std::optional<EdgeWitness> delta_edge_exact(const PreferenceSystem& i, int budget,
                                            int threads = 1);

// Minimum vertex set whose deletion yields a master list, same search scheme.
std::optional<VertexWitness> delta_vert_exact(const PreferenceSystem& i, int budget,
                                              int threads = 1);

AuxiliaryDigraph build_auxiliary_digraph(const PreferenceSystem& i);

// Factor-2 approximation for the edge-deletion distance: solves the relevant
// cycle hitting problem on the auxiliary digraph within 2*budget, normalizes
// the solution onto gate arcs and maps those back to edges. Whenever the
// exact distance is at most `budget`, this returns a witness of size at most
// twice the exact distance.
std::optional<EdgeWitness> delta_edge_2approx(const PreferenceSystem& i, int budget);

namespace distances_detail {

// Strict-only fast path (direct gate-to-gate arcs, plain feedback arc set)
// and the general path (tie hubs and relevant nodes); they agree in size on
// strict inputs.
std::optional<EdgeWitness> delta_edge_2approx_strict(const PreferenceSystem& i, int budget);
std::optional<EdgeWitness> delta_edge_2approx_general(const PreferenceSystem& i, int budget);

}  // namespace distances_detail

}  // namespace mldist
