#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mldist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownVertexError : Error { using Error::Error; };
struct UnknownEdgeError : Error { using Error::Error; };
struct NotAdmissibleError : Error { using Error::Error; };
struct SymmetryError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct NotConsistentError : Error { using Error::Error; };
struct ModulatorInvalidError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct InvalidParamsError : Error { using Error::Error; };

// Dense internal vertex id, assigned by first appearance in the input.
using Vertex = int;

// Undirected edge, normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

Edge make_edge(Vertex a, Vertex b);

// A count of swaps that may be infinite (orders over different ground sets).
class DistanceValue {
public:
    static DistanceValue finite(long long v);
    static DistanceValue infinite();

    bool is_infinite() const { return infinite_; }
    long long value() const;

    DistanceValue operator+(const DistanceValue& other) const;
    bool operator==(const DistanceValue& other) const;
    bool operator!=(const DistanceValue& other) const { return !(*this == other); }

private:
    DistanceValue(bool inf, long long v) : infinite_(inf), value_(v) {}
    bool infinite_ = false;
    long long value_ = 0;
};

// Weak order over a vertex's neighborhood. Groups are listed from most
// preferred to least preferred; members of one group are tied.
struct WeakOrder {
    std::vector<std::vector<Vertex>> groups;

    bool is_strict() const;
    std::vector<Vertex> ground_set() const;  // flattened, preference order
    bool empty() const { return groups.empty(); }
};

struct Swap {
    Vertex a;
    Vertex b;
    Vertex v;  // the vertex whose preferences change
};

// An undirected graph together with a weak order per vertex over its
// neighborhood. Adjacency must be mutual: u appears in v's order exactly
// when v appears in u's order.
class PreferenceSystem {
public:
    PreferenceSystem() = default;

    // Validates naming, group structure, self-preference and symmetry.
    static PreferenceSystem create(std::vector<std::string> names,
                                   std::vector<WeakOrder> prefs);

    int num_vertices() const { return static_cast<int>(names_.size()); }
    const std::string& name(Vertex v) const;
    const std::vector<std::string>& names() const { return names_; }

    std::optional<Vertex> find(const std::string& name) const;
    Vertex require(const std::string& name) const;

    const WeakOrder& prefs(Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;

    bool adjacent(Vertex a, Vertex b) const;
    // Group index of u within v's order, or -1 if u is not a neighbor of v.
    int rank(Vertex v, Vertex u) const;
    // True if v strictly prefers a to b.
    bool prefers(Vertex v, Vertex a, Vertex b) const;
    bool tied(Vertex v, Vertex a, Vertex b) const;

    bool is_strict() const;
    int num_edges() const;
    std::vector<Edge> edges() const;  // sorted
    bool has_edge(const Edge& e) const;

private:
    void check_vertex(Vertex v) const;
    void rebuild_index();

    std::vector<std::string> names_;
    std::vector<WeakOrder> prefs_;
    std::vector<std::vector<Vertex>> neighbors_;  // flattened, preference order
    std::vector<std::vector<int>> rank_;          // n x n, -1 for non-neighbors
};

// Number of neighbor pairs ordered oppositely plus pairs tied in exactly one
// of the two orders; infinite when the ground sets differ.
DistanceValue swap_distance_orders(const WeakOrder& u_order, const WeakOrder& v_order);

// Sum of per-vertex swap distances, matching vertices by name; infinite when
// the vertex sets differ or any per-vertex distance is infinite.
DistanceValue instance_swap_distance(const PreferenceSystem& i1, const PreferenceSystem& i2);

// Switches two consecutive entries of a strict preference list.
PreferenceSystem apply_swap(const PreferenceSystem& i, const Swap& s);

// Performs the given swaps in some admissible order (greedy first-fit scan).
// Throws NotAdmissibleError if no ordering consumes all swaps.
PreferenceSystem apply_swaps(const PreferenceSystem& i, const std::vector<Swap>& swaps);

PreferenceSystem delete_edges(const PreferenceSystem& i, const std::vector<Edge>& edges);
PreferenceSystem delete_vertices(const PreferenceSystem& i, const std::vector<Vertex>& vertices);

}  // namespace mldist
