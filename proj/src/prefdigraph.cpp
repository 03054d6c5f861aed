#include "mldist/prefdigraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace mldist {

bool MasterList::is_strict() const {
    for (const auto& g : groups)
        if (g.size() != 1) return false;
    return true;
}

int MasterList::position(Vertex v, int num_vertices) const {
    if (v < 0 || v >= num_vertices) return -1;
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (Vertex u : groups[g])
            if (u == v) return static_cast<int>(g);
    return -1;
}

PreferenceDigraph build_digraph(const PreferenceSystem& i) {
    PreferenceDigraph d;
    d.n = i.num_vertices();
    d.names = i.names();
    for (Vertex v = 0; v < d.n; ++v) {
        const auto& groups = i.prefs(v).groups;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            // strict arcs: from every member of a later (less preferred)
            // group towards every member of this group
            for (std::size_t gj = gi + 1; gj < groups.size(); ++gj)
                for (Vertex less : groups[gj])
                    for (Vertex more : groups[gi])
                        d.arcs.push_back({less, more, v, ArcKind::Strict});
            // tied arcs within the group, both directions
            for (std::size_t x = 0; x < groups[gi].size(); ++x) {
                for (std::size_t y = x + 1; y < groups[gi].size(); ++y) {
                    Vertex a = groups[gi][x], b = groups[gi][y];
                    d.arcs.push_back({a, b, v, ArcKind::Tied});
                    d.arcs.push_back({b, a, v, ArcKind::Tied});
                }
            }
        }
    }
    return d;
}

namespace {

std::vector<std::vector<int>> out_arcs_by_vertex(const PreferenceDigraph& d) {
    std::vector<std::vector<int>> out(d.n);
    for (std::size_t id = 0; id < d.arcs.size(); ++id)
        out[d.arcs[id].from].push_back(static_cast<int>(id));
    return out;
}

// Shortest path from `src` to `dst` over alive arcs; returns arc ids or empty.
std::optional<std::vector<int>> shortest_path(const PreferenceDigraph& d,
                                              const std::vector<std::vector<int>>& out,
                                              const std::vector<char>& alive, Vertex src,
                                              Vertex dst) {
    std::vector<int> parent_arc(d.n, -1);
    std::vector<char> visited(d.n, 0);
    std::deque<Vertex> queue;
    visited[src] = 1;
    queue.push_back(src);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (v == dst) break;
        for (int id : out[v]) {
            if (!alive[id]) continue;
            Vertex w = d.arcs[id].to;
            if (visited[w]) continue;
            visited[w] = 1;
            parent_arc[w] = id;
            queue.push_back(w);
        }
    }
    if (!visited[dst]) return std::nullopt;
    std::vector<int> path;
    Vertex cur = dst;
    while (cur != src) {
        int id = parent_arc[cur];
        path.push_back(id);
        cur = d.arcs[id].from;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::optional<std::vector<int>> find_strict_cycle(const PreferenceDigraph& d,
                                                  const std::vector<char>& alive) {
    auto out = out_arcs_by_vertex(d);
    std::optional<std::vector<int>> best;
    for (std::size_t id = 0; id < d.arcs.size(); ++id) {
        if (!alive[id] || d.arcs[id].kind != ArcKind::Strict) continue;
        const auto& arc = d.arcs[id];
        auto path = shortest_path(d, out, alive, arc.to, arc.from);
        if (!path) continue;
        std::vector<int> cycle;
        cycle.push_back(static_cast<int>(id));
        cycle.insert(cycle.end(), path->begin(), path->end());
        if (!best || cycle.size() < best->size()) {
            best = cycle;
            if (best->size() == 2) break;  // no shorter cycle exists (no loops)
        }
    }
    return best;
}

std::optional<std::vector<int>> find_strict_cycle(const PreferenceDigraph& d) {
    return find_strict_cycle(d, std::vector<char>(d.arcs.size(), 1));
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::optional<MasterList> admits_master_list(const PreferenceSystem& i) {
    PreferenceDigraph d = build_digraph(i);
    if (find_strict_cycle(d)) return std::nullopt;

    // group vertices connected via tied arcs (tied arcs come in pairs, so
    // reachability over them is plain connectivity)
    DisjointSet dsu(d.n);
    for (const auto& arc : d.arcs)
        if (arc.kind == ArcKind::Tied) dsu.unite(arc.from, arc.to);

    // canonical key of a component: its smallest vertex id
    std::vector<int> key_of(d.n, -1);
    std::map<int, std::vector<Vertex>> component;
    for (Vertex v = 0; v < d.n; ++v) component[dsu.find(v)].push_back(v);
    std::map<int, std::vector<Vertex>> by_key;
    for (auto& [root, members] : component) {
        std::sort(members.begin(), members.end());
        int key = members.front();
        for (Vertex v : members) key_of[v] = key;
        by_key[key] = members;
    }

    // contracted digraph over component keys; only strict arcs remain (tied
    // arcs never cross components). An arc points from the less preferred
    // component to the more preferred one; most preferred components are the
    // ones without outgoing arcs, and we emit them first.
    std::map<int, std::set<int>> preferred;  // key -> keys it points to
    std::map<int, std::set<int>> pointed_by; // key -> keys pointing to it
    std::map<int, int> outdeg;
    for (const auto& [key, _] : by_key) outdeg[key] = 0;
    for (const auto& arc : d.arcs) {
        if (arc.kind != ArcKind::Strict) continue;
        int f = key_of[arc.from], t = key_of[arc.to];
        if (f == t) continue;  // cannot happen without a strict cycle
        if (preferred[f].insert(t).second) {
            pointed_by[t].insert(f);
            outdeg[f] += 1;
        }
    }

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (const auto& [key, deg] : outdeg)
        if (deg == 0) ready.push(key);

    MasterList ml;
    std::size_t emitted = 0;
    while (!ready.empty()) {
        int key = ready.top();
        ready.pop();
        ml.groups.push_back(by_key.at(key));
        ++emitted;
        auto it = pointed_by.find(key);
        if (it != pointed_by.end()) {
            for (int f : it->second)
                if (--outdeg[f] == 0) ready.push(f);
        }
    }
    if (emitted != by_key.size())
        throw Error("internal: contracted preference digraph is cyclic");
    return ml;
}

bool is_consistent(const PreferenceSystem& i, const MasterList& ml) {
    const int n = i.num_vertices();
    std::vector<int> pos(n, -1);
    int covered = 0;
    for (std::size_t g = 0; g < ml.groups.size(); ++g) {
        for (Vertex v : ml.groups[g]) {
            if (v < 0 || v >= n || pos[v] >= 0)
                throw InvalidParamsError("master list does not partition the vertex set");
            pos[v] = static_cast<int>(g);
            ++covered;
        }
    }
    if (covered != n)
        throw InvalidParamsError("master list does not partition the vertex set");

    for (Vertex v = 0; v < n; ++v) {
        const auto& nb = i.neighbors(v);
        for (std::size_t x = 0; x < nb.size(); ++x) {
            for (std::size_t y = x + 1; y < nb.size(); ++y) {
                Vertex a = nb[x], b = nb[y];
                bool tied_here = i.tied(v, a, b);
                bool tied_ml = pos[a] == pos[b];
                if (tied_here != tied_ml) return false;
                if (!tied_here && i.prefers(v, a, b) != (pos[a] < pos[b])) return false;
            }
        }
    }
    return true;
}

PreferenceSystem instance_from_master_list(const std::vector<std::string>& names,
                                           const MasterList& ml,
                                           const std::vector<Edge>& edges) {
    const int n = static_cast<int>(names.size());
    std::vector<int> pos(n, -1);
    for (std::size_t g = 0; g < ml.groups.size(); ++g)
        for (Vertex v : ml.groups[g]) {
            if (v < 0 || v >= n || pos[v] >= 0)
                throw InvalidParamsError("master list does not partition the vertex set");
            pos[v] = static_cast<int>(g);
        }
    for (Vertex v = 0; v < n; ++v)
        if (pos[v] < 0) throw InvalidParamsError("master list does not cover all vertices");

    std::vector<std::vector<Vertex>> adj(n);
    for (const Edge& e : edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }

    std::vector<WeakOrder> prefs(n);
    for (Vertex v = 0; v < n; ++v) {
        std::map<int, std::vector<Vertex>> by_pos;
        for (Vertex u : adj[v]) by_pos[pos[u]].push_back(u);
        for (auto& [_, members] : by_pos) {
            std::sort(members.begin(), members.end());
            prefs[v].groups.push_back(members);
        }
    }
    return PreferenceSystem::create(names, std::move(prefs));
}

PreferenceSystem derive_from_master_list(const MasterList& ml, const PreferenceSystem& like) {
    return instance_from_master_list(like.names(), ml, like.edges());
}

std::string format_master_list(const MasterList& ml, const std::vector<std::string>& names) {
    std::ostringstream out;
    for (std::size_t g = 0; g < ml.groups.size(); ++g) {
        if (g > 0) out << " > ";
        for (std::size_t m = 0; m < ml.groups[g].size(); ++m) {
            if (m > 0) out << " = ";
            out << names.at(static_cast<std::size_t>(ml.groups[g][m]));
        }
    }
    return out.str();
}

}  // namespace mldist
