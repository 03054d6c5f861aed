#include "mldist/oracle.hpp"

#include <algorithm>

namespace mldist {

std::vector<std::vector<std::vector<Vertex>>> all_weak_orders(int n) {
    std::vector<std::vector<std::vector<Vertex>>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    // every surjection of the vertices onto {0..m-1} is one ordered partition
    for (int m = 1; m <= n; ++m) {
        std::vector<int> assign(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, int v) -> void {
            if (v == n) {
                std::vector<char> used(static_cast<std::size_t>(m), 0);
                for (int x : assign) used[static_cast<std::size_t>(x)] = 1;
                for (char u : used)
                    if (!u) return;
                std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(m));
                for (int x = 0; x < n; ++x)
                    groups[static_cast<std::size_t>(assign[static_cast<std::size_t>(x)])]
                        .push_back(x);
                out.push_back(std::move(groups));
                return;
            }
            for (int g = 0; g < m; ++g) {
                assign[static_cast<std::size_t>(v)] = g;
                self(self, v + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

namespace {

void check_cap(const PreferenceSystem& i, int vertex_cap) {
    if (i.num_vertices() > vertex_cap)
        throw TooLargeError("instance too large for the brute-force oracle");
}

// consistency check written out from the definition, independent of the
// digraph-based detection
bool consistent(const PreferenceSystem& i, const std::vector<std::vector<Vertex>>& groups) {
    std::vector<int> pos(static_cast<std::size_t>(i.num_vertices()), -1);
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (Vertex v : groups[g]) pos[static_cast<std::size_t>(v)] = static_cast<int>(g);
    for (Vertex v = 0; v < i.num_vertices(); ++v) {
        const auto& nb = i.neighbors(v);
        for (std::size_t x = 0; x < nb.size(); ++x) {
            for (std::size_t y = x + 1; y < nb.size(); ++y) {
                Vertex a = nb[x], b = nb[y];
                bool tied_here = i.tied(v, a, b);
                if (tied_here != (pos[a] == pos[b])) return false;
                if (!tied_here && i.prefers(v, a, b) != (pos[a] < pos[b])) return false;
            }
        }
    }
    return true;
}

}  // namespace

std::optional<MasterList> oracle_master_list(const PreferenceSystem& i, int vertex_cap) {
    check_cap(i, vertex_cap);
    for (auto& groups : all_weak_orders(i.num_vertices())) {
        if (consistent(i, groups)) {
            MasterList ml;
            ml.groups = std::move(groups);
            return ml;
        }
    }
    return std::nullopt;
}

std::optional<long long> oracle_delta_swap(const PreferenceSystem& i, long long budget,
                                           int vertex_cap) {
    check_cap(i, vertex_cap);
    std::optional<long long> best;
    for (auto& groups : all_weak_orders(i.num_vertices())) {
        MasterList ml;
        ml.groups = std::move(groups);
        PreferenceSystem candidate = derive_from_master_list(ml, i);
        DistanceValue d = instance_swap_distance(i, candidate);
        if (d.is_infinite()) continue;
        if (!best || d.value() < *best) best = d.value();
    }
    if (!best || *best > budget) return std::nullopt;
    return best;
}

namespace {

bool in_fml(const PreferenceSystem& i) {
    for (const auto& groups : all_weak_orders(i.num_vertices()))
        if (consistent(i, groups)) return true;
    return false;
}

}  // namespace

std::optional<std::vector<Edge>> oracle_delta_edge(const PreferenceSystem& i, int budget,
                                                   int vertex_cap, int edge_cap) {
    check_cap(i, vertex_cap);
    auto edges = i.edges();
    if (static_cast<int>(edges.size()) > edge_cap)
        throw TooLargeError("instance too large for the brute-force oracle");
    int cap = std::min<int>(budget, static_cast<int>(edges.size()));
    for (int size = 0; size <= cap; ++size) {
        std::vector<int> pick;
        std::optional<std::vector<Edge>> found;
        auto rec = [&](auto&& self, int next) -> bool {
            if (static_cast<int>(pick.size()) == size) {
                std::vector<Edge> subset;
                for (int k : pick) subset.push_back(edges[static_cast<std::size_t>(k)]);
                if (in_fml(delete_edges(i, subset))) {
                    found = subset;
                    return true;
                }
                return false;
            }
            for (int k = next; k <= static_cast<int>(edges.size()) - size +
                                        static_cast<int>(pick.size());
                 ++k) {
                pick.push_back(k);
                if (self(self, k + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (rec(rec, 0)) return found;
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> oracle_delta_vert(const PreferenceSystem& i, int budget,
                                                     int vertex_cap) {
    check_cap(i, vertex_cap);
    const int n = i.num_vertices();
    int cap = std::min(budget, n);
    for (int size = 0; size <= cap; ++size) {
        std::vector<Vertex> pick;
        std::optional<std::vector<Vertex>> found;
        auto rec = [&](auto&& self, int next) -> bool {
            if (static_cast<int>(pick.size()) == size) {
                if (in_fml(delete_vertices(i, pick))) {
                    found = pick;
                    return true;
                }
                return false;
            }
            for (int k = next; k <= n - size + static_cast<int>(pick.size()); ++k) {
                pick.push_back(k);
                if (self(self, k + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (rec(rec, 0)) return found;
    }
    return std::nullopt;
}

}  // namespace mldist
