#include "mldist/fas.hpp"

#include <algorithm>
#include <deque>

namespace mldist {

namespace fas_detail {

namespace {

struct Search {
    int n;
    const std::vector<FlatArc>& arcs;
    std::vector<int> members;           // arc ids this search works on
    std::vector<std::vector<int>> out;  // member arc ids by source vertex

    Search(int n_, const std::vector<FlatArc>& arcs_, std::vector<int> member_ids)
        : n(n_), arcs(arcs_), members(std::move(member_ids)), out(n_) {
        for (int id : members) out[arcs[static_cast<std::size_t>(id)].from].push_back(id);
    }

    std::optional<std::vector<int>> shortest_path(const std::vector<char>& alive, int src,
                                                  int dst) const {
        std::vector<int> parent(n, -1);
        std::vector<char> visited(n, 0);
        std::deque<int> queue;
        visited[src] = 1;
        queue.push_back(src);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (v == dst) break;
            for (int id : out[v]) {
                if (!alive[id]) continue;
                int w = arcs[static_cast<std::size_t>(id)].to;
                if (visited[w]) continue;
                visited[w] = 1;
                parent[w] = id;
                queue.push_back(w);
            }
        }
        if (!visited[dst]) return std::nullopt;
        std::vector<int> path;
        for (int cur = dst; cur != src; cur = arcs[static_cast<std::size_t>(parent[cur])].from)
            path.push_back(parent[cur]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    // shortest cycle through at least one alive strict arc
    std::optional<std::vector<int>> shortest_bad_cycle(const std::vector<char>& alive) const {
        std::optional<std::vector<int>> best;
        for (int id : members) {
            if (!alive[id] || !arcs[static_cast<std::size_t>(id)].strict) continue;
            auto path = shortest_path(alive, arcs[static_cast<std::size_t>(id)].to,
                                      arcs[static_cast<std::size_t>(id)].from);
            if (!path) continue;
            std::vector<int> cycle{id};
            cycle.insert(cycle.end(), path->begin(), path->end());
            if (!best || cycle.size() < best->size()) {
                best = std::move(cycle);
                if (best->size() == 2) break;
            }
        }
        return best;
    }

    // greedy arc-disjoint packing of bad cycles; each needs its own deletion
    int packing_lower_bound(std::vector<char> alive) const {
        int count = 0;
        while (auto cycle = shortest_bad_cycle(alive)) {
            for (int id : *cycle) alive[id] = 0;
            ++count;
        }
        return count;
    }
};

struct Solver {
    const Search& search;
    int budget;
    std::optional<std::vector<int>> best;  // sorted arc ids
    std::vector<int> chosen;

    Solver(const Search& s, int b) : search(s), budget(b) {}

    void consider_candidate() {
        std::vector<int> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        if (!best || sorted.size() < best->size() ||
            (sorted.size() == best->size() && sorted < *best))
            best = std::move(sorted);
    }

    // `locked` marks arcs that must stay; branching on the j-th deletable arc
    // of a cycle locks the earlier ones, so the subtrees partition the
    // solution space instead of revisiting permutations
    void dfs(std::vector<char>& alive, std::vector<char>& locked) {
        auto cycle = search.shortest_bad_cycle(alive);
        if (!cycle) {
            if (static_cast<int>(chosen.size()) <= budget) consider_candidate();
            return;
        }
        int need = search.packing_lower_bound(alive);
        int reach = static_cast<int>(chosen.size()) + need;
        if (reach > budget) return;
        if (best && reach > static_cast<int>(best->size())) return;

        std::vector<int> branch;
        for (int id : *cycle)
            if (!locked[id]) branch.push_back(id);
        std::sort(branch.begin(), branch.end());
        for (std::size_t j = 0; j < branch.size(); ++j) {
            int id = branch[j];
            alive[id] = 0;
            chosen.push_back(id);
            for (std::size_t k = 0; k < j; ++k) locked[branch[k]] = 1;
            dfs(alive, locked);
            for (std::size_t k = 0; k < j; ++k) locked[branch[k]] = 0;
            chosen.pop_back();
            alive[id] = 1;
        }
    }
};

// strongly connected components over the alive arcs; cycles never cross them
std::vector<int> scc_of_vertex(int n, const std::vector<FlatArc>& arcs) {
    std::vector<std::vector<int>> out(n);
    for (const auto& arc : arcs) out[arc.from].push_back(arc.to);

    std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack;
    int counter = 0, comp_count = 0;
    std::vector<char> on_stack(n, 0);

    // iterative Tarjan
    struct Frame {
        int v;
        std::size_t next;
    };
    for (int start = 0; start < n; ++start) {
        if (num[start] >= 0) continue;
        std::vector<Frame> frames{{start, 0}};
        num[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < out[f.v].size()) {
                int w = out[f.v][f.next++];
                if (num[w] < 0) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                if (low[f.v] == num[f.v]) {
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = comp_count;
                        if (w == f.v) break;
                    }
                    ++comp_count;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    return comp;
}

}  // namespace

std::optional<std::vector<int>> shortest_strict_cycle_flat(int n,
                                                           const std::vector<FlatArc>& arcs,
                                                           const std::vector<char>& alive) {
    std::vector<int> members;
    for (std::size_t id = 0; id < arcs.size(); ++id) members.push_back(static_cast<int>(id));
    Search search(n, arcs, std::move(members));
    return search.shortest_bad_cycle(alive);
}

std::optional<std::vector<int>> min_strict_hitting_flat(int n,
                                                        const std::vector<FlatArc>& arcs,
                                                        int budget) {
    if (budget < 0) return std::nullopt;

    // cycles live inside strongly connected components, so the problem
    // decomposes; the component-wise canonical minimum is the global one
    std::vector<int> comp = scc_of_vertex(n, arcs);
    std::vector<std::vector<int>> arcs_by_comp;
    std::vector<int> comp_index;
    for (std::size_t id = 0; id < arcs.size(); ++id) {
        const auto& arc = arcs[id];
        if (comp[arc.from] != comp[arc.to]) continue;  // never on a cycle
        int c = comp[arc.from];
        if (static_cast<std::size_t>(c) >= comp_index.size())
            comp_index.resize(static_cast<std::size_t>(c) + 1, -1);
        if (comp_index[static_cast<std::size_t>(c)] < 0) {
            comp_index[static_cast<std::size_t>(c)] = static_cast<int>(arcs_by_comp.size());
            arcs_by_comp.emplace_back();
        }
        arcs_by_comp[static_cast<std::size_t>(comp_index[static_cast<std::size_t>(c)])]
            .push_back(static_cast<int>(id));
    }

    std::vector<int> solution;
    int remaining = budget;
    for (auto& members : arcs_by_comp) {
        bool any_strict = false;
        for (int id : members)
            if (arcs[static_cast<std::size_t>(id)].strict) any_strict = true;
        if (!any_strict) continue;

        Search search(n, arcs, members);
        std::vector<char> alive(arcs.size(), 0);
        for (int id : members) alive[id] = 1;
        if (!search.shortest_bad_cycle(alive)) continue;

        Solver solver(search, remaining);
        std::vector<char> locked(arcs.size(), 0);
        solver.dfs(alive, locked);
        if (!solver.best) return std::nullopt;
        solution.insert(solution.end(), solver.best->begin(), solver.best->end());
        remaining -= static_cast<int>(solver.best->size());
    }
    std::sort(solution.begin(), solution.end());
    return solution;
}

}  // namespace fas_detail

namespace {

std::vector<fas_detail::FlatArc> flatten(const PreferenceDigraph& d, bool all_strict) {
    std::vector<fas_detail::FlatArc> arcs;
    arcs.reserve(d.arcs.size());
    for (const auto& arc : d.arcs)
        arcs.push_back({arc.from, arc.to, all_strict || arc.kind == ArcKind::Strict});
    return arcs;
}

}  // namespace

bool is_acyclic(const PreferenceDigraph& d) {
    std::vector<std::vector<int>> out(d.n);
    for (const auto& arc : d.arcs) out[arc.from].push_back(arc.to);
    std::vector<int> color(d.n, 0);  // 0 new, 1 on stack, 2 done
    for (int start = 0; start < d.n; ++start) {
        if (color[start]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
        color[start] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < out[v].size()) {
                int w = out[v][next++];
                if (color[w] == 1) return false;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

std::optional<ArcSet> min_fas(const PreferenceDigraph& d, int budget) {
    auto ids = fas_detail::min_strict_hitting_flat(d.n, flatten(d, true), budget);
    if (!ids) return std::nullopt;
    return ArcSet{*ids};
}

std::optional<ArcSet> min_strict_hitting(const PreferenceDigraph& d, int budget) {
    auto ids = fas_detail::min_strict_hitting_flat(d.n, flatten(d, false), budget);
    if (!ids) return std::nullopt;
    return ArcSet{*ids};
}

}  // namespace mldist
