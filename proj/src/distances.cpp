#include "mldist/distances.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <set>

namespace mldist {

int AuxiliaryDigraph::count(NodeKind k) const {
    int c = 0;
    for (const auto& node : nodes)
        if (node.kind == k) ++c;
    return c;
}

int AuxiliaryDigraph::count(ArcClass c) const {
    int n = 0;
    for (const auto& arc : arcs)
        if (arc.cls == c) ++n;
    return n;
}

namespace {

// Drops arcs that are not needed to keep the remainder acyclic. A minimum
// set is already inclusion-minimal; this guards the conversion below against
// oversized inputs.
std::vector<int> minimalize_fas(const PreferenceDigraph& d, std::vector<int> ids) {
    std::vector<fas_detail::FlatArc> arcs;
    for (const auto& arc : d.arcs) arcs.push_back({arc.from, arc.to, true});
    std::vector<char> alive(arcs.size(), 1);
    for (int id : ids) alive[id] = 0;
    for (std::size_t k = 0; k < ids.size();) {
        alive[ids[k]] = 1;
        if (fas_detail::shortest_strict_cycle_flat(d.n, arcs, alive)) {
            alive[ids[k]] = 0;  // still needed
            ++k;
        } else {
            ids.erase(ids.begin() + static_cast<long>(k));
        }
    }
    return ids;
}

// Turns an inclusion-minimal feedback arc set of the preference digraph into
// an admissible swap sequence of the same size: repeatedly pick the arc
// whose endpoints are currently consecutive in the label's preference list
// (smallest (label, from, to) first) and reverse it.
std::pair<std::vector<Swap>, PreferenceSystem> fas_to_swaps(const PreferenceSystem& i,
                                                            const PreferenceDigraph& d,
                                                            std::vector<int> remaining) {
    PreferenceSystem cur = i;
    std::vector<Swap> swaps;
    while (!remaining.empty()) {
        int pick = -1;
        std::size_t pick_pos = 0;
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            const auto& arc = d.arcs[remaining[k]];
            int pa = cur.rank(arc.label, arc.from);
            int pb = cur.rank(arc.label, arc.to);
            if (pa < 0 || pb < 0 || (pa != pb + 1 && pb != pa + 1)) continue;
            if (pick < 0) {
                pick = remaining[k];
                pick_pos = k;
            } else {
                const auto& best = d.arcs[pick];
                auto key = std::tuple(arc.label, arc.from, arc.to);
                auto best_key = std::tuple(best.label, best.from, best.to);
                if (key < best_key) {
                    pick = remaining[k];
                    pick_pos = k;
                }
            }
        }
        if (pick < 0)
            throw Error("internal: no admissible swap for the remaining feedback arcs");
        const auto& arc = d.arcs[pick];
        Swap s{arc.from, arc.to, arc.label};
        cur = apply_swap(cur, s);
        swaps.push_back(s);
        remaining.erase(remaining.begin() + static_cast<long>(pick_pos));
    }
    return {std::move(swaps), std::move(cur)};
}

// Reachability via a path containing at least one strict arc.
struct StrictReach {
    int n;
    std::vector<std::vector<std::pair<int, bool>>> out;  // (target, strict)

    explicit StrictReach(int n_) : n(n_), out(n_) {}

    void add_arc(int from, int to, bool strict) { out[from].push_back({to, strict}); }

    bool reaches(int src, int dst) const {
        // states: (vertex, already saw a strict arc)
        std::vector<char> seen(static_cast<std::size_t>(n) * 2, 0);
        std::deque<std::pair<int, bool>> queue;
        seen[static_cast<std::size_t>(src) * 2] = 1;
        queue.push_back({src, false});
        while (!queue.empty()) {
            auto [v, strict] = queue.front();
            queue.pop_front();
            if (v == dst && strict) return true;
            for (auto [w, arc_strict] : out[v]) {
                bool ns = strict || arc_strict;
                std::size_t idx = static_cast<std::size_t>(w) * 2 + (ns ? 1 : 0);
                if (seen[idx]) continue;
                seen[idx] = 1;
                queue.push_back({w, ns});
            }
        }
        return false;
    }
};

// Master-list reconstruction for the weak case: remove the hitting set from
// the preference digraph, saturate incomparable pairs with tied arcs, then
// order vertices by strict-path reachability.
MasterList master_list_after_hitting(const PreferenceSystem& i, const PreferenceDigraph& d,
                                     const std::vector<int>& hit) {
    const int n = i.num_vertices();
    std::set<int> gone(hit.begin(), hit.end());
    StrictReach reach(n);
    for (std::size_t id = 0; id < d.arcs.size(); ++id) {
        if (gone.count(static_cast<int>(id))) continue;
        reach.add_arc(d.arcs[id].from, d.arcs[id].to, d.arcs[id].kind == ArcKind::Strict);
    }

    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (!reach.reaches(a, b) && !reach.reaches(b, a)) {
                reach.add_arc(a, b, false);
                reach.add_arc(b, a, false);
            }
        }
    }

    // after saturation every pair is strictly ordered one way or tied
    std::vector<std::vector<char>> before(n, std::vector<char>(n, 0));
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (a != b && reach.reaches(a, b)) before[a][b] = 1;

    std::vector<int> group_of(n, -1);
    std::vector<std::vector<Vertex>> groups;
    for (Vertex v = 0; v < n; ++v) {
        if (group_of[v] >= 0) continue;
        int g = static_cast<int>(groups.size());
        groups.push_back({v});
        group_of[v] = g;
        for (Vertex u = v + 1; u < n; ++u) {
            if (group_of[u] >= 0) continue;
            if (!before[v][u] && !before[u][v]) {
                groups[g].push_back(u);
                group_of[u] = g;
            }
        }
    }

    // most preferred first: group A precedes group B when B's members have a
    // strict path to A's members
    std::sort(groups.begin(), groups.end(),
              [&](const std::vector<Vertex>& ga, const std::vector<Vertex>& gb) {
                  return before[gb.front()][ga.front()] != 0;
              });
    MasterList ml;
    ml.groups = std::move(groups);
    return ml;
}

}  // namespace

std::optional<SwapWitness> delta_swap(const PreferenceSystem& i, int budget) {
    PreferenceDigraph d = build_digraph(i);
    if (i.is_strict()) {
        auto fas = min_fas(d, budget);
        if (!fas) return std::nullopt;
        std::vector<int> minimal = minimalize_fas(d, fas->arc_ids);
        auto [swaps, witness] = fas_to_swaps(i, d, minimal);
        SwapWitness out;
        out.value = static_cast<long long>(swaps.size());
        out.strict_swaps = std::move(swaps);
        out.witness_instance = std::move(witness);
        return out;
    }
    auto hit = min_strict_hitting(d, budget);
    if (!hit) return std::nullopt;
    MasterList ml = master_list_after_hitting(i, d, hit->arc_ids);
    SwapWitness out;
    out.value = static_cast<long long>(hit->arc_ids.size());
    out.witness_instance = derive_from_master_list(ml, i);
    return out;
}

namespace {

// Shared machinery for the exhaustive searches: the preference digraph is
// built once, and a deletion candidate is tested by masking the arcs it
// kills and looking for a remaining strict cycle.
struct SubsetSearch {
    const PreferenceSystem& inst;
    PreferenceDigraph d;
    std::vector<fas_detail::FlatArc> flat;
    // kill_lists[k] = arc ids removed by deleting item k (edge or vertex)
    std::vector<std::vector<int>> kill_lists;
    int num_items;

    explicit SubsetSearch(const PreferenceSystem& i) : inst(i), d(build_digraph(i)) {
        for (const auto& arc : d.arcs)
            flat.push_back({arc.from, arc.to, arc.kind == ArcKind::Strict});
        num_items = 0;
    }

    void index_edges() {
        auto edges = inst.edges();
        num_items = static_cast<int>(edges.size());
        kill_lists.assign(edges.size(), {});
        std::map<Edge, int> pos;
        for (std::size_t k = 0; k < edges.size(); ++k) pos[edges[k]] = static_cast<int>(k);
        for (std::size_t id = 0; id < d.arcs.size(); ++id) {
            const auto& arc = d.arcs[id];
            kill_lists[pos.at(make_edge(arc.from, arc.label))].push_back(static_cast<int>(id));
            kill_lists[pos.at(make_edge(arc.to, arc.label))].push_back(static_cast<int>(id));
        }
    }

    void index_vertices() {
        num_items = inst.num_vertices();
        kill_lists.assign(static_cast<std::size_t>(num_items), {});
        for (std::size_t id = 0; id < d.arcs.size(); ++id) {
            const auto& arc = d.arcs[id];
            kill_lists[arc.from].push_back(static_cast<int>(id));
            kill_lists[arc.to].push_back(static_cast<int>(id));
            kill_lists[arc.label].push_back(static_cast<int>(id));
        }
    }

    bool master_list_after(const std::vector<int>& items) const {
        std::vector<char> alive(flat.size(), 1);
        for (int k : items)
            for (int id : kill_lists[k]) alive[id] = 0;
        return !fas_detail::shortest_strict_cycle_flat(d.n, flat, alive).has_value();
    }

    // lexicographically first subset of the given size that works, with the
    // leading item restricted to [lo, hi)
    std::optional<std::vector<int>> first_solution(int size, int lo, int hi) const {
        std::vector<int> current;
        std::optional<std::vector<int>> found;
        auto rec = [&](auto&& self, int next) -> bool {
            if (static_cast<int>(current.size()) == size) {
                if (master_list_after(current)) {
                    found = current;
                    return true;
                }
                return false;
            }
            int remaining = size - static_cast<int>(current.size());
            for (int k = next; k <= num_items - remaining; ++k) {
                current.push_back(k);
                if (self(self, k + 1)) return true;
                current.pop_back();
            }
            return false;
        };
        if (size == 0) {
            if (master_list_after({})) return std::vector<int>{};
            return std::nullopt;
        }
        for (int first = lo; first < std::min(hi, num_items - size + 1); ++first) {
            current = {first};
            if (rec(rec, first + 1)) return found;
        }
        return std::nullopt;
    }

    std::optional<std::vector<int>> search(int budget, int threads) const {
        int cap = std::min(budget, num_items);
        for (int size = 0; size <= cap; ++size) {
            if (threads <= 1 || size == 0) {
                if (auto sol = first_solution(size, 0, num_items)) return sol;
                continue;
            }
            int first_limit = num_items - size + 1;
            int chunk = (first_limit + threads - 1) / threads;
            std::vector<std::future<std::optional<std::vector<int>>>> futures;
            for (int t = 0; t < threads; ++t) {
                int lo = t * chunk, hi = std::min(first_limit, (t + 1) * chunk);
                if (lo >= hi) break;
                futures.push_back(std::async(std::launch::async, [this, size, lo, hi] {
                    return first_solution(size, lo, hi);
                }));
            }
            for (auto& f : futures)
                if (auto sol = f.get()) return sol;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<EdgeWitness> delta_edge_exact(const PreferenceSystem& i, int budget, int threads) {
    SubsetSearch search(i);
    search.index_edges();
    auto sol = search.search(budget, threads);
    if (!sol) return std::nullopt;
    auto edges = i.edges();
    EdgeWitness out;
    for (int k : *sol) out.edges.push_back(edges[static_cast<std::size_t>(k)]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::optional<VertexWitness> delta_vert_exact(const PreferenceSystem& i, int budget,
                                              int threads) {
    SubsetSearch search(i);
    search.index_vertices();
    auto sol = search.search(budget, threads);
    if (!sol) return std::nullopt;
    VertexWitness out;
    out.vertices = *sol;
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

AuxiliaryDigraph build_auxiliary_digraph(const PreferenceSystem& i) {
    AuxiliaryDigraph h;
    const int n = i.num_vertices();

    for (Vertex v = 0; v < n; ++v) {
        AuxiliaryDigraph::Node node;
        node.kind = AuxiliaryDigraph::NodeKind::Original;
        node.orig = v;
        node.name = i.name(v);
        h.nodes.push_back(node);
    }

    auto add_gate = [&](Vertex a, Vertex v, bool plus) {
        AuxiliaryDigraph::Node node;
        node.kind = plus ? AuxiliaryDigraph::NodeKind::GatePlus
                         : AuxiliaryDigraph::NodeKind::GateMinus;
        node.inc_a = a;
        node.inc_v = v;
        node.name = i.name(a) + (plus ? "+" : "-") + "@" + i.name(v);
        int id = static_cast<int>(h.nodes.size());
        h.nodes.push_back(node);
        (plus ? h.gate_plus : h.gate_minus)[{a, v}] = id;
        return id;
    };

    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> nb = i.neighbors(v);
        std::sort(nb.begin(), nb.end());
        for (Vertex a : nb) {
            add_gate(a, v, false);
            add_gate(a, v, true);
        }
    }

    // gate arcs
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> nb = i.neighbors(v);
        std::sort(nb.begin(), nb.end());
        for (Vertex a : nb) {
            h.arcs.push_back({h.gate_minus.at({a, v}), a, AuxiliaryDigraph::ArcClass::U});
            h.arcs.push_back({a, h.gate_plus.at({a, v}), AuxiliaryDigraph::ArcClass::U});
        }
    }

    // tie hubs
    for (Vertex v = 0; v < n; ++v) {
        for (const auto& group : i.prefs(v).groups) {
            if (group.size() < 2) continue;
            AuxiliaryDigraph::Node node;
            node.kind = AuxiliaryDigraph::NodeKind::TieHub;
            node.inc_v = v;
            node.name = "tie@" + i.name(v);
            int hub = static_cast<int>(h.nodes.size());
            h.nodes.push_back(node);
            for (Vertex a : group) {
                h.arcs.push_back({hub, h.gate_minus.at({a, v}), AuxiliaryDigraph::ArcClass::T});
                h.arcs.push_back({h.gate_plus.at({a, v}), hub, AuxiliaryDigraph::ArcClass::T});
            }
        }
    }

    // relevant nodes, one per strictly ordered neighbor pair
    for (Vertex v = 0; v < n; ++v) {
        const auto& groups = i.prefs(v).groups;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            for (std::size_t gj = gi + 1; gj < groups.size(); ++gj) {
                for (Vertex less : groups[gj]) {
                    for (Vertex more : groups[gi]) {
                        AuxiliaryDigraph::Node node;
                        node.kind = AuxiliaryDigraph::NodeKind::StrictPair;
                        node.inc_v = v;
                        node.pair_a = less;
                        node.pair_b = more;
                        node.name = i.name(less) + "<" + i.name(more) + "@" + i.name(v);
                        int z = static_cast<int>(h.nodes.size());
                        h.nodes.push_back(node);
                        h.arcs.push_back(
                            {h.gate_plus.at({less, v}), z, AuxiliaryDigraph::ArcClass::Z});
                        h.arcs.push_back(
                            {z, h.gate_minus.at({more, v}), AuxiliaryDigraph::ArcClass::Z});
                    }
                }
            }
        }
    }
    return h;
}

namespace distances_detail {

namespace {

// Normalizes a hitting set onto gate arcs and maps it back to edges of the
// instance. Arcs entering an incoming gate are replaced by that gate's
// outgoing arc; arcs leaving an outgoing gate by that gate's incoming arc.
std::vector<Edge> arcs_to_edges(const AuxiliaryDigraph& h, const std::vector<int>& hit) {
    std::set<Edge> edges;
    for (int id : hit) {
        const auto& arc = h.arcs[static_cast<std::size_t>(id)];
        Vertex a = -1, v = -1;
        if (arc.cls == AuxiliaryDigraph::ArcClass::U) {
            const auto& from = h.nodes[static_cast<std::size_t>(arc.from)];
            const auto& to = h.nodes[static_cast<std::size_t>(arc.to)];
            if (from.kind == AuxiliaryDigraph::NodeKind::GateMinus) {
                a = from.inc_a;
                v = from.inc_v;
            } else {
                a = to.inc_a;
                v = to.inc_v;
            }
        } else {
            const auto& from = h.nodes[static_cast<std::size_t>(arc.from)];
            const auto& to = h.nodes[static_cast<std::size_t>(arc.to)];
            if (to.kind == AuxiliaryDigraph::NodeKind::GateMinus) {
                a = to.inc_a;
                v = to.inc_v;
            } else if (from.kind == AuxiliaryDigraph::NodeKind::GatePlus) {
                a = from.inc_a;
                v = from.inc_v;
            } else {
                throw Error("internal: auxiliary arc without an adjacent gate");
            }
        }
        edges.insert(make_edge(a, v));
    }
    return {edges.begin(), edges.end()};
}

std::optional<EdgeWitness> finish(const PreferenceSystem& i, const AuxiliaryDigraph& h,
                                  const std::optional<std::vector<int>>& hit) {
    if (!hit) return std::nullopt;
    EdgeWitness out;
    out.edges = arcs_to_edges(h, *hit);
    if (!admits_master_list(delete_edges(i, out.edges)))
        throw Error("internal: approximation witness fails the master-list check");
    return out;
}

}  // namespace

std::optional<EdgeWitness> delta_edge_2approx_strict(const PreferenceSystem& i, int budget) {
    AuxiliaryDigraph h;
    const int n = i.num_vertices();
    // same gates as the general construction, but strict pairs become direct
    // gate-to-gate arcs and every arc counts as relevant
    AuxiliaryDigraph full = build_auxiliary_digraph(i);
    h.nodes = full.nodes;
    h.gate_minus = full.gate_minus;
    h.gate_plus = full.gate_plus;
    // drop the strict-pair nodes; nothing points at them below
    for (const auto& arc : full.arcs)
        if (arc.cls == AuxiliaryDigraph::ArcClass::U) h.arcs.push_back(arc);
    for (Vertex v = 0; v < n; ++v) {
        const auto& groups = i.prefs(v).groups;
        for (std::size_t gi = 0; gi < groups.size(); ++gi)
            for (std::size_t gj = gi + 1; gj < groups.size(); ++gj)
                for (Vertex less : groups[gj])
                    for (Vertex more : groups[gi])
                        h.arcs.push_back({h.gate_plus.at({less, v}),
                                          h.gate_minus.at({more, v}),
                                          AuxiliaryDigraph::ArcClass::Z});
    }

    std::vector<fas_detail::FlatArc> flat;
    for (const auto& arc : h.arcs) flat.push_back({arc.from, arc.to, true});
    auto hit = fas_detail::min_strict_hitting_flat(static_cast<int>(h.nodes.size()), flat,
                                                   2 * budget);
    return finish(i, h, hit);
}

std::optional<EdgeWitness> delta_edge_2approx_general(const PreferenceSystem& i, int budget) {
    AuxiliaryDigraph h = build_auxiliary_digraph(i);
    std::vector<fas_detail::FlatArc> flat;
    for (const auto& arc : h.arcs)
        flat.push_back({arc.from, arc.to, arc.cls == AuxiliaryDigraph::ArcClass::Z});
    auto hit = fas_detail::min_strict_hitting_flat(static_cast<int>(h.nodes.size()), flat,
                                                   2 * budget);
    return finish(i, h, hit);
}

}  // namespace distances_detail

std::optional<EdgeWitness> delta_edge_2approx(const PreferenceSystem& i, int budget) {
    if (budget < 0) return std::nullopt;
    if (i.is_strict()) return distances_detail::delta_edge_2approx_strict(i, budget);
    return distances_detail::delta_edge_2approx_general(i, budget);
}

}  // namespace mldist
