#include "mldist/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace mldist {

PreferenceSystem gen_four_cycles(int k) {
    if (k < 0) throw InvalidParamsError("number of copies must be non-negative");
    std::vector<std::string> names;
    std::vector<WeakOrder> prefs;
    for (int c = 0; c < k; ++c) {
        int base = 4 * c;
        for (int j = 0; j < 4; ++j) names.push_back(std::to_string(base + j + 1));
        for (int j = 0; j < 4; ++j) {
            Vertex clockwise = base + (j + 1) % 4;
            Vertex counter = base + (j + 3) % 4;
            WeakOrder w;
            w.groups = {{clockwise}, {counter}};
            prefs.push_back(std::move(w));
        }
    }
    return PreferenceSystem::create(std::move(names), std::move(prefs));
}

PreferenceSystem gen_jkn(int k, int n) {
    if (k < 1 || n < k) throw InvalidParamsError("layered family requires 1 <= k <= n");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    for (int j = 1; j <= n - k; ++j) names.push_back("b" + std::to_string(j));
    for (int l = 1; l <= k; ++l) names.push_back("s" + std::to_string(l));

    auto a_id = [&](int i) { return i - 1; };
    auto b_id = [&](int j) { return n + j - 1; };
    auto s_id = [&](int l) { return 2 * n - k + l - 1; };
    auto has_b = [&](int j) { return j >= 1 && j <= n - k; };

    std::vector<WeakOrder> prefs(names.size());

    for (int i = 1; i <= n; ++i) {
        // interleaved list b_i, s_1, b_{i-1}, s_2, ..., s_k, b_{i-k}
        WeakOrder w;
        if (has_b(i)) w.groups.push_back({b_id(i)});
        for (int l = 1; l <= k; ++l) {
            w.groups.push_back({s_id(l)});
            if (has_b(i - l)) w.groups.push_back({b_id(i - l)});
        }
        prefs[a_id(i)] = std::move(w);
    }
    for (int j = 1; j <= n - k; ++j) {
        // adjacent to a_i for j <= i <= j+k, ranked by descending index
        WeakOrder w;
        for (int i = std::min(n, j + k); i >= j; --i) w.groups.push_back({a_id(i)});
        prefs[b_id(j)] = std::move(w);
    }
    for (int l = 1; l <= k; ++l) {
        // adjacent to all of A, ranked by ascending index
        WeakOrder w;
        for (int i = 1; i <= n; ++i) w.groups.push_back({a_id(i)});
        prefs[s_id(l)] = std::move(w);
    }
    return PreferenceSystem::create(std::move(names), std::move(prefs));
}

PreferenceSystem reduce_fas_to_ml(const RawDigraph& d) {
    const int n = static_cast<int>(d.names.size());
    for (const auto& [a, b] : d.arcs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InvalidParamsError("arc endpoint out of range");
        if (a == b) throw InvalidParamsError("loops are not allowed");
    }

    std::vector<std::string> names = d.names;
    std::vector<Vertex> dummy;
    for (std::size_t e = 0; e < d.arcs.size(); ++e) {
        dummy.push_back(static_cast<Vertex>(names.size()));
        names.push_back("z" + std::to_string(e + 1) + "_" + d.names[d.arcs[e].first] + "_" +
                        d.names[d.arcs[e].second]);
    }

    std::vector<WeakOrder> prefs(names.size());
    // dummies in creation order double as the master order the original
    // vertices use over their dummy neighbors
    std::vector<std::vector<Vertex>> incident(n);
    for (std::size_t e = 0; e < d.arcs.size(); ++e) {
        incident[d.arcs[e].first].push_back(dummy[e]);
        incident[d.arcs[e].second].push_back(dummy[e]);
        // the dummy prefers the arc head
        prefs[dummy[e]].groups = {{d.arcs[e].second}, {d.arcs[e].first}};
    }
    for (int v = 0; v < n; ++v) {
        std::sort(incident[v].begin(), incident[v].end());
        for (Vertex z : incident[v]) prefs[v].groups.push_back({z});
    }
    return PreferenceSystem::create(std::move(names), std::move(prefs));
}

PreferenceSystem reduce_hitting_set_to_mlvd(const HittingSetInstance& h) {
    const int u_count = static_cast<int>(h.universe.size());
    for (const auto& s : h.sets) {
        if (s.empty()) throw InvalidParamsError("hitting set instances need non-empty sets");
        std::set<int> seen;
        for (int u : s) {
            if (u < 0 || u >= u_count) throw InvalidParamsError("set element out of range");
            if (!seen.insert(u).second)
                throw InvalidParamsError("sets must not repeat elements");
        }
    }

    std::vector<std::string> names = h.universe;
    // pad singleton sets with a fresh dummy element so that the wrap-around
    // below produces a genuine two-slot conflict
    std::vector<std::vector<int>> sets;
    for (std::size_t s = 0; s < h.sets.size(); ++s) {
        std::vector<int> padded = h.sets[s];
        if (padded.size() == 1) {
            padded.push_back(static_cast<int>(names.size()));
            names.push_back("pad" + std::to_string(s + 1));
        }
        sets.push_back(std::move(padded));
    }

    // one agent per slot of every set
    std::vector<std::vector<Vertex>> agent(sets.size());
    for (std::size_t s = 0; s < sets.size(); ++s) {
        for (std::size_t j = 0; j < sets[s].size(); ++j) {
            agent[s].push_back(static_cast<Vertex>(names.size()));
            names.push_back("x" + std::to_string(s + 1) + "_" + std::to_string(j + 1));
        }
    }

    std::vector<WeakOrder> prefs(names.size());

    // element u at slot j of set s is adjacent to the slot agent and its
    // successor (wrapping), preferring the successor; across sets it prefers
    // agents of higher-indexed sets
    std::vector<std::vector<std::pair<int, Vertex>>> element_view(names.size());
    for (std::size_t s = 0; s < sets.size(); ++s) {
        const std::size_t len = sets[s].size();
        for (std::size_t j = 0; j < len; ++j) {
            int u = sets[s][j];
            Vertex self_agent = agent[s][j];
            Vertex next_agent = agent[s][(j + 1) % len];
            // within the set: successor first (preferred), slot agent second
            element_view[u].push_back({static_cast<int>(s), next_agent});
            element_view[u].push_back({static_cast<int>(s), self_agent});
        }
    }
    for (std::size_t u = 0; u < element_view.size(); ++u) {
        auto view = element_view[u];
        // higher set index preferred; within one set keep insertion order
        std::stable_sort(view.begin(), view.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        for (const auto& [_, x] : view) prefs[u].groups.push_back({x});
    }

    // slot agents rank their element neighbors along a fixed master order
    // (smaller internal id preferred)
    for (std::size_t s = 0; s < sets.size(); ++s) {
        const std::size_t len = sets[s].size();
        for (std::size_t j = 0; j < len; ++j) {
            Vertex x = agent[s][j];
            std::vector<int> elems;
            elems.push_back(sets[s][j]);
            int prev = sets[s][(j + len - 1) % len];
            if (prev != sets[s][j]) elems.push_back(prev);
            std::sort(elems.begin(), elems.end());
            for (int u : elems) prefs[x].groups.push_back({u});
        }
    }
    return PreferenceSystem::create(std::move(names), std::move(prefs));
}

namespace {

// explicit helpers so that output does not depend on the standard library's
// distribution implementations
std::uint64_t next_index(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

bool next_bernoulli(std::mt19937_64& rng, double p) {
    return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
}

}  // namespace

PreferenceSystem gen_random(int n, double edge_prob, double tie_prob, std::uint64_t seed) {
    if (n < 0) throw InvalidParamsError("vertex count must be non-negative");
    if (edge_prob < 0 || edge_prob > 1 || tie_prob < 0 || tie_prob > 1)
        throw InvalidParamsError("probabilities must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (next_bernoulli(rng, edge_prob)) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }

    std::vector<std::string> names;
    for (int v = 1; v <= n; ++v) names.push_back("v" + std::to_string(v));

    std::vector<WeakOrder> prefs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<Vertex> order = adj[v];
        for (std::size_t k = order.size(); k > 1; --k)
            std::swap(order[k - 1], order[next_index(rng, k)]);
        WeakOrder w;
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k > 0 && next_bernoulli(rng, tie_prob))
                w.groups.back().push_back(order[k]);
            else
                w.groups.push_back({order[k]});
        }
        prefs[v] = std::move(w);
    }
    return PreferenceSystem::create(std::move(names), std::move(prefs));
}

}  // namespace mldist
