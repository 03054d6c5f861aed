#include "mldist/popular.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace mldist {

namespace {

std::vector<Vertex> partner_map(const PreferenceSystem& i, const Matching& m) {
    std::vector<Vertex> partner(static_cast<std::size_t>(i.num_vertices()), -1);
    for (const Edge& e : m) {
        partner[e.first] = e.second;
        partner[e.second] = e.first;
    }
    return partner;
}

// -1, 0 or +1: does v prefer the new partner over the old one? -1 means v
// prefers the old situation, including leaving a partner for being single.
int vote(const PreferenceSystem& i, Vertex v, Vertex new_partner, Vertex old_partner) {
    if (new_partner == old_partner) return 0;
    if (new_partner < 0) return -1;
    if (old_partner < 0) return 1;
    return i.prefers(v, new_partner, old_partner) ? 1 : -1;
}

constexpr int kExhaustiveVertexCap = 12;
constexpr int kWeightedVertexCap = 24;

bool popular_exhaustive(const PreferenceSystem& i, const Matching& m) {
    for (const Matching& other : all_matchings(i, i.num_edges())) {
        VoteTally t = compare(i, other, m);
        if (t.for_first > t.for_second) return false;
    }
    return true;
}

// Maximum over matchings M' of the vote balance for M' against m, computed
// by a dynamic program over vertex subsets. m is popular exactly when the
// maximum is non-positive.
bool popular_weighted(const PreferenceSystem& i, const Matching& m) {
    const int n = i.num_vertices();
    auto partner = partner_map(i, m);
    const long long kUnset = std::numeric_limits<long long>::min();
    std::vector<long long> dp(std::size_t{1} << n, kUnset);
    dp[0] = 0;
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 0; mask < full; ++mask) {
        if (dp[mask] == kUnset) continue;
        int v = 0;
        while (mask & (std::size_t{1} << v)) ++v;
        // v stays unmatched in the rival matching
        std::size_t next = mask | (std::size_t{1} << v);
        long long single = dp[mask] + vote(i, v, -1, partner[v]);
        dp[next] = std::max(dp[next], single);
        for (Vertex u : i.neighbors(v)) {
            if (mask & (std::size_t{1} << u)) continue;
            std::size_t with = next | (std::size_t{1} << u);
            long long value =
                dp[mask] + vote(i, v, u, partner[v]) + vote(i, u, v, partner[u]);
            dp[with] = std::max(dp[with], value);
        }
    }
    return dp[full] <= 0;
}

}  // namespace

VoteTally compare(const PreferenceSystem& i, const Matching& m1, const Matching& m2) {
    if (!is_valid_matching(i, m1) || !is_valid_matching(i, m2))
        throw InvalidParamsError("compare() requires valid matchings");
    auto p1 = partner_map(i, m1);
    auto p2 = partner_map(i, m2);
    VoteTally t;
    for (Vertex v = 0; v < i.num_vertices(); ++v) {
        int d = vote(i, v, p1[v], p2[v]);
        if (d > 0) ++t.for_first;
        if (d < 0) ++t.for_second;
    }
    return t;
}

bool is_popular(const PreferenceSystem& i, const Matching& m, PopularityMode mode) {
    if (!i.is_strict()) throw InvalidParamsError("is_popular requires strict preferences");
    if (!is_valid_matching(i, m)) throw InvalidParamsError("invalid matching");
    switch (mode) {
        case PopularityMode::Exhaustive:
            return popular_exhaustive(i, m);
        case PopularityMode::WeightedMatching:
            if (i.num_vertices() > kWeightedVertexCap)
                throw TooLargeError("instance too large for the popularity check");
            return popular_weighted(i, m);
        case PopularityMode::Auto:
            break;
    }
    if (i.num_vertices() <= kExhaustiveVertexCap) return popular_exhaustive(i, m);
    if (i.num_vertices() <= kWeightedVertexCap) return popular_weighted(i, m);
    throw TooLargeError("instance too large for the popularity check");
}

void MupmicInstance::validate() const {
    if (!system.is_strict())
        throw InvalidParamsError("utility optimization requires strict preferences");
    auto edges = system.edges();
    std::set<Edge> edge_set(edges.begin(), edges.end());
    if (utility.size() != edge_set.size() || cost.size() != edge_set.size())
        throw InvalidParamsError("utility and cost must be defined on exactly the edge set");
    for (const auto& [e, u] : utility) {
        if (!edge_set.count(e)) throw UnknownEdgeError("utility given for an unknown edge");
        if (u < 0) throw InvalidParamsError("utilities must be non-negative");
    }
    for (const auto& [e, c] : cost) {
        if (!edge_set.count(e)) throw UnknownEdgeError("cost given for an unknown edge");
        if (c < 1) throw InvalidParamsError("every edge cost must be at least 1");
    }
    if (target < 0 || budget < 0)
        throw InvalidParamsError("target and budget must be non-negative");
}

namespace {

long long total_utility(const MupmicInstance& inst, const Matching& m) {
    long long u = 0;
    for (const Edge& e : m) u += inst.utility.at(e);
    return u;
}

long long total_cost(const MupmicInstance& inst, const std::vector<Edge>& edges) {
    long long c = 0;
    for (const Edge& e : edges) c += inst.cost.at(e);
    return c;
}

}  // namespace

std::optional<MupmicResult> solve_mupmic(const MupmicInstance& inst, const Modulator& modulator) {
    inst.validate();
    const PreferenceSystem& sys = inst.system;

    auto enumerate = [&](const std::vector<Edge>& blocking) {
        if (std::holds_alternative<std::vector<Edge>>(modulator))
            return enum_bp_edge_modulator(sys, blocking, std::get<std::vector<Edge>>(modulator));
        return enum_bp_vertex_modulator(sys, blocking, std::get<std::vector<Vertex>>(modulator));
    };

    // candidate blocking sets: size up to the budget (costs are >= 1), total
    // cost within the budget, cheaper candidates first
    auto edges = sys.edges();
    std::vector<std::vector<Edge>> candidates;
    std::vector<Edge> current;
    for (long long size = 0; size <= inst.budget; ++size) {
        if (size > static_cast<long long>(edges.size())) break;
        std::vector<std::vector<Edge>> of_size;
        auto rec = [&](auto&& self, std::size_t next) -> void {
            if (static_cast<long long>(current.size()) == size) {
                if (total_cost(inst, current) <= inst.budget) of_size.push_back(current);
                return;
            }
            for (std::size_t k = next; k < edges.size(); ++k) {
                current.push_back(edges[k]);
                self(self, k + 1);
                current.pop_back();
            }
        };
        rec(rec, 0);
        std::stable_sort(of_size.begin(), of_size.end(),
                         [&](const std::vector<Edge>& a, const std::vector<Edge>& b) {
                             return total_cost(inst, a) < total_cost(inst, b);
                         });
        for (auto& c : of_size) candidates.push_back(std::move(c));
    }

    std::optional<MupmicResult> best;
    for (const auto& blocking : candidates) {
        long long blocking_cost = total_cost(inst, blocking);
        for (const Matching& m : enumerate(blocking)) {
            long long u = total_utility(inst, m);
            if (u < inst.target) continue;
            if (!is_popular(sys, m)) continue;
            bool better = !best || u > best->utility ||
                          (u == best->utility && blocking_cost < best->cost) ||
                          (u == best->utility && blocking_cost == best->cost &&
                           m < best->matching);
            if (better) best = MupmicResult{m, u, blocking_cost};
        }
    }
    return best;
}

std::optional<MupmicResult> solve_mupmic_auto(const MupmicInstance& inst) {
    inst.validate();
    AutoModulator mod = choose_modulator(inst.system);
    if (mod.use_vertices) return solve_mupmic(inst, Modulator{mod.vertices});
    return solve_mupmic(inst, Modulator{mod.edges});
}

}  // namespace mldist
