#include "mldist/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "mldist/distances.hpp"

namespace mldist {

bool is_valid_matching(const PreferenceSystem& i, const Matching& m) {
    std::set<Vertex> used;
    for (const Edge& e : m) {
        if (!i.has_edge(e)) return false;
        if (!used.insert(e.first).second) return false;
        if (!used.insert(e.second).second) return false;
    }
    return true;
}

namespace {

std::vector<Vertex> partner_map(const PreferenceSystem& i, const Matching& m) {
    std::vector<Vertex> partner(static_cast<std::size_t>(i.num_vertices()), -1);
    for (const Edge& e : m) {
        partner[e.first] = e.second;
        partner[e.second] = e.first;
    }
    return partner;
}

void require_strict(const PreferenceSystem& i, const char* what) {
    if (!i.is_strict())
        throw InvalidParamsError(std::string(what) + " requires strict preferences");
}

// would v rather have u than its current partner (or than staying single)?
bool improves(const PreferenceSystem& i, const std::vector<Vertex>& partner, Vertex v,
              Vertex u) {
    if (partner[v] < 0) return true;
    return i.prefers(v, u, partner[v]);
}

}  // namespace

std::vector<Edge> blocking_edges(const PreferenceSystem& i, const Matching& m) {
    if (!is_valid_matching(i, m)) throw InvalidParamsError("invalid matching");
    auto partner = partner_map(i, m);
    std::vector<Edge> out;
    for (const Edge& e : i.edges())
        if (improves(i, partner, e.first, e.second) && improves(i, partner, e.second, e.first))
            out.push_back(e);
    return out;
}

Matching unique_stable_ml(const PreferenceSystem& i, const MasterList& ml) {
    require_strict(i, "unique_stable_ml");
    if (!ml.is_strict())
        throw NotConsistentError("unique_stable_ml requires a strict master list");
    if (!is_consistent(i, ml))
        throw NotConsistentError("instance is not consistent with the master list");

    std::vector<char> matched(static_cast<std::size_t>(i.num_vertices()), 0);
    Matching m;
    for (const auto& group : ml.groups) {
        for (Vertex v : group) {
            if (matched[v]) continue;
            for (Vertex u : i.neighbors(v)) {  // preference order, strict
                if (!matched[u]) {
                    matched[v] = matched[u] = 1;
                    m.push_back(make_edge(v, u));
                    break;
                }
            }
        }
    }
    std::sort(m.begin(), m.end());
    return m;
}

namespace {

// maps a matching of a sub-instance back into the parent's id space
Matching translate(const PreferenceSystem& sub, const Matching& m,
                   const PreferenceSystem& parent) {
    Matching out;
    for (const Edge& e : m)
        out.push_back(make_edge(parent.require(sub.name(e.first)),
                                parent.require(sub.name(e.second))));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> endpoints(const Matching& m) {
    std::vector<Vertex> out;
    for (const Edge& e : m) {
        out.push_back(e.first);
        out.push_back(e.second);
    }
    return out;
}

void check_edges_exist(const PreferenceSystem& i, const std::vector<Edge>& edges,
                       const char* what) {
    for (const Edge& e : edges)
        if (!i.has_edge(e)) throw UnknownEdgeError(std::string(what) + ": unknown edge");
}

// union of two sorted-or-not edge lists, deduplicated
std::vector<Edge> edge_union(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::set<Edge> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return {s.begin(), s.end()};
}

std::vector<Matching> finalize(std::set<Matching>& found) {
    return {found.begin(), found.end()};
}

}  // namespace

std::vector<Matching> enum_bp_edge_modulator(const PreferenceSystem& i,
                                             const std::vector<Edge>& blocking,
                                             const std::vector<Edge>& modulator) {
    require_strict(i, "enum_bp_edge_modulator");
    check_edges_exist(i, blocking, "blocking set");
    check_edges_exist(i, modulator, "modulator");
    if (!admits_master_list(delete_edges(i, modulator)))
        throw ModulatorInvalidError("deleting the modulator edges does not yield a master list");

    std::vector<Edge> mod(modulator);
    std::sort(mod.begin(), mod.end());
    mod.erase(std::unique(mod.begin(), mod.end()), mod.end());
    std::vector<Edge> blocking_sorted(blocking);
    std::sort(blocking_sorted.begin(), blocking_sorted.end());

    std::vector<Edge> to_delete = edge_union(mod, blocking_sorted);
    std::set<Matching> found;

    const std::size_t subsets = std::size_t{1} << mod.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        Matching guess;
        for (std::size_t k = 0; k < mod.size(); ++k)
            if (mask & (std::size_t{1} << k)) guess.push_back(mod[k]);
        if (!is_valid_matching(i, guess)) continue;

        PreferenceSystem sub = delete_vertices(delete_edges(i, to_delete), endpoints(guess));
        auto ml = admits_master_list(sub);
        if (!ml) throw Error("internal: sub-instance lost its master list");
        Matching rest = translate(sub, unique_stable_ml(sub, *ml), i);

        Matching m = guess;
        m.insert(m.end(), rest.begin(), rest.end());
        std::sort(m.begin(), m.end());
        if (blocking_edges(i, m) == blocking_sorted) found.insert(std::move(m));
    }
    return finalize(found);
}

std::vector<Matching> enum_bp_vertex_modulator(const PreferenceSystem& i,
                                               const std::vector<Edge>& blocking,
                                               const std::vector<Vertex>& modulator) {
    require_strict(i, "enum_bp_vertex_modulator");
    check_edges_exist(i, blocking, "blocking set");
    for (Vertex v : modulator)
        if (v < 0 || v >= i.num_vertices())
            throw UnknownVertexError("modulator: unknown vertex");
    if (!admits_master_list(delete_vertices(i, modulator)))
        throw ModulatorInvalidError(
            "deleting the modulator vertices does not yield a master list");

    std::set<Vertex> mod(modulator.begin(), modulator.end());
    std::vector<Edge> blocking_sorted(blocking);
    std::sort(blocking_sorted.begin(), blocking_sorted.end());

    // edges with an endpoint in the modulator, candidates for the guess
    std::vector<Edge> incident;
    for (const Edge& e : i.edges())
        if (mod.count(e.first) || mod.count(e.second)) incident.push_back(e);

    std::set<Matching> found;
    Matching guess;
    std::set<Vertex> used;

    auto process_guess = [&]() {
        std::vector<Vertex> drop(mod.begin(), mod.end());
        for (Vertex v : endpoints(guess)) drop.push_back(v);
        PreferenceSystem sub = delete_vertices(delete_edges(i, blocking_sorted), drop);
        auto ml = admits_master_list(sub);
        if (!ml) throw Error("internal: sub-instance lost its master list");
        Matching rest = translate(sub, unique_stable_ml(sub, *ml), i);

        Matching m = guess;
        m.insert(m.end(), rest.begin(), rest.end());
        std::sort(m.begin(), m.end());
        if (blocking_edges(i, m) == blocking_sorted) found.insert(std::move(m));
    };

    auto rec = [&](auto&& self, std::size_t next) -> void {
        process_guess();
        for (std::size_t k = next; k < incident.size(); ++k) {
            const Edge& e = incident[k];
            if (used.count(e.first) || used.count(e.second)) continue;
            used.insert(e.first);
            used.insert(e.second);
            guess.push_back(e);
            self(self, k + 1);
            guess.pop_back();
            used.erase(e.first);
            used.erase(e.second);
        }
    };
    rec(rec, 0);
    return finalize(found);
}

AutoModulator choose_modulator(const PreferenceSystem& i) {
    AutoModulator out;
    if (admits_master_list(i)) return out;  // empty edge modulator

    // a small vertex modulator makes the enumeration cheap and sidesteps the
    // auxiliary-digraph solve entirely
    constexpr int kVertexProbeBudget = 3;
    constexpr double kVertexCostCap = 4096.0;
    auto vert = delta_vert_exact(i, kVertexProbeBudget);
    double vert_cost = vert ? std::pow(static_cast<double>(i.num_vertices()),
                                       static_cast<double>(vert->vertices.size()))
                            : std::numeric_limits<double>::infinity();
    if (vert && vert_cost <= kVertexCostCap) {
        out.use_vertices = true;
        out.vertices = vert->vertices;
        return out;
    }

    auto edge = delta_edge_2approx(i, i.num_edges());
    if (!edge) throw Error("internal: unbounded edge approximation failed");
    double edge_cost = std::pow(2.0, static_cast<double>(edge->edges.size()));
    if (vert && vert_cost < edge_cost) {
        out.use_vertices = true;
        out.vertices = vert->vertices;
        return out;
    }
    out.edges = edge->edges;
    return out;
}

std::vector<Matching> enum_stable(const PreferenceSystem& i) {
    require_strict(i, "enum_stable");
    AutoModulator mod = choose_modulator(i);
    if (mod.use_vertices) return enum_bp_vertex_modulator(i, {}, mod.vertices);
    return enum_bp_edge_modulator(i, {}, mod.edges);
}

std::vector<Matching> all_matchings(const PreferenceSystem& i, int edge_cap) {
    auto edges = i.edges();
    if (static_cast<int>(edges.size()) > edge_cap)
        throw TooLargeError("instance exceeds the matching enumeration cap");
    std::vector<Matching> out;
    Matching current;
    std::set<Vertex> used;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        out.push_back(current);
        for (std::size_t k = next; k < edges.size(); ++k) {
            const Edge& e = edges[k];
            if (used.count(e.first) || used.count(e.second)) continue;
            used.insert(e.first);
            used.insert(e.second);
            current.push_back(e);
            self(self, k + 1);
            current.pop_back();
            used.erase(e.first);
            used.erase(e.second);
        }
    };
    rec(rec, 0);
    for (auto& m : out) std::sort(m.begin(), m.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Matching> brute_force_stable(const PreferenceSystem& i, int edge_cap) {
    require_strict(i, "brute_force_stable");
    std::vector<Matching> out;
    for (const Matching& m : all_matchings(i, edge_cap))
        if (blocking_edges(i, m).empty()) out.push_back(m);
    return out;
}

std::optional<std::pair<Matching, long long>> optimize_over_stable(
    const PreferenceSystem& i, const std::function<long long(const Matching&)>& objective,
    Direction direction) {
    std::vector<Matching> stable = enum_stable(i);
    std::optional<std::pair<Matching, long long>> best;
    for (const Matching& m : stable) {
        long long value = objective(m);
        if (!best) {
            best = {m, value};
            continue;
        }
        bool better = direction == Direction::Minimize ? value < best->second
                                                        : value > best->second;
        if (better || (value == best->second && m < best->first)) best = {m, value};
    }
    return best;
}

long long egalitarian_cost(const PreferenceSystem& i, const Matching& m) {
    long long cost = 0;
    for (const Edge& e : m) {
        cost += i.rank(e.first, e.second) + 1;
        cost += i.rank(e.second, e.first) + 1;
    }
    return cost;
}

long long cardinality(const Matching& m) { return static_cast<long long>(m.size()); }

}  // namespace mldist
