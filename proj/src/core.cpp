#include "mldist/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mldist {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw InvalidParamsError("edge endpoints must differ");
    return a < b ? Edge{a, b} : Edge{b, a};
}

DistanceValue DistanceValue::finite(long long v) {
    if (v < 0) throw InvalidParamsError("distance value must be non-negative");
    return DistanceValue(false, v);
}

DistanceValue DistanceValue::infinite() { return DistanceValue(true, 0); }

long long DistanceValue::value() const {
    if (infinite_) throw InvalidParamsError("distance is infinite");
    return value_;
}

DistanceValue DistanceValue::operator+(const DistanceValue& other) const {
    if (infinite_ || other.infinite_) return infinite();
    return finite(value_ + other.value_);
}

bool DistanceValue::operator==(const DistanceValue& other) const {
    if (infinite_ != other.infinite_) return false;
    return infinite_ || value_ == other.value_;
}

bool WeakOrder::is_strict() const {
    for (const auto& g : groups)
        if (g.size() != 1) return false;
    return true;
}

std::vector<Vertex> WeakOrder::ground_set() const {
    std::vector<Vertex> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

PreferenceSystem PreferenceSystem::create(std::vector<std::string> names,
                                          std::vector<WeakOrder> prefs) {
    if (names.size() != prefs.size())
        throw InvalidParamsError("one preference order required per vertex");
    const int n = static_cast<int>(names.size());

    std::set<std::string> seen;
    for (const auto& nm : names) {
        if (nm.empty()) throw InvalidParamsError("empty vertex name");
        if (!seen.insert(nm).second)
            throw InvalidParamsError("duplicate vertex name: " + nm);
    }

    for (int v = 0; v < n; ++v) {
        std::set<Vertex> members;
        for (const auto& g : prefs[v].groups) {
            if (g.empty())
                throw InvalidParamsError("empty preference group at vertex " + names[v]);
            for (Vertex u : g) {
                if (u < 0 || u >= n)
                    throw UnknownVertexError("preference of " + names[v] +
                                             " refers to an unknown vertex");
                if (u == v)
                    throw InvalidParamsError("vertex " + names[v] + " ranks itself");
                if (!members.insert(u).second)
                    throw InvalidParamsError("vertex " + names[v] + " ranks " + names[u] +
                                             " twice");
            }
        }
    }

    PreferenceSystem out;
    out.names_ = std::move(names);
    out.prefs_ = std::move(prefs);
    out.rebuild_index();

    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : out.neighbors_[v]) {
            if (out.rank_[u][v] < 0)
                throw SymmetryError("vertex " + out.names_[u] + " omits " + out.names_[v] +
                                    " although " + out.names_[v] + " ranks " + out.names_[u]);
        }
    }
    return out;
}

void PreferenceSystem::rebuild_index() {
    const int n = num_vertices();
    neighbors_.assign(n, {});
    rank_.assign(n, std::vector<int>(n, -1));
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t g = 0; g < prefs_[v].groups.size(); ++g) {
            for (Vertex u : prefs_[v].groups[g]) {
                neighbors_[v].push_back(u);
                rank_[v][u] = static_cast<int>(g);
            }
        }
    }
}

void PreferenceSystem::check_vertex(Vertex v) const {
    if (v < 0 || v >= num_vertices()) throw UnknownVertexError("unknown vertex id");
}

const std::string& PreferenceSystem::name(Vertex v) const {
    check_vertex(v);
    return names_[v];
}

std::optional<Vertex> PreferenceSystem::find(const std::string& name) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (names_[v] == name) return v;
    return std::nullopt;
}

Vertex PreferenceSystem::require(const std::string& name) const {
    auto v = find(name);
    if (!v) throw UnknownVertexError("unknown vertex: " + name);
    return *v;
}

const WeakOrder& PreferenceSystem::prefs(Vertex v) const {
    check_vertex(v);
    return prefs_[v];
}

const std::vector<Vertex>& PreferenceSystem::neighbors(Vertex v) const {
    check_vertex(v);
    return neighbors_[v];
}

bool PreferenceSystem::adjacent(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return rank_[a][b] >= 0;
}

int PreferenceSystem::rank(Vertex v, Vertex u) const {
    check_vertex(v);
    check_vertex(u);
    return rank_[v][u];
}

bool PreferenceSystem::prefers(Vertex v, Vertex a, Vertex b) const {
    int ra = rank(v, a), rb = rank(v, b);
    if (ra < 0 || rb < 0)
        throw UnknownVertexError("prefers() called with a non-neighbor");
    return ra < rb;
}

bool PreferenceSystem::tied(Vertex v, Vertex a, Vertex b) const {
    int ra = rank(v, a), rb = rank(v, b);
    if (ra < 0 || rb < 0)
        throw UnknownVertexError("tied() called with a non-neighbor");
    return ra == rb;
}

bool PreferenceSystem::is_strict() const {
    for (const auto& p : prefs_)
        if (!p.is_strict()) return false;
    return true;
}

int PreferenceSystem::num_edges() const {
    int deg = 0;
    for (const auto& nb : neighbors_) deg += static_cast<int>(nb.size());
    return deg / 2;
}

std::vector<Edge> PreferenceSystem::edges() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < num_vertices(); ++v)
        for (Vertex u : neighbors_[v])
            if (v < u) out.push_back({v, u});
    std::sort(out.begin(), out.end());
    return out;
}

bool PreferenceSystem::has_edge(const Edge& e) const {
    if (e.first < 0 || e.second < 0 || e.first >= num_vertices() || e.second >= num_vertices())
        return false;
    return rank_[e.first][e.second] >= 0;
}

DistanceValue swap_distance_orders(const WeakOrder& u_order, const WeakOrder& v_order) {
    std::map<Vertex, int> ru, rv;
    for (std::size_t g = 0; g < u_order.groups.size(); ++g)
        for (Vertex x : u_order.groups[g]) ru[x] = static_cast<int>(g);
    for (std::size_t g = 0; g < v_order.groups.size(); ++g)
        for (Vertex x : v_order.groups[g]) rv[x] = static_cast<int>(g);

    if (ru.size() != rv.size()) return DistanceValue::infinite();
    for (const auto& [x, _] : ru)
        if (!rv.count(x)) return DistanceValue::infinite();

    std::vector<Vertex> ground;
    for (const auto& [x, _] : ru) ground.push_back(x);

    long long count = 0;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        for (std::size_t j = i + 1; j < ground.size(); ++j) {
            Vertex a = ground[i], b = ground[j];
            int ua = ru[a], ub = ru[b];
            int va = rv[a], vb = rv[b];
            bool tied_u = ua == ub, tied_v = va == vb;
            if (tied_u != tied_v) {
                ++count;
            } else if (!tied_u) {
                // strictly ordered in both; count if the direction flips
                if ((ua < ub) != (va < vb)) ++count;
            }
        }
    }
    return DistanceValue::finite(count);
}

DistanceValue instance_swap_distance(const PreferenceSystem& i1, const PreferenceSystem& i2) {
    if (i1.num_vertices() != i2.num_vertices()) return DistanceValue::infinite();

    std::map<std::string, Vertex> id2;
    for (Vertex v = 0; v < i2.num_vertices(); ++v) id2[i2.name(v)] = v;

    std::vector<Vertex> map12(i1.num_vertices());
    for (Vertex v = 0; v < i1.num_vertices(); ++v) {
        auto it = id2.find(i1.name(v));
        if (it == id2.end()) return DistanceValue::infinite();
        map12[v] = it->second;
    }

    DistanceValue total = DistanceValue::finite(0);
    for (Vertex v = 0; v < i1.num_vertices(); ++v) {
        // translate v's order in i1 to i2's id space
        WeakOrder translated;
        for (const auto& g : i1.prefs(v).groups) {
            std::vector<Vertex> tg;
            for (Vertex u : g) tg.push_back(map12[u]);
            translated.groups.push_back(std::move(tg));
        }
        total = total + swap_distance_orders(translated, i2.prefs(map12[v]));
        if (total.is_infinite()) return total;
    }
    return total;
}

namespace {

// Positions of a and b in v's strict list, or throws.
std::pair<int, int> strict_positions(const PreferenceSystem& i, const Swap& s) {
    if (s.a < 0 || s.a >= i.num_vertices() || s.b < 0 || s.b >= i.num_vertices() ||
        s.v < 0 || s.v >= i.num_vertices())
        throw UnknownVertexError("swap refers to an unknown vertex");
    if (!i.prefs(s.v).is_strict())
        throw NotAdmissibleError("swap in non-strict preferences of " + i.name(s.v));
    int pa = i.rank(s.v, s.a), pb = i.rank(s.v, s.b);
    if (pa < 0 || pb < 0)
        throw UnknownVertexError("swap endpoints are not neighbors of " + i.name(s.v));
    if (pa == pb) throw InvalidParamsError("swap endpoints must differ");
    return {pa, pb};
}

bool swap_admissible(const PreferenceSystem& i, const Swap& s) {
    if (s.a < 0 || s.a >= i.num_vertices() || s.b < 0 || s.b >= i.num_vertices() ||
        s.v < 0 || s.v >= i.num_vertices())
        return false;
    if (!i.prefs(s.v).is_strict()) return false;
    int pa = i.rank(s.v, s.a), pb = i.rank(s.v, s.b);
    if (pa < 0 || pb < 0 || pa == pb) return false;
    return pa == pb + 1 || pb == pa + 1;
}

}  // namespace

PreferenceSystem apply_swap(const PreferenceSystem& i, const Swap& s) {
    auto [pa, pb] = strict_positions(i, s);
    if (pa != pb + 1 && pb != pa + 1)
        throw NotAdmissibleError("entries " + i.name(s.a) + " and " + i.name(s.b) +
                                 " are not consecutive in the preferences of " + i.name(s.v));

    std::vector<WeakOrder> prefs;
    prefs.reserve(i.num_vertices());
    for (Vertex v = 0; v < i.num_vertices(); ++v) prefs.push_back(i.prefs(v));
    std::swap(prefs[s.v].groups[pa], prefs[s.v].groups[pb]);
    return PreferenceSystem::create(i.names(), std::move(prefs));
}

PreferenceSystem apply_swaps(const PreferenceSystem& i, const std::vector<Swap>& swaps) {
    if (!i.is_strict())
        throw NotAdmissibleError("swap sequences require strict preferences");
    PreferenceSystem cur = i;
    std::vector<Swap> remaining = swaps;
    while (!remaining.empty()) {
        bool progress = false;
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            if (swap_admissible(cur, remaining[k])) {
                cur = apply_swap(cur, remaining[k]);
                remaining.erase(remaining.begin() + static_cast<long>(k));
                progress = true;
                break;
            }
        }
        if (!progress) {
            std::ostringstream msg;
            msg << "no admissible order for the remaining " << remaining.size()
                << " swap(s); first stuck swap: (" << cur.name(remaining[0].a) << ","
                << cur.name(remaining[0].b) << ";" << cur.name(remaining[0].v) << ")";
            throw NotAdmissibleError(msg.str());
        }
    }
    return cur;
}

PreferenceSystem delete_edges(const PreferenceSystem& i, const std::vector<Edge>& edges) {
    std::set<Edge> gone;
    for (const Edge& e : edges) {
        if (!i.has_edge(e))
            throw UnknownEdgeError("unknown edge in deletion set");
        gone.insert(e);
    }

    std::vector<WeakOrder> prefs;
    prefs.reserve(i.num_vertices());
    for (Vertex v = 0; v < i.num_vertices(); ++v) {
        WeakOrder w;
        for (const auto& g : i.prefs(v).groups) {
            std::vector<Vertex> kept;
            for (Vertex u : g)
                if (!gone.count(make_edge(v, u))) kept.push_back(u);
            if (!kept.empty()) w.groups.push_back(std::move(kept));
        }
        prefs.push_back(std::move(w));
    }
    return PreferenceSystem::create(i.names(), std::move(prefs));
}

PreferenceSystem delete_vertices(const PreferenceSystem& i, const std::vector<Vertex>& vertices) {
    std::set<Vertex> gone;
    for (Vertex v : vertices) {
        if (v < 0 || v >= i.num_vertices())
            throw UnknownVertexError("unknown vertex in deletion set");
        gone.insert(v);
    }

    std::vector<Vertex> remap(i.num_vertices(), -1);
    std::vector<std::string> names;
    for (Vertex v = 0; v < i.num_vertices(); ++v) {
        if (gone.count(v)) continue;
        remap[v] = static_cast<Vertex>(names.size());
        names.push_back(i.name(v));
    }

    std::vector<WeakOrder> prefs;
    for (Vertex v = 0; v < i.num_vertices(); ++v) {
        if (gone.count(v)) continue;
        WeakOrder w;
        for (const auto& g : i.prefs(v).groups) {
            std::vector<Vertex> kept;
            for (Vertex u : g)
                if (!gone.count(u)) kept.push_back(remap[u]);
            if (!kept.empty()) w.groups.push_back(std::move(kept));
        }
        prefs.push_back(std::move(w));
    }
    return PreferenceSystem::create(std::move(names), std::move(prefs));
}

}  // namespace mldist
