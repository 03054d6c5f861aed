#include "mldist/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mldist {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

void check_name(const std::string& name, int line_no) {
    if (name.empty())
        throw ParseError("line " + std::to_string(line_no) + ": empty vertex name");
    if (name.find_first_of(":=>#") != std::string::npos ||
        name.find_first_of(" \t") != std::string::npos)
        throw ParseError("line " + std::to_string(line_no) + ": invalid vertex name '" +
                         name + "'");
}

}  // namespace

PreferenceSystem parse_instance(const std::string& text) {
    struct Line {
        std::string vertex;
        std::vector<std::vector<std::string>> groups;
        int number;
    };
    std::vector<Line> lines;
    std::map<std::string, Vertex> ids;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'vertex : ...'");
        std::string name = trim(line.substr(0, colon));
        check_name(name, line_no);
        if (ids.count(name))
            throw ParseError("line " + std::to_string(line_no) + ": duplicate vertex '" +
                             name + "'");
        ids[name] = static_cast<Vertex>(lines.size());

        Line parsed;
        parsed.vertex = name;
        parsed.number = line_no;
        std::string rest = trim(line.substr(colon + 1));
        if (!rest.empty()) {
            for (const std::string& group_text : split(rest, '>')) {
                std::vector<std::string> members;
                for (const std::string& member_text : split(group_text, '=')) {
                    std::string member = trim(member_text);
                    check_name(member, line_no);
                    members.push_back(member);
                }
                parsed.groups.push_back(std::move(members));
            }
        }
        lines.push_back(std::move(parsed));
    }

    std::vector<std::string> names;
    std::vector<WeakOrder> prefs;
    for (const Line& line : lines) {
        names.push_back(line.vertex);
        WeakOrder w;
        for (const auto& group : line.groups) {
            std::vector<Vertex> members;
            for (const std::string& member : group) {
                auto it = ids.find(member);
                if (it == ids.end())
                    throw ParseError("line " + std::to_string(line.number) +
                                     ": unknown vertex '" + member + "'");
                members.push_back(it->second);
            }
            w.groups.push_back(std::move(members));
        }
        prefs.push_back(std::move(w));
    }

    try {
        return PreferenceSystem::create(std::move(names), std::move(prefs));
    } catch (const SymmetryError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_instance(const PreferenceSystem& i) {
    std::ostringstream out;
    for (Vertex v = 0; v < i.num_vertices(); ++v) {
        out << i.name(v) << " :";
        const auto& groups = i.prefs(v).groups;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            out << (g == 0 ? " " : " > ");
            for (std::size_t m = 0; m < groups[g].size(); ++m) {
                if (m > 0) out << " = ";
                out << i.name(groups[g][m]);
            }
        }
        out << "\n";
    }
    return out.str();
}

RawDigraph parse_digraph(const std::string& text) {
    RawDigraph d;
    std::map<std::string, int> ids;
    auto intern = [&](const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(d.names.size());
        d.names.push_back(name);
        ids[name] = id;
        return id;
    };

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        auto parts = tokens(line);
        if (parts.size() == 3 && parts[1] == "->") parts.erase(parts.begin() + 1);
        if (parts.size() == 1 && parts[0] == "node") continue;
        if (parts.size() == 2 && parts[0] == "node") {
            intern(parts[1]);
            continue;
        }
        if (parts.size() != 2)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected an arc 'from to'");
        int a = intern(parts[0]), b = intern(parts[1]);
        if (a == b)
            throw ParseError("line " + std::to_string(line_no) + ": loops are not allowed");
        d.arcs.push_back({a, b});
    }
    return d;
}

HittingSetInstance parse_hitting_set(const std::string& text) {
    HittingSetInstance h;
    std::map<std::string, int> ids;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        std::vector<int> set;
        std::set<int> seen;
        for (const std::string& t : tokens(line)) {
            auto it = ids.find(t);
            int id;
            if (it == ids.end()) {
                id = static_cast<int>(h.universe.size());
                h.universe.push_back(t);
                ids[t] = id;
            } else {
                id = it->second;
            }
            if (!seen.insert(id).second)
                throw ParseError("line " + std::to_string(line_no) + ": repeated element '" +
                                 t + "'");
            set.push_back(id);
        }
        h.sets.push_back(std::move(set));
    }
    return h;
}

void parse_weights(const std::string& text, const PreferenceSystem& i,
                   std::map<Edge, long long>& utility, std::map<Edge, long long>& cost) {
    utility.clear();
    cost.clear();
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'a -- b : utility cost'");
        Edge e = parse_edge_token(i, trim(line.substr(0, colon)));
        auto values = tokens(line.substr(colon + 1));
        if (values.size() != 2)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected two integers after ':'");
        long long u, c;
        try {
            u = std::stoll(values[0]);
            c = std::stoll(values[1]);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": malformed integer");
        }
        if (utility.count(e))
            throw ParseError("line " + std::to_string(line_no) + ": duplicate edge");
        utility[e] = u;
        cost[e] = c;
    }
    for (const Edge& e : i.edges())
        if (!utility.count(e))
            throw InvalidParamsError("missing weights for edge " + format_edge(i, e));
}

std::string format_edge(const PreferenceSystem& i, const Edge& e) {
    std::string a = i.name(e.first), b = i.name(e.second);
    if (b < a) std::swap(a, b);
    return a + " -- " + b;
}

std::string format_matching(const PreferenceSystem& i, const std::vector<Edge>& m) {
    std::ostringstream out;
    for (const Edge& e : m) out << format_edge(i, e) << "\n";
    return out.str();
}

Edge parse_edge_token(const PreferenceSystem& i, const std::string& token) {
    auto pos = token.find("--");
    if (pos == std::string::npos)
        throw ParseError("expected an edge 'a--b', got '" + token + "'");
    std::string a = trim(token.substr(0, pos));
    std::string b = trim(token.substr(pos + 2));
    Edge e = make_edge(i.require(a), i.require(b));
    if (!i.has_edge(e)) throw UnknownEdgeError("no edge between " + a + " and " + b);
    return e;
}

}  // namespace mldist
