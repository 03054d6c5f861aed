#pragma once

#include <map>
#include <string>
#include <vector>

#include "mldist/core.hpp"
#include "mldist/generators.hpp"
#include "mldist/popular.hpp"

namespace mldist {

// Text format, one vertex per line:
//   name : most = preferred > next > least
// A bare "name :" declares an isolated vertex; '#' starts a comment.
// Every referenced name must have its own line, and adjacency must be mutual.
PreferenceSystem parse_instance(const std::string& text);

std::string serialize_instance(const PreferenceSystem& i);

// One arc per line: "a b" or "a -> b". Vertices appear in order of first use.
RawDigraph parse_digraph(const std::string& text);

// One set per line, elements separated by whitespace; the universe is the
// union in order of first appearance.
HittingSetInstance parse_hitting_set(const std::string& text);

// Utility and cost per edge, one line each: "a -- b : utility cost".
// Every edge of the instance must be covered exactly once.
void parse_weights(const std::string& text, const PreferenceSystem& i,
                   std::map<Edge, long long>& utility, std::map<Edge, long long>& cost);

// "a -- b" with the lexicographically smaller name first.
std::string format_edge(const PreferenceSystem& i, const Edge& e);

// One edge per line, "a -- b".
std::string format_matching(const PreferenceSystem& i, const std::vector<Edge>& m);

// Parses "a--b" (also accepts "a -- b").
Edge parse_edge_token(const PreferenceSystem& i, const std::string& token);

}  // namespace mldist
