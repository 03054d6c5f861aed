#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "mldist/core.hpp"
#include "mldist/matching.hpp"

namespace mldist {

struct VoteTally {
    int for_first = 0;
    int for_second = 0;
};

// Head-to-head vote: a vertex prefers the matching where it is matched, or
// matched to a strictly better partner.
VoteTally compare(const PreferenceSystem& i, const Matching& m1, const Matching& m2);

enum class PopularityMode { Auto, Exhaustive, WeightedMatching };

// True when no matching beats `m` in a head-to-head vote. The exhaustive
// mode checks every matching; the weighted mode maximizes the vote balance
// against `m` over all matchings via a maximum-weight matching computed with
// a bitmask dynamic program, and must agree with the exhaustive mode
// wherever both run.
bool is_popular(const PreferenceSystem& i, const Matching& m,
                PopularityMode mode = PopularityMode::Auto);

struct MupmicInstance {
    PreferenceSystem system;             // strict
    std::map<Edge, long long> utility;   // >= 0, defined on exactly E
    std::map<Edge, long long> cost;      // >= 1, defined on exactly E
    long long target = 0;
    long long budget = 0;

    void validate() const;
};

struct MupmicResult {
    Matching matching;
    long long utility = 0;
    long long cost = 0;
};

using Modulator = std::variant<std::vector<Edge>, std::vector<Vertex>>;

// Maximum-utility popular matching whose blocking edges cost at most the
// budget: iterate candidate blocking sets (size up to budget, total cost
// within budget, cheap candidates first), enumerate the matchings realizing
// each candidate through the modulator, and keep the best popular matching
// reaching the utility target.
std::optional<MupmicResult> solve_mupmic(const MupmicInstance& inst, const Modulator& modulator);

// Same, with the modulator chosen automatically.
std::optional<MupmicResult> solve_mupmic_auto(const MupmicInstance& inst);

}  // namespace mldist
