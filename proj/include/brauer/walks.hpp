#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/graph.hpp"

namespace brauer {

// A signed walk {w, wbar}, stored as the lexicographically smaller half-walk.
// signs[i] is +1 or -1 for position i (0-based).
struct SignedWalk {
    std::vector<Half> halves;
    std::vector<int> signs;

    int length() const { return static_cast<int>(halves.size()); }
    friend bool operator==(const SignedWalk&, const SignedWalk&) = default;
    // (length, canonical sequence, first sign with + first)
    friend std::strong_ordering operator<=>(const SignedWalk& a, const SignedWalk& b);
};

// One orientation of a signed walk.
struct HalfWalk {
    std::vector<Half> halves;
    std::vector<int> signs;
    int length() const { return static_cast<int>(halves.size()); }
};

HalfWalk oriented(const Graph& g, const SignedWalk& w, bool reversed);
HalfWalk reverse(const Graph& g, const HalfWalk& w);

struct SignedToken {
    Half half;
    std::optional<int> sign;
};

SignedWalk make_signed_walk(const Graph& g, const std::vector<SignedToken>& tokens);
// Text form: whitespace-separated `<half-edge><sign>` tokens.
SignedWalk parse_walk(const Graph& g, std::string_view text);
std::string walk_to_string(const Graph& g, const SignedWalk& w);
std::string walk_to_string(const Graph& g, const HalfWalk& w);

// Left/right neighbour slots of a half-walk at boundary index p in [0, m]:
// {ebar_{p}, e_{p+1}} in 0-based terms, with virtual edges at the ends.
struct Neighbourhood {
    Slot first, second;
    int first_sign = 0, second_sign = 0;
    Vertex vertex = -1;
};
Neighbourhood neighbourhood(const Graph& g, const HalfWalk& w, int p);
Slot left_boundary(const HalfWalk& w);   // e_0
Slot right_boundary(const Graph& g, const HalfWalk& w);  // e_{m+1}

// Maximal common subwalk occurrence. `second_reversed` selects the pairing
// (w, w') or (w, reverse(w')) with w, w' the stored orientations. i and j
// are 1-based start positions.
struct SubwalkSite {
    bool second_reversed = false;
    int i = 0, j = 0, length = 0;
    std::vector<Half> sequence;
    friend bool operator==(const SubwalkSite&, const SubwalkSite&) = default;
};

struct IntersectionSite {
    Vertex vertex = -1;
    int p = 0, q = 0;  // 1-based neighbourhood indices in w and w'
    Neighbourhood in_first, in_second;
};

struct PairReport {
    bool sign_ok = true;
    std::vector<SubwalkSite> nc1_failures, nc2_failures;
    std::vector<IntersectionSite> nc3_failures;
    bool compatible() const {
        return sign_ok && nc1_failures.empty() && nc2_failures.empty() && nc3_failures.empty();
    }
};

std::vector<SubwalkSite> common_subwalk_sites(const Graph& g, const SignedWalk& a, const SignedWalk& b);
std::vector<IntersectionSite> intersection_sites(const Graph& g, const SignedWalk& a, const SignedWalk& b);
bool sign_condition(const Graph& g, const SignedWalk& a, const SignedWalk& b);
PairReport check_pair(const Graph& g, const SignedWalk& a, const SignedWalk& b);
bool is_admissible(const Graph& g, const SignedWalk& w);
bool is_admissible_set(const Graph& g, const std::vector<SignedWalk>& ws);

// NC3 at a single site: the two neighbourhoods are non-crossing.
bool nc3_holds(const Graph& g, const Neighbourhood& x, const Neighbourhood& y);

// Every signed walk of length <= cap, canonical and sorted.
std::vector<SignedWalk> enumerate_signed_walks(const Graph& g, int cap);

struct WalkEnumeration {
    std::vector<SignedWalk> walks;
    // No signed walk of length cap+1 exists, so nothing longer was cut off.
    bool stabilized = false;
};

WalkEnumeration enumerate_admissible_walks(const Graph& g, int cap);

}  // namespace brauer
