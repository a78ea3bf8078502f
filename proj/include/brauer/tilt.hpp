#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/walks.hpp"

namespace brauer {

// Two-term complex of projectives T^{-1} -> T^0. Entry (row, col) maps the
// summand degree_minus1[col] to degree0[row] by left multiplication.
struct TwoTermComplex {
    struct Entry {
        int row = 0, col = 0;
        PathLabel label;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<EdgeId> degree0;
    std::vector<EdgeId> degree_minus1;
    std::vector<Entry> entries;
};

// Equality after permuting summands within each degree.
bool same_up_to_summand_order(const Graph& g, const TwoTermComplex& a, const TwoTermComplex& b);
std::string complex_to_string(const Graph& g, const TwoTermComplex& t);

TwoTermComplex complex_of_walk(const Graph& g, const SignedWalk& w);
SignedWalk walk_of_complex(const Graph& g, const TwoTermComplex& t);

struct U2Witness {
    bool target_reversed = false, source_reversed = false;
    int i = 0, j = 0;  // 1-based positions in target and source half-walks
    int which = 0;     // case 1..4 for (i)..(iv)
};

struct L2Witness {
    bool target_reversed = false, source_reversed = false;
    int i = 0, j = 0, length = 0;
};

struct ShiftHomReport {
    std::vector<U2Witness> u2;
    std::vector<L2Witness> l2;
    bool vanishes() const { return u2.empty() && l2.empty(); }
};

// Combinatorial test of Hom(T_source, T_target[1]) = 0.
ShiftHomReport hom_vanishes_into_shift(const Graph& g, const SignedWalk& source, const SignedWalk& target);

struct CompleteSet {
    std::vector<SignedWalk> walks;  // sorted
    friend bool operator==(const CompleteSet&, const CompleteSet&) = default;
    friend auto operator<=>(const CompleteSet&, const CompleteSet&) = default;
};

std::string set_to_string(const Graph& g, const CompleteSet& s);

// Length bound that exhausts all signed walks of a tilting-discrete graph:
// an edge occurs at most twice (out and back along a tree path around the
// odd cycle). Throws NotEnumerable for other graphs.
int default_cap(const Graph& g);

// Without a cap, enumerates to default_cap and asserts stabilization. With
// a cap that cuts walks off, only cliques of full size are returned.
std::vector<CompleteSet> enumerate_two_term_tilting(const Graph& g, std::optional<int> cap = std::nullopt);

bool order_ge(const Graph& g, const CompleteSet& a, const CompleteSet& b);

struct HasseQuiver {
    std::vector<CompleteSet> nodes;
    std::vector<std::pair<int, int>> arrows;  // (from, to), from > to in the order
    int source = -1, sink = -1;
};

HasseQuiver hasse_quiver(const Graph& g, std::optional<int> cap = std::nullopt);
std::string hasse_to_dot(const Graph& g, const HasseQuiver& q);
std::string hasse_to_json(const Graph& g, const HasseQuiver& q);

CompleteSet stalk_set(const Graph& g, int sign);

}  // namespace brauer
