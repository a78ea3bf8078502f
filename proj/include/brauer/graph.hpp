#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

// Half-edges, vertices and edges are addressed by dense indices. Half-edge
// indices follow the lexicographic order of their tokens, so comparing
// indices compares tokens.
using Half = int;
using Vertex = int;
using EdgeId = int;

class Graph {
public:
    // Raw description before validation. `orders[v]` lists the half-edge
    // tokens around vertex v in cyclic successor order.
    struct Spec {
        std::vector<std::string> vertex_names;
        std::vector<int> multiplicity;
        std::vector<std::vector<std::string>> orders;
        std::vector<std::string> edge_names;
        std::vector<std::pair<std::string, std::string>> edge_halves;
    };

    static Graph build(const Spec& spec);

    int num_halves() const { return static_cast<int>(tokens_.size()); }
    int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
    int num_edges() const { return static_cast<int>(edge_names_.size()); }

    const std::string& token(Half h) const { return tokens_[h]; }
    const std::string& vertex_name(Vertex v) const { return vertex_names_[v]; }
    const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }

    Vertex source(Half h) const { return source_[h]; }
    Half bar(Half h) const { return partner_[h]; }
    Half next(Half h) const { return next_[h]; }
    Half prev(Half h) const { return prev_[h]; }
    Half next_pow(Half h, int k) const;
    EdgeId edge_of(Half h) const { return edge_of_[h]; }
    int multiplicity(Vertex v) const { return mult_[v]; }
    int valency(Vertex v) const { return static_cast<int>(orders_[v].size()); }
    // Length of the full Brauer cycle starting at h: multiplicity times valency.
    int cycle_length(Half h) const { return mult_[source_[h]] * valency(source_[h]); }
    bool truncated(Half h) const { return next_[h] == h && mult_[source_[h]] == 1; }
    bool is_loop(EdgeId e) const;

    // Half-edges of edge e, smaller token first.
    std::pair<Half, Half> halves_of(EdgeId e) const { return edge_halves_[e]; }
    // Cyclic order at v, rotated to start at the smallest token.
    const std::vector<Half>& order_at(Vertex v) const { return orders_[v]; }
    // Index of h within order_at(source(h)).
    int position(Half h) const { return position_[h]; }

    Half find_half(std::string_view token) const;
    Vertex find_vertex(std::string_view name) const;
    EdgeId find_edge(std::string_view name) const;
    bool has_half(std::string_view token) const;

    // Same labels and multiplicities with a new successor permutation and
    // source map (used by flips and the opposite graph); revalidated.
    Graph with_rotation(const std::vector<Vertex>& source, const std::vector<Half>& next) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::string> tokens_;
    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_names_;
    std::vector<int> mult_;
    std::vector<Vertex> source_;
    std::vector<Half> partner_, next_, prev_;
    std::vector<EdgeId> edge_of_;
    std::vector<std::pair<Half, Half>> edge_halves_;
    std::vector<std::vector<Half>> orders_;
    std::vector<int> position_;

    void finish();
};

Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
std::string serialize_graph(const Graph& g);

struct CycleProfile {
    int betti = 0;
    // The unique cycle's length when betti == 1; fundamental-basis cycle
    // lengths when betti >= 2; empty for trees.
    std::vector<int> cycle_lengths;
    int odd_cycles = 0;
    int even_cycles = 0;
};

CycleProfile cycle_profile(const Graph& g);
bool is_tilting_discrete(const Graph& g);
bool is_connected(const Graph& g);

Graph opposite_graph(const Graph& g);

enum class FlipDirection { Left, Right };
Graph flip(const Graph& g, EdgeId e, FlipDirection dir);
Graph flip(const Graph& g, std::string_view edge_name, FlipDirection dir);

// A slot of the augmented cyclic order: the real half-edge (kind 0) or its
// virtual companion immediately before (kind -1) or after (kind +1) it.
struct Slot {
    Half half = -1;
    int kind = 0;
    bool is_virtual() const { return kind != 0; }
    friend bool operator==(const Slot&, const Slot&) = default;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct AugmentedCyclicOrder {
    Vertex vertex = -1;
    std::vector<Slot> sequence;
};

AugmentedCyclicOrder augmented_cyclic_order(const Graph& g, Vertex v);
AugmentedCyclicOrder augmented_cyclic_order(const Graph& g, std::string_view vertex_name);

// Position of a slot in the augmented order of its vertex.
int slot_position(const Graph& g, Slot s);

// True when the slots, all at one vertex and pairwise distinct, occur in
// this cyclic order (not necessarily contiguously).
bool is_cyclic_subordering(const Graph& g, const std::vector<Slot>& slots);

std::string slot_name(const Graph& g, Slot s);

}  // namespace brauer
