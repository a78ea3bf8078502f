#pragma once

#include <vector>

#include "brauer/graph.hpp"

namespace brauer {

// [start]^power (start | next^steps(start)); power = steps = 0 is the
// trivial path at the edge of `start`. The socle element of an edge is a
// separate symbol.
struct PathLabel {
    Half start = -1;
    int power = 0;
    int steps = 0;
    bool socle = false;
    EdgeId socle_edge = -1;

    static PathLabel trivial(const Graph& g, EdgeId e);
    static PathLabel of_socle(EdgeId e);
    bool is_short(const Graph& g) const;
    friend bool operator==(const PathLabel&, const PathLabel&) = default;
};

// Monomial basis of the Brauer graph algebra. Elements are the trivial
// path of each edge, the proper subpaths (h, L) of the Brauer cycle from h
// with 1 <= L < mult*val, and one socle element per edge. Every product of
// basis elements is a basis element or zero.
class Algebra {
public:
    enum class Kind { Identity, Path, Socle };
    struct Element {
        Kind kind;
        Half half = -1;   // Path: start half-edge
        int length = 0;   // Path: number of arrows
        EdgeId edge = -1; // Identity / Socle
    };

    explicit Algebra(const Graph& g);

    const Graph& graph() const { return g_; }
    int dim() const { return static_cast<int>(elems_.size()); }
    const Element& element(int x) const { return elems_[x]; }
    // Element x lies in 1_{left(x)} Lambda 1_{right(x)}.
    EdgeId left(int x) const { return left_[x]; }
    EdgeId right(int x) const { return right_[x]; }
    int multiply(int a, int b) const;  // -1 for zero
    int identity(EdgeId e) const { return id_[e]; }
    int socle(EdgeId e) const { return soc_[e]; }
    int path(Half h, int length) const;  // -1 if outside the basis range
    // The arrow leaving h, or -1 when h is truncated.
    int arrow(Half h) const { return path(h, 1); }
    // Basis of 1_E Lambda 1_F.
    const std::vector<int>& between(EdgeId e, EdgeId f) const { return between_[e * ne_ + f]; }
    int dim_projective(EdgeId e) const;
    // Generators used when testing module maps: arrows and socle elements.
    const std::vector<int>& generators() const { return generators_; }

    PathLabel label(int x) const;
    int from_label(const PathLabel& p) const;  // -1 if not a basis element

private:
    Graph g_;
    int ne_;
    std::vector<Element> elems_;
    std::vector<EdgeId> left_, right_;
    std::vector<int> id_, soc_;
    std::vector<int> path_offset_;
    std::vector<std::vector<int>> between_;
    std::vector<int> generators_;
};

}  // namespace brauer
