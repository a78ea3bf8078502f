#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/tilt.hpp"
#include "brauer/walks.hpp"

namespace brauer {

// A letter is the arrow leaving `half` (head edge(half), tail edge(next(half)))
// or its formal inverse.
struct Letter {
    Half half = -1;
    bool inverse = false;
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct StringWord {
    std::vector<Letter> letters;
    EdgeId trivial_edge = -1;  // colour of the single vertex when there are no letters
    friend bool operator==(const StringWord&, const StringWord&) = default;
};

EdgeId letter_head(const Graph& g, Letter l);
EdgeId letter_tail(const Graph& g, Letter l);
// Colours of the vertices 0..k of the string's linear quiver.
std::vector<EdgeId> string_colors(const Graph& g, const StringWord& w);
StringWord inverse_word(const StringWord& w);
// The lexicographically smaller of w and its inverse.
StringWord canonical_word(const StringWord& w);
// Empty when valid for Lambda/soc, otherwise the reason.
std::string string_problem(const Graph& g, const StringWord& w);
std::string word_to_string(const Graph& g, const StringWord& w);
// Decorated Loewy text: one line per vertex, indented by depth.
std::string loewy_text(const Graph& g, const StringWord& w);

// Directed path (from | to) around one vertex; trivial when from == to.
StringWord directed_path(const Graph& g, Half from, Half to);
// Maximal directed path in Lambda/soc starting at h (the hook word).
StringWord hook_word(const Graph& g, Half h);
StringWord concat(const Graph& g, const StringWord& a, const StringWord& b);
// rad P_E and P_E/soc P_E as strings.
StringWord radical_word(const Graph& g, EdgeId e);
StringWord top_quotient_word(const Graph& g, EdgeId e);

struct HomTarget {
    enum class Kind { String, Projective, Zero };
    Kind kind = Kind::Zero;
    StringWord word;
    EdgeId edge = -1;

    static HomTarget zero() { return {}; }
    static HomTarget projective(EdgeId e) { return {Kind::Projective, {}, e}; }
    static HomTarget string(StringWord w) { return {Kind::String, std::move(w), -1}; }
};

std::string target_to_string(const Graph& g, const HomTarget& t);
int target_dim(const Graph& g, const HomTarget& t);

// (M, N) = (H^0, H^{-1}) of the complex of the walk.
std::pair<HomTarget, HomTarget> strings_of_walk(const Graph& g, const SignedWalk& w);

TwoTermComplex min_proj_presentation(const Graph& g, const StringWord& s);

// Crawley-Boevey count of dim Hom(x, y).
int hom_dim(const Graph& g, const HomTarget& x, const HomTarget& y);
int cb_count(const Graph& g, const StringWord& x, const StringWord& y);

// Independent cross-oracle: explicit modules over the path basis and the
// rank of the intertwining equations, in exact rational arithmetic.
int hom_dim_linear(const Algebra& alg, const HomTarget& x, const HomTarget& y);

// dim Hom(T', T[1]) in the homotopy category, by exact linear algebra.
int shift_hom_dim(const Algebra& alg, const TwoTermComplex& source, const TwoTermComplex& target);
// (dim H^0, dim H^{-1}) of a two-term complex.
std::pair<int, int> cohomology_dims(const Algebra& alg, const TwoTermComplex& t);

bool pretilting_oracle(const Graph& g, const SignedWalk& a, const SignedWalk& b);
// Hom(M_a, N_b) = 0 and Hom(M_b, N_a) = 0.
bool cross_vanishing(const Graph& g, const SignedWalk& a, const SignedWalk& b);

struct CrosscheckReport {
    int walks = 0;
    int pairs = 0;
    std::vector<std::string> disagreements;
};

// Compares admissibility and pairwise compatibility with the string oracle
// for every signed walk of length <= cap.
CrosscheckReport crosscheck_bijection(const Graph& g, int cap);

}  // namespace brauer
