#include <doctest.h>

#include "support.hpp"

using namespace brauer;

namespace {

template <class F>
std::string category_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.category();
    }
    return "";
}

}  // namespace

TEST_CASE("parse the one-edge tree") {
    Graph g = parse_graph("vertex u mult=1: e\nvertex v mult=1: f\nedge E: e f\n");
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(g.bar(g.find_half("e")) == g.find_half("f"));
    CHECK(g == support::load("g1"));
}

TEST_CASE("parse the two-loop graph") {
    Graph g = support::load("two_loop");
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_halves() == 4);
    CHECK(g.valency(0) == 4);
}

TEST_CASE("multiplicity defaults to one and comments are ignored") {
    Graph g = parse_graph("# tree\nvertex u: e  # leaf\nvertex v: f\nedge E: e f\n");
    CHECK(g.multiplicity(0) == 1);
    CHECK(g.multiplicity(1) == 1);
}

TEST_CASE("rotated vertex lines parse to equal graphs") {
    Graph a = parse_graph("vertex v: e ebar fbar f\nedge E: e ebar\nedge F: f fbar\n");
    Graph b = parse_graph("vertex v: fbar f e ebar\nedge F: f fbar\nedge E: e ebar\n");
    CHECK(a == b);
}

TEST_CASE("validation errors carry their category") {
    CHECK(category_of([] { parse_graph("vertex u: e\nedge E: e e\n"); }) == "FixedPointPairing");
    CHECK(category_of([] { parse_graph("vertex u: e e\nvertex v: f\nedge E: e f\n"); }) == "DuplicateHalfEdge");
    CHECK(category_of([] { parse_graph("vertex u: e g\nvertex v: f\nedge E: e f\n"); }) == "UnpairedHalfEdge");
    CHECK(category_of([] {
              parse_graph("vertex u: e\nvertex v: f\nvertex x: g\nvertex y: h\nedge E: e f\nedge G: g h\n");
          }) == "Disconnected");
    CHECK(category_of([] { parse_graph("vertex u mult=0: e\nvertex v: f\nedge E: e f\n"); }) == "BadMultiplicity");
    CHECK(category_of([] { parse_graph("vertex u e\n"); }) == "ParseError");
    CHECK(category_of([] { parse_graph("edge E: e f\n"); }) != "");
}

TEST_CASE("serialization round-trips every corpus graph") {
    for (const auto& name : support::all_graphs()) {
        Graph g = support::load(name);
        CHECK_MESSAGE(parse_graph(serialize_graph(g)) == g, name);
    }
}

TEST_CASE("cycle profiles") {
    auto g1 = cycle_profile(support::load("g1"));
    CHECK(g1.betti == 0);
    CHECK(g1.cycle_lengths.empty());

    auto digon = cycle_profile(support::load("digon"));
    CHECK(digon.betti == 1);
    CHECK(digon.cycle_lengths == std::vector<int>{2});

    CHECK(cycle_profile(support::load("walk_example")).betti == 2);
    CHECK(cycle_profile(support::load("loop")).cycle_lengths == std::vector<int>{1});
    CHECK(cycle_profile(support::load("triangle")).cycle_lengths == std::vector<int>{3});
    CHECK(cycle_profile(support::load("loop_pendant")).cycle_lengths == std::vector<int>{1});
}

TEST_CASE("tilting-discreteness") {
    CHECK(is_tilting_discrete(support::load("g1")));
    CHECK_FALSE(is_tilting_discrete(support::load("digon")));
    CHECK(is_tilting_discrete(support::load("loop")));
    CHECK_FALSE(is_tilting_discrete(support::load("two_loop")));
    CHECK_FALSE(is_tilting_discrete(support::load("theta")));
    CHECK_FALSE(is_tilting_discrete(support::load("walk_example")));
    for (const auto& name : support::discrete_graphs()) CHECK_MESSAGE(is_tilting_discrete(support::load(name)), name);
}

TEST_CASE("opposite graph") {
    Graph g1 = support::load("g1");
    CHECK(opposite_graph(g1) == g1);
    Graph op = opposite_graph(support::load("two_loop"));
    Graph expected = parse_graph("vertex v: e f fbar ebar\nedge E: e ebar\nedge F: f fbar\n");
    CHECK(op == expected);
}

TEST_CASE("flip examples") {
    Graph g1 = support::load("g1");
    CHECK(flip(g1, "E", FlipDirection::Left) == g1);
    CHECK(flip(g1, "E", FlipDirection::Right) == g1);

    Graph line = support::load("line2");
    Graph f = flip(line, "E1", FlipDirection::Left);
    Half a = f.find_half("a"), abar = f.find_half("abar");
    CHECK(f.vertex_name(f.source(a)) == "x");
    CHECK(f.vertex_name(f.source(abar)) == "z");
    Graph expected = parse_graph(
        "vertex x: a\nvertex y: b\nvertex z: abar bbar\nedge E1: a abar\nedge E2: b bbar\n");
    CHECK(f == expected);

    Graph digon = support::load("digon");
    Graph fd = flip(digon, "A", FlipDirection::Left);
    CHECK(fd == parse_graph("vertex u: abar b\nvertex v: a bbar\nedge A: a abar\nedge B: b bbar\n"));

    CHECK(category_of([&] { flip(line, "E9", FlipDirection::Left); }) == "UnknownEdge");
}

TEST_CASE("augmented cyclic order") {
    Graph g1 = support::load("g1");
    auto ord = augmented_cyclic_order(g1, "u");
    Half e = g1.find_half("e");
    CHECK(ord.sequence == std::vector<Slot>{{e, -1}, {e, 0}, {e, 1}});

    Graph tl = support::load("two_loop");
    auto big = augmented_cyclic_order(tl, "v");
    REQUIRE(big.sequence.size() == 12);
    std::vector<std::string> real;
    for (const auto& s : big.sequence)
        if (!s.is_virtual()) real.push_back(tl.token(s.half));
    CHECK(real == std::vector<std::string>{"e", "ebar", "fbar", "f"});

    CHECK(category_of([&] { augmented_cyclic_order(g1, "nowhere"); }) == "UnknownVertex");
}

TEST_CASE("cyclic subordering") {
    Graph g = support::load("walk_example");  // v: 1 3bar 4 6bar
    auto s = [&](const char* t) { return Slot{g.find_half(t), 0}; };
    CHECK(is_cyclic_subordering(g, {s("1"), s("4"), s("6bar")}));
    CHECK(is_cyclic_subordering(g, {s("4"), s("6bar"), s("1")}));
    CHECK_FALSE(is_cyclic_subordering(g, {s("1"), s("6bar"), s("4")}));
    CHECK(is_cyclic_subordering(g, {Slot{g.find_half("1"), -1}, s("1"), Slot{g.find_half("1"), 1}}));
    CHECK_FALSE(is_cyclic_subordering(g, {s("1"), s("1")}));
    CHECK_FALSE(is_cyclic_subordering(g, {s("1"), s("5")}));  // different vertices
}
