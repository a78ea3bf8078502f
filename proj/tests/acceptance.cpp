// One pass/fail line per acceptance criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace brauer;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (!pass) detail << "; ";
        else detail.str("");
        pass = false;
        detail << why;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool run(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = seconds_since(t0);
    std::cout << "criterion " << number << ": " << (out.pass ? "PASS" : "FAIL") << " - " << title << " ["
              << out.detail.str() << (out.detail.str().empty() ? "" : ", ") << secs << " s]" << std::endl;
    return out.pass;
}

std::string walks_text(const Graph& g, const std::vector<SignedWalk>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : ", ") + walk_to_string(g, w);
    return s;
}

void criterion1(Outcome& o) {
    auto t0 = Clock::now();
    Graph g = support::load("g1");
    auto aw = enumerate_admissible_walks(g, default_cap(g));
    auto q = hasse_quiver(g);
    double secs = seconds_since(t0);
    if (aw.walks.size() != 2) o.fail("admissible walks: " + std::to_string(aw.walks.size()));
    if (q.nodes.size() != 2) o.fail("complete sets: " + std::to_string(q.nodes.size()));
    if (q.arrows.size() != 1 || q.arrows[0] != std::pair<int, int>{q.source, q.sink} ||
        !(q.nodes[q.source] == stalk_set(g, 1)) || !(q.nodes[q.sink] == stalk_set(g, -1)))
        o.fail("Hasse quiver is not the single arrow from the algebra to its shift");
    if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail << "2 walks, 2 sets, arrow " << set_to_string(g, q.nodes[q.source]) << " -> "
                         << set_to_string(g, q.nodes[q.sink]);
}

void criterion2(Outcome& o) {
    auto t0 = Clock::now();
    int graphs = 0, walks = 0, pairs = 0;
    for (const auto& name : support::discrete_graphs()) {
        Graph g = support::load(name);
        auto rep = crosscheck_bijection(g, g.num_edges());
        ++graphs;
        walks += rep.walks;
        pairs += rep.pairs;
        if (!rep.disagreements.empty())
            o.fail(name + ": " + std::to_string(rep.disagreements.size()) + " disagreements, first " +
                   rep.disagreements.front());
    }
    double secs = seconds_since(t0);
    if (secs >= 300) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail << graphs << " graphs, " << walks << " walks, " << pairs << " pairs, 0 disagreements";
}

void criterion3(Outcome& o) {
    int sets_total = 0;
    for (const auto& name : support::discrete_graphs()) {
        Graph g = support::load(name);
        for (const auto& s : enumerate_two_term_tilting(g)) {
            ++sets_total;
            std::set<EdgeId> covered;
            for (const auto& w : s.walks)
                for (Half h : w.halves) covered.insert(g.edge_of(h));
            if (static_cast<int>(s.walks.size()) != g.num_edges() || static_cast<int>(covered.size()) != g.num_edges())
                o.fail(name + ": " + set_to_string(g, s));
        }
    }
    if (o.pass) o.detail << sets_total << " complete sets checked";
}

void criterion4(Outcome& o) {
    for (const auto& base : support::base_graphs()) {
        Graph g = support::load(base), gm = support::load(support::m3(base));
        auto a = enumerate_two_term_tilting(g), b = enumerate_two_term_tilting(gm);
        std::vector<std::string> sa, sb;
        for (const auto& s : a) sa.push_back(set_to_string(g, s));
        for (const auto& s : b) sb.push_back(set_to_string(gm, s));
        if (sa != sb) {
            o.fail(base + ": node sets differ");
            continue;
        }
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < a.size(); ++j)
                if (order_ge(g, a[i], a[j]) != order_ge(gm, b[i], b[j])) o.fail(base + ": order differs at " + sa[i] + " vs " + sa[j]);
        for (const Graph* x : {&g, &gm}) {
            auto rep = crosscheck_bijection(*x, default_cap(*x));
            if (!rep.disagreements.empty()) o.fail(base + ": oracle disagrees on a variant");
        }
    }
    if (o.pass) o.detail << support::base_graphs().size() << " multiplicity pairs identical; oracle agrees on all variants";
}

void criterion5(Outcome& o) {
    for (const char* name : {"digon", "walk_example"}) {
        Graph g = support::load(name);
        int n = g.num_edges();
        std::vector<size_t> counts;
        for (int cap : {n, 2 * n, 3 * n}) counts.push_back(enumerate_admissible_walks(g, cap).walks.size());
        o.detail << name << " AW " << counts[0] << " < " << counts[1] << " < " << counts[2] << "; ";
        if (!(counts[0] < counts[1] && counts[1] < counts[2])) o.fail(std::string(name) + ": counts do not strictly increase");
    }
    std::vector<std::string> unstable;
    for (const auto& name : support::discrete_graphs()) {
        Graph g = support::load(name);
        if (!enumerate_admissible_walks(g, g.num_edges()).stabilized) {
            auto beyond = enumerate_admissible_walks(g, default_cap(g)).walks;
            std::vector<SignedWalk> longer;
            for (const auto& w : beyond)
                if (w.length() > g.num_edges()) longer.push_back(w);
            unstable.push_back(name + " (admissible beyond cap: " + walks_text(g, longer) + ")");
        }
    }
    if (!unstable.empty()) {
        std::string msg = "not stabilized at cap = #edges:";
        for (const auto& u : unstable) msg += " " + u;
        o.fail(o.detail.str() + msg);
    } else {
        o.detail << "all tilting-discrete corpus graphs stabilized at cap = #edges";
    }
}

void criterion6(Outcome& o) {
    Graph g = support::load("walk_example");
    auto crossing = parse_walk(g, "1+ 2- 3+ 6bar- 5bar+ 4bar- 3bar+ 2bar- 1bar+ 4-");
    auto rep = check_pair(g, crossing, crossing);
    std::set<std::set<std::string>> nc2;
    for (const auto& s : rep.nc2_failures) {
        std::set<std::string> edges;
        for (Half h : s.sequence) edges.insert(g.edge_name(g.edge_of(h)));
        nc2.insert(edges);
    }
    if (!nc2.count({"1", "2", "3"})) o.fail("no NC2 failure at (1,2,3)");
    if (!nc2.count({"4"})) o.fail("no NC2 failure at (4)");
    bool nc3 = false;
    for (const auto& s : rep.nc3_failures) {
        std::set<std::string> members{g.token(s.in_first.first.half), g.token(s.in_first.second.half),
                                      g.token(s.in_second.first.half), g.token(s.in_second.second.half)};
        if (g.vertex_name(s.vertex) == "v" && members == std::set<std::string>{"1", "3bar", "4", "6bar"}) nc3 = true;
    }
    if (!nc3) o.fail("no NC3 failure at v with members {1, 3bar, 4, 6bar}");
    if (is_admissible(g, crossing)) o.fail("crossing walk accepted");
    if (o.pass) o.detail << "NC2 at (1,2,3) and (4), NC3 at v {1, 3bar, 4, 6bar}";
}

void criterion7(Outcome& o) {
    Graph g1 = support::load("g1");
    if (!(flip(g1, 0, FlipDirection::Left) == g1) || !(flip(g1, 0, FlipDirection::Right) == g1))
        o.fail("flip of the one-edge graph is not the identity");
    int flips = 0;
    for (const auto& name : support::all_graphs()) {
        Graph g = support::load(name);
        if (!(opposite_graph(opposite_graph(g)) == g)) o.fail(name + ": double opposite");
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            Graph l = flip(g, e, FlipDirection::Left), r = flip(g, e, FlipDirection::Right);
            if (!(r == opposite_graph(flip(opposite_graph(g), e, FlipDirection::Left))))
                o.fail(name + ": right flip is not the conjugated left flip");
            if (!(flip(l, e, FlipDirection::Right) == g) || !(flip(r, e, FlipDirection::Left) == g))
                o.fail(name + ": left and right flips are not inverse");
            for (const Graph* f : {&l, &r}) {
                ++flips;
                if (!(parse_graph(serialize_graph(*f)) == *f)) o.fail(name + ": flipped graph does not re-parse");
                if (!is_connected(*f)) o.fail(name + ": flipped graph disconnected");
                if (is_tilting_discrete(*f) != is_tilting_discrete(g)) o.fail(name + ": discreteness changed");
            }
        }
    }
    if (o.pass) o.detail << flips << " flips valid, connected, discreteness preserved; dualities hold";
}

void criterion8(Outcome& o) {
    int graphs = 0;
    for (const auto& name : support::discrete_graphs()) {
        Graph g = support::load(name);
        auto sets = enumerate_two_term_tilting(g);
        int n = static_cast<int>(sets.size());
        std::vector<std::vector<char>> ge(n, std::vector<char>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) ge[a][b] = order_ge(g, sets[a], sets[b]);
        std::vector<int> maxima, minima;
        for (int a = 0; a < n; ++a) {
            if (!ge[a][a]) o.fail(name + ": not reflexive");
            bool is_max = true, is_min = true;
            for (int b = 0; b < n; ++b) {
                if (a != b && ge[a][b] && ge[b][a]) o.fail(name + ": not antisymmetric");
                for (int c = 0; c < n; ++c)
                    if (ge[a][b] && ge[b][c] && !ge[a][c]) o.fail(name + ": not transitive");
                is_max = is_max && ge[a][b];
                is_min = is_min && ge[b][a];
            }
            if (is_max) maxima.push_back(a);
            if (is_min) minima.push_back(a);
        }
        if (maxima.size() != 1 || !(sets[maxima[0]] == stalk_set(g, 1))) o.fail(name + ": maximum is not the all-plus set");
        if (minima.size() != 1 || !(sets[minima[0]] == stalk_set(g, -1))) o.fail(name + ": minimum is not the all-minus set");
        hasse_quiver(g);  // throws unless connected with unique source and sink
        ++graphs;
    }
    if (o.pass) o.detail << graphs << " posets checked; Hasse quivers connected";
}

void criterion9(Outcome& o) {
    auto t0 = Clock::now();
    for (const auto& name : support::all_graphs()) {
        Graph g = support::load(name);
        Algebra alg(g);
        int formula = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) formula += g.multiplicity(v) * g.valency(v) * g.valency(v);
        int per_edge = 0;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto [a, b] = g.halves_of(e);
            int expect = g.cycle_length(a) + g.cycle_length(b);
            if (alg.dim_projective(e) != expect) o.fail(name + ": dim P_" + g.edge_name(e));
            per_edge += expect;
        }
        if (alg.dim() != formula || per_edge != formula) o.fail(name + ": algebra dimension");
    }

    // 50 generated strings spread over the corpus
    int strings = 0;
    unsigned seed = 1;
    for (const auto& name : support::all_graphs()) {
        Graph g = support::load(name);
        for (const auto& w : support::random_strings(g, 3, seed++)) {
            if (strings == 50) break;
            ++strings;
            auto colors = string_colors(g, w);
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                int count = static_cast<int>(std::count(colors.begin(), colors.end(), e));
                if (hom_dim(g, HomTarget::projective(e), HomTarget::string(w)) != count)
                    o.fail(name + ": Hom(P, " + word_to_string(g, w) + ")");
            }
        }
    }
    if (strings < 50) o.fail("only " + std::to_string(strings) + " strings generated");

    int graphs = 0, comparisons = 0;
    for (const auto& name : support::all_graphs()) {
        Graph g = support::load(name);
        Algebra alg(g);
        if (alg.dim() > 30) continue;
        ++graphs;
        std::vector<HomTarget> xs;
        for (EdgeId e = 0; e < g.num_edges(); ++e) xs.push_back(HomTarget::projective(e));
        int cap = is_tilting_discrete(g) ? default_cap(g) : 3;
        for (const auto& w : enumerate_signed_walks(g, cap)) {
            auto [m, n] = strings_of_walk(g, w);
            for (const auto& t : {m, n})
                if (t.kind == HomTarget::Kind::String) xs.push_back(t);
        }
        for (const auto& w : support::random_strings(g, 10, 99)) xs.push_back(HomTarget::string(w));
        for (const auto& x : xs)
            for (const auto& y : xs) {
                ++comparisons;
                if (hom_dim(g, x, y) != hom_dim_linear(alg, x, y))
                    o.fail(name + ": CB " + target_to_string(g, x) + " -> " + target_to_string(g, y));
            }
    }
    double secs = seconds_since(t0);
    if (secs >= 120) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail << "dims match; " << strings << " strings; " << comparisons << " CB comparisons on " << graphs
                         << " graphs";
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run(1, "one-edge tree", criterion1);
    ok &= run(2, "walks vs module oracle on the corpus", criterion2);
    ok &= run(3, "complete sets have one walk per edge", criterion3);
    ok &= run(4, "multiplicity invariance", criterion4);
    ok &= run(5, "finiteness of admissible walks", criterion5);
    ok &= run(6, "crossing walk regression", criterion6);
    ok &= run(7, "flips", criterion7);
    ok &= run(8, "partial order and Hasse quiver", criterion8);
    ok &= run(9, "algebra and Hom oracle", criterion9);
    return ok ? 0 : 1;
}
