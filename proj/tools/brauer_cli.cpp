#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "brauer/algebra.hpp"
#include "brauer/oracle.hpp"

using namespace brauer;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Usage = 1, Invalid = 2, Refused = 3, Mismatch = 4 };

struct Options {
    std::string graph_path;
    std::optional<int> cap;
    std::string format = "text";
    std::string edge;
    std::string direction = "left";
    std::string first_walk, second_walk;
    bool verbose = false;
};

json walk_list(const Graph& g, const std::vector<SignedWalk>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(walk_to_string(g, w));
    return a;
}

void print_loewy(const Graph& g, const SignedWalk& w) {
    auto [m, n] = strings_of_walk(g, w);
    std::cerr << "walk " << walk_to_string(g, w) << "\n";
    for (auto [label, t] : {std::pair{"M", &m}, std::pair{"N", &n}}) {
        std::cerr << "  " << label << " = " << target_to_string(g, *t) << "\n";
        if (t->kind == HomTarget::Kind::String) {
            std::string text = loewy_text(g, t->word);
            size_t start = 0;
            while (start < text.size()) {
                size_t end = text.find('\n', start);
                if (end == std::string::npos) end = text.size();
                std::cerr << "    " << text.substr(start, end - start) << "\n";
                start = end + 1;
            }
        }
    }
}

int cmd_validate(const Graph& g, const Options& o) {
    auto p = cycle_profile(g);
    Algebra alg(g);
    if (o.format == "json") {
        json j;
        j["type"] = "BrauerGraph";
        j["vertices"] = json::array();
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            json order = json::array();
            for (Half h : g.order_at(v)) order.push_back(g.token(h));
            j["vertices"].push_back({{"name", g.vertex_name(v)}, {"multiplicity", g.multiplicity(v)}, {"cyclic_order", order}});
        }
        j["edges"] = json::array();
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto [a, b] = g.halves_of(e);
            j["edges"].push_back({{"name", g.edge_name(e)}, {"half_edges", {g.token(a), g.token(b)}}});
        }
        j["half_edges"] = g.num_halves();
        j["betti"] = p.betti;
        j["algebra_dim"] = alg.dim();
        std::cout << j.dump(2) << "\n";
        return Ok;
    }
    std::cout << "valid Brauer graph\n"
              << "vertices: " << g.num_vertices() << "\n"
              << "edges: " << g.num_edges() << "\n"
              << "half-edges: " << g.num_halves() << "\n"
              << "betti: " << p.betti << "\n"
              << "algebra dimension: " << alg.dim() << "\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::cout << "vertex " << g.vertex_name(v) << " mult=" << g.multiplicity(v) << ":";
        for (Half h : g.order_at(v)) std::cout << " " << g.token(h);
        std::cout << "\n";
    }
    return Ok;
}

int cmd_walks(const Graph& g, const Options& o) {
    int cap = o.cap ? *o.cap : default_cap(g);
    auto en = enumerate_admissible_walks(g, cap);
    if (o.format == "json") {
        json j{{"type", "WalkEnumeration"}, {"cap", cap}, {"stabilized", en.stabilized}, {"walks", walk_list(g, en.walks)}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& w : en.walks) std::cout << walk_to_string(g, w) << "\n";
    }
    if (o.verbose) {
        std::cerr << en.walks.size() << " admissible walks up to length " << cap
                  << (en.stabilized ? " (stabilized)\n" : " (longer signed walks exist)\n");
        for (const auto& w : en.walks) print_loewy(g, w);
    }
    return Ok;
}

int cmd_tilt2(const Graph& g, const Options& o) {
    auto sets = enumerate_two_term_tilting(g, o.cap);
    if (o.format == "json") {
        json j{{"type", "CompleteSetList"}, {"sets", json::array()}};
        for (const auto& s : sets) j["sets"].push_back({{"type", "CompleteSet"}, {"walks", walk_list(g, s.walks)}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& s : sets) std::cout << set_to_string(g, s) << "\n";
    }
    if (o.verbose) std::cerr << sets.size() << " two-term tilting complexes\n";
    return Ok;
}

int cmd_hasse(const Graph& g, const Options& o) {
    auto q = hasse_quiver(g, o.cap);
    if (o.format == "json") {
        std::cout << hasse_to_json(g, q);
    } else if (o.format == "dot") {
        std::cout << hasse_to_dot(g, q);
    } else {
        for (size_t i = 0; i < q.nodes.size(); ++i) std::cout << "node " << i << ": " << set_to_string(g, q.nodes[i]) << "\n";
        for (auto [a, b] : q.arrows) std::cout << "arrow " << a << " -> " << b << "\n";
        std::cout << "source " << q.source << "\nsink " << q.sink << "\n";
    }
    return Ok;
}

int cmd_flip(const Graph& g, const Options& o) {
    auto dir = o.direction == "right" ? FlipDirection::Right : FlipDirection::Left;
    Graph f = flip(g, o.edge, dir);
    std::cout << serialize_graph(f);
    return Ok;
}

int cmd_discrete(const Graph& g, const Options& o) {
    auto p = cycle_profile(g);
    bool d = is_tilting_discrete(g);
    if (o.format == "json") {
        json j{{"type", "CycleProfile"},
               {"tilting_discrete", d},
               {"betti", p.betti},
               {"cycle_lengths", p.cycle_lengths},
               {"odd_cycles", p.odd_cycles},
               {"even_cycles", p.even_cycles}};
        std::cout << j.dump(2) << "\n";
        return Ok;
    }
    std::cout << "tilting-discrete: " << (d ? "yes" : "no") << "\n"
              << "betti: " << p.betti << "\n"
              << "cycle lengths:";
    for (int l : p.cycle_lengths) std::cout << " " << l;
    std::cout << "\nodd cycles: " << p.odd_cycles << "\neven cycles: " << p.even_cycles << "\n";
    return Ok;
}

int cmd_verify(const Graph& g, const Options& o) {
    int cap = o.cap ? *o.cap : default_cap(g);
    auto rep = crosscheck_bijection(g, cap);
    if (o.format == "json") {
        json j{{"type", "CrosscheckReport"},
               {"cap", cap},
               {"walks", rep.walks},
               {"pairs", rep.pairs},
               {"disagreements", rep.disagreements}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.walks << " walks, " << rep.pairs << " pairs, " << rep.disagreements.size()
                  << " disagreements\n";
        for (const auto& d : rep.disagreements) std::cout << "  " << d << "\n";
    }
    return rep.disagreements.empty() ? Ok : Mismatch;
}

int cmd_hom(const Graph& g, const Options& o) {
    SignedWalk a = parse_walk(g, o.first_walk), b = parse_walk(g, o.second_walk);
    auto [ma, na] = strings_of_walk(g, a);
    auto [mb, nb] = strings_of_walk(g, b);
    int ab = hom_dim(g, ma, nb), ba = hom_dim(g, mb, na);
    int aa = hom_dim(g, ma, na), bb = hom_dim(g, mb, nb);
    bool compatible = check_pair(g, a, b).compatible();
    if (o.format == "json") {
        json j{{"type", "HomReport"},
               {"first", walk_to_string(g, a)},
               {"second", walk_to_string(g, b)},
               {"hom_m_first_n_second", ab},
               {"hom_m_second_n_first", ba},
               {"hom_m_first_n_first", aa},
               {"hom_m_second_n_second", bb},
               {"pretilting", aa == 0 && bb == 0 && ab == 0 && ba == 0},
               {"compatible", compatible}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dim Hom(M_1, N_2) = " << ab << "\n"
                  << "dim Hom(M_2, N_1) = " << ba << "\n"
                  << "dim Hom(M_1, N_1) = " << aa << "\n"
                  << "dim Hom(M_2, N_2) = " << bb << "\n"
                  << "pretilting: " << (aa == 0 && bb == 0 && ab == 0 && ba == 0 ? "yes" : "no") << "\n"
                  << "combinatorially compatible: " << (compatible ? "yes" : "no") << "\n";
    }
    if (o.verbose) {
        print_loewy(g, a);
        print_loewy(g, b);
    }
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-term tilting complexes of Brauer graph algebras"};
    app.require_subcommand(1);
    Options o;

    auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", o.graph_path, "Brauer graph file")->required(); };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap", o.cap, "maximum walk length")->check(CLI::PositiveNumber);
    };
    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
    };
    auto add_verbose = [&](CLI::App* sub) { sub->add_flag("--verbose", o.verbose, "print Loewy diagrams to stderr"); };

    auto* validate = app.add_subcommand("validate", "parse and summarize a graph");
    add_graph(validate);
    add_format(validate, {"text", "json"});

    auto* walks = app.add_subcommand("walks", "list admissible signed walks");
    add_graph(walks);
    add_cap(walks);
    add_format(walks, {"text", "json"});
    add_verbose(walks);

    auto* tilt2 = app.add_subcommand("tilt2", "list complete admissible sets");
    add_graph(tilt2);
    add_cap(tilt2);
    add_format(tilt2, {"text", "json"});
    add_verbose(tilt2);

    auto* hasse = app.add_subcommand("hasse", "Hasse quiver of two-term tilting complexes");
    add_graph(hasse);
    add_cap(hasse);
    o.format = "dot";
    add_format(hasse, {"text", "json", "dot"});

    auto* flip_cmd = app.add_subcommand("flip", "flip an edge");
    add_graph(flip_cmd);
    flip_cmd->add_option("--edge", o.edge, "edge name")->required();
    flip_cmd->add_option("--direction", o.direction, "left or right")->check(CLI::IsMember({"left", "right"}));

    auto* discrete = app.add_subcommand("discrete", "decide tilting-discreteness");
    add_graph(discrete);
    add_format(discrete, {"text", "json"});

    auto* verify = app.add_subcommand("verify", "cross-check walks against the module oracle");
    add_graph(verify);
    add_cap(verify);
    add_format(verify, {"text", "json"});

    auto* hom = app.add_subcommand("hom", "Hom dimensions between two walks' modules");
    add_graph(hom);
    hom->add_option("first", o.first_walk, "first signed walk, e.g. '1+ 2- 3+'")->required();
    hom->add_option("second", o.second_walk, "second signed walk")->required();
    add_format(hom, {"text", "json"});
    add_verbose(hom);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }
    if (!hasse->parsed() && o.format == "dot") o.format = "text";

    try {
        Graph g = load_graph(o.graph_path);
        if (validate->parsed()) return cmd_validate(g, o);
        if (walks->parsed()) return cmd_walks(g, o);
        if (tilt2->parsed()) return cmd_tilt2(g, o);
        if (hasse->parsed()) return cmd_hasse(g, o);
        if (flip_cmd->parsed()) return cmd_flip(g, o);
        if (discrete->parsed()) return cmd_discrete(g, o);
        if (verify->parsed()) return cmd_verify(g, o);
        if (hom->parsed()) return cmd_hom(g, o);
    } catch (const NotEnumerable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Refused;
    } catch (const InternalInvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Mismatch;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    }
    return Usage;
}
