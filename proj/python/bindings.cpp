#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brauer/algebra.hpp"
#include "brauer/oracle.hpp"

namespace py = pybind11;
using namespace brauer;

namespace {

std::vector<std::string> walk_strings(const Graph& g, const std::vector<SignedWalk>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(walk_to_string(g, w));
    return out;
}

std::vector<std::vector<std::string>> set_strings(const Graph& g, const std::vector<CompleteSet>& sets) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : sets) out.push_back(walk_strings(g, s.walks));
    return out;
}

FlipDirection direction(const std::string& d) {
    if (d == "left") return FlipDirection::Left;
    if (d == "right") return FlipDirection::Right;
    throw py::value_error("direction must be 'left' or 'right'");
}

}  // namespace

PYBIND11_MODULE(_brauer, m) {
    m.doc() = "Two-term tilting complexes of Brauer graph algebras";

    auto base = py::register_exception<Error>(m, "BrauerError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<LookupError>(m, "BrauerLookupError", base.ptr());
    py::register_exception<WalkError>(m, "WalkError", base.ptr());
    py::register_exception<NotEnumerable>(m, "NotEnumerable", base.ptr());
    py::register_exception<InternalInvariantViolation>(m, "InternalInvariantViolation", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def_static("parse", [](const std::string& text) { return parse_graph(text); })
        .def_static("load", &load_graph)
        .def("serialize", &serialize_graph)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_half_edges", &Graph::num_halves)
        .def_property_readonly("edge_names", [](const Graph& g) {
            std::vector<std::string> out;
            for (EdgeId e = 0; e < g.num_edges(); ++e) out.push_back(g.edge_name(e));
            return out;
        })
        .def("is_tilting_discrete", &is_tilting_discrete)
        .def("is_connected", &is_connected)
        .def("betti", [](const Graph& g) { return cycle_profile(g).betti; })
        .def("opposite", &opposite_graph)
        .def("flip", [](const Graph& g, const std::string& edge, const std::string& dir) {
            return flip(g, std::string_view(edge), direction(dir));
        }, py::arg("edge"), py::arg("direction") = "left")
        .def("algebra_dim", [](const Graph& g) { return Algebra(g).dim(); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph with " + std::to_string(g.num_edges()) + " edges>";
        });

    m.def("canonical_walk", [](const Graph& g, const std::string& w) { return walk_to_string(g, parse_walk(g, w)); });
    m.def("is_admissible", [](const Graph& g, const std::string& w) { return is_admissible(g, parse_walk(g, w)); });
    m.def("compatible", [](const Graph& g, const std::string& a, const std::string& b) {
        return check_pair(g, parse_walk(g, a), parse_walk(g, b)).compatible();
    });
    m.def("pretilting", [](const Graph& g, const std::string& a, const std::string& b) {
        return pretilting_oracle(g, parse_walk(g, a), parse_walk(g, b));
    });
    m.def("admissible_walks", [](const Graph& g, std::optional<int> cap) {
        auto en = enumerate_admissible_walks(g, cap ? *cap : default_cap(g));
        return py::make_tuple(walk_strings(g, en.walks), en.stabilized);
    }, py::arg("graph"), py::arg("cap") = py::none());
    m.def("two_term_tilting", [](const Graph& g, std::optional<int> cap) {
        return set_strings(g, enumerate_two_term_tilting(g, cap));
    }, py::arg("graph"), py::arg("cap") = py::none());
    m.def("hasse_json", [](const Graph& g, std::optional<int> cap) {
        return hasse_to_json(g, hasse_quiver(g, cap));
    }, py::arg("graph"), py::arg("cap") = py::none());
    m.def("crosscheck", [](const Graph& g, int cap) {
        auto rep = crosscheck_bijection(g, cap);
        py::dict d;
        d["walks"] = rep.walks;
        d["pairs"] = rep.pairs;
        d["disagreements"] = rep.disagreements;
        return d;
    });
    m.def("module_strings", [](const Graph& g, const std::string& w) {
        auto [mm, nn] = strings_of_walk(g, parse_walk(g, w));
        return py::make_tuple(target_to_string(g, mm), target_to_string(g, nn));
    });
    m.def("hom_m_to_n", [](const Graph& g, const std::string& a, const std::string& b) {
        auto [ma, na] = strings_of_walk(g, parse_walk(g, a));
        auto [mb, nb] = strings_of_walk(g, parse_walk(g, b));
        return hom_dim(g, ma, nb);
    }, "dim Hom(M_a, N_b)");
}
