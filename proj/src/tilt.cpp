#include "brauer/tilt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace brauer {

namespace {

int steps_between(const Graph& g, Half from, Half to) {
    int val = g.valency(g.source(from));
    return ((g.position(to) - g.position(from)) % val + val) % val;
}

PathLabel short_path(const Graph& g, Half from, Half to) {
    PathLabel p;
    p.start = from;
    p.steps = steps_between(g, from, to);
    return p;
}

std::string label_text(const Graph& g, const PathLabel& p) {
    if (p.socle) return "soc(" + g.edge_name(p.socle_edge) + ")";
    Half end = g.next_pow(p.start, p.steps);
    std::string s;
    if (p.power > 0) s += "[" + g.token(p.start) + "]^" + std::to_string(p.power);
    if (p.steps > 0 || p.power == 0) s += "(" + g.token(p.start) + "|" + g.token(end) + ")";
    return s;
}

}  // namespace

TwoTermComplex complex_of_walk(const Graph& g, const SignedWalk& w) {
    TwoTermComplex t;
    int m = w.length();
    std::vector<int> slot(m);
    for (int k = 0; k < m; ++k) {
        auto& list = w.signs[k] > 0 ? t.degree0 : t.degree_minus1;
        slot[k] = static_cast<int>(list.size());
        list.push_back(g.edge_of(w.halves[k]));
    }
    for (int k = 0; k + 1 < m; ++k) {
        Half out_bar = g.bar(w.halves[k]), in = w.halves[k + 1];
        if (w.signs[k] > 0)  // plus then minus: (ebar_a | e_{a+1})
            t.entries.push_back({slot[k], slot[k + 1], short_path(g, out_bar, in)});
        else  // minus then plus: (e_a | ebar_{a-1})
            t.entries.push_back({slot[k + 1], slot[k], short_path(g, in, out_bar)});
    }
    return t;
}

SignedWalk walk_of_complex(const Graph& g, const TwoTermComplex& t) {
    int p = static_cast<int>(t.degree0.size()), q = static_cast<int>(t.degree_minus1.size());
    for (EdgeId a : t.degree0)
        for (EdgeId b : t.degree_minus1)
            if (a == b) throw ComplexError("SummandOverlap", "edge '" + g.edge_name(a) + "' occurs in both degrees");
    int nodes = p + q;
    if (nodes == 0) throw ComplexError("Disconnected", "empty complex");
    std::vector<std::vector<std::pair<int, int>>> adj(nodes);  // (neighbour, entry index)
    for (size_t k = 0; k < t.entries.size(); ++k) {
        const auto& e = t.entries[k];
        if (e.row < 0 || e.row >= p || e.col < 0 || e.col >= q)
            throw ComplexError("Disconnected", "entry outside the summand range");
        if (!e.label.is_short(g)) throw ComplexError("NotShortString", "entry is not a short path");
        Half from = e.label.start, to = g.next_pow(from, e.label.steps);
        if (g.edge_of(from) != t.degree0[e.row] || g.edge_of(to) != t.degree_minus1[e.col])
            throw ComplexError("NotShortString", "entry does not connect its summands");
        adj[e.row].push_back({p + e.col, static_cast<int>(k)});
        adj[p + e.col].push_back({e.row, static_cast<int>(k)});
    }
    if (static_cast<int>(t.entries.size()) != nodes - 1)
        throw ComplexError("Disconnected", "differential is not a single string");
    int start = 0;
    for (int v = 0; v < nodes; ++v) {
        if (adj[v].size() > 2) throw ComplexError("Disconnected", "differential is not a single string");
        if (adj[v].size() <= 1) start = v;
    }
    std::vector<int> order{start}, via;
    std::vector<char> seen(nodes, 0);
    seen[start] = 1;
    while (true) {
        int cur = order.back(), nxt = -1, ent = -1;
        for (auto [n, k] : adj[cur])
            if (!seen[n]) nxt = n, ent = k;
        if (nxt < 0) break;
        seen[nxt] = 1;
        order.push_back(nxt);
        via.push_back(ent);
    }
    if (static_cast<int>(order.size()) != nodes) throw ComplexError("Disconnected", "differential splits into blocks");

    auto is_plus = [&](int node) { return node < p; };
    int m = nodes;
    std::vector<Half> e(m, -1);
    if (m == 1) {
        EdgeId edge = is_plus(start) ? t.degree0[start] : t.degree_minus1[start - p];
        e[0] = g.halves_of(edge).first;
    }
    for (int k = 0; k + 1 < m; ++k) {
        const auto& lab = t.entries[via[k]].label;
        Half from = lab.start, to = g.next_pow(from, lab.steps);
        Half out_bar = is_plus(order[k]) ? from : to;
        Half in = is_plus(order[k]) ? to : from;
        if (e[k] >= 0 && e[k] != g.bar(out_bar))
            throw ComplexError("NotShortString", "entries do not chain into a walk");
        e[k] = g.bar(out_bar);
        e[k + 1] = in;
    }
    std::vector<SignedToken> tokens;
    int first = is_plus(order[0]) ? 1 : -1;
    for (int k = 0; k < m; ++k) tokens.push_back({e[k], k % 2 ? -first : first});
    SignedWalk w = make_signed_walk(g, tokens);
    if (!same_up_to_summand_order(g, complex_of_walk(g, w), t))
        throw ComplexError("NotShortString", "complex is not the complex of a walk");
    return w;
}

bool same_up_to_summand_order(const Graph& g, const TwoTermComplex& a, const TwoTermComplex& b) {
    if (a.degree0.size() != b.degree0.size() || a.degree_minus1.size() != b.degree_minus1.size()) return false;
    if (a.entries.size() != b.entries.size()) return false;
    Algebra alg(g);
    int p = static_cast<int>(a.degree0.size()), q = static_cast<int>(a.degree_minus1.size());
    auto entry_map = [&](const TwoTermComplex& t) {
        std::map<std::pair<int, int>, int> m;
        for (const auto& e : t.entries) m[{e.row, e.col}] = alg.from_label(e.label);
        return m;
    };
    auto ea = entry_map(a), eb = entry_map(b);
    std::vector<int> rp(p, -1), cp(q, -1);
    std::vector<char> rused(p, 0), cused(q, 0);
    std::function<bool(int)> assign = [&](int k) -> bool {
        if (k == p + q) {
            for (const auto& [key, val] : ea) {
                auto it = eb.find({rp[key.first], cp[key.second]});
                if (it == eb.end() || it->second != val) return false;
            }
            return true;
        }
        bool row = k < p;
        int idx = row ? k : k - p;
        int n = row ? p : q;
        for (int c = 0; c < n; ++c) {
            if ((row ? rused : cused)[c]) continue;
            if (row ? a.degree0[idx] != b.degree0[c] : a.degree_minus1[idx] != b.degree_minus1[c]) continue;
            (row ? rp : cp)[idx] = c;
            (row ? rused : cused)[c] = 1;
            if (assign(k + 1)) return true;
            (row ? rused : cused)[c] = 0;
        }
        return false;
    };
    return assign(0);
}

std::string complex_to_string(const Graph& g, const TwoTermComplex& t) {
    std::ostringstream out;
    auto sum = [&](const std::vector<EdgeId>& v) {
        if (v.empty()) return std::string("0");
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? " + P" : "P") + g.edge_name(v[i]);
        return s;
    };
    out << sum(t.degree_minus1) << " -> " << sum(t.degree0);
    for (const auto& e : t.entries)
        out << "\n  d[" << e.row << "," << e.col << "] = " << label_text(g, e.label);
    return out.str();
}

ShiftHomReport hom_vanishes_into_shift(const Graph& g, const SignedWalk& source, const SignedWalk& target) {
    ShiftHomReport r;
    for (bool trev : {false, true})
        for (bool srev : {false, true}) {
            HalfWalk w = oriented(g, target, trev), v = oriented(g, source, srev);
            int m = w.length(), n = v.length();
            auto prev = [&](const HalfWalk& x, int i) {  // ebar_{i-1} for 1-based i
                return i == 1 ? left_boundary(x) : Slot{g.bar(x.halves[i - 2]), 0};
            };
            auto after = [&](const HalfWalk& x, int k) {  // e_k for 1-based k, virtual past the end
                return k == x.length() + 1 ? right_boundary(g, x) : Slot{x.halves[k - 1], 0};
            };
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n; ++j) {
                    Half ei = w.halves[i - 1], ej = v.halves[j - 1];
                    if (w.signs[i - 1] < 0 || v.signs[j - 1] > 0 || g.source(ei) != g.source(ej)) continue;
                    Slot a{ei, 0}, b{ej, 0}, pw = prev(w, i), pv = prev(v, j);
                    int which = 0;
                    if (ei == ej) which = 1;
                    else if (pw == pv && is_cyclic_subordering(g, {a, b, pw})) which = 2;
                    else if (is_cyclic_subordering(g, {a, b, pv, pw})) which = 3;
                    else if (is_cyclic_subordering(g, {a, b, pw, pv})) which = 4;
                    if (which) r.u2.push_back({trev, srev, i, j, which});
                }
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (w.halves[i - 1] != v.halves[j - 1]) continue;
                    if (i > 1 && j > 1 && w.halves[i - 2] == v.halves[j - 2]) continue;
                    int len = 0;
                    bool signs_agree = true;
                    while (i + len <= m && j + len <= n && w.halves[i - 1 + len] == v.halves[j - 1 + len]) {
                        signs_agree &= w.signs[i - 1 + len] == v.signs[j - 1 + len];
                        ++len;
                    }
                    if (!signs_agree) continue;
                    Slot t1{w.halves[i - 1], 0}, tl{g.bar(w.halves[i + len - 2]), 0};
                    if (is_cyclic_subordering(g, {prev(v, j), prev(w, i), t1}) &&
                        is_cyclic_subordering(g, {tl, after(v, j + len), after(w, i + len)}))
                        r.l2.push_back({trev, srev, i, j, len});
                }
        }
    return r;
}

std::string set_to_string(const Graph& g, const CompleteSet& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.walks.size(); ++i) {
        if (i) out += ", ";
        out += walk_to_string(g, s.walks[i]);
    }
    return out + "]";
}

CompleteSet stalk_set(const Graph& g, int sign) {
    CompleteSet s;
    for (EdgeId e = 0; e < g.num_edges(); ++e) s.walks.push_back(SignedWalk{{g.halves_of(e).first}, {sign}});
    std::sort(s.walks.begin(), s.walks.end());
    return s;
}

namespace {

// Bron-Kerbosch with pivoting over an adjacency-matrix graph.
void maximal_cliques(const std::vector<std::vector<char>>& adj, std::vector<int>& r, std::vector<int> p,
                     std::vector<int> x, std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1;
    size_t best = 0;
    for (const auto* set : {&p, &x})
        for (int u : *set) {
            size_t c = 0;
            for (int v : p) c += adj[u][v];
            if (pivot < 0 || c > best) pivot = u, best = c;
        }
    std::vector<int> candidates;
    for (int v : p)
        if (!adj[pivot][v]) candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> np, nx;
        for (int u : p)
            if (adj[v][u]) np.push_back(u);
        for (int u : x)
            if (adj[v][u]) nx.push_back(u);
        r.push_back(v);
        maximal_cliques(adj, r, np, nx, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

int default_cap(const Graph& g) {
    if (!is_tilting_discrete(g))
        throw NotEnumerable("the graph is not tilting-discrete, so its set of admissible walks AW is infinite; "
                            "supply a length cap");
    return 2 * g.num_edges();
}

std::vector<CompleteSet> enumerate_two_term_tilting(const Graph& g, std::optional<int> cap) {
    bool assert_stable = !cap;
    if (!cap) cap = default_cap(g);
    auto en = enumerate_admissible_walks(g, *cap);
    if (assert_stable && !en.stabilized)
        throw InternalInvariantViolation("signed walks did not stabilize on a tilting-discrete graph");
    const auto& ws = en.walks;
    int n = static_cast<int>(ws.size());
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) adj[a][b] = adj[b][a] = check_pair(g, ws[a], ws[b]).compatible();
    std::vector<int> all(n), r;
    for (int a = 0; a < n; ++a) all[a] = a;
    std::vector<std::vector<int>> cliques;
    maximal_cliques(adj, r, all, {}, cliques);

    std::vector<CompleteSet> out;
    for (const auto& c : cliques) {
        CompleteSet s;
        for (int v : c) s.walks.push_back(ws[v]);
        std::sort(s.walks.begin(), s.walks.end());
        std::vector<char> covered(g.num_edges(), 0);
        for (const auto& w : s.walks)
            for (Half h : w.halves) covered[g.edge_of(h)] = 1;
        bool full = static_cast<int>(s.walks.size()) == g.num_edges() &&
                    std::all_of(covered.begin(), covered.end(), [](char c) { return c; });
        if (!full) {
            if (en.stabilized)
                throw InternalInvariantViolation("maximal admissible set " + set_to_string(g, s) +
                                                 " does not have one walk per edge");
            continue;  // truncated by the cap
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool order_ge(const Graph& g, const CompleteSet& a, const CompleteSet& b) {
    for (const auto& x : a.walks)
        for (const auto& y : b.walks)
            if (!hom_vanishes_into_shift(g, x, y).vanishes()) return false;
    return true;
}

HasseQuiver hasse_quiver(const Graph& g, std::optional<int> cap) {
    HasseQuiver q;
    q.nodes = enumerate_two_term_tilting(g, cap);
    int n = static_cast<int>(q.nodes.size());
    std::vector<std::vector<char>> ge(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) ge[a][b] = a == b || order_ge(g, q.nodes[a], q.nodes[b]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a != b && ge[a][b] && ge[b][a]) throw InternalInvariantViolation("order is not antisymmetric");
            for (int c = 0; c < n; ++c)
                if (ge[a][b] && ge[b][c] && !ge[a][c]) throw InternalInvariantViolation("order is not transitive");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !ge[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && ge[a][c] && ge[c][b]) cover = false;
            if (cover) q.arrows.push_back({a, b});
        }
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (auto [a, b] : q.arrows) ++outdeg[a], ++indeg[b];
    auto top = stalk_set(g, 1), bottom = stalk_set(g, -1);
    for (int a = 0; a < n; ++a) {
        if (indeg[a] == 0) {
            if (q.source >= 0 || !(q.nodes[a] == top)) throw InternalInvariantViolation("source is not unique or not the algebra");
            q.source = a;
        }
        if (outdeg[a] == 0) {
            if (q.sink >= 0 || !(q.nodes[a] == bottom)) throw InternalInvariantViolation("sink is not unique or not the shift");
            q.sink = a;
        }
    }
    if (q.source < 0 || q.sink < 0) throw InternalInvariantViolation("missing source or sink");
    std::vector<std::vector<int>> und(n);
    for (auto [a, b] : q.arrows) und[a].push_back(b), und[b].push_back(a);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{q.source};
    seen[q.source] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : und[v])
            if (!seen[u]) seen[u] = 1, ++reached, stack.push_back(u);
    }
    if (reached != n) throw InternalInvariantViolation("Hasse quiver is not connected");
    return q;
}

std::string hasse_to_dot(const Graph& g, const HasseQuiver& q) {
    std::ostringstream out;
    out << "digraph HasseQuiver {\n";
    for (size_t i = 0; i < q.nodes.size(); ++i) {
        std::string label = set_to_string(g, q.nodes[i]);
        out << "  n" << i << " [label=\"" << label << "\"];\n";
    }
    for (auto [a, b] : q.arrows) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string hasse_to_json(const Graph& g, const HasseQuiver& q) {
    nlohmann::json j;
    j["type"] = "HasseQuiver";
    j["nodes"] = nlohmann::json::array();
    for (size_t i = 0; i < q.nodes.size(); ++i) {
        nlohmann::json walks = nlohmann::json::array();
        for (const auto& w : q.nodes[i].walks) walks.push_back(walk_to_string(g, w));
        j["nodes"].push_back({{"id", i}, {"CompleteSet", walks}});
    }
    j["arrows"] = nlohmann::json::array();
    for (auto [a, b] : q.arrows) j["arrows"].push_back({a, b});
    j["source"] = q.source;
    j["sink"] = q.sink;
    return j.dump(2) + "\n";
}

}  // namespace brauer
