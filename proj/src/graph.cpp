#include "brauer/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace brauer {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool valid_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t) {
        if (c == '+' || c == '-' || c == ':' || c == '#' || c == '=' || c == ',' ||
            static_cast<unsigned char>(c) <= ' ')
            return false;
    }
    return true;
}

int find_index(const std::vector<std::string>& sorted, std::string_view key) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), key);
    if (it == sorted.end() || *it != key) return -1;
    return static_cast<int>(it - sorted.begin());
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Half Graph::next_pow(Half h, int k) const {
    int val = valency(source_[h]);
    k %= val;
    if (k < 0) k += val;
    const auto& ord = orders_[source_[h]];
    return ord[(position_[h] + k) % val];
}

bool Graph::is_loop(EdgeId e) const {
    auto [a, b] = edge_halves_[e];
    return source_[a] == source_[b];
}

Half Graph::find_half(std::string_view token) const {
    int i = find_index(tokens_, token);
    if (i < 0) throw LookupError("UnknownHalfEdge", "no half-edge named '" + std::string(token) + "'");
    return i;
}

bool Graph::has_half(std::string_view token) const { return find_index(tokens_, token) >= 0; }

Vertex Graph::find_vertex(std::string_view name) const {
    int i = find_index(vertex_names_, name);
    if (i < 0) throw LookupError("UnknownVertex", "no vertex named '" + std::string(name) + "'");
    return i;
}

EdgeId Graph::find_edge(std::string_view name) const {
    int i = find_index(edge_names_, name);
    if (i < 0) throw LookupError("UnknownEdge", "no edge named '" + std::string(name) + "'");
    return i;
}

Graph Graph::build(const Spec& spec) {
    if (spec.vertex_names.size() != spec.orders.size() ||
        spec.vertex_names.size() != spec.multiplicity.size())
        throw ParseError("inconsistent vertex data");
    if (spec.edge_names.size() != spec.edge_halves.size()) throw ParseError("inconsistent edge data");
    if (spec.vertex_names.empty()) throw ParseError("graph has no vertices");

    Graph g;
    g.vertex_names_ = spec.vertex_names;
    std::sort(g.vertex_names_.begin(), g.vertex_names_.end());
    if (std::adjacent_find(g.vertex_names_.begin(), g.vertex_names_.end()) != g.vertex_names_.end())
        throw ParseError("duplicate vertex name");
    g.edge_names_ = spec.edge_names;
    std::sort(g.edge_names_.begin(), g.edge_names_.end());
    if (std::adjacent_find(g.edge_names_.begin(), g.edge_names_.end()) != g.edge_names_.end())
        throw ParseError("duplicate edge name");

    std::set<std::string> seen;
    for (const auto& ord : spec.orders)
        for (const auto& t : ord) {
            if (!valid_token(t)) throw ParseError("invalid half-edge token '" + t + "'");
            if (!seen.insert(t).second)
                throw ValidationError("DuplicateHalfEdge", "half-edge '" + t + "' listed at two positions");
        }
    g.tokens_.assign(seen.begin(), seen.end());
    int nh = g.num_halves();
    if (nh == 0) throw ParseError("graph has no half-edges");

    g.partner_.assign(nh, -1);
    g.edge_of_.assign(nh, -1);
    g.edge_halves_.assign(g.edge_names_.size(), {-1, -1});
    for (size_t k = 0; k < spec.edge_names.size(); ++k) {
        const auto& [ta, tb] = spec.edge_halves[k];
        if (ta == tb) throw ValidationError("FixedPointPairing", "half-edge '" + ta + "' paired with itself");
        int a = find_index(g.tokens_, ta), b = find_index(g.tokens_, tb);
        if (a < 0 || b < 0)
            throw ValidationError("UnpairedHalfEdge",
                                  "edge '" + spec.edge_names[k] + "' names a half-edge missing from vertex lines");
        if (g.partner_[a] >= 0 || g.partner_[b] >= 0)
            throw ValidationError("DuplicateHalfEdge", "half-edge paired twice in edge '" + spec.edge_names[k] + "'");
        g.partner_[a] = b;
        g.partner_[b] = a;
        int e = find_index(g.edge_names_, spec.edge_names[k]);
        g.edge_of_[a] = g.edge_of_[b] = e;
        g.edge_halves_[e] = {std::min(a, b), std::max(a, b)};
    }
    for (int h = 0; h < nh; ++h)
        if (g.partner_[h] < 0)
            throw ValidationError("UnpairedHalfEdge", "half-edge '" + g.tokens_[h] + "' belongs to no edge");

    g.mult_.assign(g.vertex_names_.size(), 1);
    g.source_.assign(nh, -1);
    g.next_.assign(nh, -1);
    for (size_t k = 0; k < spec.vertex_names.size(); ++k) {
        int v = find_index(g.vertex_names_, spec.vertex_names[k]);
        if (spec.multiplicity[k] < 1)
            throw ValidationError("BadMultiplicity", "vertex '" + spec.vertex_names[k] + "' has multiplicity < 1");
        g.mult_[v] = spec.multiplicity[k];
        const auto& ord = spec.orders[k];
        if (ord.empty())
            throw ValidationError("Disconnected", "vertex '" + spec.vertex_names[k] + "' has no half-edges");
        for (size_t i = 0; i < ord.size(); ++i) {
            int h = find_index(g.tokens_, ord[i]);
            g.source_[h] = v;
            g.next_[h] = find_index(g.tokens_, ord[(i + 1) % ord.size()]);
        }
    }
    g.finish();
    if (!is_connected(g)) throw ValidationError("Disconnected", "geometric realisation is not connected");
    return g;
}

void Graph::finish() {
    int nh = num_halves();
    prev_.assign(nh, -1);
    for (int h = 0; h < nh; ++h) prev_[next_[h]] = h;
    orders_.assign(vertex_names_.size(), {});
    position_.assign(nh, -1);
    for (int h = 0; h < nh; ++h) {
        auto& ord = orders_[source_[h]];
        if (!ord.empty()) continue;
        // smallest token at this vertex starts the listing
        Half start = h;
        for (Half x = next_[h]; x != h; x = next_[x]) start = std::min(start, x);
        Half x = start;
        do {
            position_[x] = static_cast<int>(ord.size());
            ord.push_back(x);
            x = next_[x];
        } while (x != start);
    }
}

Graph Graph::with_rotation(const std::vector<Vertex>& source, const std::vector<Half>& next) const {
    int nh = num_halves();
    if (static_cast<int>(source.size()) != nh || static_cast<int>(next.size()) != nh)
        throw InternalInvariantViolation("rotation data has wrong size");
    std::vector<char> hit(nh, 0);
    for (Half h = 0; h < nh; ++h) {
        if (next[h] < 0 || next[h] >= nh || hit[next[h]]) throw InternalInvariantViolation("successor map is not a permutation");
        hit[next[h]] = 1;
        if (source[next[h]] != source[h]) throw InternalInvariantViolation("successor leaves its vertex");
    }
    // each vertex fiber must be a single orbit
    std::vector<int> fiber(num_vertices(), 0), orbit_seen(num_vertices(), 0);
    for (Half h = 0; h < nh; ++h) ++fiber[source[h]];
    std::vector<char> visited(nh, 0);
    for (Half h = 0; h < nh; ++h) {
        if (visited[h]) continue;
        int len = 0;
        Half x = h;
        do {
            visited[x] = 1;
            ++len;
            x = next[x];
        } while (x != h);
        if (orbit_seen[source[h]]++ || len != fiber[source[h]])
            throw InternalInvariantViolation("vertex fiber is not a single cycle");
    }
    for (int v = 0; v < num_vertices(); ++v)
        if (fiber[v] == 0) throw InternalInvariantViolation("vertex lost all half-edges");
    Graph g = *this;
    g.source_ = source;
    g.next_ = next;
    g.finish();
    if (!is_connected(g)) throw InternalInvariantViolation("rotation disconnected the graph");
    return g;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.tokens_ == b.tokens_ && a.vertex_names_ == b.vertex_names_ && a.mult_ == b.mult_ &&
           a.source_ == b.source_ && a.partner_ == b.partner_ && a.next_ == b.next_;
}

Graph parse_graph(std::string_view text) {
    Graph::Spec spec;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        auto where = " (line " + std::to_string(lineno) + ")";
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("missing ':'" + where);
        auto head = split_ws(line.substr(0, colon));
        auto body = split_ws(line.substr(colon + 1));
        if (head.empty()) throw ParseError("empty declaration" + where);
        if (head[0] == "vertex") {
            if (head.size() < 2 || head.size() > 3) throw ParseError("expected 'vertex <name> mult=<k>:'" + where);
            int mult = 1;
            if (head.size() == 3) {
                if (head[2].rfind("mult=", 0) != 0) throw ParseError("expected mult=<k>" + where);
                try {
                    size_t used = 0;
                    mult = std::stoi(head[2].substr(5), &used);
                    if (used != head[2].size() - 5) throw std::invalid_argument("trailing");
                } catch (const std::exception&) {
                    throw ParseError("bad multiplicity '" + head[2] + "'" + where);
                }
            }
            spec.vertex_names.push_back(head[1]);
            spec.multiplicity.push_back(mult);
            spec.orders.push_back(body);
        } else if (head[0] == "edge") {
            if (head.size() != 2) throw ParseError("expected 'edge <name>:'" + where);
            if (body.size() != 2) throw ParseError("an edge lists exactly two half-edges" + where);
            spec.edge_names.push_back(head[1]);
            spec.edge_halves.emplace_back(body[0], body[1]);
        } else {
            throw ParseError("unknown declaration '" + head[0] + "'" + where);
        }
    }
    return Graph::build(spec);
}

Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << "vertex " << g.vertex_name(v) << " mult=" << g.multiplicity(v) << ":";
        for (Half h : g.order_at(v)) out << ' ' << g.token(h);
        out << '\n';
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.halves_of(e);
        out << "edge " << g.edge_name(e) << ": " << g.token(a) << ' ' << g.token(b) << '\n';
    }
    return out.str();
}

bool is_connected(const Graph& g) {
    UnionFind uf(g.num_vertices());
    for (Half h = 0; h < g.num_halves(); ++h) uf.unite(g.source(h), g.source(g.bar(h)));
    for (Vertex v = 1; v < g.num_vertices(); ++v)
        if (uf.find(v) != uf.find(0)) return false;
    return true;
}

CycleProfile cycle_profile(const Graph& g) {
    CycleProfile p;
    int nv = g.num_vertices(), ne = g.num_edges();
    p.betti = ne - nv + 1;
    if (p.betti == 0) return p;
    if (p.betti == 1) {
        std::vector<int> degree(nv, 0);
        std::vector<char> alive(ne, 1);
        for (Half h = 0; h < g.num_halves(); ++h) ++degree[g.source(h)];
        std::queue<Vertex> leaves;
        for (Vertex v = 0; v < nv; ++v)
            if (degree[v] == 1) leaves.push(v);
        int remaining = ne;
        while (!leaves.empty()) {
            Vertex v = leaves.front();
            leaves.pop();
            if (degree[v] != 1) continue;
            for (Half h : g.order_at(v)) {
                EdgeId e = g.edge_of(h);
                if (!alive[e]) continue;
                alive[e] = 0;
                --remaining;
                --degree[v];
                Vertex w = g.source(g.bar(h));
                if (--degree[w] == 1) leaves.push(w);
            }
        }
        p.cycle_lengths.push_back(remaining);
    } else {
        // fundamental cycles of a BFS spanning tree
        std::vector<int> depth(nv, -1), parent(nv, -1);
        std::vector<char> tree_edge(ne, 0);
        std::queue<Vertex> q;
        depth[0] = 0;
        q.push(0);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Half h : g.order_at(v)) {
                Vertex w = g.source(g.bar(h));
                if (depth[w] >= 0) continue;
                depth[w] = depth[v] + 1;
                parent[w] = v;
                tree_edge[g.edge_of(h)] = 1;
                q.push(w);
            }
        }
        for (EdgeId e = 0; e < ne; ++e) {
            if (tree_edge[e]) continue;
            auto [a, b] = g.halves_of(e);
            Vertex x = g.source(a), y = g.source(b);
            int len = 1;
            while (x != y) {
                if (depth[x] < depth[y]) std::swap(x, y);
                x = parent[x];
                ++len;
            }
            p.cycle_lengths.push_back(len);
        }
        std::sort(p.cycle_lengths.begin(), p.cycle_lengths.end());
    }
    for (int len : p.cycle_lengths) (len % 2 ? p.odd_cycles : p.even_cycles)++;
    return p;
}

bool is_tilting_discrete(const Graph& g) {
    auto p = cycle_profile(g);
    return p.betti == 0 || (p.betti == 1 && p.cycle_lengths.front() % 2 == 1);
}

Graph opposite_graph(const Graph& g) {
    std::vector<Vertex> src(g.num_halves());
    std::vector<Half> nxt(g.num_halves());
    for (Half h = 0; h < g.num_halves(); ++h) {
        src[h] = g.source(h);
        nxt[h] = g.prev(h);
    }
    return g.with_rotation(src, nxt);
}

namespace {

Graph left_flip(const Graph& g, EdgeId edge) {
    if (g.num_edges() == 1) return g;
    int nh = g.num_halves();
    auto in_e = [&](Half h) { return g.edge_of(h) == edge; };
    auto [e1, e2] = g.halves_of(edge);

    // Each half of the edge whose predecessor lies outside the edge heads a
    // block (itself, plus the other half if that follows it directly); the
    // block is detached and reinserted just before bar(predecessor).
    struct Block {
        std::vector<Half> halves;
        Half anchor;
    };
    std::vector<Block> blocks;
    std::vector<bool> moving(nh, false);
    for (Half x : {e1, e2}) {
        Half p = g.prev(x);
        if (in_e(p)) continue;
        Block b{{x}, g.bar(p)};
        if (Half y = g.next(x); in_e(y) && y != x) b.halves.push_back(y);
        for (Half h : b.halves) moving[h] = true;
        blocks.push_back(std::move(b));
    }

    std::vector<std::vector<Half>> orders(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Half h : g.order_at(v))
            if (!moving[h]) orders[v].push_back(h);
    for (const auto& b : blocks) {
        auto& ord = orders[g.source(b.anchor)];
        auto at = std::find(ord.begin(), ord.end(), b.anchor);
        ord.insert(at, b.halves.begin(), b.halves.end());
    }

    std::vector<Vertex> src(nh);
    std::vector<Half> nxt(nh);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto& ord = orders[v];
        for (size_t i = 0; i < ord.size(); ++i) {
            src[ord[i]] = v;
            nxt[ord[i]] = ord[(i + 1) % ord.size()];
        }
    }
    return g.with_rotation(src, nxt);
}

}  // namespace

Graph flip(const Graph& g, EdgeId e, FlipDirection dir) {
    if (e < 0 || e >= g.num_edges()) throw LookupError("UnknownEdge", "edge index out of range");
    if (dir == FlipDirection::Left) return left_flip(g, e);
    return opposite_graph(left_flip(opposite_graph(g), e));
}

Graph flip(const Graph& g, std::string_view edge_name, FlipDirection dir) {
    return flip(g, g.find_edge(edge_name), dir);
}

AugmentedCyclicOrder augmented_cyclic_order(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.num_vertices()) throw LookupError("UnknownVertex", "vertex index out of range");
    AugmentedCyclicOrder out;
    out.vertex = v;
    for (Half h : g.order_at(v))
        for (int k : {-1, 0, 1}) out.sequence.push_back(Slot{h, k});
    return out;
}

AugmentedCyclicOrder augmented_cyclic_order(const Graph& g, std::string_view vertex_name) {
    return augmented_cyclic_order(g, g.find_vertex(vertex_name));
}

int slot_position(const Graph& g, Slot s) { return 3 * g.position(s.half) + s.kind + 1; }

bool is_cyclic_subordering(const Graph& g, const std::vector<Slot>& slots) {
    if (slots.empty()) return true;
    Vertex v = g.source(slots[0].half);
    std::vector<int> pos;
    for (const auto& s : slots) {
        if (g.source(s.half) != v) return false;
        pos.push_back(slot_position(g, s));
    }
    auto sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    int descents = 0;
    for (size_t i = 0; i < pos.size(); ++i)
        if (pos[i] > pos[(i + 1) % pos.size()]) ++descents;
    return descents <= 1;
}

std::string slot_name(const Graph& g, Slot s) {
    if (s.kind == 0) return g.token(s.half);
    return std::string(s.kind < 0 ? "vr-(" : "vr+(") + g.token(s.half) + ")";
}

}  // namespace brauer
