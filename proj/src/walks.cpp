#include "brauer/walks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace brauer {

std::strong_ordering operator<=>(const SignedWalk& a, const SignedWalk& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (auto c = a.halves <=> b.halves; c != 0) return c;
    int sa = a.signs.empty() ? 0 : a.signs[0], sb = b.signs.empty() ? 0 : b.signs[0];
    return sb <=> sa;
}

HalfWalk reverse(const Graph& g, const HalfWalk& w) {
    HalfWalk r;
    int m = w.length();
    for (int i = m - 1; i >= 0; --i) {
        r.halves.push_back(g.bar(w.halves[i]));
        r.signs.push_back(w.signs[i]);
    }
    return r;
}

HalfWalk oriented(const Graph& g, const SignedWalk& w, bool reversed) {
    HalfWalk h{w.halves, w.signs};
    return reversed ? reverse(g, h) : h;
}

namespace {

SignedWalk canonical(const Graph& g, const HalfWalk& w) {
    HalfWalk r = reverse(g, w);
    const HalfWalk& best = r.halves < w.halves ? r : w;
    return SignedWalk{best.halves, best.signs};
}

}  // namespace

SignedWalk make_signed_walk(const Graph& g, const std::vector<SignedToken>& tokens) {
    if (tokens.empty()) throw WalkError("NotAWalk", "empty walk");
    int m = static_cast<int>(tokens.size());
    for (int i = 0; i + 1 < m; ++i)
        if (g.source(tokens[i + 1].half) != g.source(g.bar(tokens[i].half)))
            throw WalkError("NotAWalk", "'" + g.token(tokens[i + 1].half) + "' does not leave the endpoint of '" +
                                            g.token(tokens[i].half) + "'");
    std::map<EdgeId, int> parity;
    for (int i = 0; i < m; ++i) {
        auto [it, fresh] = parity.emplace(g.edge_of(tokens[i].half), i % 2);
        if (!fresh && it->second != i % 2)
            throw WalkError("NoSignature", "edge '" + g.edge_name(g.edge_of(tokens[i].half)) +
                                               "' recurs at positions of opposite sign");
    }
    int first = tokens[0].sign.value_or(+1);
    HalfWalk w;
    for (int i = 0; i < m; ++i) {
        int s = i % 2 ? -first : first;
        if (tokens[i].sign && *tokens[i].sign != s)
            throw WalkError("SignMismatch", "sign at position " + std::to_string(i + 1) + " breaks alternation");
        w.halves.push_back(tokens[i].half);
        w.signs.push_back(s);
    }
    return canonical(g, w);
}

SignedWalk parse_walk(const Graph& g, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<SignedToken> tokens;
    while (in >> tok) {
        std::optional<int> sign;
        if (tok.back() == '+' || tok.back() == '-') {
            sign = tok.back() == '+' ? 1 : -1;
            tok.pop_back();
        }
        tokens.push_back(SignedToken{g.find_half(tok), sign});
    }
    return make_signed_walk(g, tokens);
}

std::string walk_to_string(const Graph& g, const HalfWalk& w) {
    std::string out;
    for (int i = 0; i < w.length(); ++i) {
        if (i) out += ' ';
        out += g.token(w.halves[i]);
        out += w.signs[i] > 0 ? '+' : '-';
    }
    return out;
}

std::string walk_to_string(const Graph& g, const SignedWalk& w) {
    return walk_to_string(g, HalfWalk{w.halves, w.signs});
}

Slot left_boundary(const HalfWalk& w) { return Slot{w.halves.front(), -w.signs.front()}; }

Slot right_boundary(const Graph& g, const HalfWalk& w) {
    return Slot{g.bar(w.halves.back()), -w.signs.back()};
}

Neighbourhood neighbourhood(const Graph& g, const HalfWalk& w, int p) {
    int m = w.length();
    Neighbourhood n;
    if (p == 0) {
        n.first = left_boundary(w);
        n.first_sign = -w.signs[0];
    } else {
        n.first = Slot{g.bar(w.halves[p - 1]), 0};
        n.first_sign = w.signs[p - 1];
    }
    if (p == m) {
        n.second = right_boundary(g, w);
        n.second_sign = -w.signs[m - 1];
    } else {
        n.second = Slot{w.halves[p], 0};
        n.second_sign = w.signs[p];
    }
    n.vertex = g.source(n.first.half);
    return n;
}

std::vector<SubwalkSite> common_subwalk_sites(const Graph& g, const SignedWalk& a, const SignedWalk& b) {
    bool same = a == b;
    HalfWalk x = oriented(g, a, false);
    int m = x.length(), n = b.length();
    std::vector<SubwalkSite> out;
    for (bool rev : {false, true}) {
        HalfWalk y = oriented(g, b, rev);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                if (x.halves[i] != y.halves[j]) continue;
                if (i > 0 && j > 0 && x.halves[i - 1] == y.halves[j - 1]) continue;
                int len = 0;
                while (i + len < m && j + len < n && x.halves[i + len] == y.halves[j + len]) ++len;
                SubwalkSite s{rev, i + 1, j + 1, len,
                              std::vector<Half>(x.halves.begin() + i, x.halves.begin() + i + len)};
                if (same) {
                    // the same site read with the two walks' roles exchanged
                    int oi = rev ? m + 2 - s.j - len : s.j;
                    int oj = rev ? m + 2 - s.i - len : s.i;
                    if (std::pair(oi, oj) < std::pair(s.i, s.j)) continue;
                }
                out.push_back(std::move(s));
            }
    }
    return out;
}

std::vector<IntersectionSite> intersection_sites(const Graph& g, const SignedWalk& a, const SignedWalk& b) {
    bool same = a == b;
    HalfWalk x = oriented(g, a, false), y = oriented(g, b, false);
    std::vector<IntersectionSite> out;
    for (int p = 0; p <= x.length(); ++p)
        for (int q = same ? p + 1 : 0; q <= y.length(); ++q) {
            Neighbourhood n1 = neighbourhood(g, x, p), n2 = neighbourhood(g, y, q);
            if (n1.vertex != n2.vertex) continue;
            Slot s[4] = {n1.first, n1.second, n2.first, n2.second};
            bool distinct = true;
            for (int u = 0; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v)
                    if (s[u] == s[v]) distinct = false;
            if (distinct) out.push_back(IntersectionSite{n1.vertex, p + 1, q + 1, n1, n2});
        }
    return out;
}

bool sign_condition(const Graph& g, const SignedWalk& a, const SignedWalk& b) {
    Vertex a_start = g.source(a.halves.front()), a_end = g.source(g.bar(a.halves.back()));
    Vertex b_start = g.source(b.halves.front()), b_end = g.source(g.bar(b.halves.back()));
    int a1 = a.signs.front(), am = a.signs.back(), b1 = b.signs.front(), bn = b.signs.back();
    if (a_start == b_start && a1 != b1) return false;
    if (a_start == b_end && a1 != bn) return false;
    if (a_end == b_start && am != b1) return false;
    if (a_end == b_end && am != bn) return false;
    return true;
}

bool nc3_holds(const Graph& g, const Neighbourhood& x, const Neighbourhood& y) {
    int virtuals = x.first.is_virtual() + x.second.is_virtual() + y.first.is_virtual() + y.second.is_virtual();
    if (virtuals >= 2) return true;
    auto try_as_ab = [&](const Neighbourhood& ab, const Neighbourhood& cd) {
        Slot plus = ab.first_sign > 0 ? ab.first : ab.second;
        Slot minus = ab.first_sign > 0 ? ab.second : ab.first;
        return is_cyclic_subordering(g, {plus, minus, cd.first, cd.second}) ||
               is_cyclic_subordering(g, {plus, minus, cd.second, cd.first});
    };
    return try_as_ab(x, y) || try_as_ab(y, x);
}

namespace {

bool nc1_holds(const HalfWalk& x, const HalfWalk& y, const SubwalkSite& s) {
    for (int k = 0; k < s.length; ++k)
        if (x.signs[s.i - 1 + k] != y.signs[s.j - 1 + k]) return false;
    return true;
}

bool nc2_holds(const Graph& g, const HalfWalk& x, const HalfWalk& y, const SubwalkSite& s) {
    int m = x.length(), n = y.length();
    int i = s.i, j = s.j, len = s.length;
    Slot a = i == 1 ? left_boundary(x) : Slot{g.bar(x.halves[i - 2]), 0};
    Slot b = j == 1 ? left_boundary(y) : Slot{g.bar(y.halves[j - 2]), 0};
    Slot c = i + len - 1 == m ? right_boundary(g, x) : Slot{x.halves[i + len - 1], 0};
    Slot d = j + len - 1 == n ? right_boundary(g, y) : Slot{y.halves[j + len - 1], 0};
    Slot t1{x.halves[i - 1], 0};
    Slot tl{g.bar(x.halves[i + len - 2]), 0};
    bool skip_left = i == 1 && j == 1;
    bool skip_right = i + len - 1 == m && j + len - 1 == n;
    bool l1 = skip_left || is_cyclic_subordering(g, {t1, a, b});
    bool r1 = skip_right || is_cyclic_subordering(g, {tl, d, c});
    bool l2 = skip_left || is_cyclic_subordering(g, {t1, b, a});
    bool r2 = skip_right || is_cyclic_subordering(g, {tl, c, d});
    return (l1 && r1) || (l2 && r2);
}

}  // namespace

PairReport check_pair(const Graph& g, const SignedWalk& a, const SignedWalk& b) {
    PairReport r;
    r.sign_ok = sign_condition(g, a, b);
    HalfWalk x = oriented(g, a, false);
    for (const auto& site : common_subwalk_sites(g, a, b)) {
        HalfWalk y = oriented(g, b, site.second_reversed);
        if (!nc1_holds(x, y, site)) r.nc1_failures.push_back(site);
        if (!nc2_holds(g, x, y, site)) r.nc2_failures.push_back(site);
    }
    for (const auto& site : intersection_sites(g, a, b))
        if (!nc3_holds(g, site.in_first, site.in_second)) r.nc3_failures.push_back(site);
    return r;
}

bool is_admissible(const Graph& g, const SignedWalk& w) { return check_pair(g, w, w).compatible(); }

bool is_admissible_set(const Graph& g, const std::vector<SignedWalk>& ws) {
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i; j < ws.size(); ++j)
            if (!check_pair(g, ws[i], ws[j]).compatible()) return false;
    return true;
}

namespace {

struct SignedWalkSearch {
    const Graph& g;
    int cap;
    std::vector<Half> seq;
    std::vector<int> parity;  // per edge: -1 unseen, else 0/1
    std::vector<int> count;   // per edge occurrences in seq
    std::vector<SignedWalk> found;
    bool frontier_open = false;

    bool can_place(Half h, int pos) const {
        EdgeId e = g.edge_of(h);
        return count[e] == 0 || parity[e] == pos % 2;
    }

    void place(Half h, int pos) {
        EdgeId e = g.edge_of(h);
        if (count[e]++ == 0) parity[e] = pos % 2;
        seq.push_back(h);
    }

    void unplace() {
        EdgeId e = g.edge_of(seq.back());
        --count[e];
        seq.pop_back();
    }

    void record() {
        HalfWalk w{seq, {}};
        for (size_t i = 0; i < seq.size(); ++i) w.signs.push_back(i % 2 ? -1 : 1);
        HalfWalk r = reverse(g, w);
        if (r.halves < w.halves) return;  // counted from the other orientation
        found.push_back(SignedWalk{w.halves, w.signs});
        for (int& s : w.signs) s = -s;
        found.push_back(SignedWalk{w.halves, w.signs});
    }

    void extend() {
        record();
        int pos = static_cast<int>(seq.size());
        Vertex v = g.source(g.bar(seq.back()));
        for (Half h : g.order_at(v)) {
            if (!can_place(h, pos)) continue;
            if (pos == cap) {
                frontier_open = true;
                continue;
            }
            place(h, pos);
            extend();
            unplace();
        }
    }

    void run() {
        parity.assign(g.num_edges(), -1);
        count.assign(g.num_edges(), 0);
        for (Half h = 0; h < g.num_halves(); ++h) {
            place(h, 0);
            extend();
            unplace();
        }
        std::sort(found.begin(), found.end());
    }
};

}  // namespace

std::vector<SignedWalk> enumerate_signed_walks(const Graph& g, int cap) {
    SignedWalkSearch s{g, cap, {}, {}, {}, {}};
    s.run();
    return std::move(s.found);
}

WalkEnumeration enumerate_admissible_walks(const Graph& g, int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    SignedWalkSearch s{g, cap, {}, {}, {}, {}};
    s.run();
    WalkEnumeration out;
    out.stabilized = !s.frontier_open;
    for (auto& w : s.found)
        if (is_admissible(g, w)) out.walks.push_back(std::move(w));
    return out;
}

}  // namespace brauer
