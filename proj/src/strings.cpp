#include <algorithm>
#include <sstream>

#include "brauer/oracle.hpp"

namespace brauer {

EdgeId letter_head(const Graph& g, Letter l) {
    return l.inverse ? g.edge_of(g.next(l.half)) : g.edge_of(l.half);
}

EdgeId letter_tail(const Graph& g, Letter l) {
    return l.inverse ? g.edge_of(l.half) : g.edge_of(g.next(l.half));
}

std::vector<EdgeId> string_colors(const Graph& g, const StringWord& w) {
    if (w.letters.empty()) return {w.trivial_edge};
    std::vector<EdgeId> c{letter_head(g, w.letters.front())};
    for (const auto& l : w.letters) c.push_back(letter_tail(g, l));
    return c;
}

StringWord inverse_word(const StringWord& w) {
    StringWord r;
    r.trivial_edge = w.trivial_edge;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->half, !it->inverse});
    return r;
}

StringWord canonical_word(const StringWord& w) {
    StringWord r = inverse_word(w);
    return r.letters < w.letters ? r : w;
}

std::string string_problem(const Graph& g, const StringWord& w) {
    if (w.letters.empty()) {
        if (w.trivial_edge < 0 || w.trivial_edge >= g.num_edges()) return "trivial word without a valid edge";
        return {};
    }
    const auto& ls = w.letters;
    for (const auto& l : ls) {
        if (l.half < 0 || l.half >= g.num_halves()) return "unknown half-edge";
        if (g.cycle_length(l.half) < 2) return "no arrow leaves truncated half-edge '" + g.token(l.half) + "'";
    }
    for (size_t t = 0; t + 1 < ls.size(); ++t) {
        Letter a = ls[t], b = ls[t + 1];
        if (letter_tail(g, a) != letter_head(g, b)) return "letters " + std::to_string(t) + "," + std::to_string(t + 1) + " do not compose";
        if (!a.inverse && !b.inverse && b.half != g.next(a.half)) return "direct letters from different cycles";
        if (a.inverse && b.inverse && a.half != g.next(b.half)) return "inverse letters from different cycles";
        if (a.inverse != b.inverse && a.half == b.half) return "letter followed by its inverse";
    }
    // runs must stay below the full Brauer cycle
    for (size_t t = 0; t < ls.size();) {
        size_t u = t;
        while (u < ls.size() && ls[u].inverse == ls[t].inverse) ++u;
        int run = static_cast<int>(u - t);
        Half first = ls[t].inverse ? ls[u - 1].half : ls[t].half;
        if (run > g.cycle_length(first) - 1) return "a run reaches the socle";
        t = u;
    }
    return {};
}

std::string word_to_string(const Graph& g, const StringWord& w) {
    if (w.letters.empty()) return "1_" + g.edge_name(w.trivial_edge);
    std::string out;
    for (size_t t = 0; t < w.letters.size(); ++t) {
        const auto& l = w.letters[t];
        if (t) out += ' ';
        out += "a(" + g.token(l.half) + ")";
        if (l.inverse) out += "^-1";
    }
    return out;
}

std::string loewy_text(const Graph& g, const StringWord& w) {
    auto colors = string_colors(g, w);
    std::vector<int> depth(colors.size(), 0);
    for (size_t t = 0; t < w.letters.size(); ++t) depth[t + 1] = depth[t] + (w.letters[t].inverse ? -1 : 1);
    int lo = *std::min_element(depth.begin(), depth.end());
    std::ostringstream out;
    for (size_t v = 0; v < colors.size(); ++v)
        out << std::string(2 * (depth[v] - lo), ' ') << g.edge_name(colors[v]) << '\n';
    return out.str();
}

StringWord directed_path(const Graph& g, Half from, Half to) {
    StringWord w;
    w.trivial_edge = g.edge_of(from);
    for (Half h = from; h != to; h = g.next(h)) {
        w.letters.push_back({h, false});
        if (static_cast<int>(w.letters.size()) > g.num_halves())
            throw InternalInvariantViolation("directed path leaves its vertex");
    }
    return w;
}

StringWord hook_word(const Graph& g, Half h) {
    StringWord w;
    w.trivial_edge = g.edge_of(h);
    Half x = h;
    for (int k = 0; k + 1 < g.cycle_length(h); ++k, x = g.next(x)) w.letters.push_back({x, false});
    return w;
}

StringWord concat(const Graph& g, const StringWord& a, const StringWord& b) {
    if (string_colors(g, a).back() != string_colors(g, b).front())
        throw InternalInvariantViolation("concatenated strings meet at different colours");
    StringWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

StringWord radical_word(const Graph& g, EdgeId e) {
    auto [h, hb] = g.halves_of(e);
    return concat(g, hook_word(g, g.next(h)), inverse_word(hook_word(g, g.next(hb))));
}

StringWord top_quotient_word(const Graph& g, EdgeId e) {
    auto [h, hb] = g.halves_of(e);
    return concat(g, inverse_word(hook_word(g, h)), hook_word(g, hb));
}

std::string target_to_string(const Graph& g, const HomTarget& t) {
    switch (t.kind) {
        case HomTarget::Kind::Zero: return "0";
        case HomTarget::Kind::Projective: return "P" + g.edge_name(t.edge);
        case HomTarget::Kind::String: return "M(" + word_to_string(g, t.word) + ")";
    }
    return {};
}

int target_dim(const Graph& g, const HomTarget& t) {
    switch (t.kind) {
        case HomTarget::Kind::Zero: return 0;
        case HomTarget::Kind::Projective: return Algebra(g).dim_projective(t.edge);
        case HomTarget::Kind::String: return static_cast<int>(t.word.letters.size()) + 1;
    }
    return 0;
}

std::pair<HomTarget, HomTarget> strings_of_walk(const Graph& g, const SignedWalk& walk) {
    int m = walk.length();
    if (m == 1) {
        EdgeId e = g.edge_of(walk.halves[0]);
        if (walk.signs[0] > 0) return {HomTarget::projective(e), HomTarget::zero()};
        return {HomTarget::zero(), HomTarget::projective(e)};
    }
    // 1-based accessors
    auto e = [&](int k) { return walk.halves[k - 1]; };
    auto eb = [&](int k) { return g.bar(walk.halves[k - 1]); };
    auto plus = [&](int k) { return walk.signs[k - 1] > 0; };

    std::vector<StringWord> mparts, nparts;
    for (int a = 1; a <= m; ++a) {
        if (!plus(a)) continue;
        StringWord left, right;
        if (a == 1) left = inverse_word(hook_word(g, e(1)));
        else if (a == 2) left = inverse_word(directed_path(g, e(a), g.prev(eb(a - 1))));
        else left = inverse_word(directed_path(g, e(a), eb(a - 1)));
        if (a == m) right = hook_word(g, eb(m));
        else if (a + 1 == m) right = directed_path(g, eb(a), g.prev(e(a + 1)));
        else right = directed_path(g, eb(a), e(a + 1));
        mparts.push_back(left);
        mparts.push_back(right);
    }
    for (int b = 1; b <= m; ++b) {
        if (plus(b)) continue;
        StringWord left, right;
        if (b == 1) left = hook_word(g, g.next(e(1)));
        else if (b - 1 >= 2) left = directed_path(g, eb(b - 1), e(b));
        else left = directed_path(g, g.next(eb(b - 1)), e(b));
        if (b == m) right = inverse_word(hook_word(g, g.next(eb(m))));
        else if (b + 1 < m) right = inverse_word(directed_path(g, e(b + 1), eb(b)));
        else right = inverse_word(directed_path(g, g.next(e(b + 1)), eb(b)));
        nparts.push_back(left);
        nparts.push_back(right);
    }
    auto join = [&](const std::vector<StringWord>& parts) {
        StringWord w = parts.front();
        for (size_t k = 1; k < parts.size(); ++k) w = concat(g, w, parts[k]);
        auto problem = string_problem(g, w);
        if (!problem.empty())
            throw InternalInvariantViolation("walk " + walk_to_string(g, walk) + " gives an invalid string: " + problem);
        return HomTarget::string(canonical_word(w));
    };
    return {join(mparts), join(nparts)};
}

TwoTermComplex min_proj_presentation(const Graph& g, const StringWord& s) {
    auto problem = string_problem(g, s);
    if (!problem.empty()) throw InvalidString(problem);
    const auto& ls = s.letters;
    int k = static_cast<int>(ls.size());
    auto colors = string_colors(g, s);

    struct Peak {
        int vertex;
        int left_len, right_len;
        Half left_half, right_half;  // e_a and ebar_a
    };
    std::vector<Peak> peaks;
    for (int v = 0; v <= k; ++v) {
        bool from_left = v == 0 || ls[v - 1].inverse;
        bool to_right = v == k || !ls[v].inverse;
        if (!from_left || !to_right) continue;
        Peak p{v, 0, 0, -1, -1};
        while (v - p.left_len - 1 >= 0 && ls[v - p.left_len - 1].inverse) ++p.left_len;
        while (v + p.right_len < k && !ls[v + p.right_len].inverse) ++p.right_len;
        if (p.left_len > 0) p.left_half = ls[v - 1].half;
        if (p.right_len > 0) p.right_half = ls[v].half;
        if (p.left_half < 0 && p.right_half < 0) p.left_half = g.halves_of(colors[v]).first;
        if (p.left_half < 0) p.left_half = g.bar(p.right_half);
        if (p.right_half < 0) p.right_half = g.bar(p.left_half);
        peaks.push_back(p);
    }

    auto path_label = [&](Half h, int len) {
        int val = g.valency(g.source(h));
        PathLabel lab;
        lab.start = h;
        lab.power = len / val;
        lab.steps = len % val;
        return lab;
    };
    TwoTermComplex t;
    auto add_minus = [&](Half h, int len, int row) {
        t.degree_minus1.push_back(g.edge_of(g.next_pow(h, len)));
        t.entries.push_back({row, static_cast<int>(t.degree_minus1.size()) - 1, path_label(h, len)});
    };
    for (size_t i = 0; i < peaks.size(); ++i) {
        const Peak& p = peaks[i];
        int row = static_cast<int>(t.degree0.size());
        t.degree0.push_back(colors[p.vertex]);
        if (i == 0 && p.left_len < g.cycle_length(p.left_half) - 1) add_minus(p.left_half, p.left_len + 1, row);
        if (i > 0) {
            const Peak& q = peaks[i - 1];
            if (q.vertex + q.right_len != p.vertex - p.left_len)
                throw InternalInvariantViolation("peaks do not share a valley");
            add_minus(q.right_half, q.right_len, row - 1);
            t.entries.push_back({row, static_cast<int>(t.degree_minus1.size()) - 1, path_label(p.left_half, p.left_len)});
        }
        if (i + 1 == peaks.size() && p.right_len < g.cycle_length(p.right_half) - 1)
            add_minus(p.right_half, p.right_len + 1, row);
    }
    return t;
}

int cb_count(const Graph& g, const StringWord& x, const StringWord& y) {
    auto cx = string_colors(g, x), cy = string_colors(g, y);
    int kx = static_cast<int>(x.letters.size()), ky = static_cast<int>(y.letters.size());
    auto quotient_ok = [&](int p, int q) {
        return (p == 0 || x.letters[p - 1].inverse) && (q == kx || !x.letters[q].inverse);
    };
    auto sub_ok = [&](int p, int q) {
        return (p == 0 || !y.letters[p - 1].inverse) && (q == ky || y.letters[q].inverse);
    };
    int count = 0;
    for (int p = 0; p <= kx; ++p)
        for (int q = p; q <= kx; ++q) {
            if (!quotient_ok(p, q)) continue;
            int len = q - p;
            for (int r = 0; r + len <= ky; ++r) {
                if (!sub_ok(r, r + len)) continue;
                if (len == 0) {
                    count += cx[p] == cy[r];
                    continue;
                }
                bool same = true, flipped = true;
                for (int t = 0; t < len; ++t) {
                    const Letter& a = x.letters[p + t];
                    const Letter& b = y.letters[r + t];
                    const Letter& c = y.letters[r + len - 1 - t];
                    same &= a == b;
                    flipped &= a.half == c.half && a.inverse != c.inverse;
                }
                count += same + flipped;
            }
        }
    return count;
}

int hom_dim(const Graph& g, const HomTarget& x, const HomTarget& y) {
    using K = HomTarget::Kind;
    if (x.kind == K::Zero || y.kind == K::Zero) return 0;
    if (x.kind == K::Projective && y.kind == K::Projective)
        return static_cast<int>(Algebra(g).between(y.edge, x.edge).size());
    if (x.kind == K::Projective) {
        auto c = string_colors(g, y.word);
        return static_cast<int>(std::count(c.begin(), c.end(), x.edge));
    }
    if (y.kind == K::Projective) return cb_count(g, x.word, radical_word(g, y.edge));
    return cb_count(g, x.word, y.word);
}

}  // namespace brauer
