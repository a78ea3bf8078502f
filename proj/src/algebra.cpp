#include "brauer/algebra.hpp"

namespace brauer {

PathLabel PathLabel::trivial(const Graph& g, EdgeId e) {
    PathLabel p;
    p.start = g.halves_of(e).first;
    return p;
}

PathLabel PathLabel::of_socle(EdgeId e) {
    PathLabel p;
    p.socle = true;
    p.socle_edge = e;
    return p;
}

bool PathLabel::is_short(const Graph& g) const {
    return !socle && power == 0 && steps > 0 && steps < g.valency(g.source(start));
}

Algebra::Algebra(const Graph& g) : g_(g), ne_(g.num_edges()) {
    for (EdgeId e = 0; e < ne_; ++e) {
        id_.push_back(dim());
        elems_.push_back({Kind::Identity, -1, 0, e});
        left_.push_back(e);
        right_.push_back(e);
    }
    path_offset_.assign(g.num_halves(), -1);
    for (Half h = 0; h < g.num_halves(); ++h) {
        path_offset_[h] = dim();
        for (int len = 1; len < g.cycle_length(h); ++len) {
            elems_.push_back({Kind::Path, h, len, -1});
            left_.push_back(g.edge_of(h));
            right_.push_back(g.edge_of(g.next_pow(h, len)));
        }
    }
    for (EdgeId e = 0; e < ne_; ++e) {
        soc_.push_back(dim());
        elems_.push_back({Kind::Socle, -1, 0, e});
        left_.push_back(e);
        right_.push_back(e);
    }
    between_.assign(ne_ * ne_, {});
    for (int x = 0; x < dim(); ++x) between_[left_[x] * ne_ + right_[x]].push_back(x);
    for (Half h = 0; h < g.num_halves(); ++h)
        if (arrow(h) >= 0) generators_.push_back(arrow(h));
    for (EdgeId e = 0; e < ne_; ++e) generators_.push_back(soc_[e]);
}

int Algebra::path(Half h, int length) const {
    if (length < 1 || length >= g_.cycle_length(h)) return -1;
    return path_offset_[h] + length - 1;
}

int Algebra::multiply(int a, int b) const {
    if (right_[a] != left_[b]) return -1;
    const Element& x = elems_[a];
    const Element& y = elems_[b];
    if (x.kind == Kind::Identity) return b;
    if (y.kind == Kind::Identity) return a;
    if (x.kind == Kind::Socle || y.kind == Kind::Socle) return -1;
    // both proper paths: they compose only along one Brauer cycle
    if (y.half != g_.next_pow(x.half, x.length)) return -1;
    int total = x.length + y.length;
    int full = g_.cycle_length(x.half);
    if (total < full) return path(x.half, total);
    if (total == full) return soc_[g_.edge_of(x.half)];
    return -1;
}

int Algebra::dim_projective(EdgeId e) const {
    int n = 0;
    for (EdgeId f = 0; f < ne_; ++f) n += static_cast<int>(between(e, f).size());
    return n;
}

PathLabel Algebra::label(int x) const {
    const Element& el = elems_[x];
    switch (el.kind) {
        case Kind::Identity:
            return PathLabel::trivial(g_, el.edge);
        case Kind::Socle:
            return PathLabel::of_socle(el.edge);
        case Kind::Path: {
            int val = g_.valency(g_.source(el.half));
            PathLabel p;
            p.start = el.half;
            p.power = el.length / val;
            p.steps = el.length % val;
            return p;
        }
    }
    return {};
}

int Algebra::from_label(const PathLabel& p) const {
    if (p.socle) return p.socle_edge >= 0 && p.socle_edge < ne_ ? soc_[p.socle_edge] : -1;
    if (p.start < 0 || p.start >= g_.num_halves()) return -1;
    int val = g_.valency(g_.source(p.start));
    if (p.steps < 0 || p.steps >= val || p.power < 0) return -1;
    int len = p.power * val + p.steps;
    if (len == 0) return id_[g_.edge_of(p.start)];
    return path(p.start, len);
}

}  // namespace brauer
