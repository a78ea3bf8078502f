#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "brauer/oracle.hpp"

namespace brauer {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using SparseRow = std::map<int, Rational>;

// Incremental row echelon form over the rationals.
class RankCounter {
public:
    void add(SparseRow row) {
        while (!row.empty()) {
            auto [col, val] = *row.begin();
            auto it = pivots_.find(col);
            if (it == pivots_.end()) {
                Rational inv = 1 / val;
                for (auto& [c, v] : row) v *= inv;
                pivots_.emplace(col, std::move(row));
                return;
            }
            Rational factor = val;
            for (const auto& [c, v] : it->second) {
                Rational& slot = row[c];
                slot -= factor * v;
                if (slot == 0) row.erase(c);
            }
        }
    }
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::map<int, SparseRow> pivots_;
};

// A right module with a basis on which every generator acts monomially.
struct Module {
    std::vector<EdgeId> color;
    // action[gen][u] = image basis index or -1
    std::map<int, std::vector<int>> action;
};

Module string_module(const Algebra& alg, const StringWord& w) {
    const Graph& g = alg.graph();
    Module m;
    m.color = string_colors(g, w);
    int n = static_cast<int>(m.color.size());
    for (int gen : alg.generators()) m.action[gen].assign(n, -1);
    for (size_t t = 0; t < w.letters.size(); ++t) {
        const Letter& l = w.letters[t];
        int gen = alg.arrow(l.half);
        if (l.inverse) m.action[gen][t + 1] = static_cast<int>(t);
        else m.action[gen][t] = static_cast<int>(t + 1);
    }
    return m;
}

Module projective_module(const Algebra& alg, EdgeId e) {
    Module m;
    std::vector<int> basis;
    for (int x = 0; x < alg.dim(); ++x)
        if (alg.left(x) == e) basis.push_back(x);
    std::map<int, int> index;
    for (size_t i = 0; i < basis.size(); ++i) {
        index[basis[i]] = static_cast<int>(i);
        m.color.push_back(alg.right(basis[i]));
    }
    for (int gen : alg.generators()) {
        auto& act = m.action[gen];
        act.assign(basis.size(), -1);
        for (size_t i = 0; i < basis.size(); ++i) {
            int y = alg.multiply(basis[i], gen);
            if (y >= 0) act[i] = index.at(y);
        }
    }
    return m;
}

Module module_of(const Algebra& alg, const HomTarget& t) {
    switch (t.kind) {
        case HomTarget::Kind::String: return string_module(alg, t.word);
        case HomTarget::Kind::Projective: return projective_module(alg, t.edge);
        case HomTarget::Kind::Zero: break;
    }
    Module m;
    for (int gen : alg.generators()) m.action[gen] = {};
    return m;
}

}  // namespace

int hom_dim_linear(const Algebra& alg, const HomTarget& x, const HomTarget& y) {
    Module a = module_of(alg, x), b = module_of(alg, y);
    int na = static_cast<int>(a.color.size()), nb = static_cast<int>(b.color.size());
    std::map<std::pair<int, int>, int> var;
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v)
            if (a.color[u] == b.color[v]) var.emplace(std::pair(u, v), static_cast<int>(var.size()));
    RankCounter rc;
    for (int gen : alg.generators()) {
        const auto& act_a = a.action.at(gen);
        const auto& act_b = b.action.at(gen);
        for (int u = 0; u < na; ++u) {
            // f(u.gen) - f(u).gen, one equation per target basis vector
            std::map<int, SparseRow> eqs;
            if (act_a[u] >= 0)
                for (int t = 0; t < nb; ++t)
                    if (auto it = var.find({act_a[u], t}); it != var.end()) eqs[t][it->second] += 1;
            for (int v = 0; v < nb; ++v) {
                if (act_b[v] < 0) continue;
                if (auto it = var.find({u, v}); it != var.end()) eqs[act_b[v]][it->second] -= 1;
            }
            for (auto& [t, row] : eqs) {
                std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
                rc.add(std::move(row));
            }
        }
    }
    return static_cast<int>(var.size()) - rc.rank();
}

int shift_hom_dim(const Algebra& alg, const TwoTermComplex& source, const TwoTermComplex& target) {
    // coordinates of Hom(source^{-1}, target^0)
    std::map<std::tuple<int, int, int>, int> coord;  // (source col, target row, element)
    for (size_t s = 0; s < source.degree_minus1.size(); ++s)
        for (size_t r = 0; r < target.degree0.size(); ++r)
            for (int x : alg.between(target.degree0[r], source.degree_minus1[s]))
                coord.emplace(std::tuple(static_cast<int>(s), static_cast<int>(r), x), static_cast<int>(coord.size()));
    RankCounter rc;
    // h^{-1}: source^{-1} -> target^{-1}, composed with the target differential
    for (size_t s = 0; s < source.degree_minus1.size(); ++s)
        for (size_t t = 0; t < target.degree_minus1.size(); ++t)
            for (int mu : alg.between(target.degree_minus1[t], source.degree_minus1[s])) {
                SparseRow col;
                for (const auto& e : target.entries) {
                    if (e.col != static_cast<int>(t)) continue;
                    int prod = alg.multiply(alg.from_label(e.label), mu);
                    if (prod >= 0) col[coord.at({static_cast<int>(s), e.row, prod})] += 1;
                }
                std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
                rc.add(std::move(col));
            }
    // h^0: source^0 -> target^0, precomposed with the source differential
    for (size_t u = 0; u < source.degree0.size(); ++u)
        for (size_t r = 0; r < target.degree0.size(); ++r)
            for (int mu : alg.between(target.degree0[r], source.degree0[u])) {
                SparseRow col;
                for (const auto& e : source.entries) {
                    if (e.row != static_cast<int>(u)) continue;
                    int prod = alg.multiply(mu, alg.from_label(e.label));
                    if (prod >= 0) col[coord.at({e.col, static_cast<int>(r), prod})] += 1;
                }
                std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
                rc.add(std::move(col));
            }
    return static_cast<int>(coord.size()) - rc.rank();
}

std::pair<int, int> cohomology_dims(const Algebra& alg, const TwoTermComplex& t) {
    // basis of degree 0: (row, element with left edge = summand edge)
    std::map<std::pair<int, int>, int> coord;
    int dim0 = 0, dim1 = 0;
    for (size_t r = 0; r < t.degree0.size(); ++r) dim0 += alg.dim_projective(t.degree0[r]);
    RankCounter rc;
    for (size_t c = 0; c < t.degree_minus1.size(); ++c)
        for (int y = 0; y < alg.dim(); ++y) {
            if (alg.left(y) != t.degree_minus1[c]) continue;
            ++dim1;
            SparseRow img;
            for (const auto& e : t.entries) {
                if (e.col != static_cast<int>(c)) continue;
                int prod = alg.multiply(alg.from_label(e.label), y);
                if (prod < 0) continue;
                auto key = std::pair(e.row, prod);
                auto it = coord.try_emplace(key, static_cast<int>(coord.size())).first;
                img[it->second] += 1;
            }
            std::erase_if(img, [](const auto& kv) { return kv.second == 0; });
            rc.add(std::move(img));
        }
    return {dim0 - rc.rank(), dim1 - rc.rank()};
}

bool cross_vanishing(const Graph& g, const SignedWalk& a, const SignedWalk& b) {
    auto [ma, na] = strings_of_walk(g, a);
    auto [mb, nb] = strings_of_walk(g, b);
    return hom_dim(g, ma, nb) == 0 && hom_dim(g, mb, na) == 0;
}

bool pretilting_oracle(const Graph& g, const SignedWalk& a, const SignedWalk& b) {
    auto [ma, na] = strings_of_walk(g, a);
    auto [mb, nb] = strings_of_walk(g, b);
    return hom_dim(g, ma, na) == 0 && hom_dim(g, mb, nb) == 0 && hom_dim(g, ma, nb) == 0 &&
           hom_dim(g, mb, na) == 0;
}

CrosscheckReport crosscheck_bijection(const Graph& g, int cap) {
    CrosscheckReport rep;
    auto walks = enumerate_signed_walks(g, cap);
    rep.walks = static_cast<int>(walks.size());
    std::vector<std::pair<HomTarget, HomTarget>> parts;
    for (const auto& w : walks) parts.push_back(strings_of_walk(g, w));
    for (size_t i = 0; i < walks.size(); ++i) {
        ++rep.pairs;
        bool comb = is_admissible(g, walks[i]);
        bool orc = hom_dim(g, parts[i].first, parts[i].second) == 0;
        if (comb != orc)
            rep.disagreements.push_back("walk " + walk_to_string(g, walks[i]) + ": admissible=" +
                                        (comb ? "yes" : "no") + " oracle=" + (orc ? "pretilting" : "not pretilting"));
    }
    for (size_t i = 0; i < walks.size(); ++i)
        for (size_t j = i + 1; j < walks.size(); ++j) {
            ++rep.pairs;
            bool comb = check_pair(g, walks[i], walks[j]).compatible();
            bool orc = hom_dim(g, parts[i].first, parts[j].second) == 0 &&
                       hom_dim(g, parts[j].first, parts[i].second) == 0;
            if (comb != orc)
                rep.disagreements.push_back("pair " + walk_to_string(g, walks[i]) + " / " +
                                            walk_to_string(g, walks[j]) + ": compatible=" + (comb ? "yes" : "no") +
                                            " oracle=" + (orc ? "vanishing" : "non-vanishing"));
        }
    return rep;
}

}  // namespace brauer
