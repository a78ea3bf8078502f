#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/oracle.hpp"

namespace support {

inline std::string corpus_path(const std::string& name) {
    return std::string(BRAUER_CORPUS_DIR) + "/" + name + ".bg";
}

inline brauer::Graph load(const std::string& name) { return brauer::load_graph(corpus_path(name)); }

// The cross-check corpus: base graphs with multiplicity one.
inline const std::vector<std::string>& base_graphs() {
    static const std::vector<std::string> names{"g1",   "line2",        "line3", "star2",
                                                "star3", "loop", "loop_pendant", "triangle"};
    return names;
}

inline std::string m3(const std::string& name) { return name + "_m3"; }

inline std::vector<std::string> discrete_graphs() {
    std::vector<std::string> out;
    for (const auto& n : base_graphs()) {
        out.push_back(n);
        out.push_back(m3(n));
    }
    return out;
}

inline std::vector<std::string> all_graphs() {
    auto out = discrete_graphs();
    for (const char* n : {"digon", "two_loop", "theta", "walk_example"}) out.push_back(n);
    return out;
}

// Random valid strings of the algebra modulo its socle, built by extending
// letter by letter and rejecting invalid extensions.
inline std::vector<brauer::StringWord> random_strings(const brauer::Graph& g, int count, unsigned seed,
                                                      int max_letters = 8) {
    using namespace brauer;
    std::mt19937 rng(seed);
    std::vector<Letter> letters;
    for (Half h = 0; h < g.num_halves(); ++h) {
        if (g.truncated(h)) continue;
        letters.push_back({h, false});
        letters.push_back({h, true});
    }
    std::vector<StringWord> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts++ < 100 * count) {
        StringWord w;
        std::uniform_int_distribution<int> len_dist(0, max_letters);
        int target = len_dist(rng);
        if (target == 0 || letters.empty()) {
            w.trivial_edge = std::uniform_int_distribution<int>(0, g.num_edges() - 1)(rng);
            out.push_back(w);
            continue;
        }
        w.letters.push_back(letters[std::uniform_int_distribution<size_t>(0, letters.size() - 1)(rng)]);
        if (!string_problem(g, w).empty()) continue;
        while (static_cast<int>(w.letters.size()) < target) {
            std::vector<Letter> options;
            for (const auto& l : letters) {
                if (letter_head(g, l) != letter_tail(g, w.letters.back())) continue;
                StringWord t = w;
                t.letters.push_back(l);
                if (string_problem(g, t).empty()) options.push_back(l);
            }
            if (options.empty()) break;
            w.letters.push_back(options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)]);
        }
        out.push_back(w);
    }
    return out;
}

// Maximal families of signed walks (length <= cap) that are pairwise and
// self pretilting according to the module oracle alone.
inline std::vector<std::vector<brauer::SignedWalk>> oracle_tilting_sets(const brauer::Graph& g, int cap) {
    using namespace brauer;
    std::vector<SignedWalk> pool;
    for (const auto& w : enumerate_signed_walks(g, cap))
        if (pretilting_oracle(g, w, w)) pool.push_back(w);
    int n = static_cast<int>(pool.size());
    std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) ok[a][b] = ok[b][a] = pretilting_oracle(g, pool[a], pool[b]);
    std::vector<std::vector<SignedWalk>> out;
    std::vector<int> current;
    std::function<void(int)> grow = [&](int from) {
        bool extended = false;
        for (int v = 0; v < n; ++v) {
            if (std::find(current.begin(), current.end(), v) != current.end()) continue;
            bool fits = std::all_of(current.begin(), current.end(), [&](int u) { return ok[u][v]; });
            if (!fits) continue;
            extended = true;
            if (v < from) continue;
            current.push_back(v);
            grow(v + 1);
            current.pop_back();
        }
        if (!extended) {
            std::vector<SignedWalk> s;
            for (int v : current) s.push_back(pool[v]);
            std::sort(s.begin(), s.end());
            out.push_back(s);
        }
    };
    grow(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace support
