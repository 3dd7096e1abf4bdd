#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "quiver.hpp"

namespace sbalg {

struct CorpusOptions {
    int max_vertices = 4;
    int max_arrows = 6;
    int max_relation_length = 3;
    bool allow_nodes = true;
};

// Lexicographically least description over vertex relabelings and swaps of parallel arrows.
inline std::string canonical_key(const MonomialAlgebra& alg) {
    const auto& q = alg.quiver();
    int n = q.num_vertices(), m = q.num_arrows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool first = true;
    do {
        // arrows sorted by relabeled endpoints; parallel groups permuted exhaustively
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        auto ends = [&](int a) { return std::pair{perm[q.arrow(a).src], perm[q.arrow(a).tgt]}; };
        std::sort(order.begin(), order.end(), [&](int a, int b) { return ends(a) < ends(b); });
        std::vector<std::pair<std::size_t, std::size_t>> groups;
        for (std::size_t i = 0; i < order.size();) {
            std::size_t j = i;
            while (j < order.size() && ends(order[j]) == ends(order[i])) ++j;
            groups.push_back({i, j});
            i = j;
        }
        std::function<void(std::size_t)> rec = [&](std::size_t g) {
            if (g == groups.size()) {
                std::vector<int> pos(m);
                for (int i = 0; i < m; ++i) pos[order[i]] = i;
                std::string s;
                for (int i = 0; i < m; ++i) {
                    auto [a, b] = ends(order[i]);
                    s += char('0' + a);
                    s += char('0' + b);
                }
                std::vector<std::string> rels;
                for (const auto& r : alg.relations()) {
                    std::string t;
                    for (int a : r) t += char('a' + pos[a]);
                    rels.push_back(t);
                }
                std::sort(rels.begin(), rels.end());
                s += '|';
                for (const auto& t : rels) s += t + ',';
                if (first || s < best) { best = s; first = false; }
                return;
            }
            auto [b, e] = groups[g];
            std::sort(order.begin() + b, order.begin() + e);
            do rec(g + 1);
            while (std::next_permutation(order.begin() + b, order.begin() + e));
        };
        rec(0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

// Connected special biserial monomial algebras, finite dimensional, one per isomorphism class.
inline std::vector<MonomialAlgebra> generate_corpus(const CorpusOptions& opt) {
    std::map<std::string, MonomialAlgebra> found;
    for (int n = 1; n <= opt.max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) pairs.push_back({s, t});
        std::vector<std::pair<int, int>> arrows;
        std::vector<int> indeg(n, 0), outdeg(n, 0);
        std::function<void(std::size_t)> choose = [&](std::size_t from) {
            if (!arrows.empty()) {
                Quiver q;
                for (int v = 0; v < n; ++v) q.add_vertex(std::to_string(v + 1));
                for (std::size_t i = 0; i < arrows.size(); ++i)
                    q.add_arrow(std::string(1, char('a' + i)), arrows[i].first, arrows[i].second);
                if (q.connected()) {
                    // per vertex: partial matchings in(v) x out(v) of nonzero compositions
                    std::vector<std::vector<std::vector<std::pair<int, int>>>> options(n);
                    for (int v = 0; v < n; ++v) {
                        auto in = q.arrows_into(v), out = q.arrows_out(v);
                        std::vector<std::vector<std::pair<int, int>>> ms{{}};
                        for (int a : in)
                            for (int b : out) ms.push_back({{a, b}});
                        if (in.size() == 2 && out.size() == 2) {
                            ms.push_back({{in[0], out[0]}, {in[1], out[1]}});
                            ms.push_back({{in[0], out[1]}, {in[1], out[0]}});
                        }
                        if (!opt.allow_nodes && !in.empty() && !out.empty()) ms.erase(ms.begin());
                        options[v] = ms;
                    }
                    std::vector<std::pair<int, int>> nonzero;
                    std::function<void(int)> pick = [&](int v) {
                        if (v == n) {
                            std::set<std::pair<int, int>> nz(nonzero.begin(), nonzero.end());
                            std::vector<Path> rels;
                            for (int a = 0; a < q.num_arrows(); ++a)
                                for (int b : q.arrows_out(q.arrow(a).tgt))
                                    if (!nz.count({a, b})) rels.push_back({a, b});
                            // length-3 candidates: a b c with ab, bc nonzero, one per middle arrow
                            std::vector<Path> cand;
                            if (opt.max_relation_length >= 3)
                                for (auto [a, b] : nonzero)
                                    for (auto [b2, c] : nonzero)
                                        if (b2 == b) cand.push_back({a, b, c});
                            for (std::size_t mask = 0; mask < (std::size_t{1} << cand.size()); ++mask) {
                                auto all = rels;
                                for (std::size_t i = 0; i < cand.size(); ++i)
                                    if (mask >> i & 1) all.push_back(cand[i]);
                                MonomialAlgebra A(q, all);
                                if (!is_finite_dimensional(A)) continue;
                                auto key = canonical_key(A);
                                if (!found.count(key)) found.emplace(key, A);
                            }
                            return;
                        }
                        for (const auto& m : options[v]) {
                            nonzero.insert(nonzero.end(), m.begin(), m.end());
                            pick(v + 1);
                            nonzero.resize(nonzero.size() - m.size());
                        }
                    };
                    pick(0);
                }
            }
            if (static_cast<int>(arrows.size()) == opt.max_arrows) return;
            for (std::size_t i = from; i < pairs.size(); ++i) {
                auto [s, t] = pairs[i];
                if (outdeg[s] == 2 || indeg[t] == 2) continue;
                ++outdeg[s];
                ++indeg[t];
                arrows.push_back(pairs[i]);
                choose(i);
                arrows.pop_back();
                --outdeg[s];
                --indeg[t];
            }
        };
        choose(0);
    }
    std::vector<MonomialAlgebra> out;
    int k = 0;
    for (auto& [key, A] : found) out.push_back(MonomialAlgebra(A.quiver(), A.relations(), "corpus" + std::to_string(k++)));
    return out;
}

} // namespace sbalg
