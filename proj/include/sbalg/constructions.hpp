#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "quiver.hpp"
#include "word.hpp"

namespace sbalg {

struct OrientationSequence {
    std::vector<int> signs; // +1 / -1

    OrientationSequence() = default;
    explicit OrientationSequence(std::vector<int> s) : signs(std::move(s)) {
        if (signs.empty()) throw InputError("orientation sequence must be nonempty");
        for (int x : signs)
            if (x != 1 && x != -1) throw InputError("orientation signs must be +1 or -1");
    }

    // Accepts "++-+", "(+ + - +)", "(+1,-1)".
    static OrientationSequence parse(const std::string& text) {
        std::vector<int> s;
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == '+') s.push_back(1);
            else if (c == '-') s.push_back(-1);
            else if (c == '1' || c == '(' || c == ')' || c == ',' || c == ' ') continue;
            else throw InputError(std::string("bad character '") + c + "' in orientation sequence");
        }
        return OrientationSequence(s);
    }

    std::size_t size() const { return signs.size(); }
    int operator[](std::size_t i) const { return signs.at(i); }
    bool constant() const {
        return std::all_of(signs.begin(), signs.end(), [&](int x) { return x == signs[0]; });
    }
    OrientationSequence inverse() const {
        std::vector<int> r;
        for (auto it = signs.rbegin(); it != signs.rend(); ++it) r.push_back(-*it);
        return OrientationSequence(r);
    }
    OrientationSequence operator+(const OrientationSequence& o) const {
        std::vector<int> r = signs;
        r.insert(r.end(), o.signs.begin(), o.signs.end());
        return OrientationSequence(r);
    }
    std::string str() const {
        std::string s = "(";
        for (int x : signs) s += x > 0 ? '+' : '-';
        return s + ")";
    }
    bool operator==(const OrientationSequence&) const = default;
};

inline OrientationSequence orientation_of(const Word& w) {
    std::vector<int> s;
    for (auto l : w.letters) s.push_back(l.inv ? -1 : 1);
    return OrientationSequence(s);
}

// H(eps): vertices a1..a_{n-1}, a0 = a_n; alpha_i : a_i -> a_{i-1} for +, reversed for -.
inline MonomialAlgebra cycle_algebra(const OrientationSequence& eps) {
    if (eps.constant()) throw PreconditionError("constant orientation sequence gives an infinite dimensional algebra");
    std::size_t n = eps.size();
    Quiver q;
    auto vname = [&](std::size_t i) { return "a" + std::to_string(i % n); };
    for (std::size_t i = 0; i < n; ++i) q.add_vertex(vname(i));
    for (std::size_t i = 1; i <= n; ++i) {
        if (eps[i - 1] > 0) q.add_arrow("alpha" + std::to_string(i), vname(i), vname(i - 1));
        else q.add_arrow("alpha" + std::to_string(i), vname(i - 1), vname(i));
    }
    return MonomialAlgebra(q, {}, "H" + eps.str());
}

// alpha_1^{eps(1)} ... alpha_n^{eps(n)}
inline Word cycle_band(const MonomialAlgebra& H, const OrientationSequence& eps) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < eps.size(); ++i) ls.push_back({static_cast<int>(i), eps[i] < 0});
    return validate_word(H, ls);
}

namespace detail {

// Letters l with s(l) = v.
inline std::vector<Letter> letters_starting_at(const Quiver& q, int v) {
    std::vector<Letter> r;
    for (int a : q.arrows_out(v)) r.push_back({a, false});
    for (int a : q.arrows_into(v)) r.push_back({a, true});
    return r;
}

// Serial word -> relation path in traversal order.
inline std::optional<Path> serial_to_path(const std::vector<Letter>& ls) {
    if (ls.empty()) return std::nullopt;
    bool inv = ls[0].inv;
    for (auto l : ls)
        if (l.inv != inv) return std::nullopt;
    return traversal(ls, 0, ls.size() - 1);
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { while (p[x] != x) x = p[x] = p[p[x]]; return x; }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace detail

struct BarificationError : PreconditionError {
    std::size_t index;
    BarificationError(std::size_t i, const std::string& msg)
        : PreconditionError("barification hypothesis fails at index " + std::to_string(i) + ": " + msg), index(i) {}
};

// Identify the stretch v (vertices a_1..a_t) with v' (a'_1..a'_t) and add the relations
// l_0 (l'_0)^{-1} and (l'_t)^{-1} l_t, where l_0 and l_t flank v as in l_0 v l_t.
// For trivial v, v' the flanking letters are chosen as the first admissible pair.
inline MonomialAlgebra barify(const MonomialAlgebra& alg, const Word& v, const Word& vp) {
    const auto& q = alg.quiver();
    if (v.size() != vp.size()) throw BarificationError(0, "paths of different length");
    std::size_t t = v.size() + 1;
    std::vector<int> A, Ap;
    for (std::size_t i = 0; i < t; ++i) {
        A.push_back(word_vertex(q, v, i));
        Ap.push_back(word_vertex(q, vp, i));
    }
    {
        std::vector<int> all = A;
        all.insert(all.end(), Ap.begin(), Ap.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw BarificationError(0, "vertices are not pairwise different");
        for (std::size_t i = 0; i < t; ++i) {
            if (vertex_degree(alg, A[i]) != 2) throw BarificationError(i + 1, "not a 2-vertex");
            if (vertex_degree(alg, Ap[i]) != 2) throw BarificationError(i + 1, "not a 2-vertex");
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.letters[i].inv != vp.letters[i].inv) throw BarificationError(i + 1, "letters differ in direction");
        for (const auto& r : alg.relations())
            for (int a : r)
                if (a == v.letters[i].arrow || a == vp.letters[i].arrow)
                    throw BarificationError(i + 1, "inner letter is involved in a relation");
    }
    // Flanks: l_0 with s(l_0) = a_1 other than v_1^{-1}; l_t with t(l_t) = a_t other than v_omega^{-1}.
    auto flanks = [&](const Word& w, int first, int last) {
        std::vector<std::pair<Letter, Letter>> opts;
        for (Letter l0 : detail::letters_starting_at(q, first)) {
            if (!w.empty() && l0 == w.letters.front().inverse()) continue;
            for (Letter lt : letters_ending_at(q, last)) {
                if (!w.empty() && lt == w.letters.back().inverse()) continue;
                if (w.empty() && lt == l0.inverse()) continue;
                opts.push_back({l0, lt});
            }
        }
        return opts;
    };
    auto f = flanks(v, A.front(), A.back());
    auto fp = flanks(vp, Ap.front(), Ap.back());
    std::optional<std::pair<std::pair<Letter, Letter>, std::pair<Letter, Letter>>> choice;
    for (auto x : f) {
        for (auto y : fp)
            if (x.first.inv != y.first.inv && x.second.inv != y.second.inv) { choice = {x, y}; break; }
        if (choice) break;
    }
    if (!choice) throw BarificationError(0, "flanking letters do not have different directions");
    auto [l0, lt] = choice->first;
    auto [lp0, lpt] = choice->second;

    std::vector<int> vmap(q.num_vertices()), amap(q.num_arrows(), -1);
    std::iota(vmap.begin(), vmap.end(), 0);
    for (std::size_t i = 0; i < t; ++i) vmap[Ap[i]] = A[i];
    for (std::size_t i = 0; i < v.size(); ++i) amap[vp.letters[i].arrow] = v.letters[i].arrow;
    Quiver r;
    std::vector<int> newv(q.num_vertices(), -1), newa(q.num_arrows(), -1);
    for (int x = 0; x < q.num_vertices(); ++x)
        if (vmap[x] == x) newv[x] = r.add_vertex(q.vertex_name(x));
    for (int a = 0; a < q.num_arrows(); ++a)
        if (amap[a] < 0)
            newa[a] = r.add_arrow(q.arrow(a).name, newv[vmap[q.arrow(a).src]], newv[vmap[q.arrow(a).tgt]]);
    for (int a = 0; a < q.num_arrows(); ++a)
        if (amap[a] >= 0) newa[a] = newa[amap[a]];
    auto remap = [&](Letter l) { return Letter{newa[l.arrow], l.inv}; };
    std::vector<Path> rels;
    for (const auto& rel : alg.relations()) {
        Path p;
        for (int a : rel) p.push_back(newa[a]);
        rels.push_back(p);
    }
    auto r1 = detail::serial_to_path({remap(l0), remap(lp0).inverse()});
    auto r2 = detail::serial_to_path({remap(lpt).inverse(), remap(lt)});
    if (!r1 || !r2) throw InvariantError("barification relation is not serial");
    rels.push_back(*r1);
    rels.push_back(*r2);
    return MonomialAlgebra(std::move(r), std::move(rels), alg.name());
}

struct Barbell {
    MonomialAlgebra algebra;
    Word bar;
    Word band; // u1 v u2 v^-1 with u1, u2 the copies of eps, eps'
};

inline Barbell barbell(const OrientationSequence& eps, const OrientationSequence& eta, const OrientationSequence& eps2) {
    auto ends_plus = [](const OrientationSequence& e) { return e.signs.front() > 0 && e.signs.back() > 0; };
    if (!ends_plus(eps) || !ends_plus(eps2))
        throw PreconditionError("eps and eps' must start and end with +");
    OrientationSequence all = eps + eta + eps2 + eta.inverse();
    MonomialAlgebra H = cycle_algebra(all);
    const auto& q = H.quiver();
    Word w = cycle_band(H, all);
    std::size_t p = eps.size(), k = eta.size(), r = eps2.size();
    Word v = subword(q, w, p, k);
    Word vp = inverse(q, subword(q, w, p + k + r, k));
    MonomialAlgebra B = barify(H, v, vp);
    const auto& qb = B.quiver();
    auto tr = [&](Letter l) { return Letter{qb.arrow_index(q.arrow(l.arrow).name), l.inv}; };
    Word bar;
    for (auto l : v.letters) bar.letters.push_back(tr(l));
    bar.base = bar.empty() ? 0 : letter_target(qb, bar.letters.front());
    std::vector<Letter> band;
    for (std::size_t i = 0; i < p + k + r; ++i) band.push_back(tr(w.letters[i]));
    for (auto l : inverse(qb, bar).letters) band.push_back(l);
    return {B, bar, validate_word(B, band)};
}

// Letters named but not yet attached to a quiver.
struct AbstractLetter {
    std::string name;
    bool inv = false;
};

inline std::vector<AbstractLetter> parse_abstract_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<AbstractLetter> r;
    for (std::string t; in >> t;) {
        bool inv = t[0] == '~';
        std::string name = inv ? t.substr(1) : t;
        if (name.empty()) throw InputError("empty letter in word literal");
        r.push_back({name, inv});
    }
    if (r.empty()) throw InputError("empty word literal");
    return r;
}

// Quiver whose vertices are the positions of the cyclic word, identified along repeated arrows.
struct WordQuiver {
    Quiver quiver;
    std::vector<Letter> letters;
};

inline WordQuiver quiver_from_cyclic_word(const std::vector<AbstractLetter>& w) {
    std::size_t n = w.size();
    std::map<std::string, int> ids;
    std::vector<std::string> names;
    for (const auto& l : w)
        if (!ids.count(l.name)) {
            ids[l.name] = static_cast<int>(names.size());
            names.push_back(l.name);
        }
    // position i (0..n-1), letter i+1 has t = x_i, s = x_{i+1}
    detail::UnionFind uf(n);
    std::vector<int> src(names.size(), -1), tgt(names.size(), -1);
    for (std::size_t i = 0; i < n; ++i) {
        int a = ids[w[i].name];
        int t = static_cast<int>(i), s = static_cast<int>((i + 1) % n);
        int as = w[i].inv ? t : s, at = w[i].inv ? s : t;
        if (src[a] < 0) { src[a] = as; tgt[a] = at; }
        else { uf.unite(src[a], as); uf.unite(tgt[a], at); }
    }
    Quiver q;
    std::map<int, int> vid;
    for (std::size_t i = 0; i < n; ++i) {
        int root = uf.find(static_cast<int>(i));
        if (!vid.count(root)) vid[root] = q.add_vertex("x" + std::to_string(root));
    }
    for (std::size_t a = 0; a < names.size(); ++a)
        q.add_arrow(names[a], vid[uf.find(src[a])], vid[uf.find(tgt[a])]);
    std::vector<Letter> ls;
    for (const auto& l : w) ls.push_back({ids[l.name], l.inv});
    return {std::move(q), std::move(ls)};
}

struct WindWheelError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct WindWheelData {
    MonomialAlgebra algebra;
    Word word; // w = u1 v1 ... u_{2t} v_{2t}
    std::vector<std::pair<Word, Word>> factors;
    Permutation sigma;
    std::vector<Word> bars;        // direct bars, numbered by their occurrence in w
    std::vector<std::size_t> bar_factor; // index i (0-based) with v_i = bar
    Permutation lambda, rho, pi;
    int t = 0;
};

namespace detail {

struct Factorization {
    std::vector<std::pair<std::size_t, std::size_t>> u, v; // [begin, end) in letter positions
    std::vector<int> sigma; // 0-based
};

// Cut a rotated word into u/v runs by edge multiplicity; letters[0] must begin a u-run.
inline Factorization cut(const std::vector<Letter>& ls, const std::vector<int>& count) {
    Factorization f;
    std::size_t n = ls.size(), i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && count[ls[j].arrow] == 1) ++j;
        f.u.push_back({i, j});
        std::size_t k = j;
        while (k < n && count[ls[k].arrow] == 2) ++k;
        f.v.push_back({j, k});
        i = k;
    }
    return f;
}

} // namespace detail

// Checks WW1-WW3 on a rotation starting with a u-run; returns an error message or empty string.
inline std::string wind_wheel_conditions(const Quiver& q, const std::vector<Letter>& ls, const std::vector<int>& count,
                                         detail::Factorization& f) {
    f = detail::cut(ls, count);
    std::size_t m = f.v.size();
    if (m % 2) return "odd number of bar pieces";
    auto piece = [&](std::pair<std::size_t, std::size_t> r) {
        return std::vector<Letter>(ls.begin() + r.first, ls.begin() + r.second);
    };
    f.sigma.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        auto vi = piece(f.v[i]);
        bool serial = std::all_of(vi.begin(), vi.end(), [&](Letter l) { return l.inv == vi[0].inv; });
        if (!serial) return "WW1: v" + std::to_string(i + 1) + " is not serial";
        std::vector<Letter> inv;
        for (auto it = vi.rbegin(); it != vi.rend(); ++it) inv.push_back(it->inverse());
        for (std::size_t j = 0; j < m; ++j)
            if (j != i && piece(f.v[j]) == inv) f.sigma[i] = static_cast<int>(j);
        if (f.sigma[i] < 0) return "WW1: v" + std::to_string(i + 1) + " has no inverse partner";
    }
    auto word_of = [&](std::pair<std::size_t, std::size_t> r) {
        Word w;
        w.letters = piece(r);
        w.base = letter_target(q, w.letters.front());
        return w;
    };
    for (std::size_t i = 0; i < m; ++i) {
        Word ui = word_of(f.u[i]), vi = word_of(f.v[i]), un = word_of(f.u[(i + 1) % m]);
        if (!is_attracting(q, vi, un)) return "WW3: (v" + std::to_string(i + 1) + ", u" + std::to_string((i + 1) % m + 1) + ") is not attracting";
        if (is_attracting(q, ui, vi)) return "WW3: (u" + std::to_string(i + 1) + ", v" + std::to_string(i + 1) + ") is attracting";
    }
    return "";
}

inline WindWheelData wind_wheel(const std::vector<AbstractLetter>& input) {
    WordQuiver wq = quiver_from_cyclic_word(input);
    const Quiver& q = wq.quiver;
    std::size_t n = wq.letters.size();
    std::vector<int> count(q.num_arrows(), 0), dir(q.num_arrows(), 0);
    for (auto l : wq.letters) {
        ++count[l.arrow];
        dir[l.arrow] |= l.inv ? 2 : 1;
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        if (count[a] > 2) throw WindWheelError("edge " + q.arrow(a).name + " occurs more than twice");
        if (count[a] == 2 && dir[a] != 3)
            throw WindWheelError("WW2: edge " + q.arrow(a).name + " occurs twice in the same direction");
    }
    if (std::none_of(count.begin(), count.end(), [](int c) { return c == 2; }))
        throw WindWheelError("no edge occurs twice: the word has no bars");
    if (std::none_of(count.begin(), count.end(), [](int c) { return c == 1; }))
        throw WindWheelError("every edge occurs twice: no u-pieces");
    // Endpoints of the cyclic word must close up.
    {
        Word w{wq.letters, letter_target(q, wq.letters.front())};
        if (word_end(q, w) != word_start(q, w)) throw InvariantError("cyclic word does not close");
    }

    auto rotation_start = [&](const std::vector<Letter>& ls) {
        for (std::size_t i = 0; i < n; ++i)
            if (count[ls[i].arrow] == 1 && count[ls[(i + n - 1) % n].arrow] == 2) return i;
        return std::size_t{0};
    };
    std::vector<Letter> ls;
    detail::Factorization f;
    std::string err;
    {
        std::vector<Letter> cand = wq.letters;
        std::rotate(cand.begin(), cand.begin() + rotation_start(cand), cand.end());
        err = wind_wheel_conditions(q, cand, count, f);
        if (err.empty()) ls = cand;
        else {
            std::vector<Letter> inv;
            for (auto it = wq.letters.rbegin(); it != wq.letters.rend(); ++it) inv.push_back(it->inverse());
            std::rotate(inv.begin(), inv.begin() + rotation_start(inv), inv.end());
            std::string err2 = wind_wheel_conditions(q, inv, count, f);
            if (!err2.empty()) throw WindWheelError(err);
            ls = inv;
        }
    }
    std::size_t m = f.v.size();
    int t = static_cast<int>(m / 2);
    auto word_of = [&](std::pair<std::size_t, std::size_t> r) {
        Word w;
        w.letters.assign(ls.begin() + r.first, ls.begin() + r.second);
        w.base = letter_target(q, w.letters.front());
        return w;
    };
    std::vector<Path> rels;
    auto add_rel = [&](const std::vector<Letter>& word, const std::string& what) {
        auto p = detail::serial_to_path(word);
        if (!p) throw WindWheelError(what + " relation is not serial");
        rels.push_back(*p);
    };
    WindWheelData d;
    for (std::size_t i = 0; i < m; ++i) {
        Word vi = word_of(f.v[i]);
        if (vi.letters.front().inv) continue;
        std::size_t j = static_cast<std::size_t>(f.sigma[i]);
        Word ui = word_of(f.u[i]), uj = word_of(f.u[j]);
        Word ui1 = word_of(f.u[(i + 1) % m]), uj1 = word_of(f.u[(j + 1) % m]);
        add_rel({ui.letters.back(), uj1.letters.front()}, "short");
        add_rel({ui1.letters.front().inverse(), uj.letters.back().inverse()}, "short");
        std::vector<Letter> lr{ui.letters.back()};
        lr.insert(lr.end(), vi.letters.begin(), vi.letters.end());
        lr.push_back(uj.letters.back().inverse());
        add_rel(lr, "long");
        d.bars.push_back(vi);
        d.bar_factor.push_back(i);
    }
    d.algebra = MonomialAlgebra(q, rels, "W");
    d.word = Word{ls, letter_target(q, ls.front())};
    if (!is_cyclic(d.algebra, d.word)) throw WindWheelError("w is not a cyclic word of W(w)");
    for (std::size_t i = 0; i < m; ++i) d.factors.push_back({word_of(f.u[i]), word_of(f.v[i])});
    std::vector<int> sig;
    for (int s : f.sigma) sig.push_back(s + 1);
    d.sigma = Permutation(sig);
    d.t = t;

    // rho: successor of bars in the order of their direct occurrences; lambda: of their inverse occurrences.
    std::vector<int> bar_of_factor(m, -1);
    for (std::size_t b = 0; b < d.bar_factor.size(); ++b) {
        bar_of_factor[d.bar_factor[b]] = static_cast<int>(b) + 1;
        bar_of_factor[f.sigma[d.bar_factor[b]]] = static_cast<int>(b) + 1;
    }
    std::vector<int> direct_order, inverse_order;
    for (std::size_t i = 0; i < m; ++i) {
        if (word_of(f.v[i]).letters.front().inv) inverse_order.push_back(bar_of_factor[i]);
        else direct_order.push_back(bar_of_factor[i]);
    }
    d.rho = Permutation::cycle(t, direct_order);
    d.lambda = Permutation::cycle(t, inverse_order);
    d.pi = commutator(d.lambda, d.rho);
    return d;
}

inline WindWheelData wind_wheel(const std::string& literal) { return wind_wheel(parse_abstract_word(literal)); }

// Closure l1 v l2 of bar number b (0-based).
inline Word bar_closure(const WindWheelData& d, std::size_t b) {
    if (b >= d.bars.size()) throw PreconditionError("not a bar");
    const auto& alg = d.algebra;
    const auto& q = alg.quiver();
    const Word& v = d.bars[b];
    std::vector<Word> found;
    for (Letter l1 : detail::letters_starting_at(q, word_start(q, v)))
        for (Letter l2 : letters_ending_at(q, word_end(q, v))) {
            Word a{{l1}, letter_target(q, l1)}, c{{l2}, letter_target(q, l2)};
            if (!is_attracting(q, a, v) || !is_attracting(q, v, c)) continue;
            std::vector<Letter> ls{l1};
            ls.insert(ls.end(), v.letters.begin(), v.letters.end());
            ls.push_back(l2);
            if (is_valid_word(alg, ls)) found.push_back(validate_word(alg, ls));
        }
    if (found.size() != 1) throw InvariantError("bar closure is not unique");
    return found[0];
}

inline bool contains_subword(const Word& x, const Word& y) {
    if (y.size() > x.size()) return false;
    return std::search(x.letters.begin(), x.letters.end(), y.letters.begin(), y.letters.end()) != x.letters.end();
}

inline bool in_image_of_eta(const WindWheelData& d, const Word& x) {
    const auto& q = d.algebra.quiver();
    for (std::size_t b = 0; b < d.bars.size(); ++b) {
        Word c = bar_closure(d, b);
        if (contains_subword(x, c) || contains_subword(x, inverse(q, c))) return false;
    }
    return true;
}

// For each bar v with w = w1 v w2 v^-1: the Z-word ^inf(w^-1) w2^-1 v^-1 w1^-1 v w2 v^-1 w^inf.
inline std::vector<ZWord> z_words(const WindWheelData& d) {
    const auto& q = d.algebra.quiver();
    std::vector<ZWord> out;
    std::size_t n = d.word.size();
    for (std::size_t b = 0; b < d.bars.size(); ++b) {
        const Word& v = d.bars[b];
        std::size_t k = v.size();
        // rotate w so that it ends with v^-1
        Word vi = inverse(q, v);
        std::optional<Word> rot;
        for (std::size_t r = 0; r < n && !rot; ++r) {
            Word c = rotate(q, d.word, r);
            if (std::equal(vi.letters.begin(), vi.letters.end(), c.letters.end() - k)) rot = c;
        }
        if (!rot) throw InvariantError("bar inverse not found in w");
        Word w = *rot;
        std::optional<std::size_t> pos;
        for (std::size_t i = 0; i + k <= n - k; ++i)
            if (std::equal(v.letters.begin(), v.letters.end(), w.letters.begin() + i)) pos = i;
        if (!pos) throw InvariantError("bar not found in w");
        Word w1 = subword(q, w, 0, *pos);
        Word w2 = subword(q, w, *pos + k, n - k - (*pos + k));
        Word mid = inverse(q, w2);
        for (const Word& piece : {vi, inverse(q, w1), v, w2, vi}) mid = concat(q, mid, piece);
        // left tail: w^-1 read in the phase w2^-1 v^-1 w1^-1 v
        Word left = inverse(q, w2);
        for (const Word& piece : {vi, inverse(q, w1), v}) left = concat(q, left, piece);
        out.push_back({left, mid, w});
    }
    return out;
}

inline Partition ramification_sequence(const WindWheelData& d) { return cycle_type(d.pi); }

// Cell complex assembled from t squares, each cut into four pentagons (tile i, quarter q)
// with corners O, X, C, A, Y in cyclic order. O is the center, X and Y are midpoints of
// square edges, C-A is the cut-off square corner (boundary). Square edge E(i, q) consists of
// A-Y of quarter q and X-C of quarter q+1. Square edges are glued in pairs:
// E(i, 0) with E(i+1, 2) and E(i, 1) with E(i, 3).
struct QuiltCounts {
    int f = 0, e = 0, v = 0;
    int boundary_vertices = 0, interior_vertices = 0;
    int chi() const { return f - e + v; }
};

inline QuiltCounts quilt_complex(int t) {
    if (t < 1) throw PreconditionError("t must be positive");
    enum { O, X, C, A, Y };
    int faces = 4 * t;
    auto face = [&](int i, int q) { return ((i % t + t) % t) * 4 + ((q % 4) + 4) % 4; };
    auto corner = [&](int fc, int c) { return fc * 5 + c; };
    // edge k of a pentagon joins corner k and corner k+1 (mod 5): 0 O-X, 1 X-C, 2 C-A, 3 A-Y, 4 Y-O
    detail::UnionFind vert(static_cast<std::size_t>(faces) * 5);
    detail::UnionFind edge(static_cast<std::size_t>(faces) * 5);
    std::vector<int> glued(faces * 5, 0);
    auto glue = [&](int f1, int e1, int f2, int e2, std::pair<int, int> c1, std::pair<int, int> c2) {
        edge.unite(f1 * 5 + e1, f2 * 5 + e2);
        ++glued[f1 * 5 + e1];
        ++glued[f2 * 5 + e2];
        vert.unite(corner(f1, c1.first), corner(f2, c2.first));
        vert.unite(corner(f1, c1.second), corner(f2, c2.second));
    };
    for (int i = 0; i < t; ++i)
        for (int q = 0; q < 4; ++q) glue(face(i, q), 4, face(i, q + 1), 0, {Y, O}, {X, O});
    auto glue_square_edges = [&](int i, int q, int j, int r) {
        glue(face(i, q), 3, face(j, r + 1), 1, {A, Y}, {C, X});
        glue(face(i, q + 1), 1, face(j, r), 3, {X, C}, {Y, A});
    };
    for (int i = 0; i < t; ++i) {
        glue_square_edges(i, 0, i + 1, 2);
        glue_square_edges(i, 1, i, 3);
    }
    for (int k = 0; k < faces * 5; ++k) {
        int expect = (k % 5 == 2) ? 0 : 1;
        if (glued[k] != expect) throw InvariantError("edge gluing is not a pairing");
    }
    QuiltCounts r;
    r.f = faces;
    std::set<int> eclasses;
    for (int k = 0; k < faces * 5; ++k) eclasses.insert(edge.find(k));
    r.e = static_cast<int>(eclasses.size());
    std::map<int, std::vector<int>> members;
    for (int k = 0; k < faces * 5; ++k) members[vert.find(k)].push_back(k % 5);
    for (const auto& [root, cs] : members) {
        bool bnd = std::any_of(cs.begin(), cs.end(), [](int c) { return c == A || c == C; });
        bool inner = std::any_of(cs.begin(), cs.end(), [](int c) { return c != A && c != C; });
        if (bnd && inner) throw InvariantError("boundary and interior corners identified");
        if (bnd && cs.size() != 2) throw InvariantError("boundary corner class is not a pair");
        if (!bnd && cs.size() != 4) throw InvariantError("interior corner class does not have four members");
        (bnd ? r.boundary_vertices : r.interior_vertices)++;
    }
    r.v = static_cast<int>(members.size());
    return r;
}

inline int quilt_euler_characteristic(int t) { return quilt_complex(t).chi(); }

} // namespace sbalg
