#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quiver.hpp"

namespace sbalg {

struct Letter {
    int arrow = 0;
    bool inv = false;
    Letter inverse() const { return {arrow, !inv}; }
    bool operator==(const Letter&) const = default;
};

// s(l) and t(l): a direct letter runs s(a) -> t(a), an inverse letter the other way.
inline int letter_source(const Quiver& q, Letter l) { return l.inv ? q.arrow(l.arrow).tgt : q.arrow(l.arrow).src; }
inline int letter_target(const Quiver& q, Letter l) { return l.inv ? q.arrow(l.arrow).src : q.arrow(l.arrow).tgt; }

// w = l1...ln with s(l_i) = t(l_{i+1}); base is t(l1) (or the vertex of a trivial word).
struct Word {
    std::vector<Letter> letters;
    int base = 0;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    bool operator==(const Word&) const = default;
};

inline int word_start(const Quiver& q, const Word& w) { return w.empty() ? w.base : letter_target(q, w.letters.front()); }
inline int word_end(const Quiver& q, const Word& w) { return w.empty() ? w.base : letter_source(q, w.letters.back()); }

// Vertex at position i (0..n).
inline int word_vertex(const Quiver& q, const Word& w, std::size_t i) {
    return i == 0 ? word_start(q, w) : letter_source(q, w.letters[i - 1]);
}

inline Word inverse(const Quiver& q, const Word& w) {
    Word r;
    r.base = word_end(q, w);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(it->inverse());
    return r;
}

inline bool is_direct(const Word& w) {
    return std::all_of(w.letters.begin(), w.letters.end(), [](Letter l) { return !l.inv; });
}
inline bool is_inverse(const Word& w) {
    return std::all_of(w.letters.begin(), w.letters.end(), [](Letter l) { return l.inv; });
}
inline bool is_serial(const Word& w) { return is_direct(w) || is_inverse(w); }

struct InvalidWord : InputError {
    enum Kind { Endpoint, W1, W2, UnknownArrow } kind;
    std::size_t index;
    InvalidWord(Kind k, std::size_t i, const std::string& msg) : InputError(msg), kind(k), index(i) {}
};

namespace detail {

// Traversal path of letters [i, j] of a serial stretch.
inline Path traversal(const std::vector<Letter>& ls, std::size_t i, std::size_t j) {
    Path p;
    if (ls[i].inv)
        for (std::size_t k = i; k <= j; ++k) p.push_back(ls[k].arrow);
    else
        for (std::size_t k = j + 1; k-- > i;) p.push_back(ls[k].arrow);
    return p;
}

} // namespace detail

// Index of the first letter at which W1/W2/endpoints fail, checking only windows ending there.
// Checks letter k against letters < k.
inline std::optional<InvalidWord::Kind> letter_violation(const MonomialAlgebra& alg, const std::vector<Letter>& ls,
                                                         std::size_t k) {
    const auto& q = alg.quiver();
    if (k == 0) return std::nullopt;
    if (letter_source(q, ls[k - 1]) != letter_target(q, ls[k])) return InvalidWord::Endpoint;
    if (ls[k - 1].inverse() == ls[k]) return InvalidWord::W1;
    std::size_t maxlen = static_cast<std::size_t>(alg.max_relation_length());
    if (maxlen < 2) return std::nullopt;
    std::size_t i = k;
    while (i > 0 && ls[i - 1].inv == ls[k].inv && k - (i - 1) + 1 <= maxlen) --i;
    for (std::size_t s = i; s < k; ++s) {
        Path p = detail::traversal(ls, s, k);
        if (alg.is_relation(p)) return InvalidWord::W2;
    }
    return std::nullopt;
}

inline std::optional<std::pair<InvalidWord::Kind, std::size_t>> word_violation(const MonomialAlgebra& alg,
                                                                             const std::vector<Letter>& ls) {
    for (std::size_t k = 0; k < ls.size(); ++k) {
        if (ls[k].arrow < 0 || ls[k].arrow >= alg.quiver().num_arrows()) return std::pair{InvalidWord::UnknownArrow, k};
        if (auto v = letter_violation(alg, ls, k)) return std::pair{*v, k};
    }
    return std::nullopt;
}

inline bool is_valid_word(const MonomialAlgebra& alg, const std::vector<Letter>& ls) {
    return !word_violation(alg, ls).has_value();
}

inline Word validate_word(const MonomialAlgebra& alg, const std::vector<Letter>& ls, int base = 0) {
    if (auto v = word_violation(alg, ls)) {
        static const char* names[] = {"endpoint mismatch", "W1 violation", "W2 violation", "unknown arrow"};
        throw InvalidWord(v->first, v->second,
                          std::string(names[v->first]) + " at letter " + std::to_string(v->second + 1));
    }
    Word w;
    w.letters = ls;
    w.base = ls.empty() ? base : letter_target(alg.quiver(), ls.front());
    return w;
}

// Literal: "alpha beta ~gamma ~beta", trivial "@v".
inline Word parse_word(const MonomialAlgebra& alg, const std::string& text) {
    const auto& q = alg.quiver();
    std::istringstream in(text);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.size() == 1 && tok[0].size() > 1 && tok[0][0] == '@') {
        Word w;
        w.base = q.vertex(tok[0].substr(1));
        return w;
    }
    if (tok.empty()) throw InputError("empty word literal");
    std::vector<Letter> ls;
    for (const auto& t : tok) {
        bool inv = !t.empty() && t[0] == '~';
        std::string name = inv ? t.substr(1) : t;
        if (!q.has_arrow(name)) throw InputError("unknown arrow " + name + " in word literal");
        ls.push_back({q.arrow_index(name), inv});
    }
    return validate_word(alg, ls);
}

inline std::string format_word(const Quiver& q, const Word& w) {
    if (w.empty()) return "@" + q.vertex_name(w.base);
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        if (w.letters[i].inv) s += '~';
        s += q.arrow(w.letters[i].arrow).name;
    }
    return s;
}

inline Word concat(const Quiver& q, const Word& a, const Word& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    r.base = word_start(q, a);
    return r;
}

inline Word power(const Quiver& q, const Word& w, int k) {
    Word r;
    r.base = word_start(q, w);
    for (int i = 0; i < k; ++i) r = concat(q, r, w);
    return r;
}

inline Word subword(const Quiver& q, const Word& w, std::size_t from, std::size_t len) {
    Word r;
    r.letters.assign(w.letters.begin() + from, w.letters.begin() + from + len);
    r.base = word_vertex(q, w, from);
    return r;
}

inline bool is_attracting(const Quiver& q, const Word& v, const Word& w) {
    if (v.empty() || w.empty()) throw PreconditionError("is_attracting: empty operand");
    Letter a = v.letters.back(), b = w.letters.front().inverse();
    return letter_source(q, a) == letter_target(q, w.letters.front()) && a.inv == b.inv && !(a == b);
}

inline bool has_both_directions(const Word& w) { return !w.empty() && !is_serial(w); }

inline bool is_cyclic(const MonomialAlgebra& alg, const Word& w) {
    if (!has_both_directions(w)) return false;
    const auto& q = alg.quiver();
    if (word_start(q, w) != word_end(q, w)) return false;
    return is_valid_word(alg, power(q, w, 2).letters);
}

inline std::size_t primitive_period(const Word& w) {
    std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w.letters[i] == w.letters[i - d];
        if (ok) return d;
    }
    return n;
}

inline bool is_primitive(const MonomialAlgebra& alg, const Word& w) {
    return is_cyclic(alg, w) && primitive_period(w) == w.size();
}

// Letter order: arrow name, then direct before inverse.
class LetterOrder {
public:
    explicit LetterOrder(const Quiver& q) : rank_(q.num_arrows()) {
        std::vector<int> idx(q.num_arrows());
        for (int i = 0; i < q.num_arrows(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return q.arrow(a).name < q.arrow(b).name; });
        for (int i = 0; i < q.num_arrows(); ++i) rank_[idx[i]] = i;
    }
    int key(Letter l) const { return 2 * rank_[l.arrow] + (l.inv ? 1 : 0); }
    bool less(const std::vector<Letter>& a, const std::vector<Letter>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [&](Letter x, Letter y) { return key(x) < key(y); });
    }

private:
    std::vector<int> rank_;
};

inline Word rotate(const Quiver& q, const Word& w, std::size_t k) {
    Word r;
    r.letters = w.letters;
    std::rotate(r.letters.begin(), r.letters.begin() + (k % std::max<std::size_t>(1, w.size())), r.letters.end());
    r.base = r.empty() ? w.base : letter_target(q, r.letters.front());
    return r;
}

inline Word canonical_cyclic(const Quiver& q, const Word& w) {
    LetterOrder ord(q);
    Word best = w;
    bool first = true;
    for (const Word& base : {w, inverse(q, w)})
        for (std::size_t k = 0; k < std::max<std::size_t>(1, w.size()); ++k) {
            Word r = rotate(q, base, k);
            if (first || ord.less(r.letters, best.letters)) {
                best = r;
                first = false;
            }
        }
    return best;
}

// Representative of {w, w^-1}.
inline Word canonical_string(const Quiver& q, const Word& w) {
    if (w.empty()) return w;
    Word inv = inverse(q, w);
    return LetterOrder(q).less(inv.letters, w.letters) ? inv : w;
}

// Candidate letters l with t(l) = v.
inline std::vector<Letter> letters_ending_at(const Quiver& q, int v) {
    std::vector<Letter> r;
    for (int a : q.arrows_into(v)) r.push_back({a, false});
    for (int a : q.arrows_out(v)) r.push_back({a, true});
    return r;
}

// Enumerates all valid words of length <= L by right extension; callback returns false to stop.
inline void for_each_word(const MonomialAlgebra& alg, std::size_t L, const std::function<bool(const Word&)>& f) {
    const auto& q = alg.quiver();
    bool stop = false;
    Word cur;
    std::function<void()> rec = [&]() {
        if (stop) return;
        if (!f(cur)) { stop = true; return; }
        if (cur.size() == L) return;
        for (Letter l : letters_ending_at(q, word_end(q, cur))) {
            cur.letters.push_back(l);
            if (!letter_violation(alg, cur.letters, cur.letters.size() - 1)) rec();
            cur.letters.pop_back();
            if (stop) return;
        }
    };
    for (int v = 0; v < q.num_vertices() && !stop; ++v) {
        cur = Word{{}, v};
        rec();
    }
}

// One representative per {w, w^-1}, trivial words included.
inline std::vector<Word> enumerate_strings(const MonomialAlgebra& alg, std::size_t L) {
    const auto& q = alg.quiver();
    LetterOrder ord(q);
    std::vector<Word> out;
    for_each_word(alg, L, [&](const Word& w) {
        if (w.empty() || !ord.less(inverse(q, w).letters, w.letters)) out.push_back(w);
        return true;
    });
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        if (a.empty()) return a.base < b.base;
        return ord.less(a.letters, b.letters);
    });
    return out;
}

// Primitive cyclic words of length <= L, canonical forms, sorted.
inline std::vector<Word> enumerate_bands(const MonomialAlgebra& alg, std::size_t L) {
    const auto& q = alg.quiver();
    LetterOrder ord(q);
    std::vector<Word> out;
    for (int a = 0; a < q.num_arrows(); ++a)
        for (bool inv : {false, true}) {
            Letter first{a, inv};
            int fk = ord.key(first);
            Word cur{{first}, letter_target(q, first)};
            std::function<void()> rec = [&]() {
                if (cur.size() >= 2 && word_end(q, cur) == word_start(q, cur) && is_primitive(alg, cur) &&
                    canonical_cyclic(q, cur) == cur)
                    out.push_back(cur);
                if (cur.size() == L) return;
                for (Letter l : letters_ending_at(q, word_end(q, cur))) {
                    if (ord.key(l) < fk || ord.key(l.inverse()) < fk) continue;
                    cur.letters.push_back(l);
                    if (!letter_violation(alg, cur.letters, cur.letters.size() - 1)) rec();
                    cur.letters.pop_back();
                }
            };
            rec();
        }
    std::sort(out.begin(), out.end(), [&](const Word& x, const Word& y) {
        return x.size() != y.size() ? x.size() < y.size() : ord.less(x.letters, y.letters);
    });
    return out;
}

// Band search restricted to words using each letter at most once; returns the first band found of least length.
inline std::optional<Word> find_minimal_band(const MonomialAlgebra& alg, std::size_t L) {
    const auto& q = alg.quiver();
    LetterOrder ord(q);
    std::optional<Word> best;
    for (std::size_t len = 2; len <= L && !best; ++len) {
        for (int a = 0; a < q.num_arrows() && !best; ++a)
            for (bool inv : {false, true}) {
                if (best) break;
                Letter first{a, inv};
                int fk = ord.key(first);
                std::vector<bool> used(2 * q.num_arrows(), false);
                used[2 * a + inv] = true;
                Word cur{{first}, letter_target(q, first)};
                std::function<bool()> rec = [&]() -> bool {
                    if (cur.size() == len) {
                        if (word_end(q, cur) == word_start(q, cur) && is_primitive(alg, cur)) {
                            best = canonical_cyclic(q, cur);
                            return true;
                        }
                        return false;
                    }
                    for (Letter l : letters_ending_at(q, word_end(q, cur))) {
                        if (ord.key(l) < fk || ord.key(l.inverse()) < fk) continue;
                        if (used[2 * l.arrow + l.inv]) continue;
                        cur.letters.push_back(l);
                        used[2 * l.arrow + l.inv] = true;
                        bool ok = !letter_violation(alg, cur.letters, cur.letters.size() - 1) && rec();
                        used[2 * l.arrow + l.inv] = false;
                        cur.letters.pop_back();
                        if (ok) return true;
                    }
                    return false;
                };
                rec();
            }
    }
    return best;
}

// Band existence via closed walks in the automaton whose states are the last k-1 letters
// (k = longest relation, at least 2): a band exists iff some strongly connected component
// carries both a direct and an inverse letter.
inline bool has_band_automaton(const MonomialAlgebra& alg) {
    const auto& q = alg.quiver();
    std::size_t k = std::max(2, alg.max_relation_length());
    std::size_t mem = k - 1;
    // States: valid words of length exactly mem (shorter prefixes are irrelevant for cycles).
    std::vector<std::vector<Letter>> states;
    std::map<std::vector<std::pair<int, bool>>, int> index;
    auto key = [](const std::vector<Letter>& ls) {
        std::vector<std::pair<int, bool>> r;
        for (auto l : ls) r.push_back({l.arrow, l.inv});
        return r;
    };
    for_each_word(alg, mem, [&](const Word& w) {
        if (w.size() == mem) {
            index[key(w.letters)] = static_cast<int>(states.size());
            states.push_back(w.letters);
        }
        return true;
    });
    int n = static_cast<int>(states.size());
    std::vector<std::vector<std::pair<int, bool>>> adj(n); // (target, letter is inverse)
    for (int s = 0; s < n; ++s) {
        const auto& ls = states[s];
        for (Letter l : letters_ending_at(q, letter_source(q, ls.back()))) {
            std::vector<Letter> ext = ls;
            ext.push_back(l);
            if (letter_violation(alg, ext, ext.size() - 1)) continue;
            std::vector<Letter> nxt(ext.begin() + 1, ext.end());
            auto it = index.find(key(nxt));
            if (it != index.end()) adj[s].push_back({it->second, l.inv});
        }
    }
    // Tarjan
    std::vector<int> idx(n, -1), low(n), comp(n, -1), stack;
    std::vector<bool> on(n, false);
    int counter = 0, ncomp = 0;
    std::function<void(int)> dfs = [&](int v) {
        idx[v] = low[v] = counter++;
        stack.push_back(v);
        on[v] = true;
        for (auto [w, _] : adj[v]) {
            if (idx[w] < 0) { dfs(w); low[v] = std::min(low[v], low[w]); }
            else if (on[w]) low[v] = std::min(low[v], idx[w]);
        }
        if (low[v] == idx[v]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on[w] = false;
                comp[w] = ncomp;
                if (w == v) break;
            }
            ++ncomp;
        }
    };
    for (int v = 0; v < n; ++v)
        if (idx[v] < 0) dfs(v);
    std::vector<int> dir(ncomp, 0);
    for (int v = 0; v < n; ++v)
        for (auto [w, inv] : adj[v])
            if (comp[v] == comp[w]) dir[comp[v]] |= inv ? 2 : 1;
    return std::any_of(dir.begin(), dir.end(), [](int d) { return d == 3; });
}

// Bi-infinite word with periodic tails: ...L L middle R R...
struct ZWord {
    Word left_period;
    Word middle;
    Word right_period;
};

// Finite window: left^k middle right^k.
inline Word zword_window(const Quiver& q, const ZWord& z, int k) {
    return concat(q, concat(q, power(q, z.left_period, k), z.middle), power(q, z.right_period, k));
}

} // namespace sbalg
