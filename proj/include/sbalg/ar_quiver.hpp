#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <tuple>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quiver.hpp"
#include "word.hpp"

namespace sbalg {

enum class Side { Left, Right };

// A string with, for trivial words, the choice of which arrow ends count as its right side.
struct SWord {
    Word word;
    bool flip = false;
    bool operator==(const SWord&) const = default;
};

// Arrow ends at a vertex: (arrow, incoming?). Each end gets a side so that the two incoming
// ends differ, the two outgoing ends differ, and the ends of a nonzero composite differ.
class SideAssignment {
public:
    explicit SideAssignment(const MonomialAlgebra& alg) {
        const auto& q = alg.quiver();
        int m = q.num_arrows();
        in_side_.assign(m, -1);
        out_side_.assign(m, -1);
        for (int x = 0; x < q.num_vertices(); ++x) {
            auto in = q.arrows_into(x), out = q.arrows_out(x);
            // nodes of the constraint graph: 0..|in|-1 incoming, then outgoing
            std::size_t ni = in.size(), n = ni + out.size();
            std::vector<std::vector<int>> adj(n);
            auto link = [&](std::size_t a, std::size_t b) {
                adj[a].push_back(static_cast<int>(b));
                adj[b].push_back(static_cast<int>(a));
            };
            if (in.size() == 2) link(0, 1);
            if (out.size() == 2) link(ni, ni + 1);
            for (std::size_t i = 0; i < in.size(); ++i)
                for (std::size_t j = 0; j < out.size(); ++j)
                    if (!alg.is_relation({in[i], out[j]})) link(i, ni + j);
            std::vector<int> color(n, -1);
            for (std::size_t s = 0; s < n; ++s) {
                if (color[s] >= 0) continue;
                color[s] = 0;
                std::vector<int> stack{static_cast<int>(s)};
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int v : adj[u]) {
                        if (color[v] < 0) {
                            color[v] = 1 - color[u];
                            stack.push_back(v);
                        } else if (color[v] == color[u]) {
                            throw PreconditionError("no side assignment at vertex " + q.vertex_name(x) +
                                                    " (not special biserial)");
                        }
                    }
                }
            }
            for (std::size_t i = 0; i < in.size(); ++i) in_side_[in[i]] = color[i];
            for (std::size_t j = 0; j < out.size(); ++j) out_side_[out[j]] = color[ni + j];
        }
    }

    // Side of the arrow end used by letter l attached at vertex x: right-appended if t(l) = x,
    // left-prepended if s(l) = x.
    Side right_side(bool flip) const { return flip ? Side::Left : Side::Right; }
    Side side_of_end(int arrow, bool incoming, bool flip) const {
        int c = incoming ? in_side_[arrow] : out_side_[arrow];
        bool right = (c == 1) != flip;
        return right ? Side::Right : Side::Left;
    }

private:
    std::vector<int> in_side_, out_side_;
};

class StringCalculus {
public:
    explicit StringCalculus(const MonomialAlgebra& alg) : alg_(alg), q_(alg.quiver()), sides_(alg) {}

    const MonomialAlgebra& algebra() const { return alg_; }

    // Letters l with w l a valid word.
    std::vector<Letter> right_candidates(const SWord& s) const {
        const Word& w = s.word;
        std::vector<Letter> out;
        int x = word_end(q_, w);
        for (Letter l : letters_ending_at(q_, x)) {
            if (w.empty()) {
                // direct letter uses an incoming end at x, inverse letter an outgoing end
                if (sides_.side_of_end(l.arrow, !l.inv, s.flip) != Side::Right) continue;
                out.push_back(l);
                continue;
            }
            std::vector<Letter> ls = w.letters;
            ls.push_back(l);
            if (!letter_violation(alg_, ls, ls.size() - 1)) out.push_back(l);
        }
        return out;
    }

    // Letters l with l w a valid word.
    std::vector<Letter> left_candidates(const SWord& s) const {
        const Word& w = s.word;
        std::vector<Letter> out;
        int x = word_start(q_, w);
        std::vector<Letter> cands;
        for (int a : q_.arrows_out(x)) cands.push_back({a, false});
        for (int a : q_.arrows_into(x)) cands.push_back({a, true});
        for (Letter l : cands) {
            if (w.empty()) {
                // inverse letter uses an incoming end at x, direct letter an outgoing end
                if (sides_.side_of_end(l.arrow, l.inv, s.flip) != Side::Left) continue;
                out.push_back(l);
                continue;
            }
            std::size_t k = std::min(w.size(), static_cast<std::size_t>(std::max(2, alg_.max_relation_length())));
            std::vector<Letter> ls{l};
            ls.insert(ls.end(), w.letters.begin(), w.letters.begin() + k);
            if (is_valid_word(alg_, ls)) out.push_back(l);
        }
        return out;
    }

    std::optional<Letter> right_letter(const SWord& s, bool inv) const {
        for (Letter l : right_candidates(s))
            if (l.inv == inv) return l;
        return std::nullopt;
    }
    std::optional<Letter> left_letter(const SWord& s, bool inv) const {
        for (Letter l : left_candidates(s))
            if (l.inv == inv) return l;
        return std::nullopt;
    }

    SWord append(const SWord& s, Letter l) const {
        Word w = s.word;
        w.letters.push_back(l);
        if (s.word.empty()) w.base = letter_target(q_, l);
        return {w, false};
    }
    SWord prepend(const SWord& s, Letter l) const {
        Word w;
        w.letters.push_back(l);
        w.letters.insert(w.letters.end(), s.word.letters.begin(), s.word.letters.end());
        w.base = letter_target(q_, l);
        return {w, false};
    }

    // Append the letter `first` (direction first_inv), then a maximal run in the other direction.
    std::optional<SWord> add_right(const SWord& s, bool first_inv) const {
        auto l = right_letter(s, first_inv);
        if (!l) return std::nullopt;
        SWord cur = append(s, *l);
        while (auto m = right_letter(cur, !first_inv)) cur = append(cur, *m);
        return cur;
    }
    std::optional<SWord> add_left(const SWord& s, bool first_inv) const {
        auto l = left_letter(s, first_inv);
        if (!l) return std::nullopt;
        SWord cur = prepend(s, *l);
        while (auto m = left_letter(cur, !first_inv)) cur = prepend(cur, *m);
        return cur;
    }

    // w = w' l u with u the maximal suffix of direction !l_inv and l of direction l_inv; returns w'.
    std::optional<SWord> delete_right(const SWord& s, bool l_inv) const {
        const auto& ls = s.word.letters;
        std::size_t k = ls.size();
        while (k > 0 && ls[k - 1].inv != l_inv) --k;
        if (k == 0) return std::nullopt;
        Letter l = ls[k - 1];
        SWord r;
        r.word.letters.assign(ls.begin(), ls.begin() + (k - 1));
        r.word.base = r.word.letters.empty() ? letter_target(q_, l) : s.word.base;
        if (r.word.letters.empty()) {
            // l sat on the right of the trivial word
            r.flip = sides_.side_of_end(l.arrow, !l.inv, false) != Side::Right;
        }
        return r;
    }
    std::optional<SWord> delete_left(const SWord& s, bool l_inv) const {
        const auto& ls = s.word.letters;
        std::size_t k = 0;
        while (k < ls.size() && ls[k].inv != l_inv) ++k;
        if (k == ls.size()) return std::nullopt;
        Letter l = ls[k];
        SWord r;
        r.word.letters.assign(ls.begin() + (k + 1), ls.end());
        if (r.word.letters.empty()) {
            r.word.base = letter_source(q_, l);
            r.flip = sides_.side_of_end(l.arrow, l.inv, false) != Side::Left;
        } else {
            r.word.base = letter_target(q_, r.word.letters.front());
        }
        return r;
    }

    // Hooks: right = direct letter then inverse run; left = inverse letter then direct run.
    std::optional<SWord> add_hook(const SWord& s, Side side) const {
        return side == Side::Right ? add_right(s, false) : add_left(s, true);
    }
    // Cohooks: right = inverse letter then direct run; left = direct letter then inverse run.
    std::optional<SWord> add_cohook(const SWord& s, Side side) const {
        return side == Side::Right ? add_right(s, true) : add_left(s, false);
    }
    std::optional<SWord> delete_cohook(const SWord& s, Side side) const {
        return side == Side::Right ? delete_right(s, true) : delete_left(s, false);
    }
    std::optional<SWord> delete_hook(const SWord& s, Side side) const {
        return side == Side::Right ? delete_right(s, false) : delete_left(s, true);
    }

    bool can_add_hook(const SWord& s, Side side) const {
        return side == Side::Right ? right_letter(s, false).has_value() : left_letter(s, true).has_value();
    }
    bool can_add_cohook(const SWord& s, Side side) const {
        return side == Side::Right ? right_letter(s, true).has_value() : left_letter(s, false).has_value();
    }

    std::optional<SWord> tau_inv(const SWord& s) const {
        bool hr = can_add_hook(s, Side::Right), hl = can_add_hook(s, Side::Left);
        std::optional<SWord> cur = s;
        if (hr) cur = add_hook(*cur, Side::Right);
        if (hl) cur = add_hook(*cur, Side::Left);
        if (!hr) cur = delete_cohook(*cur, Side::Right);
        if (cur && !hl) cur = delete_cohook(*cur, Side::Left);
        return cur;
    }

    std::optional<SWord> tau(const SWord& s) const {
        bool cr = can_add_cohook(s, Side::Right), cl = can_add_cohook(s, Side::Left);
        std::optional<SWord> cur = s;
        if (cr) cur = add_cohook(*cur, Side::Right);
        if (cl) cur = add_cohook(*cur, Side::Left);
        if (!cr) cur = delete_hook(*cur, Side::Right);
        if (cur && !cl) cur = delete_hook(*cur, Side::Left);
        return cur;
    }

    // Irreducible map leaving s on one side: hook addition (mono) or cohook deletion (epi).
    struct Step {
        SWord target;
        bool mono;
    };
    std::optional<Step> out_step(const SWord& s, Side side) const {
        if (can_add_hook(s, side)) return Step{*add_hook(s, side), true};
        if (auto r = delete_cohook(s, side)) return Step{*r, false};
        return std::nullopt;
    }
    // Irreducible map into s on one side: from a cohook addition (epi) or a hook deletion (mono).
    std::optional<Step> in_step(const SWord& s, Side side) const {
        if (can_add_cohook(s, side)) return Step{*add_cohook(s, side), false};
        if (auto r = delete_hook(s, side)) return Step{*r, true};
        return std::nullopt;
    }

private:
    const MonomialAlgebra& alg_;
    const Quiver& q_;
    SideAssignment sides_;
};

inline std::optional<Word> tau_inv_string(const MonomialAlgebra& alg, const Word& w) {
    validate_word(alg, w.letters, w.base);
    StringCalculus sc(alg);
    auto r = sc.tau_inv({w, false});
    if (!r) return std::nullopt;
    return r->word;
}

inline std::optional<Word> tau_string(const MonomialAlgebra& alg, const Word& w) {
    validate_word(alg, w.letters, w.base);
    StringCalculus sc(alg);
    auto r = sc.tau({w, false});
    if (!r) return std::nullopt;
    return r->word;
}

struct MiddleTerm {
    Word word;
    bool mono; // kind of the component map M(w) -> middle term
};

// Middle terms of the almost split sequence starting at M(w).
inline std::vector<MiddleTerm> ar_middle_terms(const MonomialAlgebra& alg, const Word& w) {
    validate_word(alg, w.letters, w.base);
    StringCalculus sc(alg);
    SWord s{w, false};
    if (!sc.tau_inv(s)) throw PreconditionError("M(w) is injective");
    std::vector<MiddleTerm> out;
    for (Side side : {Side::Left, Side::Right})
        if (auto st = sc.out_step(s, side)) out.push_back({st->target.word, st->mono});
    return out;
}

// Identity of a string module: the word up to inversion.
inline std::string string_key(const Quiver& q, const Word& w) {
    if (w.empty()) return "@" + q.vertex_name(w.base);
    return format_word(q, canonical_string(q, w));
}

enum class ArrowKind { Mono, Epi };

struct PatchArrow {
    std::string source, target;
    ArrowKind kind;
    bool operator<(const PatchArrow& o) const {
        return std::tie(source, target, kind) < std::tie(o.source, o.target, o.kind);
    }
    bool operator==(const PatchArrow&) const = default;
};

struct ARPatch {
    std::map<std::string, SWord> nodes;
    std::map<std::string, int> distance;
    std::set<PatchArrow> arrows;
    std::set<std::pair<std::string, std::string>> tau_pairs; // (tau X, X)
    std::vector<std::string> markers;                        // non-string neighbours (never for monomial algebras)
    std::string seed;
    int radius = 0;
    Quiver quiver;

    bool interior(const std::string& k) const { return distance.at(k) < radius; }
};

// Breadth-first expansion over irreducible maps and the translation, up to `radius` steps.
inline ARPatch generate_patch(const MonomialAlgebra& alg, const Word& seed, int radius) {
    validate_word(alg, seed.letters, seed.base);
    const auto& q = alg.quiver();
    StringCalculus sc(alg);
    ARPatch p;
    p.quiver = q;
    p.radius = radius;
    SWord s0{seed, false};
    p.seed = string_key(q, seed);
    p.nodes[p.seed] = s0;
    p.distance[p.seed] = 0;
    std::deque<std::string> queue{p.seed};
    auto visit = [&](const SWord& x, int d) {
        std::string k = string_key(q, x.word);
        if (!p.nodes.count(k)) {
            p.nodes[k] = x;
            p.distance[k] = d;
            queue.push_back(k);
        }
        return k;
    };
    while (!queue.empty()) {
        std::string k = queue.front();
        queue.pop_front();
        int d = p.distance[k];
        if (d >= radius) continue;
        SWord x = p.nodes[k];
        for (Side side : {Side::Left, Side::Right}) {
            if (auto st = sc.out_step(x, side)) visit(st->target, d + 1);
            if (auto st = sc.in_step(x, side)) visit(st->target, d + 1);
        }
        if (auto t = sc.tau_inv(x)) visit(*t, d + 1);
        if (auto t = sc.tau(x)) visit(*t, d + 1);
    }
    // arrows and translations among the collected nodes
    for (const auto& [k, x] : p.nodes) {
        for (Side side : {Side::Left, Side::Right}) {
            if (auto st = sc.out_step(x, side)) {
                std::string t = string_key(q, st->target.word);
                if (p.nodes.count(t)) p.arrows.insert({k, t, st->mono ? ArrowKind::Mono : ArrowKind::Epi});
            }
            if (auto st = sc.in_step(x, side)) {
                std::string s = string_key(q, st->target.word);
                if (p.nodes.count(s)) p.arrows.insert({s, k, st->mono ? ArrowKind::Mono : ArrowKind::Epi});
            }
        }
        if (auto t = sc.tau_inv(x)) {
            std::string tk = string_key(q, t->word);
            if (p.nodes.count(tk)) p.tau_pairs.insert({k, tk});
        }
        if (auto t = sc.tau(x)) {
            std::string tk = string_key(q, t->word);
            if (p.nodes.count(tk)) p.tau_pairs.insert({tk, k});
        }
    }
    return p;
}

enum class SectionalKind { MonoRay, EpiCoray, Concatenation, Violation };

struct SectionalPath {
    std::vector<std::string> vertices;
    std::vector<ArrowKind> kinds;
    SectionalKind kind;
    std::string valley; // for Concatenation
    bool truncated = false;
};

struct SectionalReport {
    std::vector<SectionalPath> paths;
    std::vector<SectionalPath> violations; // non-truncated paths with a mono arrow followed by an epi arrow
    std::size_t truncated_violations = 0;
};

inline SectionalKind classify_kinds(const std::vector<ArrowKind>& ks, std::size_t& valley) {
    // epis, then monos
    std::size_t i = 0;
    while (i < ks.size() && ks[i] == ArrowKind::Epi) ++i;
    std::size_t j = i;
    while (j < ks.size() && ks[j] == ArrowKind::Mono) ++j;
    if (j != ks.size()) return SectionalKind::Violation;
    valley = i;
    if (i == 0) return SectionalKind::MonoRay;
    if (i == ks.size()) return SectionalKind::EpiCoray;
    return SectionalKind::Concatenation;
}

// Maximal sectional paths inside the patch. A path touching a node at the window border is truncated.
inline SectionalReport classify_sectional_paths(const ARPatch& p) {
    std::map<std::string, std::vector<std::pair<std::string, ArrowKind>>> out, in;
    for (const auto& a : p.arrows) {
        out[a.source].push_back({a.target, a.kind});
        in[a.target].push_back({a.source, a.kind});
    }
    std::map<std::string, std::string> tau_of; // X -> tau X
    for (const auto& [t, x] : p.tau_pairs) tau_of[x] = t;
    auto is_tau = [&](const std::string& x, const std::string& z) {
        auto it = tau_of.find(z);
        return it != tau_of.end() && it->second == x;
    };
    SectionalReport rep;
    std::vector<std::string> path;
    std::vector<ArrowKind> kinds;
    std::function<void()> extend = [&]() {
        const std::string& last = path.back();
        bool extended = false;
        for (const auto& [nx, kind] : out[last]) {
            if (path.size() >= 2 && is_tau(path[path.size() - 2], nx)) continue;
            if (std::find(path.begin(), path.end(), nx) != path.end() && path.size() > 4 * p.nodes.size()) continue;
            if (path.size() > p.nodes.size() + 1) break; // cycles in tubes: stop at a full turn
            extended = true;
            path.push_back(nx);
            kinds.push_back(kind);
            extend();
            path.pop_back();
            kinds.pop_back();
        }
        if (!extended && !kinds.empty()) {
            SectionalPath sp;
            sp.vertices = path;
            sp.kinds = kinds;
            std::size_t valley = 0;
            sp.kind = classify_kinds(kinds, valley);
            if (sp.kind == SectionalKind::Concatenation) sp.valley = path[valley];
            sp.truncated = false;
            for (const auto& v : path) sp.truncated |= !p.interior(v);
            if (path.size() > p.nodes.size() + 1) sp.truncated = true;
            if (sp.kind == SectionalKind::Violation) {
                if (sp.truncated) ++rep.truncated_violations;
                else rep.violations.push_back(sp);
            }
            rep.paths.push_back(std::move(sp));
        }
    };
    for (const auto& [k, _] : p.nodes) {
        // start only where no sectional predecessor exists
        for (const auto& [nx, kind] : out[k]) {
            bool pred = false;
            for (const auto& [pv, pk] : in[k])
                if (!is_tau(pv, nx)) pred = true;
            if (pred) continue;
            path = {k};
            kinds.clear();
            path.push_back(nx);
            kinds.push_back(kind);
            extend();
        }
    }
    return rep;
}

// Every mono X -> Y followed by an epi Y -> Z satisfies X = tau Z.
struct ValleyCheck {
    bool ok = true;
    std::vector<std::array<std::string, 3>> failures;
};

inline ValleyCheck check_valley_corollary(const ARPatch& p) {
    std::map<std::string, std::string> tau_of;
    for (const auto& [t, x] : p.tau_pairs) tau_of[x] = t;
    ValleyCheck r;
    for (const auto& a : p.arrows) {
        if (a.kind != ArrowKind::Mono) continue;
        for (const auto& b : p.arrows) {
            if (b.source != a.target || b.kind != ArrowKind::Epi) continue;
            auto it = tau_of.find(b.target);
            if (it == tau_of.end()) {
                if (!p.interior(b.target)) continue; // translate outside the window
                r.ok = false;
                r.failures.push_back({a.source, a.target, b.target});
            } else if (it->second != a.source) {
                r.ok = false;
                r.failures.push_back({a.source, a.target, b.target});
            }
        }
    }
    return r;
}

inline std::string dot_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r;
}

inline std::string export_dot(const ARPatch& p) {
    std::ostringstream o;
    o << "digraph patch {\n";
    for (const auto& [k, _] : p.nodes) o << "  \"" << dot_escape(k) << "\" [label=\"" << dot_escape(k) << "\"];\n";
    for (const auto& a : p.arrows)
        o << "  \"" << dot_escape(a.source) << "\" -> \"" << dot_escape(a.target) << "\" [kind=\""
          << (a.kind == ArrowKind::Mono ? "mono" : "epi") << "\"];\n";
    for (const auto& [t, x] : p.tau_pairs)
        o << "  \"" << dot_escape(x) << "\" -> \"" << dot_escape(t) << "\" [style=dashed, kind=\"tau\"];\n";
    o << "}\n";
    return o.str();
}

} // namespace sbalg
