#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "constructions.hpp"
#include "quiver.hpp"
#include "word.hpp"

namespace sbalg {

inline std::size_t band_length_bound(const MonomialAlgebra& alg) {
    return 2 * static_cast<std::size_t>(alg.quiver().num_arrows());
}

inline void require_special_biserial(const MonomialAlgebra& alg) {
    auto v = is_special_biserial(alg);
    if (!v.ok)
        throw PreconditionError("not special biserial: " + v.violations.front().tag + " at " +
                                v.violations.front().where);
}

// Infinite dimensional algebras count as representation-infinite (k[x]/x^n for all n).
inline bool is_representation_infinite(const MonomialAlgebra& alg) {
    require_special_biserial(alg);
    if (!is_finite_dimensional(alg)) return true;
    return find_minimal_band(alg, band_length_bound(alg)).has_value();
}

// Proper monomial quotients: kill a maximal nonzero path (an arrow if it has length 1) or an isolated vertex.
inline std::vector<MonomialAlgebra> elementary_quotients(const MonomialAlgebra& alg) {
    auto m = maximal_nonzero_paths(alg);
    std::vector<MonomialAlgebra> out;
    for (const auto& p : m.paths) out.push_back(add_relation(alg, p));
    for (int v : m.isolated) out.push_back(remove_vertex(alg, v));
    return out;
}

inline bool minimality_oracle(const MonomialAlgebra& alg) {
    require_special_biserial(alg);
    if (!is_finite_dimensional(alg)) throw PreconditionError("algebra is infinite dimensional");
    if (!is_representation_infinite(alg)) throw PreconditionError("algebra is representation-finite");
    for (const auto& quo : elementary_quotients(alg))
        if (is_representation_infinite(quo)) return false;
    return true;
}

inline bool four_vertices_are_nodes(const MonomialAlgebra& alg) {
    for (int v = 0; v < alg.quiver().num_vertices(); ++v)
        if (vertex_degree(alg, v) == 4 && !is_node(alg, v)) return false;
    return true;
}

enum class Tag { CycleAlgebra, BarbellNonSerialBar, WindWheel, NotMinimalRepInfinite, RepFinite };

inline std::string tag_name(Tag t) {
    switch (t) {
    case Tag::CycleAlgebra: return "CycleAlgebra";
    case Tag::BarbellNonSerialBar: return "BarbellNonSerialBar";
    case Tag::WindWheel: return "WindWheel";
    case Tag::NotMinimalRepInfinite: return "NotMinimalRepInfinite";
    case Tag::RepFinite: return "RepFinite";
    }
    return "?";
}

struct Classification {
    Tag tag = Tag::RepFinite;
    std::string reason;                 // for NotMinimalRepInfinite
    MonomialAlgebra resolved;           // after node resolution
    std::optional<Word> band;           // minimal band of `resolved`
    std::optional<OrientationSequence> eps;                   // CycleAlgebra
    std::optional<std::array<OrientationSequence, 3>> barbell; // (eps, eta, eps')
    std::optional<std::string> wind_wheel_word;               // literal over the arrows of `resolved`

    bool positive() const {
        return tag == Tag::CycleAlgebra || tag == Tag::BarbellNonSerialBar || tag == Tag::WindWheel;
    }
};

namespace detail {

inline Classification not_mri(Classification c, std::string why) {
    c.tag = Tag::NotMinimalRepInfinite;
    c.reason = std::move(why);
    return c;
}

// Barbell parameters read off a rotation u1 v u2 v^-1 of the band. Either loop may be
// traversed in both directions, and the two ends of the bar may be swapped.
inline std::optional<std::array<OrientationSequence, 3>> barbell_parameters(const Quiver& q, const Word& u1,
                                                                          const Word& v, const Word& u2) {
    auto ok = [](const OrientationSequence& e) { return e.signs.front() > 0 && e.signs.back() > 0; };
    auto pick = [&](const Word& u) { return ok(orientation_of(u)) ? u : inverse(q, u); };
    for (const auto& [a, bar, b] : {std::tuple{u1, v, u2}, std::tuple{u2, inverse(q, v), u1}}) {
        Word x = pick(a), y = pick(b);
        auto e = orientation_of(x), e2 = orientation_of(y);
        if (ok(e) && ok(e2)) return std::array<OrientationSequence, 3>{e, orientation_of(bar), e2};
    }
    return std::nullopt;
}

} // namespace detail

inline Classification classify(const MonomialAlgebra& alg) {
    Classification c;
    c.resolved = alg;
    auto sb = is_special_biserial(alg);
    if (!sb.ok) return detail::not_mri(c, "not special biserial");
    const MonomialAlgebra R = resolve_nodes(alg);
    c.resolved = R;
    const auto& q = R.quiver();
    if (!is_finite_dimensional(R)) return detail::not_mri(c, "infinite dimensional");
    c.band = find_minimal_band(R, band_length_bound(R));
    if (!c.band) {
        c.tag = Tag::RepFinite;
        return c;
    }
    const Word& w = *c.band;
    if (!q.connected()) return detail::not_mri(c, "disconnected after node resolution");

    bool all_two = true;
    for (int v = 0; v < q.num_vertices(); ++v) all_two &= vertex_degree(R, v) == 2;
    if (all_two) {
        auto eps = orientation_of(w);
        if (w.size() != static_cast<std::size_t>(q.num_arrows()) || !are_isomorphic(R, cycle_algebra(eps)))
            return detail::not_mri(c, "cycle quiver with relations");
        c.tag = Tag::CycleAlgebra;
        c.eps = eps;
        return c;
    }

    std::vector<int> count(q.num_arrows(), 0);
    for (auto l : w.letters) ++count[l.arrow];
    for (int a = 0; a < q.num_arrows(); ++a)
        if (count[a] == 0) return detail::not_mri(c, "arrow " + q.arrow(a).name + " is not used by the band " + format_word(q, w));
    if (std::none_of(count.begin(), count.end(), [](int x) { return x == 2; }))
        return detail::not_mri(c, "band " + format_word(q, w) + " passes a vertex of degree 4 that is not a node");

    // wind wheel
    std::string literal = format_word(q, w);
    try {
        auto d = wind_wheel(literal);
        if (are_isomorphic(d.algebra, R)) {
            c.tag = Tag::WindWheel;
            c.wind_wheel_word = literal;
            return c;
        }
    } catch (const WindWheelError&) {
    }

    // barbell: w = u1 v u2 v^-1 with a single bar
    std::size_t n = w.size();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (count[w.letters[i].arrow] == 1 && count[w.letters[(i + n - 1) % n].arrow] == 2) start = i;
    Word r = rotate(q, w, start);
    std::vector<std::pair<std::size_t, std::size_t>> runs; // [begin, end) of each maximal once/twice run
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && count[r.letters[j].arrow] == count[r.letters[i].arrow]) ++j;
        runs.push_back({i, j});
        i = j;
    }
    if (runs.size() == 4) {
        auto piece = [&](int k) { return subword(q, r, runs[k].first, runs[k].second - runs[k].first); };
        Word u1 = piece(0), v = piece(1), u2 = piece(2), v2 = piece(3);
        if (inverse(q, v) == v2) {
            if (is_serial(v)) return detail::not_mri(c, "barbell with serial bar " + format_word(q, v));
            if (auto params = detail::barbell_parameters(q, u1, v, u2)) {
                auto b = barbell((*params)[0], (*params)[1], (*params)[2]);
                if (are_isomorphic(b.algebra, R)) {
                    c.tag = Tag::BarbellNonSerialBar;
                    c.barbell = params;
                    return c;
                }
            }
        }
    }
    return detail::not_mri(c, "minimal band " + literal + " is neither a wind wheel nor a barbell band");
}

// Cyclic words starting with the direct letter alpha and ending with an inverse letter.
struct GrowthWitness {
    int arrow = -1;
    Word first, second;
};

inline std::optional<GrowthWitness> growth_witness(const MonomialAlgebra& alg, std::size_t L) {
    require_special_biserial(alg);
    const auto& q = alg.quiver();
    for (int a = 0; a < q.num_arrows(); ++a) {
        std::optional<Word> root;
        std::optional<GrowthWitness> found;
        Word cur{{Letter{a, false}}, q.arrow(a).tgt};
        std::function<void()> rec = [&]() {
            if (found) return;
            if (cur.letters.back().inv && is_cyclic(alg, cur)) {
                Word pr = subword(q, cur, 0, primitive_period(cur));
                if (!root) root = pr;
                else if (!(pr == *root)) {
                    found = GrowthWitness{a, *root, cur};
                    return;
                }
            }
            if (cur.size() == L) return;
            for (Letter l : letters_ending_at(q, word_end(q, cur))) {
                cur.letters.push_back(l);
                if (!letter_violation(alg, cur.letters, cur.letters.size() - 1)) rec();
                cur.letters.pop_back();
                if (found) return;
            }
        };
        rec();
        if (found) return found;
    }
    return std::nullopt;
}

inline std::size_t default_growth_bound(const MonomialAlgebra& alg) {
    return 4 * static_cast<std::size_t>(alg.quiver().num_arrows());
}

} // namespace sbalg
