// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sbalg/ar_quiver.hpp"
#include "sbalg/classify.hpp"
#include "sbalg/constructions.hpp"
#include "sbalg/corpus.hpp"
#include "sbalg/field.hpp"
#include "sbalg/permutation.hpp"
#include "sbalg/representation.hpp"
#include "support.hpp"

using namespace sbalg;
using namespace sbalg::test;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    std::vector<std::string> failures;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (failures.size() < 8) failures.push_back(what);
    }
};

const std::vector<MonomialAlgebra>& corpus() {
    static const std::vector<MonomialAlgebra> c = generate_corpus(CorpusOptions{});
    return c;
}

std::set<std::string> literals(const Quiver& q, const std::vector<Word>& ws) {
    std::set<std::string> s;
    for (const auto& w : ws) s.insert(format_word(q, w));
    return s;
}

const char* ww_two_loops_word = "alpha beta ~gamma ~beta";
const char* ww_two_bars_word = "f ~d ~a g e ~c b a ~h ~e";
const char* ww_crossed_word = "~q ~b1 x b1 ~p ~b2 y b2";
const char* ww_twisted_word = "c ~d ~b1 x b1 ~e f b2 ~y ~b2";
const char* ww_five = "b0 ~x0 ~b0 h1 b1 ~x1 ~b1 h2 b2 ~x2 ~b2 h3 b3 ~x3 ~b3 h4 b4 ~x4 ~b4 h0";

void golden_constructions(Outcome& r) {
    auto d1 = wind_wheel(ww_two_loops_word);
    r.require(are_isomorphic(d1.algebra, golden("ww_two_loops")), "two-loop wheel not isomorphic to golden file");
    r.require(relation_names(d1.algebra) == std::set<std::string>{"alpha alpha", "gamma gamma", "gamma beta alpha"},
              "two-loop wheel relations");
    r.require(d1.t == 1 && d1.sigma.str() == "(1 2)", "two-loop wheel sigma");

    auto d4 = wind_wheel(ww_two_bars_word);
    r.require(are_isomorphic(d4.algebra, golden("ww_two_bars")), "two-bar wheel not isomorphic to golden file");
    r.require(d4.sigma.str() == "(1 3)(2 4)", "two-bar wheel sigma " + d4.sigma.str());
    auto rels = relation_names(d4.algebra);
    r.require(rels == relation_names(golden("ww_two_bars")), "two-bar wheel relations");
    std::size_t short_rels = 0, long_rels = 0;
    for (const auto& p : d4.algebra.relations()) (p.size() == 2 ? short_rels : long_rels) += 1;
    r.require(short_rels == 4 && long_rels == 2, "two-bar wheel relation lengths");

    auto d6 = wind_wheel(ww_twisted_word);
    auto g6 = golden("ww_two_bars_twisted");
    auto iso = find_isomorphism(d6.algebra, g6);
    r.require(iso.has_value(), "twisted wheel not isomorphic to golden file");
    r.require(d6.sigma.str() == "(1 2)(3 4)", "twisted wheel sigma " + d6.sigma.str());
    if (iso) {
        std::set<std::string> bars;
        const auto& q = d6.algebra.quiver();
        const auto& gq = g6.quiver();
        for (const auto& b : d6.bars) {
            if (b.size() != 1) {
                r.require(false, "twisted wheel bar of length " + std::to_string(b.size()));
                continue;
            }
            const auto& a = q.arrow(b.letters[0].arrow);
            bars.insert(gq.vertex_name(iso->vmap[a.src]) + "->" + gq.vertex_name(iso->vmap[a.tgt]));
        }
        r.require(bars == std::set<std::string>{"2->1", "4->3"}, "twisted wheel bars");
    }
    r.note << "3 wind wheels";
}

void classifier_vs_oracle(Outcome& r) {
    std::size_t pos = 0, disagree = 0;
    for (const auto& alg : corpus()) {
        auto c = classify(alg);
        bool oracle = is_finite_dimensional(alg) && is_representation_infinite(alg) && minimality_oracle(alg);
        if (c.positive() != oracle) {
            ++disagree;
            r.require(false, "disagreement (" + tag_name(c.tag) + ")\n" + format_algebra(alg));
        }
        if (c.positive()) {
            ++pos;
            r.require(four_vertices_are_nodes(alg), "degree-4 non-node in a positive\n" + format_algebra(alg));
        }
    }
    r.note << corpus().size() << " algebras, " << pos << " positive, " << disagree << " disagreements";
}

void barbell_minimality(Outcome& r) {
    auto b1 = barbell(OrientationSequence::parse("+"), OrientationSequence::parse("+"), OrientationSequence::parse("+"));
    auto b2 = barbell(OrientationSequence::parse("+"), OrientationSequence::parse("-+"), OrientationSequence::parse("+"));
    r.require(are_isomorphic(b1.algebra, golden("barbell_serial_bar")), "serial-bar barbell shape");
    r.require(are_isomorphic(b2.algebra, golden("barbell_two_loops")), "two-loop barbell shape");
    r.require(is_serial(b1.bar) && !is_serial(b2.bar), "bar seriality");
    r.require(!minimality_oracle(b1.algebra), "serial-bar barbell reported minimal");
    r.require(minimality_oracle(b2.algebra), "two-loop barbell reported not minimal");
    r.require(!classify(b1.algebra).positive() && classify(b2.algebra).tag == Tag::BarbellNonSerialBar, "classifier tags");
}

void unique_band(Outcome& r) {
    for (const char* lit : {ww_two_loops_word, ww_two_bars_word, ww_five}) {
        auto d = wind_wheel(lit);
        const auto& q = d.algebra.quiver();
        auto bands = enumerate_bands(d.algebra, 2 * static_cast<std::size_t>(q.num_arrows()));
        std::set<std::string> want{format_word(q, canonical_cyclic(q, d.word))};
        r.require(literals(q, bands) == want, std::string("bands of ") + lit);
        auto zs = z_words(d);
        r.require(zs.size() == static_cast<std::size_t>(d.t), std::string("z-word count of ") + lit);
        r.note << "t=" << d.t << " ";
    }
}

void endomorphisms(Outcome& r) {
    for (const char* lit : {ww_two_loops_word, ww_two_bars_word}) {
        auto d = wind_wheel(lit);
        for (long lam : {1L, 2L}) {
            auto M = band_module(d.algebra, scalar_band(d.word, Rational(lam)));
            auto e = end_radical(d.algebra, M);
            r.require(e.rad_dim == static_cast<std::size_t>(d.t) && e.nilpotency == 2 && e.semisimple_image_ideal_dim == 0,
                      std::string("end ring of ") + lit + " lambda=" + std::to_string(lam) + ": (" +
                          std::to_string(e.rad_dim) + "," + std::to_string(e.nilpotency) + "," +
                          std::to_string(e.semisimple_image_ideal_dim) + ")");
        }
    }
    r.note << "exact rationals";
}

void ramification(Outcome& r) {
    auto str_set = [](const std::set<Partition>& s) {
        std::set<std::string> o;
        for (const auto& p : s) o.insert(p.str());
        return o;
    };
    auto t0 = std::chrono::steady_clock::now();
    r.require(str_set(possible_ramifications(4)) == std::set<std::string>{"(3,1)", "(1,1,1,1)"}, "t=4 table");
    r.require(str_set(possible_ramifications(5)) == std::set<std::string>{"(5)", "(3,1,1)", "(1,1,1,1,1)"}, "t=5 table");
    for (int t = 1; t <= 6; ++t)
        for (const auto& p : possible_ramifications(t)) r.require(p.sum() == t, "parts do not sum to t=" + std::to_string(t));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.require(secs < 60, "enumeration too slow");

    auto perm = [](const char* s, std::size_t n) { return Permutation::parse(s, n); };
    r.require(commutator_cycle_partition(perm("(1 2 3 4 5)", 5), perm("(1 2 3 5 4)", 5)).str() == "(3,1,1)", "(3,1,1)");
    r.require(commutator_cycle_partition(perm("(1 2 3 4 5)", 5), perm("(1 2 4 5 3)", 5)).str() == "(5)", "(5)");
    r.require(commutator_cycle_partition(perm("(1 2 3 4 5 6)", 6), perm("(1 2 4 6 5 3)", 6)).str() == "(4,2)", "(4,2)");

    auto d6 = wind_wheel("b0 x0 ~b0 ~c0 b2 p ~b3 ~x3 b3 q ~b2 ~c2 b1 x1 ~b1 ~c1");
    auto d5 = wind_wheel(ww_five);
    r.require(d6.t == 4 && ramification_sequence(d6).str() == "(3,1)", "three-ramified wind wheel");
    r.require(d5.t == 5 && ramification_sequence(d5).str() == "(1,1,1,1,1)", "five-bar wind wheel");
    for (const auto* d : {&d5, &d6}) r.require(ramification_sequence(*d).sum() == d->t, "ramification sum");
    r.note << "enumeration t<=6 in " << static_cast<int>(secs * 1000) << " ms";
}

void euler_characteristic(Outcome& r) {
    for (int t = 1; t <= 8; ++t) {
        auto c = quilt_complex(t);
        r.require(c.f == 4 * t && c.e == 12 * t && c.v == 7 * t, "counts at t=" + std::to_string(t));
        r.require(quilt_euler_characteristic(t) == -t, "chi at t=" + std::to_string(t));
    }
}

void tau_sweep(Outcome& r) {
    using F = Fp;
    std::size_t strings = 0, tau_checked = 0, inv_checked = 0, meshes = 0;
    for (const auto& alg : corpus()) {
        ProjectiveData<F> D(alg);
        auto op = opposite_algebra(alg);
        ProjectiveData<F> DO(op);
        auto iso_any = [&](const Representation<F>& M, const std::vector<Representation<F>>& xs) {
            for (const auto& X : xs)
                if (X.dims == M.dims && is_isomorphic(alg, M, X)) return true;
            return false;
        };
        const auto& q = alg.quiver();
        for (const auto& w : enumerate_strings(alg, 6)) {
            ++strings;
            auto M = string_module<F>(alg, w);
            auto ti = tau_inv_string(alg, w);
            auto t = tau_string(alg, w);
            std::string where = "[" + format_word(q, w) + "]\n" + format_algebra(alg);
            r.require(iso_any(M, D.I) == !ti.has_value(), "injectivity mismatch " + where);
            r.require(iso_any(M, D.P) == !t.has_value(), "projectivity mismatch " + where);
            if (t) {
                ++tau_checked;
                r.require(is_isomorphic(alg, tau_dtr(D, M), string_module<F>(alg, *t)), "tau mismatch " + where);
            }
            if (ti) {
                ++inv_checked;
                r.require(is_isomorphic(alg, tau_inv_dtr(DO, M), string_module<F>(alg, *ti)), "tau^-1 mismatch " + where);
                std::size_t mid = 0;
                for (const auto& m : ar_middle_terms(alg, w)) mid += m.word.size() + 1;
                ++meshes;
                r.require(mid == w.size() + 1 + ti->size() + 1, "mesh dimension " + where);
            }
        }
    }
    r.note << strings << " strings, " << tau_checked << " tau, " << inv_checked << " tau^-1, " << meshes
           << " meshes over " << Fp::name();
}

void sectional_paths(Outcome& r) {
    std::size_t paths = 0, truncated = 0;
    for (const char* name : {"barbell_two_loops", "ww_long_bar"}) {
        auto alg = golden(name);
        const auto& q = alg.quiver();
        auto seeds = enumerate_strings(alg, 2);
        std::size_t used = 0;
        for (const auto& s : seeds) {
            if (s.empty()) continue;
            if (used++ == 5) break;
            auto p = generate_patch(alg, s, 4);
            auto rep = classify_sectional_paths(p);
            auto vc = check_valley_corollary(p);
            paths += rep.paths.size();
            truncated += rep.truncated_violations;
            std::string where = std::string(name) + " seed " + format_word(q, s);
            r.require(rep.violations.empty(), "sectional violation in " + where);
            r.require(vc.ok, "valley corollary fails in " + where);
        }
        r.require(used >= 5, std::string("fewer than 5 seeds in ") + name);
    }
    r.note << paths << " maximal sectional paths, " << truncated << " truncated excluded";
}

void string_submodules(Outcome& r) {
    using F = Rational;
    std::size_t checked = 0;
    for (const auto& alg : corpus()) {
        const auto& q = alg.quiver();
        for (const auto& w : enumerate_bands(alg, 6)) {
            for (long lam : {1L, 2L}) {
                auto spec = scalar_band(w, F(lam));
                auto M = band_module(alg, spec);
                auto S = maximal_string_submodule(alg, spec);
                std::string where = "[" + format_word(q, w) + "] lambda=" + std::to_string(lam) + "\n" + format_algebra(alg);
                ++checked;
                bool ok = dimension(S.module.dims) + 1 == dimension(M.dims);
                ok = ok && is_isomorphic(alg, S.module, string_module<F>(alg, S.word));
                for (int v = 0; ok && v < q.num_vertices(); ++v) {
                    const auto& B = S.inclusion[v];
                    ok = B.rows() == static_cast<std::size_t>(M.dims[v]) && B.cols() == static_cast<std::size_t>(S.module.dims[v]) &&
                         B.rank() == B.cols();
                }
                for (int a = 0; ok && a < q.num_arrows(); ++a) {
                    const auto& ar = q.arrow(a);
                    ok = M.mats[a] * S.inclusion[ar.src] == S.inclusion[ar.tgt] * S.module.mats[a];
                }
                r.require(ok, "string submodule " + where);
            }
        }
    }
    r.note << checked << " band modules";
}

void eta_image(Outcome& r) {
    std::size_t checked = 0;
    for (const char* lit : {ww_two_loops_word, ww_two_bars_word}) {
        auto d = wind_wheel(lit);
        const auto& q = d.algebra.quiver();
        auto image = arc_images(q, d.word, 8);
        for (const auto& x : enumerate_strings(d.algebra, 8)) {
            bool brute = x.empty() || image.count(format_word(q, x)) > 0;
            ++checked;
            r.require(brute == in_image_of_eta(d, x), std::string("eta image of [") + format_word(q, x) + "] over " + lit);
        }
    }
    r.note << checked << " strings";
}

void growth(Outcome& r) {
    auto expect = [&](const MonomialAlgebra& alg, bool want, const std::string& name) {
        bool got = growth_witness(alg, default_growth_bound(alg)).has_value();
        r.require(got == want, name + (want ? ": no witness" : ": unexpected witness"));
    };
    expect(golden("barbell_two_loops"), true, "two-loop barbell");
    expect(golden("barbell_loop_triangle"), true, "loop-triangle barbell");
    for (const char* lit : {ww_two_loops_word, ww_two_bars_word, ww_crossed_word, ww_twisted_word}) expect(wind_wheel(lit).algebra, false, lit);
    std::size_t cycles = 0;
    for (const char* e : {"+-", "++-", "+--", "++--", "+-+-", "+++-", "++-+-", "+++--", "++-+--"}) {
        expect(cycle_algebra(OrientationSequence::parse(e)), false, std::string("cycle ") + e);
        ++cycles;
    }
    r.note << cycles << " cycle algebras";
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> all{
        {1, "golden wind wheel constructions", golden_constructions},
        {2, "classifier agrees with minimality oracle on the corpus", classifier_vs_oracle},
        {3, "barbell minimality depends on bar seriality", barbell_minimality},
        {4, "wind wheels have one band and t Z-words", unique_band},
        {5, "band endomorphism radicals", endomorphisms},
        {6, "ramification tables", ramification},
        {7, "quilt Euler characteristic", euler_characteristic},
        {8, "combinatorial tau agrees with D Tr", tau_sweep},
        {9, "no sectional or valley violations in patches", sectional_paths},
        {10, "codimension-one string submodules of bands", string_submodules},
        {11, "eta image agrees with lift search", eta_image},
        {12, "growth witnesses", growth},
    };
    int failed = 0;
    for (auto& c : all) {
        Outcome r;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(r);
        } catch (const std::exception& e) {
            r.ok = false;
            r.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %2d %s (%s; %.1fs)\n", r.ok ? "PASS" : "FAIL", c.id, c.name, r.note.str().c_str(), secs);
        for (const auto& f : r.failures) std::printf("       %s\n", f.c_str());
        std::fflush(stdout);
        failed += !r.ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
