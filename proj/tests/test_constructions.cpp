#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "sbalg/classify.hpp"
#include "sbalg/constructions.hpp"
#include "sbalg/permutation.hpp"
#include "support.hpp"

using namespace sbalg;
using sbalg::test::golden;
using sbalg::test::relation_names;

namespace {

OrientationSequence os(const char* s) { return OrientationSequence::parse(s); }

// Relations as undirected vertex sequences.
std::set<std::string> relation_vertices(const MonomialAlgebra& alg) {
    const auto& q = alg.quiver();
    std::set<std::string> out;
    for (const auto& p : alg.relations()) {
        std::vector<std::string> vs{q.vertex_name(q.arrow(p.front()).src)};
        for (int a : p) vs.push_back(q.vertex_name(q.arrow(a).tgt));
        auto join = [](const std::vector<std::string>& xs) {
            std::string s;
            for (const auto& x : xs) s += (s.empty() ? "" : "-") + x;
            return s;
        };
        std::string f = join(vs);
        std::reverse(vs.begin(), vs.end());
        out.insert(std::min(f, join(vs)));
    }
    return out;
}

const char* wheels[] = {
    "alpha beta ~gamma ~beta",
    "f ~d ~a g e ~c b a ~h ~e",
    "~q ~b1 x b1 ~p ~b2 y b2",
    "c ~d ~b1 x b1 ~e f b2 ~y ~b2",
    "alpha beta1 beta2 beta3 ~gamma ~beta3 ~beta2 ~beta1",
    "b0 ~x0 ~b0 h1 b1 ~x1 ~b1 h2 b2 ~x2 ~b2 h3 b3 ~x3 ~b3 h4 b4 ~x4 ~b4 h0",
    "b0 x0 ~b0 ~c0 b2 p ~b3 ~x3 b3 q ~b2 ~c2 b1 x1 ~b1 ~c1",
};

} // namespace

TEST(Orientation, Parse) {
    EXPECT_EQ(os("(+ + - +)").str(), "(++-+)");
    EXPECT_EQ(os("+-").inverse().str(), "(+-)");
    EXPECT_EQ(os("++-").inverse().str(), "(+--)");
    EXPECT_THROW(os(""), InputError);
    EXPECT_THROW(os("+x"), InputError);
}

TEST(CycleAlgebra, Shapes) {
    auto hex = cycle_algebra(os("++-+-+"));
    EXPECT_EQ(hex.quiver().num_vertices(), 6);
    EXPECT_EQ(hex.quiver().num_arrows(), 6);
    EXPECT_TRUE(hex.relations().empty());
    const auto& q = hex.quiver();
    // alpha_i : a_i -> a_{i-1} exactly when the i-th sign is +
    EXPECT_EQ(q.vertex_name(q.arrow(q.arrow_index("alpha1")).src), "a1");
    EXPECT_EQ(q.vertex_name(q.arrow(q.arrow_index("alpha3")).src), "a2");
    auto kr = cycle_algebra(os("+-"));
    EXPECT_TRUE(are_isomorphic(kr, parse_algebra("vertex 1 2\narrow a 1 2\narrow b 1 2\n")));
    EXPECT_THROW(cycle_algebra(os("++")), PreconditionError);
}

TEST(Barify, SerialBarGivesBarbell) {
    auto H = cycle_algebra(os("+++-"));
    const auto& q = H.quiver();
    Word w = cycle_band(H, os("+++-"));
    auto B = barify(H, subword(q, w, 1, 1), inverse(q, subword(q, w, 3, 1)));
    EXPECT_TRUE(are_isomorphic(B, golden("barbell_serial_bar")));
}

TEST(Barify, HypothesisFailure) {
    auto H = cycle_algebra(os("+++-"));
    const auto& q = H.quiver();
    Word w = cycle_band(H, os("+++-"));
    EXPECT_THROW(barify(H, subword(q, w, 0, 2), subword(q, w, 2, 1)), BarificationError);
}

TEST(Barify, TrivialBarMakesFourVertex) {
    auto H = cycle_algebra(os("++--"));
    auto B = barify(H, parse_word(H, "@a1"), parse_word(H, "@a3"));
    EXPECT_EQ(B.quiver().num_vertices(), 3);
    int four = 0;
    for (int v = 0; v < B.quiver().num_vertices(); ++v) four += vertex_degree(B, v) == 4;
    EXPECT_EQ(four, 1);
    EXPECT_TRUE(is_special_biserial(B).ok);
    EXPECT_EQ(B.relations().size(), 2u);
}

TEST(Barbell, Examples) {
    auto b2 = barbell(os("+"), os("-+"), os("+"));
    EXPECT_TRUE(are_isomorphic(b2.algebra, golden("barbell_two_loops")));
    EXPECT_FALSE(is_serial(b2.bar));
    EXPECT_EQ(b2.bar.size(), 2u);
    auto b1 = barbell(os("+"), os("+"), os("+"));
    EXPECT_TRUE(are_isomorphic(b1.algebra, golden("barbell_serial_bar")));
    EXPECT_TRUE(is_serial(b1.bar));
    EXPECT_EQ(b1.bar.size(), 1u);
    auto b3 = barbell(os("+"), os("+-"), os("+-+"));
    EXPECT_TRUE(are_isomorphic(b3.algebra, golden("barbell_loop_triangle")));
    EXPECT_THROW(barbell(os("-"), os("+"), os("+")), PreconditionError);
    EXPECT_THROW(barbell(os("+"), os("+"), os("+-")), PreconditionError);
}

TEST(Barbell, AlwaysSpecialBiserial) {
    std::vector<OrientationSequence> ends{os("+"), os("++"), os("+-+"), os("++-+"), os("+--+")};
    std::vector<OrientationSequence> bars{os("+"), os("-"), os("+-"), os("-+"), os("++"), os("+-+"), os("--+")};
    for (const auto& e : ends)
        for (const auto& h : bars)
            for (const auto& e2 : ends) {
                auto b = barbell(e, h, e2);
                EXPECT_TRUE(is_special_biserial(b.algebra).ok) << e.str() << h.str() << e2.str();
                EXPECT_TRUE(is_cyclic(b.algebra, b.band));
            }
}

TEST(WindWheel, ExampleOne) {
    auto d = wind_wheel(wheels[0]);
    EXPECT_EQ(d.t, 1);
    EXPECT_EQ(d.sigma.str(), "(1 2)");
    EXPECT_EQ(relation_names(d.algebra), (std::set<std::string>{"alpha alpha", "gamma gamma", "gamma beta alpha"}));
    ASSERT_EQ(d.factors.size(), 2u);
    EXPECT_EQ(format_word(d.algebra.quiver(), d.factors[0].first), "alpha");
    EXPECT_EQ(format_word(d.algebra.quiver(), d.factors[0].second), "beta");
}

TEST(WindWheel, ExampleFourRelations) {
    auto d = wind_wheel(wheels[1]);
    EXPECT_EQ(d.t, 2);
    EXPECT_EQ(d.sigma.str(), "(1 3)(2 4)");
    auto g = golden("ww_two_bars");
    EXPECT_TRUE(are_isomorphic(d.algebra, g));
    EXPECT_EQ(relation_names(d.algebra), relation_names(g));
    EXPECT_EQ(relation_vertices(g),
              (std::set<std::string>{"4-2-6", "1-3-6", "3-1-5", "2-4-5", "5-1-2-6", "1-3-4-2"}));
}

TEST(WindWheel, Rejections) {
    EXPECT_THROW(wind_wheel("a ~b"), WindWheelError);
    EXPECT_THROW(wind_wheel("alpha beta ~gamma ~delta"), WindWheelError);
    EXPECT_THROW(wind_wheel("alpha beta ~alpha ~beta"), WindWheelError);
}

TEST(WindWheel, Invariants) {
    for (const char* lit : wheels) {
        auto d = wind_wheel(lit);
        const auto& alg = d.algebra;
        const auto& q = alg.quiver();
        EXPECT_TRUE(is_special_biserial(alg).ok) << lit;
        for (int v = 0; v < q.num_vertices(); ++v) EXPECT_LE(vertex_degree(alg, v), 3) << lit;
        EXPECT_TRUE(four_vertices_are_nodes(alg));
        EXPECT_EQ(static_cast<int>(d.bars.size()), d.t);
        EXPECT_EQ(d.factors.size(), static_cast<std::size_t>(2 * d.t));
        // sigma is a fixed-point-free involution pairing v_i with its inverse
        auto s = d.sigma;
        for (int i = 1; i <= 2 * d.t; ++i) {
            EXPECT_NE(s(i), i);
            EXPECT_EQ(s(s(i)), i);
            EXPECT_TRUE(d.factors[s(i) - 1].second == inverse(q, d.factors[i - 1].second));
            EXPECT_TRUE(is_serial(d.factors[i - 1].second));
        }
        EXPECT_TRUE(d.pi == commutator(d.lambda, d.rho));
        EXPECT_EQ(ramification_sequence(d).sum(), d.t);
        if (d.lambda * d.rho == d.rho * d.lambda) {
            EXPECT_TRUE(d.pi == Permutation(d.t));
        }
        auto bands = enumerate_bands(alg, 2 * static_cast<std::size_t>(q.num_arrows()));
        ASSERT_EQ(bands.size(), 1u) << lit;
        EXPECT_TRUE(bands[0] == canonical_cyclic(q, d.word));
    }
}

TEST(WindWheel, GoldenFiles) {
    const std::pair<const char*, const char*> pairs[] = {
        {wheels[0], "ww_two_loops"}, {wheels[1], "ww_two_bars"},        {wheels[2], "ww_crossed_loops"},
        {wheels[3], "ww_two_bars_twisted"}, {wheels[4], "ww_long_bar"}, {wheels[5], "ww_five_bars"},
        {wheels[6], "ww_three_ramified"},
    };
    for (const auto& [lit, file] : pairs) {
        auto d = wind_wheel(lit);
        EXPECT_TRUE(are_isomorphic(d.algebra, golden(file))) << file;
        EXPECT_EQ(relation_names(d.algebra), relation_names(golden(file))) << file;
    }
}

TEST(BarClosure, Examples) {
    auto d1 = wind_wheel(wheels[0]);
    EXPECT_EQ(format_word(d1.algebra.quiver(), bar_closure(d1, 0)), "~alpha beta ~gamma");
    auto dl = wind_wheel(wheels[4]);
    EXPECT_EQ(format_word(dl.algebra.quiver(), bar_closure(dl, 0)), "~alpha beta1 beta2 beta3 ~gamma");
    EXPECT_THROW(bar_closure(d1, 1), PreconditionError);
    for (const char* lit : wheels) {
        auto d = wind_wheel(lit);
        for (std::size_t b = 0; b < d.bars.size(); ++b) EXPECT_TRUE(is_valid_word(d.algebra, bar_closure(d, b).letters));
    }
}

TEST(EtaImage, Examples) {
    auto d = wind_wheel(wheels[0]);
    EXPECT_FALSE(in_image_of_eta(d, parse_word(d.algebra, "~alpha beta ~gamma")));
    EXPECT_FALSE(in_image_of_eta(d, parse_word(d.algebra, "gamma ~beta alpha")));
    EXPECT_TRUE(in_image_of_eta(d, parse_word(d.algebra, "beta")));
}

TEST(ZWords, CountAndClosureWindow) {
    for (const char* lit : wheels) {
        auto d = wind_wheel(lit);
        const auto& q = d.algebra.quiver();
        auto zs = z_words(d);
        ASSERT_EQ(zs.size(), static_cast<std::size_t>(d.t)) << lit;
        std::set<std::string> distinct;
        for (std::size_t b = 0; b < zs.size(); ++b) {
            const auto& z = zs[b];
            distinct.insert(format_word(q, z.middle));
            Word win = zword_window(q, z, 1);
            EXPECT_TRUE(is_valid_word(d.algebra, win.letters)) << lit;
            // exactly one closure of a bar (or its inverse) appears in the window
            std::size_t hits = 0;
            for (std::size_t c = 0; c < d.bars.size(); ++c) {
                Word cl = bar_closure(d, c);
                for (const Word& pat : {cl, inverse(q, cl)})
                    for (std::size_t i = 0; i + pat.size() <= win.size(); ++i)
                        hits += std::equal(pat.letters.begin(), pat.letters.end(), win.letters.begin() + i);
            }
            EXPECT_EQ(hits, 1u) << lit;
        }
        EXPECT_EQ(distinct.size(), zs.size());
    }
}

TEST(Permutations, Commutators) {
    auto p = [](const char* s, std::size_t n) { return Permutation::parse(s, n); };
    EXPECT_EQ(commutator_cycle_partition(p("(1 2 3 4 5)", 5), p("(1 2 3 5 4)", 5)).str(), "(3,1,1)");
    EXPECT_EQ(commutator_cycle_partition(p("(1 2 3 4 5)", 5), p("(1 2 4 5 3)", 5)).str(), "(5)");
    EXPECT_EQ(commutator_cycle_partition(p("(1 2 3 4 5 6)", 6), p("(1 2 4 6 5 3)", 6)).str(), "(4,2)");
    EXPECT_THROW(commutator_cycle_partition(Permutation(3), Permutation(4)), PreconditionError);
    EXPECT_EQ(p("(1 3)(2 4)", 4).str(), "(1 3)(2 4)");
    EXPECT_THROW(p("(1 1)", 3), InputError);
}

TEST(Permutations, PossibleRamifications) {
    auto strs = [](int t) {
        std::set<std::string> s;
        for (const auto& x : possible_ramifications(t)) s.insert(x.str());
        return s;
    };
    EXPECT_EQ(strs(1), (std::set<std::string>{"(1)"}));
    EXPECT_EQ(strs(2), (std::set<std::string>{"(1,1)"}));
    EXPECT_EQ(strs(3), (std::set<std::string>{"(1,1,1)"}));
    EXPECT_EQ(strs(4), (std::set<std::string>{"(3,1)", "(1,1,1,1)"}));
    EXPECT_EQ(strs(5), (std::set<std::string>{"(5)", "(3,1,1)", "(1,1,1,1,1)"}));
    EXPECT_THROW(possible_ramifications(8), PreconditionError);
    EXPECT_THROW(possible_ramifications(0), PreconditionError);
}

TEST(Ramification, Examples) {
    EXPECT_EQ(ramification_sequence(wind_wheel(wheels[5])).str(), "(1,1,1,1,1)");
    auto d = wind_wheel(wheels[6]);
    EXPECT_EQ(d.t, 4);
    EXPECT_EQ(d.pi.str(), "(1 2 3)");
    EXPECT_EQ(ramification_sequence(d).str(), "(3,1)");
    for (const char* lit : {wheels[1], wheels[2], wheels[3]}) {
        auto x = ramification_sequence(wind_wheel(lit));
        EXPECT_TRUE(std::all_of(x.parts.begin(), x.parts.end(), [](int r) { return r == 1; })) << lit;
    }
}

TEST(Quilt, EulerCharacteristic) {
    auto c3 = quilt_complex(3);
    EXPECT_EQ(c3.f, 12);
    EXPECT_EQ(c3.e, 36);
    EXPECT_EQ(c3.v, 21);
    for (int t = 1; t <= 8; ++t) EXPECT_EQ(quilt_euler_characteristic(t), -t);
    EXPECT_THROW(quilt_complex(0), PreconditionError);
}
