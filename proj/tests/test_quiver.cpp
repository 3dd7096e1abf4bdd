#include <gtest/gtest.h>

#include "sbalg/corpus.hpp"
#include "sbalg/classify.hpp"
#include "sbalg/quiver.hpp"
#include "support.hpp"

using namespace sbalg;
using sbalg::test::golden;
using sbalg::test::relation_names;

namespace {

const char* two_loops_text = R"(
algebra W
vertex a1 a2
arrow alpha a1 a1
arrow gamma a2 a2
arrow beta a2 a1
rel alpha alpha
rel gamma gamma
rel gamma beta alpha
)";

Path path(const MonomialAlgebra& alg, std::initializer_list<const char*> names) {
    Path p;
    for (const char* n : names) p.push_back(alg.quiver().arrow_index(n));
    return p;
}

int vx(const MonomialAlgebra& alg, const char* v) { return alg.quiver().vertex(v); }

} // namespace

TEST(Parse, WindWheelFile) {
    auto alg = parse_algebra(two_loops_text);
    EXPECT_EQ(alg.name(), "W");
    EXPECT_EQ(alg.quiver().num_vertices(), 2);
    EXPECT_EQ(alg.quiver().num_arrows(), 3);
    EXPECT_EQ(relation_names(alg), (std::set<std::string>{"alpha alpha", "gamma gamma", "gamma beta alpha"}));
    EXPECT_TRUE(are_isomorphic(alg, golden("ww_two_loops")));
}

TEST(Parse, SingleVertex) {
    auto alg = parse_algebra("vertex x\n");
    EXPECT_EQ(alg.quiver().num_vertices(), 1);
    EXPECT_EQ(alg.quiver().num_arrows(), 0);
    EXPECT_TRUE(is_finite_dimensional(alg));
}

TEST(Parse, NonComposableRelation) {
    const char* text = "vertex 1 2 3\narrow alpha 1 2\narrow beta 3 1\nrel alpha beta\n";
    try {
        parse_algebra(text);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 4);
    }
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_algebra("vertex 1\nvertex 1\n"), ParseError);
    EXPECT_THROW(parse_algebra("vertex 1\narrow a 1 2\n"), ParseError);
    EXPECT_THROW(parse_algebra("vertex 1\narrow a 1 1\narrow a 1 1\n"), ParseError);
    EXPECT_THROW(parse_algebra("vertex 1\narrow a 1 1\nrel a b\n"), ParseError);
    EXPECT_THROW(parse_algebra("vertex 1\nbogus\n"), ParseError);
    EXPECT_THROW(parse_algebra("vertex 1\narrow a 1 1\nrel a a\nrel a a\n"), ParseError);
}

TEST(Parse, FormatRoundTrip) {
    for (const char* name : {"ww_two_loops", "ww_two_bars", "barbell_loop_triangle", "ww_five_bars"}) {
        auto alg = golden(name);
        auto again = parse_algebra(format_algebra(alg));
        EXPECT_EQ(format_algebra(again), format_algebra(alg)) << name;
    }
}

TEST(Relations, SubpathPruning) {
    auto alg = parse_algebra("vertex 1\narrow a 1 1\nrel a a a\nrel a a\n");
    ASSERT_EQ(alg.relations().size(), 1u);
    EXPECT_EQ(alg.relations()[0].size(), 2u);
}

TEST(SpecialBiserial, Examples) {
    EXPECT_TRUE(is_special_biserial(golden("barbell_two_loops")).ok);
    auto kronecker = parse_algebra("vertex 1 2\narrow a 1 2\narrow b 1 2\n");
    EXPECT_TRUE(is_special_biserial(kronecker).ok);
    auto star = parse_algebra("vertex 0 1 2 3\narrow a 1 0\narrow b 2 0\narrow c 3 0\n");
    auto v = is_special_biserial(star);
    EXPECT_FALSE(v.ok);
    ASSERT_FALSE(v.violations.empty());
    EXPECT_EQ(v.violations[0].tag, "C1-in");
    auto cospan = parse_algebra("vertex 0 1 2\narrow a 0 1\narrow b 1 2\narrow c 1 2\n");
    auto v2 = is_special_biserial(cospan);
    EXPECT_FALSE(v2.ok);
    EXPECT_EQ(v2.violations[0].tag, "C2");
    auto span = parse_algebra("vertex 0 1 2\narrow a 0 1\narrow b 0 1\narrow c 1 2\n");
    EXPECT_EQ(is_special_biserial(span).violations.at(0).tag, "C2'");
}

TEST(Degree, Examples) {
    auto ww = parse_algebra(two_loops_text);
    EXPECT_EQ(vertex_degree(ww, vx(ww, "a1")), 3);
    auto iso = parse_algebra("vertex 1 2\narrow a 1 1\n");
    EXPECT_EQ(vertex_degree(iso, vx(iso, "2")), 0);
    auto four = parse_algebra("vertex c x y z w\narrow a x c\narrow b y c\narrow g c z\narrow d c w\nrel a g\nrel b d\n");
    EXPECT_EQ(vertex_degree(four, vx(four, "c")), 4);
}

TEST(Node, Examples) {
    auto line = parse_algebra("vertex a b c\narrow x a b\narrow y b c\nrel x y\n");
    EXPECT_TRUE(is_node(line, vx(line, "b")));
    EXPECT_FALSE(is_node(line, vx(line, "c")));
    auto ww = parse_algebra(two_loops_text);
    EXPECT_FALSE(is_node(ww, vx(ww, "a1")));
}

TEST(Node, ResolveLine) {
    auto line = parse_algebra("vertex a b c\narrow x a b\narrow y b c\nrel x y\n");
    auto r = resolve_nodes(line);
    EXPECT_EQ(r.quiver().num_vertices(), 4);
    EXPECT_TRUE(r.relations().empty());
    EXPECT_FALSE(r.quiver().connected());
    auto ww = parse_algebra(two_loops_text);
    EXPECT_EQ(format_algebra(resolve_nodes(ww)), format_algebra(ww));
}

TEST(AddRelation, BarbellToWindWheel) {
    auto b = golden("barbell_serial_bar");
    auto w = add_relation(b, path(b, {"gamma", "beta", "alpha"}));
    EXPECT_TRUE(are_isomorphic(w, golden("ww_two_loops")));
    auto cut = add_relation(b, path(b, {"beta"}));
    EXPECT_EQ(cut.quiver().num_arrows(), 2);
    EXPECT_FALSE(cut.quiver().has_arrow("beta"));
    EXPECT_THROW(add_relation(b, path(b, {"alpha", "alpha"})), PreconditionError);
    auto ww = golden("ww_two_loops");
    EXPECT_THROW(add_relation(ww, path(ww, {"gamma", "gamma", "beta"})), PreconditionError);
}

TEST(Isomorphism, Relabel) {
    auto a = parse_algebra("vertex 1 2\narrow p 1 2\narrow q 2 2\nrel q q\n");
    auto b = parse_algebra("vertex u v\narrow s v v\narrow r u v\nrel s s\n");
    auto c = parse_algebra("vertex u v\narrow s u u\narrow r u v\nrel s s\n");
    EXPECT_TRUE(are_isomorphic(a, b));
    EXPECT_FALSE(are_isomorphic(a, c));
}

// Properties over the small corpus.
class CorpusProperty : public ::testing::Test {
protected:
    static const std::vector<MonomialAlgebra>& corpus() {
        static auto c = generate_corpus({3, 4, 3, true});
        return c;
    }
};

TEST_F(CorpusProperty, ResolveIsIdempotentAndNodeFree) {
    for (const auto& alg : corpus()) {
        auto r = resolve_nodes(alg);
        EXPECT_EQ(format_algebra(resolve_nodes(r)), format_algebra(r));
        for (int v = 0; v < r.quiver().num_vertices(); ++v) EXPECT_FALSE(is_node(r, v)) << format_algebra(alg);
        EXPECT_TRUE(is_special_biserial(r).ok);
    }
}

TEST_F(CorpusProperty, AddRelationKeepsSpecialBiserial) {
    for (const auto& alg : corpus()) {
        auto m = maximal_nonzero_paths(alg);
        for (const auto& p : m.paths) EXPECT_TRUE(is_special_biserial(add_relation(alg, p)).ok) << format_algebra(alg);
    }
}

TEST_F(CorpusProperty, NodeResolutionPreservesMinimality) {
    for (const auto& alg : corpus()) {
        auto r = resolve_nodes(alg);
        auto mri = [](const MonomialAlgebra& a) {
            return is_finite_dimensional(a) && is_representation_infinite(a) && minimality_oracle(a);
        };
        EXPECT_EQ(mri(alg), mri(r)) << format_algebra(alg);
    }
}
