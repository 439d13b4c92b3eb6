#include "random_gen.hpp"
#include "tvdef/polyhedron.hpp"

#include <gtest/gtest.h>

using namespace tvdef;
using tvdef::testing::Gen;

namespace {

Polyhedron poly(std::vector<LVec> pts, std::vector<LVec> rays = {})
{
    std::size_t n = pts.empty() ? rays.front().size() : pts.front().size();
    return Polyhedron::from_generators(n, pts, rays);
}

Polyhedron unit_square()
{
    return poly({int_vec({0, 0}), int_vec({1, 0}), int_vec({0, 1}), int_vec({1, 1})});
}

// Brute-force dual of a 2d cone: perpendiculars of each ray that are nonnegative on all rays.
std::vector<LVec> dual_2d_oracle(const std::vector<LVec>& rays)
{
    std::vector<LVec> out;
    for (const auto& r : rays) {
        for (int sign : {1, -1}) {
            LVec n{Rat(-sign) * r[1], Rat(sign) * r[0]};
            bool ok = true;
            for (const auto& s : rays) ok = ok && dot(n, s) >= 0;
            if (ok) out.push_back(primitive(n));
        }
    }
    sort_unique(out);
    return out;
}

} // namespace

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(parse_rat("2/4"), make_rat(1, 2));
    EXPECT_EQ(to_string(parse_rat("-6/4")), "-3/2");
    EXPECT_EQ(to_string(parse_rat("7")), "7");
    EXPECT_THROW(parse_rat("1/0"), ParseError);
    EXPECT_THROW(parse_rat("x"), ParseError);
    EXPECT_THROW(parse_rat("1/2/3"), ParseError);
}

TEST(DualCone, Orthant)
{
    auto c = Cone::from_generators(2, {int_vec({1, 0}), int_vec({0, 1})});
    std::vector<LVec> expect{int_vec({0, 1}), int_vec({1, 0})};
    EXPECT_EQ(c.dual().rays(), expect);
    EXPECT_TRUE(c.dual().pointed());
}

TEST(DualCone, SkewCone)
{
    std::vector<LVec> rays{int_vec({1, 0}), int_vec({1, 2})};
    auto oracle = dual_2d_oracle(rays);
    std::vector<LVec> expect{int_vec({0, 1}), int_vec({2, -1})};
    ASSERT_EQ(oracle, expect);
    EXPECT_EQ(Cone::from_generators(2, rays).dual().rays(), oracle);
}

TEST(DualCone, ZeroConeDualIsPlane)
{
    auto d = Cone::zero(2).dual();
    EXPECT_FALSE(d.pointed());
    EXPECT_EQ(d.lineality().size(), 2u);
    EXPECT_TRUE(d.rays().empty());
    EXPECT_EQ(d.dual(), Cone::zero(2));
}

TEST(DualCone, HalfPlaneHasLineality)
{
    auto c = Cone::from_generators(2, {int_vec({1, 0}), int_vec({0, 1}), int_vec({0, -1})});
    EXPECT_FALSE(c.pointed());
    EXPECT_EQ(c.rays(), std::vector<LVec>{int_vec({1, 0})});
    auto d = c.dual();
    EXPECT_EQ(d.rays(), std::vector<LVec>{int_vec({1, 0})});
    EXPECT_EQ(d.dim(), 1u);
    EXPECT_EQ(d.dual(), c);
}

TEST(DualCone, RedundantGeneratorsDropped)
{
    auto c = Cone::from_generators(3, {int_vec({1, 0, 0}), int_vec({0, 1, 0}), int_vec({1, 1, 0}),
                                       int_vec({0, 0, 1}), int_vec({2, 2, 2})});
    EXPECT_EQ(c.rays().size(), 3u);
    EXPECT_EQ(c.facets().size(), 3u);
}

TEST(Minkowski, IdentityAndAbsorbing)
{
    auto q = poly({int_vec({0, 0}), int_vec({2, 1})}, {int_vec({1, 0})});
    EXPECT_EQ(minkowski_sum(Polyhedron::point(int_vec({0, 0})), q), q);
    EXPECT_TRUE(minkowski_sum(Polyhedron::empty(2), q).is_empty());
}

TEST(Minkowski, SegmentsMakeSquare)
{
    auto a = poly({int_vec({0, 0}), int_vec({1, 0})});
    auto b = poly({int_vec({0, 0}), int_vec({0, 1})});
    // oracle: hull of all pairwise vertex sums, no redundant points among them
    EXPECT_EQ(minkowski_sum(a, b), unit_square());
    EXPECT_EQ(unit_square().vertices().size(), 4u);
}

TEST(Minkowski, RankMismatch)
{
    EXPECT_THROW(minkowski_sum(Polyhedron::point(int_vec({0})), Polyhedron::point(int_vec({0, 0}))),
                 DomainError);
}

TEST(Face, ZeroFunctionalGivesWhole)
{
    EXPECT_EQ(face(unit_square(), int_vec({0, 0})), unit_square());
}

TEST(Face, SquareLeftEdge)
{
    auto f = face(unit_square(), int_vec({1, 0}));
    EXPECT_EQ(f, poly({int_vec({0, 0}), int_vec({0, 1})}));
}

TEST(Face, UnboundedBelow)
{
    auto p = poly({int_vec({0, 0})}, {int_vec({1, 0})});
    EXPECT_THROW(face(p, int_vec({-1, 0})), DomainError);
    EXPECT_THROW(face(Polyhedron::empty(2), int_vec({1, 0})), DomainError);
}

TEST(Face, TailOfFace)
{
    auto p = poly({int_vec({0, 0})}, {int_vec({1, 0}), int_vec({0, 1})});
    auto f = face(p, int_vec({1, 0}));
    EXPECT_EQ(f.tail(), p.tail().face(int_vec({1, 0})));
    EXPECT_EQ(f.tail().rays(), std::vector<LVec>{int_vec({0, 1})});
}

TEST(Intersect, Intervals)
{
    auto a = poly({int_vec({0}), int_vec({2})});
    auto b = poly({int_vec({1}), int_vec({3})});
    EXPECT_EQ(intersect(a, a), a);
    EXPECT_EQ(intersect(a, b), poly({int_vec({1}), int_vec({2})}));
    EXPECT_TRUE(intersect(poly({int_vec({0}), int_vec({1})}), poly({int_vec({2}), int_vec({3})})).is_empty());
}

TEST(EvalMin, Examples)
{
    auto ray = poly({int_vec({1})}, {int_vec({1})});
    EXPECT_EQ(eval_min(ray, int_vec({1})), 1);
    EXPECT_EQ(eval_min(unit_square(), int_vec({0, 0})), 0);
    auto delta = poly({int_vec({-1, 1}), int_vec({1, 1})}, {int_vec({1, 1}), int_vec({-1, 1})});
    EXPECT_EQ(eval_min(delta, int_vec({0, 1})), 1);
    EXPECT_EQ(face(delta, int_vec({0, 1})), poly({int_vec({-1, 1}), int_vec({1, 1})}));
}

TEST(NormalCone, Examples)
{
    auto seg = poly({int_vec({0}), int_vec({1})});
    auto u = normal_cone_generic_point(seg, int_vec({0}));
    EXPECT_GT(u[0], 0);
    EXPECT_EQ(face(seg, u), Polyhedron::point(int_vec({0})));

    auto w = normal_cone_generic_point(unit_square(), int_vec({0, 0}));
    EXPECT_GT(w[0], 0);
    EXPECT_GT(w[1], 0);

    auto pt = Polyhedron::point(int_vec({3, 4}));
    EXPECT_EQ(face(pt, normal_cone_generic_point(pt, int_vec({3, 4}))), pt);

    EXPECT_THROW(normal_cone_generic_point(seg, LVec{make_rat(1, 2)}), DomainError);
}

TEST(Predicates, LatticeTranslateAndFaces)
{
    auto c = Cone::from_generators(2, {int_vec({1, 0})});
    auto p = poly({int_vec({2, -1})}, {int_vec({1, 0})});
    auto lam = is_lattice_translate_of(p, c);
    ASSERT_TRUE(lam.has_value());
    EXPECT_EQ(*lam, int_vec({2, -1}));
    EXPECT_FALSE(is_lattice_translate_of(poly({LVec{make_rat(1, 2), 0}}, {int_vec({1, 0})}), c));

    auto sq = unit_square();
    EXPECT_TRUE(is_face_of(poly({int_vec({0, 0}), int_vec({1, 0})}), sq));
    EXPECT_TRUE(is_face_of(Polyhedron::point(int_vec({1, 1})), sq));
    EXPECT_TRUE(is_face_of(Polyhedron::empty(2), sq));
    EXPECT_TRUE(is_face_of(sq, sq));
    EXPECT_FALSE(is_face_of(poly({int_vec({0, 0}), LVec{make_rat(1, 2), 0}}), sq));
    EXPECT_FALSE(is_face_of(Polyhedron::point(int_vec({2, 2})), sq));
    EXPECT_TRUE(sq.contains(poly({LVec{make_rat(1, 2), 0}})));
}

TEST(Polyhedron, RejectsNonPointedTail)
{
    EXPECT_THROW(poly({int_vec({0, 0})}, {int_vec({1, 0}), int_vec({-1, 0})}), DomainError);
}

TEST(Polyhedron, FromInequalities)
{
    // x >= 1, y >= 0, x + y <= 3
    auto p = Polyhedron::from_inequalities(
        2, {{int_vec({1, 0}), 1}, {int_vec({0, 1}), 0}, {int_vec({-1, -1}), -3}});
    EXPECT_EQ(p, poly({int_vec({1, 0}), int_vec({3, 0}), int_vec({1, 2})}));
    EXPECT_TRUE(Polyhedron::from_inequalities(1, {{int_vec({1}), 2}, {int_vec({-1}), 0}}).is_empty());
}

// Property suites at modest sizes; the acceptance binary runs the full counts.

TEST(Properties, DualInvolution)
{
    Gen g(11);
    for (int i = 0; i < 150; ++i) {
        std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        auto c = g.any_cone(n, 5);
        ASSERT_EQ(c.dual().dual(), c) << i;
    }
}

TEST(Properties, MinAndFaceAdditivity)
{
    Gen g(12);
    for (int i = 0; i < 150; ++i) {
        std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        auto tp = g.pointed_cone(n, 3), tq = g.pointed_cone(n, 3);
        while (!tp.sum(tq).pointed()) tq = g.pointed_cone(n, 3);
        auto p = g.polyhedron(n, 4, tp, 3), q = g.polyhedron(n, 4, tq, 3);
        auto s = minkowski_sum(p, q);
        EXPECT_EQ(s.tail(), tp.sum(tq));
        auto dual = s.tail().dual();
        LVec u = relint_point(dual);
        for (const auto& r : dual.rays()) u = u + g.integer(0, 2) * r;
        ASSERT_EQ(eval_min(s, u), eval_min(p, u) + eval_min(q, u));
        ASSERT_EQ(face(s, u), minkowski_sum(face(p, u), face(q, u)));
    }
}

TEST(Properties, IntersectionLaws)
{
    Gen g(13);
    for (int i = 0; i < 80; ++i) {
        std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
        auto t = g.pointed_cone(n, 2);
        auto a = g.polyhedron(n, 4, t, 2), b = g.polyhedron(n, 4, g.pointed_cone(n, 2), 2),
             c = g.polyhedron(n, 4, t, 2);
        ASSERT_EQ(intersect(a, b), intersect(b, a));
        ASSERT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
        ASSERT_EQ(intersect(a, a), a);
        auto ab = intersect(a, b);
        if (!ab.is_empty()) ASSERT_EQ(ab.tail(), a.tail().intersect(b.tail()));
    }
}

TEST(Properties, GenericPointSelectsVertex)
{
    Gen g(14);
    for (int i = 0; i < 80; ++i) {
        std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        auto p = g.polyhedron(n, 5, g.pointed_cone(n, 2), 4);
        for (const auto& v : p.vertices())
            ASSERT_EQ(face(p, normal_cone_generic_point(p, v)), Polyhedron::point(v));
    }
}
