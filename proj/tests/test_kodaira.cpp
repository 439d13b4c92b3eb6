#include "fixtures.hpp"
#include "random_gen.hpp"
#include "tvdef/t1span.hpp"

#include <gtest/gtest.h>

using namespace tvdef;
using namespace tvdef::testing;

namespace {

const PointP1 kZero = Rat(0);

Polyhedron seg(Rat a, Rat b) { return Polyhedron::from_generators(1, {LVec{a}, LVec{b}}, {}); }

// Rank 1 divisor with coefficient delta at 0 and an empty coefficient at infinity.
PolyDivisor segment_divisor(const Polyhedron& delta)
{
    return PolyDivisor(Cone::zero(1), {{kZero, delta}, {kInfinity, Polyhedron::empty(1)}});
}

SliceDecomposition one_row(const Polyhedron& e0, const Polyhedron& e1) { return {kZero, 2, {{e0, e1}}, {}}; }

// Cone index of each chart of a cover over a toric downgrade.
std::optional<std::size_t> cone_of(const Downgrade& dg, const ChartCover& cover, std::size_t k)
{
    const auto& d = dg.dfan.pdivs[cover.charts[k].pdiv];
    for (std::size_t c = 0; c < dg.per_cone.size(); ++c)
        if (dg.per_cone[c] == d) return c;
    return std::nullopt;
}

} // namespace

TEST(Cover, BlowupAllAffine)
{
    auto dg = downgrade(blowup_fan(), int_vec({0, 1}), int_vec({0, 1}));
    auto cover = build_cover(dg.dfan, kZero);
    // every cone has rays of one sign only, so every maximal pdiv has affine locus
    EXPECT_EQ(cover.l0, 8u);
    EXPECT_EQ(cover.l1, 8u);
    ASSERT_EQ(cover.charts.size(), 16u);
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_EQ(cover.charts[k].tag, ChartTag::NearP);
        EXPECT_EQ(cover.charts[k + 8].tag, ChartTag::AwayP);
        EXPECT_EQ(cover.charts[k].pdiv, cover.charts[k + 8].pdiv);
    }
}

TEST(Cover, CompleteLocusCharts)
{
    // (1,0) and (-1,-1) pair to opposite signs with R = (1,0), so their cone has complete locus
    auto dg = downgrade(p2_fan(), int_vec({1, 0}));
    auto cover = build_cover(dg.dfan, kZero);
    std::size_t complete = 0;
    for (const auto& ch : cover.charts) complete += ch.tag == ChartTag::Complete;
    EXPECT_EQ(complete, cover.l1 - cover.l0);
    EXPECT_EQ(cover.charts.size(), cover.l1 + cover.l0);
    EXPECT_GE(complete, 1u);
    for (std::size_t k = 0; k < cover.charts.size(); ++k) {
        auto d = chart_divisor(dg.dfan, cover, k);
        if (cover.charts[k].tag == ChartTag::AwayP) EXPECT_TRUE(d.coeff(kZero).is_empty());
        if (cover.charts[k].tag == ChartTag::NearP)
            for (const auto& [q, c] : d.coeffs())
                if (q != kZero) EXPECT_TRUE(c.is_empty());
    }
}

TEST(Cover, ThirdPointRejected)
{
    PolyDivisor d(Cone::zero(1), {{kZero, seg(0, 1)}, {Rat(1), seg(0, 1)}, {kInfinity, seg(-3, -2)}});
    auto xi = build_dfan({d});
    EXPECT_THROW(build_cover(xi, kZero), DomainError);
}

TEST(Translation, Examples)
{
    auto d = segment_divisor(seg(0, 1));
    auto t = row_translation(one_row(Polyhedron::point(int_vec({0})), seg(0, 1)), 0, d);
    EXPECT_EQ(t.a, -1);
    EXPECT_EQ(t.lambda, int_vec({0}));
    t = row_translation(one_row(seg(0, 1), Polyhedron::point(int_vec({1}))), 0, d);
    EXPECT_EQ(t.a, 1);
    EXPECT_EQ(t.lambda, int_vec({1}));
    t = row_translation(one_row(seg(0, 1), Polyhedron::point(int_vec({0}))), 0, d);
    EXPECT_EQ(t.a, 1);
    EXPECT_TRUE(is_zero(t.lambda));

    auto half = segment_divisor(seg(0, make_rat(1, 2)));
    auto q = seg(0, make_rat(1, 4));
    EXPECT_THROW(row_translation(one_row(q, q), 0, half), DomainError);
}

TEST(Translation, TrivialDecompositionIsZero)
{
    auto dg = downgrade(blowup_fan(), int_vec({0, 1}), int_vec({0, 1}));
    auto sd = trivial_slice_decomposition(dg.dfan, kZero, 2);
    auto cover = build_cover(dg.dfan, kZero);
    for (const auto& t : translation_data(dg.dfan, sd, cover)) {
        EXPECT_EQ(t.a, 1);
        EXPECT_TRUE(is_zero(t.lambda));
    }
    EXPECT_TRUE(ks_cocycle_tvar(dg.dfan, sd).is_zero());
    EXPECT_TRUE(ks_cocycle_toric(dg, sd).is_zero());
}

TEST(Cocycle, GeneralFormula)
{
    auto dg = downgrade(blowup_fan(), int_vec({0, 1}), int_vec({0, 1}));
    auto sp = span_decomposition(blowup_fan(), int_vec({0, 1}), 2, 0);
    auto cover = build_cover(dg.dfan, kZero);
    auto td = translation_data(sp.downgrade.dfan, sp.slice, cover);
    auto cc = ks_cocycle_tvar(sp.downgrade.dfan, sp.slice);
    EXPECT_TRUE(cc.antisymmetric());
    EXPECT_TRUE(cc.cocycle_identity());
    for (std::size_t i = 0; i < cc.size(); ++i) {
        for (std::size_t j = 0; j < cc.size(); ++j) {
            // (1,0) against (-1,0) gives b = 1 and c = 0
            if (td[i].a == 1 && td[j].a == -1) {
                EXPECT_EQ(cc.b[i][j], 1);
                EXPECT_TRUE(is_zero(cc.c[i][j]));
            }
            if (td[i].a == td[j].a) EXPECT_EQ(cc.b[i][j], 0);
        }
    }
}

TEST(Cocycle, SurfacePattern)
{
    // pi_0: rho = (0,1), C = {(1,1)}; cones 0 and 1 contain (1,1)
    auto f = blowup_fan();
    auto sp = span_decomposition(f, int_vec({0, 1}), 2, 0);
    ASSERT_EQ(sp.graph.components[sp.component], (std::vector<std::size_t>{1}));
    auto cc = ks_cocycle_toric(sp.downgrade, sp.slice);
    EXPECT_EQ(cc.degree, int_vec({0, -1}));
    const LVec en = int_vec({0, 1});
    // charts 1, 2, 3 = cone 7, cones 0 and 1 merged, cone 2
    EXPECT_TRUE(is_zero(cc.c[0][1]));
    EXPECT_EQ(cc.c[7][0], en);
    EXPECT_EQ(cc.c[7][1], en);
    EXPECT_EQ(cc.c[1][2], -en);
    EXPECT_EQ(cc.c[0][2], -en);
    for (std::size_t k = 2; k < 7; ++k) EXPECT_TRUE(is_zero(cc.c[k][k + 1]));
    EXPECT_TRUE(cc.antisymmetric());
    EXPECT_TRUE(cc.cocycle_identity());
}

TEST(Cocycle, ToricMatchesGeneral)
{
    for (const auto& [f, r] : {std::pair{blowup_fan(), int_vec({0, 1})}, std::pair{threefold_fan(), int_vec({0, 0, 1})}}) {
        for (auto rho : omega(f, r)) {
            auto g = build_graph(f, rho, r);
            for (std::size_t c = 0; c < g.components.size(); ++c) {
                auto sp = span_decomposition(f, r, rho, c);
                auto toric = ks_cocycle_toric(sp.downgrade, sp.slice);
                auto general = ks_cocycle_tvar(sp.downgrade.dfan, sp.slice);
                auto cover = build_cover(sp.downgrade.dfan, kZero);
                for (std::size_t i = 0; i < cover.l1; ++i) {
                    for (std::size_t j = 0; j < cover.l1; ++j) {
                        auto ci = cone_of(sp.downgrade, cover, i), cj = cone_of(sp.downgrade, cover, j);
                        if (!ci || !cj) continue;
                        EXPECT_EQ(sp.downgrade.section.alpha(general.c[i][j], general.b[i][j]), toric.c[*ci][*cj]);
                    }
                }
                // last adapted coordinate is (a_i - a_j)/2
                for (std::size_t i = 0; i < toric.size(); ++i)
                    for (std::size_t j = 0; j < toric.size(); ++j) {
                        auto last = sp.downgrade.section.coords(toric.c[i][j]).back();
                        EXPECT_TRUE(last == 0 || last == 1 || last == -1);
                    }
            }
        }
    }
}

TEST(Phi, ConstantIsZero)
{
    auto f = threefold_fan();
    auto g = build_graph(f, 6, int_vec({0, 0, 1}));
    EXPECT_TRUE(phi(f, int_vec({0, 0, 1}), 6, std::vector<Rat>(g.components.size(), Rat(1))).is_zero());
    EXPECT_THROW(phi(f, int_vec({0, 0, 1}), 6, {Rat(1)}), DomainError);
    EXPECT_THROW(phi(f, int_vec({0, 0, 1}), 7, {}), DomainError);
}

TEST(Phi, MatchesSpanDecomposition)
{
    auto f = threefold_fan();
    auto r = int_vec({0, 0, 1});
    auto g = build_graph(f, 6, r);
    ASSERT_EQ(g.components.size(), 3u);
    auto sp = span_decomposition(f, r, 6, 0);
    EXPECT_EQ(g.components[0], (std::vector<std::size_t>{0}));
    auto ks = ks_cocycle_toric(sp.downgrade, sp.slice);
    auto ph = phi(f, r, 6, indicator_values(3, 0));
    EXPECT_EQ(ks.c, ph.c);
    // entries are 0 or +-rho_7
    for (const auto& row : ks.c)
        for (const auto& e : row) EXPECT_TRUE(is_zero(e) || e == int_vec({0, 0, 1}) || e == int_vec({0, 0, -1}));

    auto b = blowup_fan();
    auto pb = phi(b, int_vec({0, 1}), 2, indicator_values(2, 0));
    auto sb = span_decomposition(b, int_vec({0, 1}), 2, 0);
    EXPECT_EQ(pb.c, ks_cocycle_toric(sb.downgrade, sb.slice).c);
}

TEST(CocycleProperties, RandomDecompositionsAreCocycles)
{
    Gen gen(71);
    std::vector<Fan> fans{blowup_fan(), p2_fan(), p1p1_fan(), threefold_fan()};
    for (int n = 0; n < 30; ++n) {
        const auto& f = fans[static_cast<std::size_t>(gen.integer(0, 3))];
        auto r = gen.nonzero_int_vector(f.rank(), -1, 1);
        auto om = omega(f, r);
        if (om.empty()) continue;
        auto rho = om[static_cast<std::size_t>(gen.integer(0, static_cast<long>(om.size()) - 1))];
        auto g = build_graph(f, rho, r);
        auto c = static_cast<std::size_t>(gen.integer(0, static_cast<long>(g.components.size()) - 1));
        auto sp = span_decomposition(f, r, rho, c);
        auto cc = ks_cocycle_toric(sp.downgrade, sp.slice);
        EXPECT_TRUE(cc.antisymmetric());
        EXPECT_TRUE(cc.cocycle_identity());
        EXPECT_EQ(cc.degree, -r);
        auto general = ks_cocycle_tvar(sp.downgrade.dfan, sp.slice);
        EXPECT_TRUE(general.antisymmetric());
        EXPECT_TRUE(general.cocycle_identity());
    }
}
