#include "fixtures.hpp"
#include "random_gen.hpp"

#include <gtest/gtest.h>

using namespace tvdef;
using namespace tvdef::testing;

namespace {

Fan transform(const Fan& f, const std::vector<LVec>& rows)
{
    std::vector<LVec> rays;
    for (const auto& r : f.rays()) {
        LVec w(f.rank());
        for (std::size_t i = 0; i < rows.size(); ++i) w[i] = dot(rows[i], r);
        rays.push_back(w);
    }
    return Fan(f.rank(), rays, f.max_cones());
}

// Random unimodular matrix as a product of elementary integer row operations.
std::vector<LVec> random_unimodular(Gen& g, std::size_t n)
{
    std::vector<LVec> m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(unit_vec(n, i));
    for (int step = 0; step < 6; ++step) {
        auto i = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
        if (i == j) continue;
        Rat k = g.integer(-2, 2);
        m[i] = m[i] + k * m[j];
    }
    return m;
}

} // namespace

TEST(Fan, ProjectivePlane)
{
    auto f = p2_fan();
    EXPECT_TRUE(validate_fan(f).valid);
    EXPECT_TRUE(is_smooth(f));
    EXPECT_TRUE(is_complete(f));
    EXPECT_TRUE(common_cone(f, 0, 1));
    // 3 rays, 3 two-cones and the origin
    EXPECT_EQ(f.faces().size(), 7u);
}

TEST(Fan, OverlappingConesReported)
{
    Fan f(2, {int_vec({1, 0}), int_vec({1, 2}), int_vec({0, 1}), int_vec({2, 1})}, {{0, 1}, {2, 3}});
    auto rep = validate_fan(f);
    EXPECT_FALSE(rep.valid);
    ASSERT_EQ(rep.offending_pairs.size(), 1u);
    EXPECT_EQ(rep.offending_pairs[0], std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST(Fan, NonExtremeRayReported)
{
    Fan f(2, {int_vec({1, 0}), int_vec({1, 1}), int_vec({0, 1})}, {{0, 1, 2}});
    EXPECT_FALSE(validate_fan(f).valid);
}

TEST(Fan, ConstructionErrors)
{
    EXPECT_THROW(Fan(2, {int_vec({2, 0})}, {{0}}), DomainError);
    EXPECT_THROW(Fan(2, {int_vec({1, 0}), int_vec({1, 0})}, {{0}}), DomainError);
    EXPECT_THROW(Fan(2, {int_vec({1, 0})}, {{1}}), DomainError);
    EXPECT_THROW(Fan(2, {int_vec({1, 0, 0})}, {{0}}), DomainError);
}

TEST(Fan, Threefold)
{
    auto f = threefold_fan();
    EXPECT_EQ(f.max_cones().size(), 12u);
    EXPECT_TRUE(validate_fan(f).valid);
    EXPECT_TRUE(is_complete(f));
    // determinant oracle on the twelve top cones
    for (const auto& c : f.max_cones()) {
        std::vector<LVec> m;
        for (auto i : c) m.push_back(f.rays()[i]);
        Rat d = determinant(m);
        EXPECT_TRUE(d == 1 || d == -1);
    }
    EXPECT_TRUE(is_smooth(f));
    EXPECT_FALSE(common_cone(f, 0, 2));
    EXPECT_TRUE(common_cone(f, 2, 6));
    EXPECT_TRUE(common_cone(f, 6, 6));
    EXPECT_FALSE(common_cone(f, 6, 7));
    EXPECT_THROW(common_cone(f, 0, 8), DomainError);
}

TEST(Fan, Blowup)
{
    auto f = blowup_fan();
    EXPECT_TRUE(validate_fan(f).valid);
    EXPECT_TRUE(is_smooth(f));
    EXPECT_TRUE(is_complete(f));
}

TEST(Fan, SingularCone)
{
    Fan f(2, {int_vec({1, 1}), int_vec({1, -1})}, {{0, 1}});
    EXPECT_TRUE(validate_fan(f).valid);
    EXPECT_FALSE(is_smooth(f));
    EXPECT_FALSE(is_complete(f));
}

TEST(Fan, LowerDimensionalSmoothness)
{
    Fan ok(3, {int_vec({1, 0, 0}), int_vec({1, 1, 0})}, {{0, 1}});
    EXPECT_TRUE(is_smooth(ok));
    Fan bad(3, {int_vec({1, 1, 0}), int_vec({1, -1, 0})}, {{0, 1}});
    EXPECT_FALSE(is_smooth(bad));
}

TEST(Fan, SingleOrthantIncomplete)
{
    Fan f(2, {int_vec({1, 0}), int_vec({0, 1})}, {{0, 1}});
    EXPECT_FALSE(is_complete(f));
}

TEST(FanProperties, RandomDirectionsCovered)
{
    Gen g(11);
    for (const auto& f : {p2_fan(), blowup_fan(), threefold_fan()}) {
        for (int k = 0; k < 100; ++k) {
            auto v = g.nonzero_int_vector(f.rank(), -1000, 1000);
            EXPECT_TRUE(f.locate(v).has_value()) << to_string(v);
        }
    }
}

TEST(FanProperties, SmoothnessUnimodularInvariant)
{
    Gen g(12);
    Fan singular(2, {int_vec({1, 0}), int_vec({1, 3}), int_vec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
    for (int k = 0; k < 60; ++k) {
        for (const auto& f : {p2_fan(), blowup_fan(), threefold_fan(), singular}) {
            auto t = transform(f, random_unimodular(g, f.rank()));
            EXPECT_EQ(is_smooth(t), is_smooth(f));
            EXPECT_EQ(is_complete(t), is_complete(f));
            EXPECT_TRUE(validate_fan(t).valid);
        }
    }
}
