#pragma once

// Standard fans shared between test binaries.

#include "tvdef/fan.hpp"

namespace tvdef::testing {

inline Fan p2_fan()
{
    return Fan(2, {int_vec({1, 0}), int_vec({0, 1}), int_vec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
}

inline Fan p1p1_fan()
{
    return Fan(2, {int_vec({1, 0}), int_vec({0, 1}), int_vec({-1, 0}), int_vec({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Blowup of P^1 x P^1 in all four torus fixed points; rays counter-clockwise from (1,0).
inline Fan blowup_fan()
{
    std::vector<LVec> rays{int_vec({1, 0}),  int_vec({1, 1}),   int_vec({0, 1}),  int_vec({-1, 1}),
                           int_vec({-1, 0}), int_vec({-1, -1}), int_vec({0, -1}), int_vec({1, -1})};
    std::vector<RaySet> cones;
    for (std::size_t i = 0; i < 8; ++i) cones.push_back({i, (i + 1) % 8});
    return Fan(2, rays, cones);
}

// rho_1..rho_8 at indices 0..7; rho_0 = rho_6.
inline Fan threefold_fan()
{
    std::vector<LVec> rays{int_vec({1, 0, 1}),   int_vec({1, 1, 0}),  int_vec({0, 1, 1}), int_vec({-1, 0, 0}),
                           int_vec({-1, -1, 1}), int_vec({0, -1, 0}), int_vec({0, 0, 1}), int_vec({0, 0, -1})};
    std::vector<RaySet> cones;
    for (std::size_t i = 0; i < 6; ++i) {
        std::size_t a = (i + 5) % 6, b = i;
        cones.push_back({a, b, 6});
        cones.push_back({a, b, 7});
    }
    return Fan(3, rays, cones);
}

// Cone over the blowup polygon at height one.
inline Cone fano_cone()
{
    return Cone::from_generators(3, {int_vec({-1, 1, 1}), int_vec({1, 1, 1}), int_vec({-1, 1, -1}), int_vec({1, 1, -1})});
}

} // namespace tvdef::testing
