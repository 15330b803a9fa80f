#ifndef TGCOVER_TESTS_FIXTURES_HPP
#define TGCOVER_TESTS_FIXTURES_HPP

#include "tgcover/temporal_graph.hpp"

namespace tgcover::testing {

// Vertex ids of the four-vertex worked example.
inline constexpr Vertex kV = 0, kU = 1, kZ = 2, kW = 3;

inline TemporalGraph fig1_graph() {
    return TemporalGraph({"v", "u", "z", "w"}, 6,
                         {{kV, kU, 2}, {kV, kW, 2}, {kU, kW, 2}, {kZ, kW, 2},
                          {kV, kU, 3}, {kV, kZ, 3}, {kU, kW, 3}, {kZ, kW, 3},
                          {kV, kU, 4}, {kU, kZ, 4}, {kV, kZ, 4}, {kU, kW, 4},
                          {kV, kW, 5}});
}

// {v:[5,5], u:[2,4], z:[3,4], w:[2,2]}
inline TemporalAssignment fig1_cover() {
    TemporalAssignment x(4);
    x.set(kV, {5, 5});
    x.set(kU, {2, 4});
    x.set(kZ, {3, 4});
    x.set(kW, {2, 2});
    return x;
}

// Triangle on {a, b, c} at t = 1 and again at t = 2.
inline TemporalGraph double_triangle() {
    return TemporalGraph({"a", "b", "c"}, 2,
                         {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 1, 2}, {0, 2, 2}, {1, 2, 2}});
}

}  // namespace tgcover::testing

#endif
