#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shadowq/graphvals.hpp"
#include "shadowq/shadow.hpp"

namespace shadowq {

/// Cone over a colored circle, theta or tetrahedral graph with all gleams 0.
/// `colors` has 1, 3 or 6 entries. Throws Inadmissible.
Shadow atomic_cone(PlanarGraph kind, std::span<const int> colors);

/// One large region R of genus g with one boundary circle, plus g discs of
/// gleam -1 glued along circles that run twice over R.
Shadow genus_knot_shadow(int g, int boundary_color);

/// An orientable surface of Euler characteristic chi whose boundary circles
/// carry `colors`. Circles of different colors leave the region with no
/// admissible coloring.
Shadow surface_link_shadow(std::int64_t chi, const std::vector<int>& colors);

}  // namespace shadowq
