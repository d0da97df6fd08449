#pragma once

#include "mukai/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mukai::svg {

struct ConePlot {
  std::vector<IntVector> wall_rays;
  std::optional<RatVector> h;
  std::optional<RatVector> a;
  RatVector from;
  RatVector to;
};

/// Picard rank 2 only. Directions are drawn with unit Euclidean length in
/// the coordinates of the given basis.
std::string cone_svg(const Surface& surface, const ConePlot& plot);

}  // namespace mukai::svg
