#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "boundscope/moments.hpp"

namespace boundscope {

struct SearchResult {
  double value = 0.0;
  std::vector<double> point;
};

/// Default grid density: 401 points per axis for n <= 2, 41 for n <= 4,
/// 11 beyond.
std::size_t default_grid_points(std::size_t n);

/// Maximizes g over a uniform grid that includes every vertex of the box,
/// then polishes the best grid point by coordinate search with a shrinking
/// step. The result is attained at a point of the box, so it never exceeds
/// the true maximum.
SearchResult maximize_on_box(const Box& box, const std::function<double(std::span<const double>)>& g,
                             std::size_t points_per_axis = 0);

SearchResult minimize_on_box(const Box& box, const std::function<double(std::span<const double>)>& g,
                             std::size_t points_per_axis = 0);

}  // namespace boundscope
