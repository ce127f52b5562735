#include "boundscope/search.hpp"

#include <algorithm>
#include <cmath>

#include "boundscope/errors.hpp"

namespace boundscope {

std::size_t default_grid_points(std::size_t n) {
  if (n <= 2) return 401;
  if (n <= 4) return 41;
  return 11;
}

SearchResult maximize_on_box(const Box& box, const std::function<double(std::span<const double>)>& g,
                             std::size_t points_per_axis) {
  const std::size_t n = box.dimension();
  const std::size_t m = std::max<std::size_t>(points_per_axis == 0 ? default_grid_points(n) : points_per_axis, 2);

  auto coordinate = [&](std::size_t axis, std::size_t k) {
    if (k + 1 == m) return box[axis].hi;
    return box[axis].lo + box[axis].length() * static_cast<double>(k) / static_cast<double>(m - 1);
  };

  SearchResult best;
  best.value = -INFINITY;
  std::vector<std::size_t> index(n, 0);
  std::vector<double> point(n);
  for (;;) {
    for (std::size_t axis = 0; axis < n; ++axis) point[axis] = coordinate(axis, index[axis]);
    const double value = g(point);
    if (value > best.value) {
      best.value = value;
      best.point = point;
    }
    std::size_t axis = n;
    while (axis-- > 0) {
      if (++index[axis] < m) break;
      index[axis] = 0;
    }
    if (axis == static_cast<std::size_t>(-1)) break;
  }
  if (!std::isfinite(best.value)) throw NumericError("objective is not finite on the search grid");

  std::vector<double> step(n);
  for (std::size_t axis = 0; axis < n; ++axis) step[axis] = box[axis].length() / static_cast<double>(m - 1);
  for (int round = 0; round < 20000; ++round) {
    bool moved = false;
    for (std::size_t axis = 0; axis < n; ++axis) {
      for (double direction : {1.0, -1.0}) {
        std::vector<double> trial = best.point;
        trial[axis] = std::clamp(trial[axis] + direction * step[axis], box[axis].lo, box[axis].hi);
        const double value = g(trial);
        if (value > best.value) {
          best.value = value;
          best.point = std::move(trial);
          moved = true;
          break;
        }
      }
    }
    if (moved) continue;
    bool done = true;
    for (std::size_t axis = 0; axis < n; ++axis) {
      step[axis] *= 0.5;
      if (step[axis] > 1e-13 * box[axis].length()) done = false;
    }
    if (done) break;
  }
  return best;
}

SearchResult minimize_on_box(const Box& box, const std::function<double(std::span<const double>)>& g,
                             std::size_t points_per_axis) {
  SearchResult result = maximize_on_box(box, [&](std::span<const double> x) { return -g(x); }, points_per_axis);
  result.value = -result.value;
  return result;
}

}  // namespace boundscope
