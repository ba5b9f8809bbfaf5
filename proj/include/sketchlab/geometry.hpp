#pragma once

#include <Eigen/Core>

#include <vector>

namespace sketchlab {

using Point2D = Eigen::Vector2d;
using PointList = std::vector<Point2D>;

struct BBox {
  Point2D min{0.0, 0.0};
  Point2D max{0.0, 0.0};

  Point2D center() const { return 0.5 * (min + max); }
  Point2D extent() const { return max - min; }
  double diagonal() const { return extent().norm(); }
};

BBox bounding_box(const PointList& points);

// Sum of Euclidean distances between consecutive points. Requires >= 2 points.
double path_length(const PointList& points);

// Returns points with the closing segment back to the first point appended.
PointList close_loop(const PointList& points);

}  // namespace sketchlab
