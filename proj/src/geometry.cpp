#include "sketchlab/geometry.hpp"

#include <limits>
#include <stdexcept>

namespace sketchlab {

BBox bounding_box(const PointList& points) {
  if (points.empty()) {
    throw std::invalid_argument("bounding_box: empty point list");
  }
  BBox box;
  box.min = Point2D::Constant(std::numeric_limits<double>::infinity());
  box.max = Point2D::Constant(-std::numeric_limits<double>::infinity());
  for (const auto& p : points) {
    box.min = box.min.cwiseMin(p);
    box.max = box.max.cwiseMax(p);
  }
  return box;
}

double path_length(const PointList& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("path_length: need at least 2 points");
  }
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    total += (points[i] - points[i - 1]).norm();
  }
  return total;
}

PointList close_loop(const PointList& points) {
  PointList closed = points;
  if (!points.empty()) {
    closed.push_back(points.front());
  }
  return closed;
}

}  // namespace sketchlab
