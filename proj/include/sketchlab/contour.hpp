#pragma once

#include "sketchlab/geometry.hpp"
#include "sketchlab/raster.hpp"

#include <vector>

namespace sketchlab {

// Closed outer border of one foreground region, ordered pixel centers.
// Consecutive points are 8-adjacent; orientation is counterclockwise on
// screen (x right, y down), i.e. the shoelace sum over the closed loop
// is non-positive.
struct Contour {
  PointList points;
  bool closed = true;

  double closed_length() const;
  BBox bbox() const { return bounding_box(points); }
};

// Traces the outer border of every 8-connected foreground region, one
// contour per region, holes ignored. Contours whose closed border length
// falls below min_perimeter are dropped, as are degenerate traces of
// fewer than 4 points (1- and 2-pixel specks). Regions are emitted in
// scan order of their first pixel, so results are deterministic.
std::vector<Contour> extract_contours(const MaskImage& mask, double min_perimeter = 8.0);

}  // namespace sketchlab
