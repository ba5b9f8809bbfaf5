#pragma once

#include "sketchlab/resample.hpp"

#include <array>
#include <string>
#include <vector>

namespace sketchlab {

// Geometry descriptors of one stroke: r1-r11 from the classic
// single-stroke gesture set, l14-l20 ratio features. Any ratio whose
// denominator is zero (closed loops, dot-like strokes) evaluates to 0 so
// vectors stay finite.
struct StrokeFeatures {
  double r1 = 0;   // cosine of initial angle
  double r2 = 0;   // sine of initial angle
  double r3 = 0;   // bounding-box diagonal length
  double r4 = 0;   // angle of bounding-box diagonal
  double r5 = 0;   // distance between first and last points
  double r6 = 0;   // cosine of first-to-last angle
  double r7 = 0;   // sine of first-to-last angle
  double r8 = 0;   // total stroke length
  double r9 = 0;   // total angle traversed
  double r10 = 0;  // absolute sum of angles traversed
  double r11 = 0;  // squared sum of angles traversed
  double l14 = 0;  // average rotation: r9 / r8
  double l15 = 0;  // density: r8 / r5
  double l16 = 0;  // second density: r8 / r3
  double l17 = 0;  // openness: r5 / r3
  double l20 = 0;  // change in rotational motion: r9 / r10

  std::array<double, 16> as_array() const;
};

// Per-labeling aggregate: unweighted mean of the stroke features plus the
// inter-stroke gap, with the per-stroke values retained.
struct FeatureVector {
  StrokeFeatures mean;
  double inter_stroke_gap = 0;
  std::vector<StrokeFeatures> per_stroke;

  std::array<double, 17> as_array() const;
};

// Column names matching FeatureVector::as_array order.
const std::array<std::string, 17>& feature_names();

StrokeFeatures compute_stroke_features(const PointList& stroke);

// Mean pen-travel gap from each stroke's last point to the next stroke's
// first point, in stored (sorted) order; 0 for a single stroke.
double inter_stroke_distance(const Labeling& labeling);

FeatureVector aggregate_labeling_features(const Labeling& labeling);

}  // namespace sketchlab
