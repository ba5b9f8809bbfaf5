#include "sketchlab/features.hpp"

#include <cmath>
#include <stdexcept>

namespace sketchlab {

std::array<double, 16> StrokeFeatures::as_array() const {
  return {r1, r2, r3, r4, r5, r6, r7, r8, r9, r10, r11, l14, l15, l16, l17, l20};
}

std::array<double, 17> FeatureVector::as_array() const {
  std::array<double, 17> out{};
  const auto m = mean.as_array();
  std::copy(m.begin(), m.end(), out.begin());
  out[16] = inter_stroke_gap;
  return out;
}

const std::array<std::string, 17>& feature_names() {
  static const std::array<std::string, 17> kNames = {
      "r1",  "r2",  "r3",  "r4",  "r5",  "r6",  "r7",  "r8", "r9",
      "r10", "r11", "l14", "l15", "l16", "l17", "l20", "inter_stroke_gap"};
  return kNames;
}

StrokeFeatures compute_stroke_features(const PointList& stroke) {
  const std::size_t m = stroke.size();
  if (m < 2) {
    throw std::invalid_argument("compute_stroke_features: need at least 2 points");
  }

  StrokeFeatures f;
  const Point2D& first = stroke.front();
  const Point2D& last = stroke.back();

  // Initial angle uses the third point; 2-point strokes fall back to the
  // second.
  const Point2D& initial_ref = stroke[m >= 3 ? 2 : 1];
  const Point2D initial_delta = initial_ref - first;
  const double d02 = initial_delta.norm();
  if (d02 > 0.0) {
    f.r1 = initial_delta.x() / d02;
    f.r2 = initial_delta.y() / d02;
  }

  const BBox box = bounding_box(stroke);
  const Point2D extent = box.extent();
  f.r3 = extent.norm();
  f.r4 = std::atan2(extent.y(), extent.x());

  const Point2D span = last - first;
  f.r5 = span.norm();
  if (f.r5 > 0.0) {
    f.r6 = span.x() / f.r5;
    f.r7 = span.y() / f.r5;
  }

  f.r8 = path_length(stroke);

  for (std::size_t i = 1; i + 1 < m; ++i) {
    const Point2D prev = stroke[i] - stroke[i - 1];
    const Point2D cur = stroke[i + 1] - stroke[i];
    if (prev.isZero(0.0) || cur.isZero(0.0)) {
      continue;
    }
    const double cross = cur.x() * prev.y() - prev.x() * cur.y();
    const double dot = cur.x() * prev.x() + cur.y() * prev.y();
    const double theta = std::atan2(cross, dot);
    f.r9 += theta;
    f.r10 += std::abs(theta);
    f.r11 += theta * theta;
  }

  f.l14 = f.r8 > 0.0 ? f.r9 / f.r8 : 0.0;
  f.l15 = f.r5 > 0.0 ? f.r8 / f.r5 : 0.0;
  f.l16 = f.r3 > 0.0 ? f.r8 / f.r3 : 0.0;
  f.l17 = f.r3 > 0.0 ? f.r5 / f.r3 : 0.0;
  f.l20 = f.r10 > 0.0 ? f.r9 / f.r10 : 0.0;
  return f;
}

double inter_stroke_distance(const Labeling& labeling) {
  if (labeling.strokes.empty()) {
    throw std::invalid_argument("inter_stroke_distance: labeling has no strokes");
  }
  if (labeling.strokes.size() == 1) {
    return 0.0;
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < labeling.strokes.size(); ++i) {
    total += (labeling.strokes[i + 1].points.front() - labeling.strokes[i].points.back()).norm();
  }
  return total / static_cast<double>(labeling.strokes.size() - 1);
}

FeatureVector aggregate_labeling_features(const Labeling& labeling) {
  if (labeling.strokes.empty()) {
    throw std::invalid_argument("aggregate_labeling_features: labeling has no strokes");
  }
  FeatureVector vec;
  std::array<double, 16> acc{};
  for (const Stroke& stroke : labeling.strokes) {
    StrokeFeatures f = compute_stroke_features(stroke.points);
    const auto values = f.as_array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      acc[i] += values[i];
    }
    vec.per_stroke.push_back(f);
  }
  const double inv = 1.0 / static_cast<double>(labeling.strokes.size());
  StrokeFeatures& mean = vec.mean;
  double* fields[16] = {&mean.r1,  &mean.r2,  &mean.r3,  &mean.r4,  &mean.r5,  &mean.r6,
                        &mean.r7,  &mean.r8,  &mean.r9,  &mean.r10, &mean.r11, &mean.l14,
                        &mean.l15, &mean.l16, &mean.l17, &mean.l20};
  for (std::size_t i = 0; i < 16; ++i) {
    *fields[i] = acc[i] * inv;
  }
  vec.inter_stroke_gap = inter_stroke_distance(labeling);
  return vec;
}

}  // namespace sketchlab
