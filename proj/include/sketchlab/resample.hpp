#pragma once

#include "sketchlab/contour.hpp"
#include "sketchlab/geometry.hpp"
#include "sketchlab/rng.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sketchlab {

struct ResampleConfig {
  bool use_optimal_n = true;
  std::optional<int> resample_cnt;  // per-contour point count when use_optimal_n is false
  int remove_cnt = 0;
  double variance = 0.25;
  std::uint64_t seed = 0;
  int strokes_per_contour = 3;
};

struct Stroke {
  PointList points;
  int source_contour = 0;

  BBox bbox() const { return bounding_box(points); }
};

struct Labeling {
  std::string image_id;
  int object_id = 0;
  std::vector<Stroke> strokes;
  ResampleConfig config;
};

// n positive intervals whose values are drawn as max(1e-6, 1 + g) with
// g ~ Normal(0, sqrt(variance)), rescaled so their sum equals
// total_length exactly. variance = 0 yields n equal intervals.
std::vector<double> random_intervals(int n, double total_length, double variance, Rng& rng);

// Places n points on the polyline at cumulative random-interval arc
// lengths; the first output point is the first input point and the last
// lands at the end of the path.
PointList stochastic_resample(const PointList& points, int n, double variance, Rng& rng);

// Uniform scale about the centroid so the point set's bounding-box
// diagonal matches the original one.
PointList normalize_points(const PointList& resampled, const BBox& original_bbox);

// Pure translation putting the bounding-box center onto original_center.
PointList recenter(const PointList& points, const Point2D& original_center);

// Point budget targeting one sample per 1/32 of the bounding-box
// diagonal, clamped to [16, 512].
int optimal_n(const PointList& points);

// Removes remove_cnt interior points (never the first or last), order
// preserved.
PointList remove_random(const PointList& points, int remove_cnt, Rng& rng);

// Distinct interior indices chosen for removal, sorted ascending.
std::vector<int> choose_removal_indices(int point_count, int remove_cnt, Rng& rng);

// Splits each contour's run of resampled points into strokes_per_contour
// contiguous pieces whose sizes differ by at most one. contour_starts
// holds the start index of each contour's run (first entry 0).
std::vector<Stroke> split_into_strokes(const PointList& points,
                                       const std::vector<int>& contour_starts,
                                       int strokes_per_contour);

// Left-to-right, then top-to-bottom: ascending (min x, min y) of each
// stroke's bounding box. Point order within strokes is untouched.
std::vector<Stroke> sort_strokes(std::vector<Stroke> strokes);

// Full synthesis of one labeling from the object's contours, driven by a
// single RNG stream seeded with config.seed. Deterministic per seed.
Labeling synthesize_labeling(const std::vector<Contour>& contours, const ResampleConfig& config,
                             const std::string& image_id, int object_id);

nlohmann::json labeling_to_json(const Labeling& labeling);
Labeling labeling_from_json(const nlohmann::json& j);

nlohmann::json resample_config_to_json(const ResampleConfig& config);
ResampleConfig resample_config_from_json(const nlohmann::json& j);

}  // namespace sketchlab
