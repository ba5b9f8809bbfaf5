#include "sketchlab/resample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sketchlab {

std::vector<double> random_intervals(int n, double total_length, double variance, Rng& rng) {
  if (n < 1) {
    throw std::invalid_argument("random_intervals: n must be positive");
  }
  if (!(total_length > 0.0)) {
    throw std::invalid_argument("random_intervals: total_length must be positive");
  }
  if (variance < 0.0) {
    throw std::invalid_argument("random_intervals: variance must be non-negative");
  }
  const double stddev = std::sqrt(variance);
  std::vector<double> intervals(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& v : intervals) {
    v = std::max(1e-6, 1.0 + rng.normal(0.0, stddev));
    sum += v;
  }
  const double scale = total_length / sum;
  for (double& v : intervals) {
    v *= scale;
  }
  return intervals;
}

PointList stochastic_resample(const PointList& points, int n, double variance, Rng& rng) {
  if (points.size() < 2) {
    throw std::invalid_argument("stochastic_resample: need at least 2 input points");
  }
  if (n < 2) {
    throw std::invalid_argument("stochastic_resample: n must be at least 2");
  }
  const double total = path_length(points);
  if (!(total > 0.0)) {
    throw std::invalid_argument("stochastic_resample: degenerate path of length 0");
  }

  const std::vector<double> intervals = random_intervals(n - 1, total, variance, rng);

  PointList out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(points.front());

  std::size_t seg = 0;                      // current segment [seg, seg+1]
  double seg_start = 0.0;                   // arc length at points[seg]
  double seg_len = (points[1] - points[0]).norm();
  double target = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    target += intervals[static_cast<std::size_t>(k)];
    while (seg + 2 < points.size() && seg_start + seg_len < target) {
      seg_start += seg_len;
      ++seg;
      seg_len = (points[seg + 1] - points[seg]).norm();
    }
    double t = seg_len > 0.0 ? (target - seg_start) / seg_len : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    out.push_back(points[seg] + t * (points[seg + 1] - points[seg]));
  }
  return out;
}

PointList normalize_points(const PointList& resampled, const BBox& original_bbox) {
  if (resampled.empty()) {
    throw std::invalid_argument("normalize_points: empty point list");
  }
  const double original_diag = original_bbox.diagonal();
  if (!(original_diag > 0.0)) {
    throw std::invalid_argument("normalize_points: zero-diagonal original bounding box");
  }
  const double resampled_diag = bounding_box(resampled).diagonal();
  if (!(resampled_diag > 0.0)) {
    throw std::invalid_argument("normalize_points: degenerate resampled point set");
  }
  const double scale = original_diag / resampled_diag;
  Point2D centroid = Point2D::Zero();
  for (const auto& p : resampled) {
    centroid += p;
  }
  centroid /= static_cast<double>(resampled.size());

  PointList out;
  out.reserve(resampled.size());
  for (const auto& p : resampled) {
    out.push_back(centroid + scale * (p - centroid));
  }
  return out;
}

PointList recenter(const PointList& points, const Point2D& original_center) {
  if (points.empty()) {
    throw std::invalid_argument("recenter: empty point list");
  }
  const Point2D offset = original_center - bounding_box(points).center();
  PointList out;
  out.reserve(points.size());
  for (const auto& p : points) {
    out.push_back(p + offset);
  }
  return out;
}

int optimal_n(const PointList& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("optimal_n: need at least 2 points");
  }
  const double length = path_length(points);
  const double diag = bounding_box(points).diagonal();
  if (!(length > 0.0) || !(diag > 0.0)) {
    throw std::invalid_argument("optimal_n: degenerate path");
  }
  const double target_spacing = diag / 32.0;
  const long long n = std::llround(length / target_spacing);
  return static_cast<int>(std::clamp<long long>(n, 16, 512));
}

std::vector<int> choose_removal_indices(int point_count, int remove_cnt, Rng& rng) {
  if (remove_cnt < 0) {
    throw std::invalid_argument("choose_removal_indices: negative remove_cnt");
  }
  if (remove_cnt >= point_count - 2) {
    throw std::invalid_argument("choose_removal_indices: remove_cnt too large");
  }
  std::vector<int> candidates(static_cast<std::size_t>(point_count - 2));
  std::iota(candidates.begin(), candidates.end(), 1);  // interior indices
  for (int k = 0; k < remove_cnt; ++k) {
    const auto remaining = static_cast<std::uint64_t>(candidates.size() - k);
    const auto pick = static_cast<std::size_t>(k + rng.uniform_index(remaining));
    std::swap(candidates[static_cast<std::size_t>(k)], candidates[pick]);
  }
  candidates.resize(static_cast<std::size_t>(remove_cnt));
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

PointList remove_random(const PointList& points, int remove_cnt, Rng& rng) {
  const auto removed = choose_removal_indices(static_cast<int>(points.size()), remove_cnt, rng);
  PointList out;
  out.reserve(points.size() - removed.size());
  std::size_t next_removed = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (next_removed < removed.size() && static_cast<int>(i) == removed[next_removed]) {
      ++next_removed;
      continue;
    }
    out.push_back(points[i]);
  }
  return out;
}

std::vector<Stroke> split_into_strokes(const PointList& points,
                                       const std::vector<int>& contour_starts,
                                       int strokes_per_contour) {
  if (strokes_per_contour < 1) {
    throw std::invalid_argument("split_into_strokes: strokes_per_contour must be >= 1");
  }
  if (contour_starts.empty() || contour_starts.front() != 0 ||
      !std::is_sorted(contour_starts.begin(), contour_starts.end()) ||
      contour_starts.back() >= static_cast<int>(points.size())) {
    throw std::invalid_argument("split_into_strokes: bad contour boundaries");
  }

  std::vector<Stroke> strokes;
  for (std::size_t c = 0; c < contour_starts.size(); ++c) {
    const int begin = contour_starts[c];
    const int end = c + 1 < contour_starts.size() ? contour_starts[c + 1]
                                                  : static_cast<int>(points.size());
    const int run = end - begin;
    const int base = run / strokes_per_contour;
    const int extra = run % strokes_per_contour;
    if (base < 2 && (extra == 0 || base + 1 < 2)) {
      throw std::invalid_argument("split_into_strokes: a stroke would have fewer than 2 points");
    }
    int offset = begin;
    for (int s = 0; s < strokes_per_contour; ++s) {
      const int size = base + (s < extra ? 1 : 0);
      if (size < 2) {
        throw std::invalid_argument("split_into_strokes: a stroke would have fewer than 2 points");
      }
      Stroke stroke;
      stroke.source_contour = static_cast<int>(c);
      stroke.points.assign(points.begin() + offset, points.begin() + offset + size);
      strokes.push_back(std::move(stroke));
      offset += size;
    }
  }
  return strokes;
}

std::vector<Stroke> sort_strokes(std::vector<Stroke> strokes) {
  if (strokes.empty()) {
    throw std::invalid_argument("sort_strokes: empty stroke list");
  }
  std::stable_sort(strokes.begin(), strokes.end(), [](const Stroke& a, const Stroke& b) {
    const BBox ba = a.bbox();
    const BBox bb = b.bbox();
    if (ba.min.x() != bb.min.x()) {
      return ba.min.x() < bb.min.x();
    }
    return ba.min.y() < bb.min.y();
  });
  return strokes;
}

Labeling synthesize_labeling(const std::vector<Contour>& contours, const ResampleConfig& config,
                             const std::string& image_id, int object_id) {
  if (contours.empty()) {
    throw std::invalid_argument("synthesize_labeling: no contours");
  }
  if (!config.use_optimal_n && !config.resample_cnt.has_value()) {
    throw std::invalid_argument("synthesize_labeling: resample_cnt required without optimal n");
  }

  Rng rng(config.seed);

  PointList original_flat;
  for (const Contour& contour : contours) {
    original_flat.insert(original_flat.end(), contour.points.begin(), contour.points.end());
  }
  const BBox original_bbox = bounding_box(original_flat);

  PointList combined;
  std::vector<int> starts;
  for (const Contour& contour : contours) {
    const PointList path = contour.closed ? close_loop(contour.points) : contour.points;
    const int n = config.use_optimal_n ? optimal_n(path) : *config.resample_cnt;
    starts.push_back(static_cast<int>(combined.size()));
    PointList resampled = stochastic_resample(path, n, config.variance, rng);
    combined.insert(combined.end(), resampled.begin(), resampled.end());
  }

  combined = normalize_points(combined, original_bbox);
  combined = recenter(combined, original_bbox.center());

  if (config.remove_cnt > 0) {
    const auto removed =
        choose_removal_indices(static_cast<int>(combined.size()), config.remove_cnt, rng);
    PointList kept;
    kept.reserve(combined.size() - removed.size());
    std::vector<int> new_starts(starts.size());
    std::size_t next_removed = 0;
    for (std::size_t c = 0, i = 0; i < combined.size(); ++i) {
      while (c < starts.size() && static_cast<int>(i) == starts[c]) {
        new_starts[c++] = static_cast<int>(kept.size());
      }
      if (next_removed < removed.size() && static_cast<int>(i) == removed[next_removed]) {
        ++next_removed;
        continue;
      }
      kept.push_back(combined[i]);
    }
    combined = std::move(kept);
    starts = std::move(new_starts);
  }

  Labeling labeling;
  labeling.image_id = image_id;
  labeling.object_id = object_id;
  labeling.config = config;
  labeling.strokes =
      sort_strokes(split_into_strokes(combined, starts, config.strokes_per_contour));
  return labeling;
}

nlohmann::json resample_config_to_json(const ResampleConfig& config) {
  nlohmann::json j;
  j["use_optimal_n"] = config.use_optimal_n;
  if (config.resample_cnt.has_value()) {
    j["resample_cnt"] = *config.resample_cnt;
  } else {
    j["resample_cnt"] = nullptr;
  }
  j["remove_cnt"] = config.remove_cnt;
  j["variance"] = config.variance;
  j["seed"] = config.seed;
  j["strokes_per_contour"] = config.strokes_per_contour;
  return j;
}

ResampleConfig resample_config_from_json(const nlohmann::json& j) {
  ResampleConfig config;
  config.use_optimal_n = j.value("use_optimal_n", true);
  if (j.contains("resample_cnt") && !j["resample_cnt"].is_null()) {
    config.resample_cnt = j["resample_cnt"].get<int>();
  }
  config.remove_cnt = j.value("remove_cnt", 0);
  config.variance = j.value("variance", 0.25);
  config.seed = j.value("seed", std::uint64_t{0});
  config.strokes_per_contour = j.value("strokes_per_contour", 3);
  return config;
}

nlohmann::json labeling_to_json(const Labeling& labeling) {
  nlohmann::json strokes = nlohmann::json::array();
  for (const Stroke& stroke : labeling.strokes) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Point2D& p : stroke.points) {
      pts.push_back({p.x(), p.y()});
    }
    strokes.push_back(std::move(pts));
  }
  nlohmann::json j;
  j["image_id"] = labeling.image_id;
  j["object_id"] = labeling.object_id;
  j["config"] = resample_config_to_json(labeling.config);
  j["strokes"] = std::move(strokes);
  return j;
}

Labeling labeling_from_json(const nlohmann::json& j) {
  Labeling labeling;
  labeling.image_id = j.at("image_id").get<std::string>();
  labeling.object_id = j.at("object_id").get<int>();
  labeling.config = resample_config_from_json(j.at("config"));
  int index = 0;
  for (const auto& stroke_json : j.at("strokes")) {
    Stroke stroke;
    stroke.source_contour = index;
    for (const auto& p : stroke_json) {
      stroke.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
    labeling.strokes.push_back(std::move(stroke));
    ++index;
  }
  return labeling;
}

}  // namespace sketchlab
