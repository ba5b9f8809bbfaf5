#include "sketchlab/contour.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sketchlab {

namespace {

struct Pixel {
  int x;
  int y;
  bool operator==(const Pixel&) const = default;
};

// Clockwise 8-neighbourhood starting east, y pointing down.
constexpr std::array<int, 8> kDx = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr std::array<int, 8> kDy = {0, 1, 1, 1, 0, -1, -1, -1};

int direction_index(int dx, int dy) {
  for (int d = 0; d < 8; ++d) {
    if (kDx[d] == dx && kDy[d] == dy) {
      return d;
    }
  }
  throw std::logic_error("direction_index: not an 8-neighbour step");
}

bool foreground(const MaskImage& mask, int x, int y) {
  return mask.in_bounds(x, y) && mask.at(x, y);
}

// Moore-neighbour border following. The walk is a deterministic function
// of (current pixel, backtrack pixel); it terminates when that state
// returns to its initial value, which guarantees the complete cycle.
std::vector<Pixel> trace_border(const MaskImage& mask, Pixel start) {
  const Pixel initial_back{start.x - 1, start.y};
  std::vector<Pixel> points;
  Pixel cur = start;
  Pixel back = initial_back;
  const std::size_t cap = 4 * static_cast<std::size_t>(mask.width) * mask.height + 8;
  while (points.size() < cap) {
    points.push_back(cur);
    int bdir = direction_index(back.x - cur.x, back.y - cur.y);
    int found = -1;
    Pixel last_background = back;
    for (int k = 1; k <= 8; ++k) {
      int d = (bdir + k) & 7;
      Pixel n{cur.x + kDx[d], cur.y + kDy[d]};
      if (foreground(mask, n.x, n.y)) {
        found = d;
        break;
      }
      last_background = n;
    }
    if (found < 0) {
      break;  // isolated pixel
    }
    back = last_background;
    cur = {cur.x + kDx[found], cur.y + kDy[found]};
    if (cur == start && back == initial_back) {
      break;
    }
  }
  return points;
}

double shoelace_sum(const std::vector<Pixel>& pts) {
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Pixel& p = pts[i];
    const Pixel& q = pts[(i + 1) % pts.size()];
    acc += static_cast<double>(p.x) * q.y - static_cast<double>(q.x) * p.y;
  }
  return acc;
}

}  // namespace

double Contour::closed_length() const {
  if (points.size() < 2) {
    return 0.0;
  }
  return path_length(close_loop(points));
}

std::vector<Contour> extract_contours(const MaskImage& mask, double min_perimeter) {
  std::vector<Contour> contours;
  if (mask.width < 1 || mask.height < 1) {
    return contours;
  }

  std::vector<std::int32_t> label(static_cast<std::size_t>(mask.width) * mask.height, 0);
  auto label_at = [&](int x, int y) -> std::int32_t& {
    return label[static_cast<std::size_t>(y) * mask.width + x];
  };

  std::int32_t next_label = 0;
  std::vector<Pixel> stack;
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (!mask.at(x, y) || label_at(x, y) != 0) {
        continue;
      }
      // First pixel of a new region in scan order; flood-fill marks the
      // rest so later pixels of the same region do not start a trace.
      ++next_label;
      stack.assign(1, Pixel{x, y});
      label_at(x, y) = next_label;
      while (!stack.empty()) {
        Pixel p = stack.back();
        stack.pop_back();
        for (int d = 0; d < 8; ++d) {
          int nx = p.x + kDx[d];
          int ny = p.y + kDy[d];
          if (foreground(mask, nx, ny) && label_at(nx, ny) == 0) {
            label_at(nx, ny) = next_label;
            stack.push_back({nx, ny});
          }
        }
      }

      std::vector<Pixel> traced = trace_border(mask, {x, y});
      if (traced.size() < 4) {
        continue;
      }
      if (shoelace_sum(traced) > 0.0) {
        std::reverse(traced.begin() + 1, traced.end());
      }
      Contour contour;
      contour.points.reserve(traced.size());
      for (const Pixel& p : traced) {
        contour.points.emplace_back(static_cast<double>(p.x), static_cast<double>(p.y));
      }
      if (contour.closed_length() < min_perimeter) {
        continue;
      }
      contours.push_back(std::move(contour));
    }
  }
  return contours;
}

}  // namespace sketchlab
